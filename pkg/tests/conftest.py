import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fasa.audio import AudioBuffer
from fasa.hypotheses import HypothesisSet
from fasa.model import HypothesisSegment
from fasa.transcript import NormalizedTranscript


def make_transcript(*lines):
    """Build a NormalizedTranscript from already-normalized token lines."""
    tokens, originals, line_index = [], [], []
    for i, line in enumerate(lines):
        for tok in line.split():
            tokens.append(tok)
            originals.append(tok)
            line_index.append(i)
    return NormalizedTranscript(tuple(tokens), tuple(originals), tuple(line_index))


def make_hyps(texts, audio_id="test", gap=0.2, seconds_per_word=0.4):
    segments = []
    t = 0.0
    for i, text in enumerate(texts):
        n = max(1, len(text.split()))
        seg = HypothesisSegment("s%04d" % i, t, t + n * seconds_per_word, text)
        segments.append(seg)
        t = seg.end_s + gap
    return HypothesisSet(audio_id=audio_id, segments=tuple(segments))


def tone_audio(duration_s, sample_rate=16000):
    """Deterministic mono test signal long enough to cut clips from."""
    n = int(duration_s * sample_rate)
    t = np.arange(n)
    samples = (3000 * np.sin(2 * np.pi * 220 * t / sample_rate)).astype(np.int16)
    return AudioBuffer(sample_rate, 1, samples)


@pytest.fixture
def tmp_dataset(tmp_path):
    return tmp_path / "dataset"
