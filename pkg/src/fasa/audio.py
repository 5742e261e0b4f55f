"""Uncompressed PCM WAV I/O and sample-accurate clipping."""

import wave
from dataclasses import dataclass

import numpy as np

from .errors import AudioError


@dataclass(frozen=True)
class AudioBuffer:
    sample_rate_hz: int
    channels: int
    samples: np.ndarray  # int16, interleaved

    def __post_init__(self):
        if self.sample_rate_hz <= 0:
            raise AudioError("sample rate must be positive")
        if self.channels not in (1, 2):
            raise AudioError("only mono and stereo audio are supported")
        if len(self.samples) % self.channels != 0:
            raise AudioError("sample count not divisible by channel count")

    @property
    def n_frames(self):
        return len(self.samples) // self.channels

    @property
    def duration_s(self):
        return self.n_frames / self.sample_rate_hz


def read_wav(path) -> AudioBuffer:
    try:
        with wave.open(str(path), "rb") as w:
            if w.getsampwidth() != 2:
                raise AudioError("only 16-bit PCM WAV is supported")
            frames = w.readframes(w.getnframes())
            samples = np.frombuffer(frames, dtype=np.int16)
            return AudioBuffer(w.getframerate(), w.getnchannels(), samples)
    except wave.Error as e:
        raise AudioError("cannot read %s: %s" % (path, e)) from e


def write_wav(audio: AudioBuffer, path):
    with wave.open(str(path), "wb") as w:
        w.setnchannels(audio.channels)
        w.setsampwidth(2)
        w.setframerate(audio.sample_rate_hz)
        w.writeframes(audio.samples.astype("<i2").tobytes())


def cut_clip(audio: AudioBuffer, start_s, end_s) -> AudioBuffer:
    """Slice [round(start*sr), round(end*sr)) frames out of the buffer."""
    if start_s < 0 or start_s >= end_s:
        raise AudioError("inverted or negative span (%s, %s)" % (start_s, end_s))
    if end_s > audio.duration_s + 1e-9:
        raise AudioError(
            "span (%s, %s) exceeds audio duration %.3f s"
            % (start_s, end_s, audio.duration_s)
        )
    a = round(start_s * audio.sample_rate_hz)
    b = round(end_s * audio.sample_rate_hz)
    b = min(b, audio.n_frames)
    if b <= a:
        raise AudioError("span (%s, %s) rounds to an empty clip" % (start_s, end_s))
    c = audio.channels
    return AudioBuffer(audio.sample_rate_hz, c, audio.samples[a * c : b * c])
