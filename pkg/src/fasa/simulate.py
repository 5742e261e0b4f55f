"""Synthetic corpora with controlled corruption, plus scoring of alignment
output against the known ground truth."""

import json
from dataclasses import dataclass, field

from .errors import FasaError
from .align import edit_distance
from .hypotheses import HypothesisSet
from .model import HypothesisSegment, Status
from .rng import Rng, splitmix64_next
from .textnorm import normalize_text
from .transcript import NormalizedTranscript

TOKEN_SECONDS = 0.4
GAP_SECONDS = 0.2


@dataclass(frozen=True)
class CorruptionSpec:
    token_error_rate: float = 0.0
    sentence_drop_rate: float = 0.0
    shuffle_sentences: bool = False
    seed: int = 0

    def __post_init__(self):
        if not (0 <= self.token_error_rate <= 1 and 0 <= self.sentence_drop_rate <= 1):
            raise FasaError("corruption rates must lie in [0, 1]")


@dataclass
class SimTruth:
    """Everything needed to score alignment output of a synthetic corpus."""

    sentences: list  # list of token lists, in original order
    spans: list  # (start, len) of each sentence in the uncorrupted transcript
    dropped: list  # sentence indices removed from the corrupted transcript
    transcript_spans: dict  # surviving sentence index -> (start, len) post-corruption

    def to_dict(self):
        return {
            "sentences": self.sentences,
            "spans": [list(s) for s in self.spans],
            "dropped": self.dropped,
            "transcript_spans": {
                str(k): list(v) for k, v in self.transcript_spans.items()
            },
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            sentences=[list(s) for s in d["sentences"]],
            spans=[tuple(s) for s in d["spans"]],
            dropped=list(d["dropped"]),
            transcript_spans={
                int(k): tuple(v) for k, v in d["transcript_spans"].items()
            },
        )

    def save(self, path):
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f)
            f.write("\n")

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as f:
            return cls.from_dict(json.load(f))


def segment_id_for(index):
    return "s%04d" % index


def vocab_token(index):
    return "v%d" % index


def generate_corpus(n_sentences, sentence_len_range, vocab_size, seed):
    """Build a deterministic corpus. The first n_sentences vocabulary entries
    are unique markers, one embedded per sentence, so no two sentences can
    approximately match each other. Returns (sentences, spans)."""
    lo, hi = sentence_len_range
    if lo < 1 or hi < lo:
        raise FasaError("bad sentence length range %r" % (sentence_len_range,))
    if vocab_size < n_sentences + 1:
        raise FasaError("vocab_size must exceed n_sentences (marker tokens)")
    rng = Rng(seed)
    sentences, spans = [], []
    pos = 0
    for i in range(n_sentences):
        length = rng.between(lo, hi)
        toks = [
            vocab_token(rng.between(n_sentences, vocab_size - 1))
            for _ in range(length)
        ]
        toks[rng.below(length)] = vocab_token(i)  # unique marker
        sentences.append(toks)
        spans.append((pos, length))
        pos += length
    return sentences, spans


def corrupt_transcript(sentences, spec: CorruptionSpec):
    """Drop and/or shuffle sentences. Returns (NormalizedTranscript, SimTruth
    fragment): surviving sentence order and their post-corruption spans."""
    rng = Rng(spec.seed)
    surviving = [i for i in range(len(sentences)) if not rng.chance(spec.sentence_drop_rate)]
    dropped = [i for i in range(len(sentences)) if i not in surviving]
    if spec.shuffle_sentences:
        rng.shuffle(surviving)
    tokens, originals, line_index = [], [], []
    transcript_spans = {}
    pos = 0
    for line_no, idx in enumerate(surviving):
        toks = sentences[idx]
        transcript_spans[idx] = (pos, len(toks))
        tokens.extend(toks)
        originals.extend(toks)
        line_index.extend([line_no] * len(toks))
        pos += len(toks)
    transcript = NormalizedTranscript(tuple(tokens), tuple(originals), tuple(line_index))
    return transcript, surviving, dropped, transcript_spans


def synth_hypotheses(sentences, spans, token_error_rate, seed, vocab_size=None):
    """One segment per ground-truth sentence with synthetic time spans; each
    token independently replaced by a random vocabulary token with the given
    probability."""
    if vocab_size is None:
        vocab_size = len(sentences) + max(1, sum(len(s) for s in sentences))
    base_seed = seed
    t = 0.0
    segments = []
    for i, toks in enumerate(sentences):
        _, child_seed = splitmix64_next((base_seed ^ (0x5EED + i)) & ((1 << 64) - 1))
        rng = Rng(child_seed)
        out = list(toks)
        for k in range(len(out)):
            if rng.chance(token_error_rate):
                out[k] = vocab_token(rng.below(vocab_size))
        start = t
        end = t + len(out) * TOKEN_SECONDS
        t = end + GAP_SECONDS
        segments.append(
            HypothesisSegment(
                segment_id=segment_id_for(i),
                start_s=start,
                end_s=end,
                text=" ".join(out),
            )
        )
    return HypothesisSet(audio_id="synthetic", segments=tuple(segments))


@dataclass
class EvalReport:
    aligned_count: int = 0  # AU
    verify_count: int = 0  # VU
    aligned_errors: int = 0  # AU Error
    aligned_words: int = 0  # AW
    aligned_word_errors: int = 0  # AW Error
    span_recovery_rate: float = 0.0
    false_alignment_count: int = 0

    @property
    def aligned_word_error_pct(self):
        if self.aligned_words == 0:
            return 0.0
        return 100.0 * self.aligned_word_errors / self.aligned_words

    def render(self):
        header = "AU | VU | AU Error | AW | AW Error (%)"
        row = "%d | %d | %d | %d | %d (%.2f%%)" % (
            self.aligned_count,
            self.verify_count,
            self.aligned_errors,
            self.aligned_words,
            self.aligned_word_errors,
            self.aligned_word_error_pct,
        )
        extra = (
            "span recovery rate: %.4f\nfalse alignments: %d"
            % (self.span_recovery_rate, self.false_alignment_count)
        )
        return "%s\n%s\n%s\n" % (header, row, extra)


def evaluate(records, truth: SimTruth) -> EvalReport:
    """Score alignment records against the known corpus truth. Record ids must
    be the synthetic segment ids naming sentence indices."""
    report = EvalReport()
    dropped = set(truth.dropped)
    surviving_total = 0
    surviving_recovered = 0
    for rec in records:
        idx = int(rec.segment_id.lstrip("s"))
        if idx >= len(truth.sentences):
            raise FasaError("record %s does not belong to this corpus" % rec.segment_id)
        true_sentence = truth.sentences[idx]
        if idx not in dropped:
            surviving_total += 1
            true_span = truth.transcript_spans[idx]
            if (rec.window_start, rec.window_len) == true_span:
                surviving_recovered += 1
        if rec.status is Status.ALIGNED:
            report.aligned_count += 1
            gt_tokens = normalize_text(" ".join(rec.gt_text))
            report.aligned_words += len(gt_tokens)
            errs = edit_distance(gt_tokens, true_sentence)
            report.aligned_word_errors += errs
            if errs or idx in dropped:
                report.aligned_errors += 1
            if idx in dropped:
                report.false_alignment_count += 1
        elif rec.status is Status.VERIFY:
            report.verify_count += 1
    report.span_recovery_rate = (
        surviving_recovered / surviving_total if surviving_total else 0.0
    )
    return report
