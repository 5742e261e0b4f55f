"""Shared domain types. Pure data, no I/O."""

from dataclasses import dataclass, field, asdict
from enum import Enum
from typing import Optional

from .errors import ConfigError


class Status(str, Enum):
    ALIGNED = "aligned"
    VERIFY = "verify"
    DROPPED = "dropped"


@dataclass(frozen=True)
class WordSpan:
    word: str
    start_s: float
    end_s: float


@dataclass(frozen=True)
class HypothesisSegment:
    """One ASR-predicted utterance: a time span plus its predicted text."""

    segment_id: str
    start_s: float
    end_s: float
    text: str
    words: Optional[tuple] = None  # tuple of WordSpan or None

    def __post_init__(self):
        if not (0 <= self.start_s < self.end_s):
            raise ValueError(
                "segment %r has inverted span [%s, %s]"
                % (self.segment_id, self.start_s, self.end_s)
            )
        if self.words:
            prev = None
            for w in self.words:
                if w.start_s < self.start_s - 0.01 or w.end_s > self.end_s + 0.01:
                    raise ValueError(
                        "word %r of segment %r lies outside the segment span"
                        % (w.word, self.segment_id)
                    )
                if prev is not None and w.start_s < prev - 1e-9:
                    raise ValueError(
                        "word spans of segment %r are not sorted" % self.segment_id
                    )
                prev = w.start_s

    @property
    def duration_s(self):
        return self.end_s - self.start_s

    def to_dict(self):
        d = {
            "id": self.segment_id,
            "start": self.start_s,
            "end": self.end_s,
            "text": self.text,
        }
        if self.words is not None:
            d["words"] = [
                {"word": w.word, "start": w.start_s, "end": w.end_s}
                for w in self.words
            ]
        return d

    @classmethod
    def from_dict(cls, d):
        words = None
        if d.get("words") is not None:
            words = tuple(
                WordSpan(w["word"], float(w["start"]), float(w["end"]))
                for w in d["words"]
            )
        return cls(
            segment_id=str(d["id"]),
            start_s=float(d["start"]),
            end_s=float(d["end"]),
            text=str(d["text"]),
            words=words,
        )


@dataclass(frozen=True)
class AlignConfig:
    """Thresholds and knobs for the sliding-window alignment.

    wer < sigma_a routes a segment to the aligned set, sigma_a <= wer <
    sigma_i to the verify queue, anything else is dropped.
    """

    sigma_a: float = 0.1
    sigma_i: float = 0.3
    window_slack: int = 3
    pgc_tolerance: int = 1
    allow_overlap: bool = True
    distance_unit: str = "token"  # "token" | "character"

    def __post_init__(self):
        if not (0 <= self.sigma_a <= self.sigma_i):
            raise ConfigError(
                "require 0 <= sigma_a <= sigma_i, got sigma_a=%s sigma_i=%s"
                % (self.sigma_a, self.sigma_i)
            )
        if self.window_slack < 0:
            raise ConfigError("window_slack must be >= 0")
        if self.pgc_tolerance < 0:
            raise ConfigError("pgc_tolerance must be >= 0")
        if self.distance_unit not in ("token", "character"):
            raise ConfigError("distance_unit must be 'token' or 'character'")

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass(frozen=True)
class AlignmentRecord:
    """One utterance's resolved alignment into the transcript."""

    segment_id: str
    status: Status
    pred_text: tuple  # normalized prediction tokens
    window_start: Optional[int] = None
    window_len: Optional[int] = None
    gt_text: Optional[tuple] = None  # original surface forms over the window
    distance: Optional[int] = None
    wer: Optional[float] = None

    def to_dict(self):
        return {
            "segment_id": self.segment_id,
            "status": self.status.value,
            "pred_text": list(self.pred_text),
            "window_start": self.window_start,
            "window_len": self.window_len,
            "gt_text": None if self.gt_text is None else list(self.gt_text),
            "distance": self.distance,
            "wer": self.wer,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            segment_id=str(d["segment_id"]),
            status=Status(d["status"]),
            pred_text=tuple(d["pred_text"]),
            window_start=d.get("window_start"),
            window_len=d.get("window_len"),
            gt_text=None if d.get("gt_text") is None else tuple(d["gt_text"]),
            distance=d.get("distance"),
            wer=d.get("wer"),
        )


@dataclass
class DatasetManifest:
    """Ordered record list for one audio file plus corpus statistics."""

    audio_id: str
    records: list = field(default_factory=list)
    # (start_s, end_s) per record, parallel to records
    spans: list = field(default_factory=list)

    @property
    def total_aligned(self):
        return sum(1 for r in self.records if r.status is Status.ALIGNED)

    @property
    def total_verify(self):
        return sum(1 for r in self.records if r.status is Status.VERIFY)

    @property
    def total_duration_s(self):
        return sum(
            e - s
            for r, (s, e) in zip(self.records, self.spans)
            if r.status is Status.ALIGNED
        )

    def to_dict(self):
        return {
            "audio_id": self.audio_id,
            "records": [r.to_dict() for r in self.records],
            "spans": [list(sp) for sp in self.spans],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            audio_id=d["audio_id"],
            records=[AlignmentRecord.from_dict(r) for r in d["records"]],
            spans=[tuple(sp) for sp in d["spans"]],
        )
