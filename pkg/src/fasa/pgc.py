"""Post-generation checking: drop aligned records whose second-pass prediction
disagrees with the aligned transcription in token count beyond a tolerance."""

import logging
from dataclasses import dataclass, field

from .model import Status
from .textnorm import normalize_text

log = logging.getLogger(__name__)


@dataclass
class PgcReport:
    kept: list = field(default_factory=list)  # record ids
    removed: list = field(default_factory=list)
    lengths: dict = field(default_factory=dict)  # id -> (gt_len, second_len)

    @property
    def removed_count(self):
        return len(self.removed)

    def to_dict(self):
        return {
            "kept": self.kept,
            "removed": self.removed,
            "removed_count": self.removed_count,
            "lengths": {k: list(v) for k, v in self.lengths.items()},
        }


def pgc_filter(aligned_records, second_pass, tolerance) -> PgcReport:
    """Decide keep/remove for each aligned record. Records without a second-pass
    segment are kept with a warning."""
    by_id = second_pass.by_id()
    report = PgcReport()
    for rec in aligned_records:
        if rec.status is not Status.ALIGNED:
            continue
        seg = by_id.get(rec.segment_id)
        if seg is None:
            log.warning("no second-pass segment for %s; keeping", rec.segment_id)
            report.kept.append(rec.segment_id)
            continue
        gt_len = rec.window_len
        second_len = len(normalize_text(seg.text))
        report.lengths[rec.segment_id] = (gt_len, second_len)
        if abs(gt_len - second_len) > tolerance:
            report.removed.append(rec.segment_id)
        else:
            report.kept.append(rec.segment_id)
    return report
