"""Hypothesis ingestion: load ASR segment files, or obtain them by running an
external backend command behind a file contract."""

import json
import logging
import shlex
import subprocess
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import BackendError, IngestError
from .model import HypothesisSegment

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class HypothesisSet:
    audio_id: str
    segments: tuple  # HypothesisSegment, sorted by start_s
    sample_rate_hz: Optional[int] = None

    def __len__(self):
        return len(self.segments)

    def by_id(self):
        return {s.segment_id: s for s in self.segments}

    def to_dict(self):
        d = {"audio": self.audio_id, "segments": [s.to_dict() for s in self.segments]}
        if self.sample_rate_hz is not None:
            d["sample_rate"] = self.sample_rate_hz
        return d


def load_hypotheses(path) -> HypothesisSet:
    """Load and validate a hypothesis file; re-sorts out-of-order segments."""
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise IngestError("cannot read hypothesis file %s: %s" % (path, e)) from e
    except json.JSONDecodeError as e:
        raise IngestError("malformed hypothesis file %s: %s" % (path, e)) from e

    if not isinstance(data, dict) or "audio" not in data or "segments" not in data:
        raise IngestError(
            "hypothesis file %s must be an object with 'audio' and 'segments'" % path
        )
    segments = []
    for i, sd in enumerate(data["segments"]):
        try:
            segments.append(HypothesisSegment.from_dict(sd))
        except (KeyError, TypeError, ValueError) as e:
            raise IngestError("bad segment #%d in %s: %s" % (i, path, e)) from e

    ids = [s.segment_id for s in segments]
    dupes = {i for i in ids if ids.count(i) > 1}
    if dupes:
        raise IngestError("duplicate segment ids in %s: %s" % (path, sorted(dupes)))

    if any(
        segments[i].start_s > segments[i + 1].start_s for i in range(len(segments) - 1)
    ):
        log.warning("segments in %s are out of time order; re-sorting", path)
        segments.sort(key=lambda s: s.start_s)

    return HypothesisSet(
        audio_id=str(data["audio"]),
        segments=tuple(segments),
        sample_rate_hz=data.get("sample_rate"),
    )


def save_hypotheses(hyps: HypothesisSet, path):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(hyps.to_dict(), f, indent=2)
        f.write("\n")


def run_backend(command_template, audio_path, workdir) -> HypothesisSet:
    """Run an external ASR backend: substitute {audio} and {out} in the template,
    execute it, then parse the output file it wrote."""
    if "{audio}" not in command_template or "{out}" not in command_template:
        raise BackendError(
            "backend command template must contain {audio} and {out} placeholders"
        )
    workdir = Path(workdir)
    workdir.mkdir(parents=True, exist_ok=True)
    out_path = workdir / "hypotheses.json"
    cmd = [
        part.replace("{audio}", str(audio_path)).replace("{out}", str(out_path))
        for part in shlex.split(command_template)
    ]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        raise BackendError(
            "backend command failed with exit code %d: %s"
            % (proc.returncode, proc.stderr.strip()),
            exit_code=proc.returncode,
            stderr=proc.stderr,
        )
    if not out_path.exists():
        raise BackendError("backend command did not write %s" % out_path)
    return load_hypotheses(out_path)
