"""Dataset emission: cut aligned clips, write the LibriSpeech-like tree, the
line-delimited manifest, and corpus statistics."""

import json
from pathlib import Path

from .audio import cut_clip, write_wav
from .model import AlignmentRecord, DatasetManifest, Status

MANIFEST_NAME = "manifest.jsonl"


def format_duration(seconds) -> str:
    """Render seconds as H:MM:SS with unpadded hours."""
    total = int(round(seconds))
    h, rem = divmod(total, 3600)
    m, s = divmod(rem, 60)
    return "%d:%02d:%02d" % (h, m, s)


def clip_name(speaker_id, index):
    return "%s-%04d" % (speaker_id, index)


def _clip_span(rec, seg, trim_to_words):
    start, end = seg.start_s, seg.end_s
    if trim_to_words and seg.words:
        start = max(start, seg.words[0].start_s - 0.05)
        end = min(end, seg.words[-1].end_s + 0.05)
    return start, end


def emit_dataset(
    records,
    hyps,
    audio,
    speaker_id,
    out_dir,
    trim_to_words=False,
) -> DatasetManifest:
    """Write aligned clips under out_dir/<speaker>/, verify clips under
    out_dir/_verify/, and the manifest covering every record."""
    out_dir = Path(out_dir)
    speaker_dir = out_dir / speaker_id
    verify_dir = out_dir / "_verify"
    speaker_dir.mkdir(parents=True, exist_ok=True)
    by_id = hyps.by_id()

    manifest = DatasetManifest(audio_id=hyps.audio_id)
    for i, rec in enumerate(records):
        seg = by_id[rec.segment_id]
        start, end = _clip_span(rec, seg, trim_to_words)
        manifest.records.append(rec)
        manifest.spans.append((start, end))
        name = clip_name(speaker_id, i)
        if rec.status is Status.ALIGNED:
            if audio is not None:
                write_wav(cut_clip(audio, start, end), speaker_dir / (name + ".wav"))
            (speaker_dir / (name + ".txt")).write_text(
                " ".join(rec.gt_text) + "\n", encoding="utf-8"
            )
        elif rec.status is Status.VERIFY:
            verify_dir.mkdir(parents=True, exist_ok=True)
            if audio is not None:
                write_wav(cut_clip(audio, start, end), verify_dir / (name + ".wav"))
            (verify_dir / (name + ".txt")).write_text(
                " ".join(rec.gt_text) + "\n" + " ".join(rec.pred_text) + "\n",
                encoding="utf-8",
            )
    write_manifest(manifest, speaker_id, out_dir / MANIFEST_NAME)
    return manifest


def write_manifest(manifest: DatasetManifest, speaker_id, path):
    with open(path, "w", encoding="utf-8") as f:
        for rec, (start, end) in zip(manifest.records, manifest.spans):
            line = rec.to_dict()
            line["start"] = start
            line["end"] = end
            line["speaker"] = speaker_id
            f.write(json.dumps(line, sort_keys=True) + "\n")


def load_manifest(path) -> tuple:
    """Read a manifest file back; returns (DatasetManifest, speaker_id)."""
    records, spans, speaker = [], [], None
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            d = json.loads(line)
            records.append(AlignmentRecord.from_dict(d))
            spans.append((d["start"], d["end"]))
            speaker = d.get("speaker", speaker)
    return (
        DatasetManifest(audio_id=speaker or "", records=records, spans=spans),
        speaker,
    )


def dataset_stats(manifest: DatasetManifest) -> str:
    """Fixed-order key:value stats block (aligned count, verify count, duration)."""
    return (
        "AU: %d\nVU: %d\nTime: %s\n"
        % (
            manifest.total_aligned,
            manifest.total_verify,
            format_duration(manifest.total_duration_s),
        )
    )
