import json
import os
import stat

import pytest

from fasa.errors import BackendError, IngestError
from fasa.hypotheses import load_hypotheses, run_backend, save_hypotheses


def write_hyp(path, segments, audio="a.wav", extra=None):
    data = {"audio": audio, "segments": segments}
    if extra:
        data.update(extra)
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


def test_load_two_segments(tmp_path):
    p = write_hyp(
        tmp_path / "h.json",
        [
            {"id": "u1", "start": 0.0, "end": 2.5, "text": "the dog ran"},
            {"id": "u2", "start": 2.7, "end": 4.0, "text": "so fast"},
        ],
    )
    hyps = load_hypotheses(p)
    assert len(hyps) == 2
    assert [s.segment_id for s in hyps.segments] == ["u1", "u2"]
    assert hyps.audio_id == "a.wav"


def test_out_of_order_resorted_with_warning(tmp_path, caplog):
    p = write_hyp(
        tmp_path / "h.json",
        [
            {"id": "u2", "start": 2.7, "end": 4.0, "text": "so fast"},
            {"id": "u1", "start": 0.0, "end": 2.5, "text": "the dog ran"},
        ],
    )
    with caplog.at_level("WARNING"):
        hyps = load_hypotheses(p)
    assert [s.segment_id for s in hyps.segments] == ["u1", "u2"]
    assert any("re-sorting" in r.message for r in caplog.records)


def test_inverted_span_rejected(tmp_path):
    p = write_hyp(tmp_path / "h.json", [{"id": "u1", "start": 3.0, "end": 2.0, "text": "x"}])
    with pytest.raises(IngestError, match="inverted"):
        load_hypotheses(p)


def test_duplicate_ids_rejected(tmp_path):
    p = write_hyp(
        tmp_path / "h.json",
        [
            {"id": "u1", "start": 0.0, "end": 1.0, "text": "a"},
            {"id": "u1", "start": 2.0, "end": 3.0, "text": "b"},
        ],
    )
    with pytest.raises(IngestError, match="duplicate"):
        load_hypotheses(p)


def test_malformed_json(tmp_path):
    p = tmp_path / "h.json"
    p.write_text("{not json", encoding="utf-8")
    with pytest.raises(IngestError):
        load_hypotheses(p)


def test_word_timestamps_parsed(tmp_path):
    p = write_hyp(
        tmp_path / "h.json",
        [
            {
                "id": "u1",
                "start": 0.0,
                "end": 1.0,
                "text": "hi there",
                "words": [
                    {"word": "hi", "start": 0.0, "end": 0.4},
                    {"word": "there", "start": 0.5, "end": 1.0},
                ],
            }
        ],
        extra={"sample_rate": 16000},
    )
    hyps = load_hypotheses(p)
    assert hyps.sample_rate_hz == 16000
    assert hyps.segments[0].words[1].word == "there"


def test_roundtrip_identity(tmp_path):
    p = write_hyp(
        tmp_path / "h.json",
        [
            {"id": "u1", "start": 0.0, "end": 1.0, "text": "hello"},
            {"id": "u2", "start": 1.5, "end": 2.0, "text": "bye"},
        ],
        extra={"sample_rate": 8000},
    )
    hyps = load_hypotheses(p)
    save_hypotheses(hyps, tmp_path / "h2.json")
    again = load_hypotheses(tmp_path / "h2.json")
    assert again == hyps


def _stub_script(path, body):
    path.write_text("#!/bin/sh\n" + body, encoding="utf-8")
    os.chmod(path, os.stat(path).st_mode | stat.S_IXUSR)
    return path


def test_run_backend_success(tmp_path):
    script = _stub_script(
        tmp_path / "asr.sh",
        'echo \'{"audio": "a.wav", "segments": '
        '[{"id": "u1", "start": 0.0, "end": 1.0, "text": "hi"}]}\' > "$2"\n',
    )
    hyps = run_backend("%s {audio} {out}" % script, "a.wav", tmp_path / "wd")
    assert len(hyps) == 1


def test_run_backend_nonzero_exit(tmp_path):
    script = _stub_script(tmp_path / "asr.sh", "echo boom >&2\nexit 1\n")
    with pytest.raises(BackendError) as exc:
        run_backend("%s {audio} {out}" % script, "a.wav", tmp_path / "wd")
    assert exc.value.exit_code == 1
    assert "boom" in str(exc.value)


def test_run_backend_malformed_output(tmp_path):
    script = _stub_script(tmp_path / "asr.sh", 'echo "garbage" > "$2"\n')
    with pytest.raises(IngestError):
        run_backend("%s {audio} {out}" % script, "a.wav", tmp_path / "wd")


def test_run_backend_missing_placeholders(tmp_path):
    with pytest.raises(BackendError, match="placeholder"):
        run_backend("asr only-audio", "a.wav", tmp_path / "wd")
