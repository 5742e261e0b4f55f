import pytest

from fasa.errors import IngestError
from fasa.transcript import load_transcript, normalize


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


def test_plain_lines(tmp_path):
    p = write(tmp_path, "t.txt", "hello there\nbye")
    raw = load_transcript(p, "plain")
    assert len(raw.lines) == 2
    assert all(ln.speaker_tag is None for ln in raw.lines)


def test_chat_main_tiers_only(tmp_path):
    p = write(tmp_path, "t.cha", "@Begin\n*CHI:\tthe dog ran .\n%mor:\tn|dog v|run\n@End\n")
    raw = load_transcript(p, "chat")
    assert len(raw.lines) == 1
    assert raw.lines[0].speaker_tag == "CHI"
    assert "the dog ran" in raw.lines[0].raw_text


def test_chat_without_main_tiers_errors(tmp_path):
    p = write(tmp_path, "t.cha", "@Begin\n%mor:\tnothing\n@End\n")
    with pytest.raises(IngestError):
        load_transcript(p, "chat")


def test_chat_continuation_lines(tmp_path):
    p = write(tmp_path, "t.cha", "*MOT:\tthe quick\n\tbrown fox .\n@End\n")
    raw = load_transcript(p, "chat")
    assert len(raw.lines) == 1
    assert normalize(raw).tokens == ("the", "quick", "brown", "fox")


def test_speaker_filter(tmp_path):
    p = write(tmp_path, "t.cha", "*CHI:\tone .\n*MOT:\ttwo .\n*CHI:\tthree .\n")
    raw = load_transcript(p, "chat", speakers="CHI")
    assert [ln.raw_text.strip() for ln in raw.lines] == ["one .", "three ."]


def test_missing_file(tmp_path):
    with pytest.raises(IngestError):
        load_transcript(tmp_path / "absent.txt", "plain")


def test_normalize_counts_and_provenance(tmp_path):
    p = write(tmp_path, "t.txt", "Hello, World!\ndon't stop")
    norm = normalize(load_transcript(p, "plain"))
    assert norm.tokens == ("hello", "world", "dont", "stop")
    assert norm.originals == ("Hello", "World", "don't", "stop")
    assert norm.line_index == (0, 0, 1, 1)
    assert list(norm.line_index) == sorted(norm.line_index)


def test_normalize_zero_tokens_errors(tmp_path):
    p = write(tmp_path, "t.txt", "!!! ???\n...")
    with pytest.raises(IngestError):
        load_transcript(p, "plain")


def test_chat_annotation_stripping(tmp_path):
    p = write(tmp_path, "t.cha", "*CHI:\tthe dog [!] &uh ran .\n")
    norm = normalize(load_transcript(p, "chat"))
    assert norm.tokens == ("the", "dog", "ran")
