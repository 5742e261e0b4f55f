from fasa.model import AlignmentRecord, Status
from fasa.pgc import pgc_filter

from conftest import make_hyps


def aligned_record(seg_id, n_tokens):
    toks = tuple("w%d" % i for i in range(n_tokens))
    return AlignmentRecord(
        segment_id=seg_id,
        status=Status.ALIGNED,
        pred_text=toks,
        window_start=0,
        window_len=n_tokens,
        gt_text=toks,
        distance=0,
        wer=0.0,
    )


def second_pass_for(lengths):
    texts = [" ".join("x%d" % i for i in range(n)) for n in lengths]
    return make_hyps(texts)


def test_length_delta_two_removed():
    recs = [aligned_record("s0000", 5)]
    report = pgc_filter(recs, second_pass_for([7]), tolerance=1)
    assert report.removed == ["s0000"]


def test_equal_lengths_kept():
    recs = [aligned_record("s0000", 5)]
    report = pgc_filter(recs, second_pass_for([5]), tolerance=1)
    assert report.kept == ["s0000"] and not report.removed


def test_delta_one_within_default_tolerance():
    recs = [aligned_record("s0000", 5)]
    report = pgc_filter(recs, second_pass_for([6]), tolerance=1)
    assert report.kept == ["s0000"]


def test_injected_deltas_removed_exactly():
    lengths = [6] * 20
    bad = {3, 7, 11, 19}
    for i in bad:
        lengths[i] = 9
    recs = [aligned_record("s%04d" % i, 6) for i in range(20)]
    report = pgc_filter(recs, second_pass_for(lengths), tolerance=1)
    assert sorted(report.removed) == sorted("s%04d" % i for i in bad)
    assert report.removed_count == 4
    assert len(report.kept) == 16


def test_missing_second_pass_keeps_with_warning(caplog):
    recs = [aligned_record("sXXXX", 5)]
    with caplog.at_level("WARNING"):
        report = pgc_filter(recs, second_pass_for([5]), tolerance=1)
    assert report.kept == ["sXXXX"]
    assert any("keeping" in r.message for r in caplog.records)


def test_tolerance_monotonicity():
    lengths = [4, 5, 6, 7, 8]
    recs = [aligned_record("s%04d" % i, 6) for i in range(5)]
    removed = {
        t: set(pgc_filter(recs, second_pass_for(lengths), tolerance=t).removed)
        for t in range(4)
    }
    for t in range(3):
        assert removed[t + 1] <= removed[t]


def test_huge_tolerance_removes_nothing():
    lengths = [1, 20, 6]
    recs = [aligned_record("s%04d" % i, 6) for i in range(3)]
    report = pgc_filter(recs, second_pass_for(lengths), tolerance=10**9)
    assert not report.removed


def test_non_aligned_records_ignored():
    rec = AlignmentRecord("v1", Status.VERIFY, ("a",), 0, 1, ("a",), 0, 0.2)
    report = pgc_filter([rec], second_pass_for([1]), tolerance=0)
    assert not report.kept and not report.removed
