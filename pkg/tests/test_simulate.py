import pytest

from fasa.align import align_corpus
from fasa.errors import FasaError
from fasa.model import AlignConfig, Status
from fasa.rng import Rng
from fasa.simulate import (
    CorruptionSpec,
    SimTruth,
    corrupt_transcript,
    evaluate,
    generate_corpus,
    synth_hypotheses,
)


class TestRng:
    def test_deterministic_stream(self):
        a = Rng(123)
        b = Rng(123)
        assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]

    def test_distinct_seeds_diverge(self):
        assert Rng(1).next_u64() != Rng(2).next_u64()

    def test_between_inclusive_bounds(self):
        r = Rng(7)
        vals = {r.between(3, 5) for _ in range(200)}
        assert vals == {3, 4, 5}

    def test_shuffle_is_permutation(self):
        r = Rng(9)
        items = list(range(50))
        shuffled = list(items)
        r.shuffle(shuffled)
        assert sorted(shuffled) == items and shuffled != items


class TestGenerateCorpus:
    def test_seed_determinism(self):
        a = generate_corpus(100, (8, 15), 5000, seed=7)
        b = generate_corpus(100, (8, 15), 5000, seed=7)
        assert a == b

    def test_fixed_length_span_arithmetic(self):
        sentences, spans = generate_corpus(3, (2, 2), 10, seed=1)
        assert len(sentences) == 3
        assert all(len(s) == 2 for s in sentences)
        assert spans == [(0, 2), (2, 2), (4, 2)]

    def test_unique_marker_per_sentence(self):
        sentences, _ = generate_corpus(50, (5, 9), 500, seed=3)
        counts = {}
        for s in sentences:
            for t in s:
                counts[t] = counts.get(t, 0) + 1
        for i, s in enumerate(sentences):
            assert any(counts[t] == 1 for t in s), "sentence %d has no unique token" % i

    def test_infeasible_parameters(self):
        with pytest.raises(FasaError):
            generate_corpus(100, (2, 2), 50, seed=1)
        with pytest.raises(FasaError):
            generate_corpus(2, (5, 3), 100, seed=1)


class TestCorruptTranscript:
    def test_identity_when_no_corruption(self):
        sentences, spans = generate_corpus(10, (4, 6), 100, seed=2)
        transcript, surviving, dropped, tspans = corrupt_transcript(
            sentences, CorruptionSpec(seed=2)
        )
        assert surviving == list(range(10))
        assert not dropped
        assert list(transcript.tokens) == [t for s in sentences for t in s]
        assert tspans == {i: spans[i] for i in range(10)}

    def test_full_drop_empties_transcript(self):
        sentences, _ = generate_corpus(5, (3, 3), 50, seed=2)
        transcript, surviving, dropped, _ = corrupt_transcript(
            sentences, CorruptionSpec(sentence_drop_rate=1.0, seed=2)
        )
        assert not surviving and len(dropped) == 5
        assert len(transcript.tokens) == 0

    def test_seeded_drop_is_stable(self):
        sentences, _ = generate_corpus(100, (4, 6), 1000, seed=5)
        spec = CorruptionSpec(sentence_drop_rate=0.1, seed=11)
        _, s1, d1, _ = corrupt_transcript(sentences, spec)
        _, s2, d2, _ = corrupt_transcript(sentences, spec)
        assert s1 == s2 and d1 == d2
        assert 0 < len(d1) < 100

    def test_shuffle_reorders_but_keeps_content(self):
        sentences, _ = generate_corpus(30, (4, 6), 300, seed=5)
        spec = CorruptionSpec(shuffle_sentences=True, seed=13)
        transcript, surviving, _, tspans = corrupt_transcript(sentences, spec)
        assert sorted(surviving) == list(range(30))
        assert surviving != list(range(30))
        for idx, (start, length) in tspans.items():
            assert list(transcript.tokens[start : start + length]) == sentences[idx]


class TestSynthHypotheses:
    def test_zero_error_rate_is_verbatim(self):
        sentences, spans = generate_corpus(10, (4, 6), 100, seed=4)
        hyps = synth_hypotheses(sentences, spans, 0.0, seed=4)
        assert [s.text.split() for s in hyps.segments] == sentences

    def test_time_spans_strictly_increase(self):
        sentences, spans = generate_corpus(10, (4, 6), 100, seed=4)
        hyps = synth_hypotheses(sentences, spans, 0.0, seed=4)
        for a, b in zip(hyps.segments, hyps.segments[1:]):
            assert a.end_s < b.start_s
        seg = hyps.segments[0]
        assert seg.duration_s == pytest.approx(len(sentences[0]) * 0.4)

    def test_realized_error_rate_concentrates(self):
        # ~1e5 tokens at rate 0.05 should land within +-0.005
        sentences, spans = generate_corpus(1000, (95, 105), 20000, seed=6)
        hyps = synth_hypotheses(sentences, spans, 0.05, seed=6, vocab_size=20000)
        total = changed = 0
        for s, seg in zip(sentences, hyps.segments):
            out = seg.text.split()
            total += len(s)
            changed += sum(1 for x, y in zip(s, out) if x != y)
        assert total >= 90000
        assert 0.045 <= changed / total <= 0.055

    def test_seed_determinism(self):
        sentences, spans = generate_corpus(10, (4, 6), 100, seed=4)
        a = synth_hypotheses(sentences, spans, 0.3, seed=9)
        b = synth_hypotheses(sentences, spans, 0.3, seed=9)
        assert a == b


class TestEvaluate:
    def run_pipeline(self, spec, n=30, lens=(6, 9), vocab=600, seed=21, err=0.0):
        sentences, spans = generate_corpus(n, lens, vocab, seed)
        transcript, surviving, dropped, tspans = corrupt_transcript(sentences, spec)
        hyps = synth_hypotheses(sentences, spans, err, seed, vocab_size=vocab)
        records = align_corpus(hyps, transcript, AlignConfig())
        truth = SimTruth(sentences, spans, dropped, tspans)
        return records, truth

    def test_perfect_alignment(self):
        records, truth = self.run_pipeline(CorruptionSpec(seed=21))
        report = evaluate(records, truth)
        assert report.span_recovery_rate == 1.0
        assert report.aligned_errors == 0
        assert report.aligned_count == len(records)
        assert all(r.wer == 0.0 for r in records)

    def test_dropped_sentences_yield_no_false_alignments(self):
        records, truth = self.run_pipeline(
            CorruptionSpec(sentence_drop_rate=0.3, shuffle_sentences=True, seed=21)
        )
        report = evaluate(records, truth)
        assert report.false_alignment_count == 0
        for rec in records:
            if int(rec.segment_id[1:]) in truth.dropped:
                assert rec.status is Status.DROPPED

    def test_report_column_order(self):
        records, truth = self.run_pipeline(CorruptionSpec(seed=21))
        text = evaluate(records, truth).render()
        assert text.splitlines()[0] == "AU | VU | AU Error | AW | AW Error (%)"

    def test_percentage_recomputed_from_counts(self):
        records, truth = self.run_pipeline(CorruptionSpec(seed=21))
        report = evaluate(records, truth)
        assert report.aligned_word_errors <= report.aligned_words
        if report.aligned_words:
            assert report.aligned_word_error_pct == pytest.approx(
                100.0 * report.aligned_word_errors / report.aligned_words
            )

    def test_truth_roundtrip(self, tmp_path):
        _, truth = self.run_pipeline(
            CorruptionSpec(sentence_drop_rate=0.2, shuffle_sentences=True, seed=21)
        )
        truth.save(tmp_path / "truth.json")
        again = SimTruth.load(tmp_path / "truth.json")
        assert again == truth
