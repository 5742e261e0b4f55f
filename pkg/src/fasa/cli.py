"""Command line entry point: align, pgc, emit, stats, simulate, evaluate, review."""

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import align as align_mod
from . import emit as emit_mod
from . import hypotheses as hyp_mod
from . import pgc as pgc_mod
from . import review as review_mod
from . import simulate as sim_mod
from . import transcript as tr_mod
from .audio import read_wav
from .errors import ConfigError, FasaError
from .model import AlignConfig

log = logging.getLogger("fasa")


def _add_align_config_flags(p):
    p.add_argument("--sigma-a", type=float, default=None, help="alignment WER threshold (default 0.1)")
    p.add_argument("--sigma-i", type=float, default=None, help="inclusion WER threshold (default 0.3)")
    p.add_argument("--window-slack", type=int, default=None, help="window length slack in tokens (default 3)")
    p.add_argument("--pgc-tolerance", type=int, default=None, help="PGC length tolerance in tokens (default 1)")
    p.add_argument("--no-overlap", action="store_true", help="forbid overlapping transcript windows")
    p.add_argument("--distance-unit", choices=["token", "character"], default=None, help="edit distance granularity (default token)")
    p.add_argument("--config", default=None, help="optional JSON config file (flags win over it)")


def _build_config(args):
    base = {}
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as f:
            base = json.load(f)
    over = {
        "sigma_a": args.sigma_a,
        "sigma_i": args.sigma_i,
        "window_slack": args.window_slack,
        "pgc_tolerance": args.pgc_tolerance,
        "distance_unit": args.distance_unit,
    }
    merged = {k: v for k, v in base.items() if k in AlignConfig.__dataclass_fields__}
    merged.update({k: v for k, v in over.items() if v is not None})
    if args.no_overlap:
        merged["allow_overlap"] = False
    return AlignConfig(**merged)


def cmd_align(args):
    cfg = _build_config(args)
    raw = tr_mod.load_transcript(args.transcript, args.transcript_format, args.speakers)
    transcript = tr_mod.normalize(raw)
    if args.hypotheses:
        hyps = hyp_mod.load_hypotheses(args.hypotheses)
    else:
        hyps = hyp_mod.run_backend(args.backend_cmd, args.audio, Path(args.out) / "_backend")
    audio = read_wav(args.audio) if args.audio else None
    records = align_mod.align_corpus(hyps, transcript, cfg, threads=args.threads)
    manifest = emit_mod.emit_dataset(
        records, hyps, audio, args.speaker_id, args.out, trim_to_words=args.trim_to_words
    )
    print(emit_mod.dataset_stats(manifest), end="")
    return 0


def cmd_pgc(args):
    dataset = Path(args.dataset)
    manifest, speaker = emit_mod.load_manifest(dataset / emit_mod.MANIFEST_NAME)
    second = hyp_mod.load_hypotheses(args.second_pass)
    report = pgc_mod.pgc_filter(manifest.records, second, args.tolerance)
    removed = set(report.removed)
    manifest.records, manifest.spans = map(
        list,
        zip(
            *[
                (r, s)
                for r, s in zip(manifest.records, manifest.spans)
                if r.segment_id not in removed
            ]
        ),
    ) if manifest.records else ([], [])
    emit_mod.write_manifest(manifest, speaker, dataset / emit_mod.MANIFEST_NAME)
    with open(dataset / "pgc_report.json", "w", encoding="utf-8") as f:
        json.dump(report.to_dict(), f, indent=2)
        f.write("\n")
    print("PGCU: %d" % report.removed_count)
    return 0


def cmd_emit(args):
    manifest, speaker = emit_mod.load_manifest(args.manifest)
    hyps = hyp_mod.load_hypotheses(args.hypotheses)
    audio = read_wav(args.audio)
    emit_mod.emit_dataset(
        manifest.records, hyps, audio, args.speaker_id or speaker, args.out
    )
    return 0


def cmd_stats(args):
    manifest, _ = emit_mod.load_manifest(Path(args.dataset) / emit_mod.MANIFEST_NAME)
    print(emit_mod.dataset_stats(manifest), end="")
    return 0


def cmd_simulate(args):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    lo, hi = (int(x) for x in args.sentence_len.split("-"))
    sentences, spans = sim_mod.generate_corpus(
        args.sentences, (lo, hi), args.vocab, args.seed
    )
    spec = sim_mod.CorruptionSpec(
        token_error_rate=args.token_error_rate,
        sentence_drop_rate=args.drop_rate,
        shuffle_sentences=args.shuffle,
        seed=args.seed,
    )
    transcript, surviving, dropped, tspans = sim_mod.corrupt_transcript(sentences, spec)
    hyps = sim_mod.synth_hypotheses(
        sentences, spans, args.token_error_rate, args.seed, vocab_size=args.vocab
    )
    lines = []
    line_of = {}
    for tok, line_no in zip(transcript.tokens, transcript.line_index):
        line_of.setdefault(line_no, []).append(tok)
    for i in sorted(line_of):
        lines.append(" ".join(line_of[i]))
    (out / "transcript.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    hyp_mod.save_hypotheses(hyps, out / "hypotheses.json")
    truth = sim_mod.SimTruth(
        sentences=sentences, spans=spans, dropped=dropped, transcript_spans=tspans
    )
    truth.save(out / "truth.json")
    print("wrote %s: %d sentences, %d dropped" % (out, len(sentences), len(dropped)))
    return 0


def cmd_evaluate(args):
    truth = sim_mod.SimTruth.load(args.truth)
    manifest, _ = emit_mod.load_manifest(args.manifest)
    report = sim_mod.evaluate(manifest.records, truth)
    print(report.render(), end="")
    return 0


def cmd_review_serve(args):
    import uvicorn

    app = review_mod.create_app(args.dataset)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def cmd_review_merge(args):
    merged = review_mod.merge_dataset(args.dataset)
    print(emit_mod.dataset_stats(merged), end="")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fasa",
        description="Extract aligned speech datasets from long audio and noisy transcripts.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("align", help="run ingestion, alignment, and emission in one pass")
    p.add_argument("--audio", required=True, help="source WAV file (16-bit PCM)")
    p.add_argument("--transcript", required=True, help="provided transcript file")
    p.add_argument("--transcript-format", choices=["plain", "chat"], default="plain")
    p.add_argument("--speakers", default="all", help="CHAT speaker filter: all or a tag")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--hypotheses", help="hypothesis file from an ASR backend")
    src.add_argument("--backend-cmd", help="command template with {audio} and {out}")
    p.add_argument("--speaker-id", required=True, help="output speaker directory name")
    p.add_argument("--out", required=True, help="output dataset directory")
    p.add_argument("--threads", type=int, default=os.cpu_count(), help="alignment threads")
    p.add_argument("--trim-to-words", action="store_true", help="tighten clip bounds to word timestamps")
    _add_align_config_flags(p)
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("pgc", help="post-generation check an emitted dataset")
    p.add_argument("--dataset", required=True)
    p.add_argument("--second-pass", required=True, help="second-round hypothesis file keyed by record id")
    p.add_argument("--tolerance", type=int, default=1)
    p.set_defaults(func=cmd_pgc)

    p = sub.add_parser("emit", help="re-emit a dataset tree from an existing manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--hypotheses", required=True)
    p.add_argument("--audio", required=True)
    p.add_argument("--speaker-id", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("stats", help="print AU/VU/duration for a dataset")
    p.add_argument("--dataset", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("simulate", help="write a synthetic corpus with controlled corruption")
    p.add_argument("--sentences", type=int, default=100)
    p.add_argument("--sentence-len", default="8-15", help="inclusive length range, e.g. 8-15")
    p.add_argument("--vocab", type=int, default=5000)
    p.add_argument("--token-error-rate", type=float, default=0.0)
    p.add_argument("--drop-rate", type=float, default=0.0)
    p.add_argument("--shuffle", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("evaluate", help="score a manifest against simulation truth")
    p.add_argument("--truth", required=True)
    p.add_argument("--manifest", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("review", help="human review of the verify queue")
    rsub = p.add_subparsers(dest="review_command", required=True)
    ps = rsub.add_parser("serve", help="serve the review UI and API")
    ps.add_argument("--dataset", required=True)
    ps.add_argument("--port", type=int, default=8321)
    ps.add_argument("--host", default="127.0.0.1")
    ps.set_defaults(func=cmd_review_serve)
    pm = rsub.add_parser("merge", help="apply the decision log to the manifest")
    pm.add_argument("--dataset", required=True)
    pm.set_defaults(func=cmd_review_merge)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO)
    try:
        return args.func(args)
    except ConfigError as e:
        print("config error: %s" % e, file=sys.stderr)
        return 2
    except FasaError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except OSError as e:
        print("i/o error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
