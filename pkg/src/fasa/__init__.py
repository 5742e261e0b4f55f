"""fasa: extract aligned, segmented speech datasets from long audio paired with
noisy, incomplete, possibly out-of-order transcripts."""

from .align import WindowMatch, align_corpus, best_window, edit_distance, wer
from .audio import AudioBuffer, cut_clip, read_wav, write_wav
from .emit import dataset_stats, emit_dataset, format_duration, load_manifest
from .errors import AudioError, BackendError, ConfigError, FasaError, IngestError
from .hypotheses import HypothesisSet, load_hypotheses, run_backend, save_hypotheses
from .model import (
    AlignConfig,
    AlignmentRecord,
    DatasetManifest,
    HypothesisSegment,
    Status,
)
from .pgc import PgcReport, pgc_filter
from .review import ReviewDecision, create_app, merge_decisions
from .simulate import (
    CorruptionSpec,
    EvalReport,
    SimTruth,
    corrupt_transcript,
    evaluate,
    generate_corpus,
    synth_hypotheses,
)
from .transcript import NormalizedTranscript, RawTranscript, load_transcript, normalize

__version__ = "0.1.0"
