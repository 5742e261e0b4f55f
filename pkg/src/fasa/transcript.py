"""Transcript ingestion: plain text or CHAT files, normalized to one token stream."""

import re
from dataclasses import dataclass
from typing import Optional

from .errors import IngestError
from .textnorm import normalize_text, strip_chat_annotations, tokenize_with_surface

_CHAT_MAIN_TIER_RE = re.compile(r"^\*([A-Za-z0-9]+):\s*(.*)$")


@dataclass(frozen=True)
class TranscriptLine:
    speaker_tag: Optional[str]
    raw_text: str


@dataclass(frozen=True)
class RawTranscript:
    source_path: str
    format: str  # "plain" | "chat"
    lines: tuple  # tuple of TranscriptLine


@dataclass(frozen=True)
class NormalizedTranscript:
    tokens: tuple  # lowercase alnum tokens
    originals: tuple  # per-token surface forms
    line_index: tuple  # per-token source line number

    def __len__(self):
        return len(self.tokens)


def load_transcript(path, format="plain", speakers="all") -> RawTranscript:
    """Load a transcript file. For CHAT, keep only *XXX: main tiers; `speakers`
    optionally restricts to one speaker tag."""
    if format not in ("plain", "chat"):
        raise IngestError("unknown transcript format %r" % format)
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise IngestError("cannot read transcript %s: %s" % (path, e)) from e
    except UnicodeDecodeError as e:
        raise IngestError("transcript %s is not valid UTF-8: %s" % (path, e)) from e

    lines = []
    if format == "plain":
        for raw in text.splitlines():
            lines.append(TranscriptLine(None, raw))
    else:
        # CHAT continuation lines start with a tab and extend the previous tier.
        current = None
        for raw in text.splitlines():
            m = _CHAT_MAIN_TIER_RE.match(raw)
            if m:
                if current is not None:
                    lines.append(current)
                current = TranscriptLine(m.group(1), m.group(2))
            elif raw.startswith("\t") and current is not None:
                current = TranscriptLine(
                    current.speaker_tag, current.raw_text + " " + raw.strip()
                )
            else:
                # header (@...) or dependent tier (%...): flush and discard
                if current is not None:
                    lines.append(current)
                    current = None
        if current is not None:
            lines.append(current)
        if not lines:
            raise IngestError("no main-tier content in CHAT file %s" % path)

    if speakers != "all":
        lines = [ln for ln in lines if ln.speaker_tag == speakers]

    raw = RawTranscript(source_path=str(path), format=format, lines=tuple(lines))
    if not any(normalize_text(ln.raw_text, chat=(format == "chat")) for ln in raw.lines):
        raise IngestError("transcript %s has no usable text" % path)
    return raw


def normalize(raw: RawTranscript) -> NormalizedTranscript:
    """Normalize a raw transcript to the token stream used by alignment."""
    chat = raw.format == "chat"
    tokens, originals, line_index = [], [], []
    for i, line in enumerate(raw.lines):
        text = line.raw_text
        if chat:
            text = strip_chat_annotations(text)
        for tok, surface in tokenize_with_surface(text):
            tokens.append(tok)
            originals.append(surface)
            line_index.append(i)
    if not tokens:
        raise IngestError("transcript %s normalized to zero tokens" % raw.source_path)
    return NormalizedTranscript(tuple(tokens), tuple(originals), tuple(line_index))
