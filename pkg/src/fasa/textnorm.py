"""Text normalization: everything downstream compares lowercase alphanumeric tokens."""

import re

# A word is a run of alphanumerics, possibly joined by internal punctuation
# with alphanumerics on both sides ("don't", "well-known").
_WORD_RE = re.compile(r"[A-Za-z0-9]+(?:[^\sA-Za-z0-9]+[A-Za-z0-9]+)*")
_NON_ALNUM_RE = re.compile(r"[^A-Za-z0-9]+")

# Common CHAT surface annotations: bracketed codes [...] , scoped groups <...>,
# and &-prefixed fillers/events (&uh, &-um, &=laughs).
_CHAT_NOISE_RE = re.compile(r"\[[^\]]*\]|<[^>]*>|&\S+")


def strip_chat_annotations(text: str) -> str:
    return _CHAT_NOISE_RE.sub(" ", text)


def tokenize_with_surface(text: str):
    """Return [(token, surface), ...]: lowercase alnum tokens plus the surface
    chunk each one came from (internal punctuation deleted, case kept)."""
    out = []
    for m in _WORD_RE.finditer(text):
        surface = m.group(0)
        token = _NON_ALNUM_RE.sub("", surface).lower()
        if token:
            out.append((token, surface))
    return out


def normalize_text(text: str, chat: bool = False) -> list:
    """Normalize a line of text to its token list."""
    if chat:
        text = strip_chat_annotations(text)
    return [tok for tok, _ in tokenize_with_surface(text)]
