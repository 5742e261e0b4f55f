"""Sliding-window alignment: for each hypothesis segment, find the transcript
window with minimal Levenshtein distance, then route by WER thresholds."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import FasaError
from .model import AlignConfig, AlignmentRecord, Status
from .textnorm import normalize_text

try:
    from ._lev import lev as _clev
except ImportError:  # extension not built; pure-Python fallback below
    _clev = None


@dataclass(frozen=True)
class WindowMatch:
    start: int
    length: int
    distance: int


def edit_distance(a, b) -> int:
    """Minimal number of insertions, deletions and substitutions turning
    sequence a into sequence b. Uses the compiled kernel when available,
    otherwise bit-parallel (Myers) for patterns that fit a machine word and
    classic DP beyond that."""
    if _clev is not None:
        return _clev(a, b)
    return _edit_distance_py(a, b)


def _edit_distance_py(a, b) -> int:
    if len(a) > len(b):
        a, b = b, a
    m = len(a)
    if m == 0:
        return len(b)
    if m > 64:
        return _edit_distance_dp(a, b)
    peq = {}
    for i, c in enumerate(a):
        peq[c] = peq.get(c, 0) | (1 << i)
    mask = (1 << m) - 1
    hibit = 1 << (m - 1)
    pv = mask
    mv = 0
    score = m
    get = peq.get
    for c in b:
        eq = get(c, 0)
        xv = eq | mv
        xh = (((eq & pv) + pv) ^ pv) | eq
        ph = mv | (~(xh | pv) & mask)
        mh = pv & xh
        if ph & hibit:
            score += 1
        elif mh & hibit:
            score -= 1
        ph = ((ph << 1) | 1) & mask
        mh = (mh << 1) & mask
        pv = mh | (~(xv | ph) & mask)
        mv = ph & xv
    return score


def _edit_distance_dp(a, b) -> int:
    if len(a) < len(b):
        a, b = b, a
    n = len(b)
    prev = list(range(n + 1))
    for x in a:
        cur = [prev[0] + 1]
        append = cur.append
        pj = prev[0]
        for j in range(1, n + 1):
            pj1 = prev[j]
            c = pj if x == b[j - 1] else pj + 1
            d = pj1 + 1
            if d < c:
                c = d
            e = cur[j - 1] + 1
            if e < c:
                c = e
            append(c)
            pj = pj1
        prev = cur
    return prev[n]


def wer(reference, hypothesis) -> float:
    """Word error rate: edit distance divided by reference length. May exceed 1."""
    if len(reference) == 0:
        raise FasaError("WER is undefined for an empty reference")
    return edit_distance(reference, hypothesis) / len(reference)


def _window_length_range(pred_len, transcript_len, slack):
    hi = min(pred_len + slack, transcript_len)
    # clamp: a prediction longer than the whole transcript still gets candidates
    lo = min(max(1, pred_len - slack), hi)
    return lo, hi


def best_window(pred, transcript, slack, unit="token", blocked=None) -> WindowMatch:
    """Find the transcript window T[a : a+len] minimizing the edit distance to
    pred, over all starts a and lengths in [max(1, |pred|-slack), |pred|+slack].
    Ties break to the smallest a, then the smallest length.

    `blocked` is an optional boolean mask over transcript tokens; windows
    touching a blocked token are excluded.
    """
    p = len(pred)
    m = len(transcript)
    if p == 0 or m == 0:
        raise FasaError("best_window requires non-empty pred and transcript")
    lo, hi = _window_length_range(p, m, slack)
    if unit == "character":
        return _best_window_chars(pred, transcript, lo, hi, blocked)

    # Batched DP over all starts at once: for a fixed start, the distance to
    # every window length is a cell in the last DP row against the longest
    # candidate window, so one (p x hi) table per start covers all lengths.
    vocab = {}
    t_ids = np.array([vocab.setdefault(t, len(vocab)) for t in transcript], dtype=np.int64)
    p_ids = np.array([vocab.setdefault(t, len(vocab)) for t in pred], dtype=np.int64)

    n_starts = m - lo + 1
    starts = np.arange(n_starts)
    # window token matrix, padded with a sentinel that never matches pred
    cols = starts[:, None] + np.arange(hi)[None, :]
    valid_cols = cols < m
    wmat = np.where(valid_cols, t_ids[np.minimum(cols, m - 1)], -1)

    prev = np.tile(np.arange(hi + 1, dtype=np.int64), (n_starts, 1))
    last_rows = prev  # row for i pred tokens consumed
    for i in range(1, p + 1):
        cur = np.empty_like(prev)
        cur[:, 0] = i
        for j in range(1, hi + 1):
            sub = prev[:, j - 1] + (wmat[:, j - 1] != p_ids[i - 1])
            np.minimum(sub, prev[:, j] + 1, out=sub)
            np.minimum(sub, cur[:, j - 1] + 1, out=sub)
            cur[:, j] = sub
        prev = cur
    last_rows = prev

    # dist[a, len-lo] for len in [lo, hi]
    dist = last_rows[:, lo : hi + 1].astype(np.float64)
    lens = np.arange(lo, hi + 1)
    infeasible = (starts[:, None] + lens[None, :]) > m
    dist[infeasible] = np.inf
    if blocked is not None:
        cum = np.concatenate(([0], np.cumsum(np.asarray(blocked, dtype=np.int64))))
        ends = np.minimum(starts[:, None] + lens[None, :], m)
        touched = (cum[ends] - cum[starts[:, None]]) > 0
        dist[touched] = np.inf
    if not np.isfinite(dist).any():
        raise FasaError("no candidate window available (all blocked)")
    flat = int(np.argmin(dist))  # first minimum in C order = smallest a, then len
    a, k = divmod(flat, dist.shape[1])
    return WindowMatch(start=int(a), length=int(lo + k), distance=int(dist[a, k]))


def _best_window_chars(pred, transcript, lo, hi, blocked):
    """Character-level variant: score windows on their space-joined strings.
    One DP per start, reading distances at token-boundary columns."""
    pred_str = " ".join(pred)
    np_ = len(pred_str)
    m = len(transcript)
    best = None
    for a in range(m - lo + 1):
        max_len = min(hi, m - a)
        if max_len < lo:
            continue
        if blocked is not None and blocked[a]:
            continue
        col = list(range(np_ + 1))
        pos = 0  # chars of the window consumed so far
        for k in range(max_len):
            token = transcript[a + k]
            if blocked is not None and blocked[a + k]:
                break
            chunk = token if k == 0 else " " + token
            for ch in chunk:
                pos += 1
                new = [pos]
                for j in range(1, np_ + 1):
                    c = col[j - 1] if ch == pred_str[j - 1] else col[j - 1] + 1
                    c = min(c, col[j] + 1, new[j - 1] + 1)
                    new.append(c)
                col = new
            length = k + 1
            if length >= lo:
                d = col[np_]
                if best is None or d < best.distance:
                    best = WindowMatch(start=a, length=length, distance=d)
    if best is None:
        raise FasaError("no candidate window available (all blocked)")
    return best


def _make_record(seg, transcript, cfg, blocked):
    pred = tuple(normalize_text(seg.text))
    if not pred:
        return AlignmentRecord(
            segment_id=seg.segment_id, status=Status.DROPPED, pred_text=()
        )
    try:
        match = best_window(
            pred, transcript.tokens, cfg.window_slack, cfg.distance_unit, blocked
        )
    except FasaError:
        # every window blocked under no-overlap
        return AlignmentRecord(
            segment_id=seg.segment_id, status=Status.DROPPED, pred_text=pred
        )
    gt_tokens = transcript.tokens[match.start : match.start + match.length]
    distance = match.distance
    if cfg.distance_unit == "character":
        w = distance / len(" ".join(gt_tokens))
    else:
        w = distance / match.length
    if w < cfg.sigma_a:
        status = Status.ALIGNED
    elif w < cfg.sigma_i:
        status = Status.VERIFY
    else:
        status = Status.DROPPED
    gt_text = tuple(transcript.originals[match.start : match.start + match.length])
    return AlignmentRecord(
        segment_id=seg.segment_id,
        status=status,
        pred_text=pred,
        window_start=match.start,
        window_len=match.length,
        gt_text=gt_text,
        distance=distance,
        wer=w,
    )


def align_corpus(hyps, transcript, cfg: AlignConfig = None, threads=None):
    """Align every hypothesis segment against the transcript. Returns
    AlignmentRecords in segment start-time order."""
    cfg = cfg or AlignConfig()
    if len(transcript.tokens) == 0:
        raise FasaError("cannot align against an empty transcript")
    segments = list(hyps.segments)

    if not cfg.allow_overlap:
        # sequential greedy claiming in segment order
        blocked = np.zeros(len(transcript.tokens), dtype=bool)
        records = []
        for seg in segments:
            rec = _make_record(seg, transcript, cfg, blocked)
            if rec.status in (Status.ALIGNED, Status.VERIFY):
                blocked[rec.window_start : rec.window_start + rec.window_len] = True
            records.append(rec)
        return records

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(
                pool.map(lambda s: _make_record(s, transcript, cfg, None), segments)
            )
    else:
        records = [_make_record(s, transcript, cfg, None) for s in segments]
    return records
