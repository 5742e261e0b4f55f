"""Independent reference implementations used to check the production code.
These stay deliberately naive: plain recursion and exhaustive enumeration."""

import sys

sys.setrecursionlimit(200000)

# Sequences are interned to small integer ids so memo keys are cheap; the
# recursion itself stays the textbook definition. _seqs[i] = (head, tail_id,
# length) for sequence id i; id 0 is the empty sequence.
_ids = {(): 0}
_seqs = [(None, 0, 0)]
_memo = {}


def _intern(t):
    i = _ids.get(t)
    if i is None:
        tail = _intern(t[1:])
        i = len(_seqs)
        _ids[t] = i
        _seqs.append((t[0], tail, len(t)))
    return i


def _dist(ia, ib):
    ha, ta, la = _seqs[ia]
    hb, tb, lb = _seqs[ib]
    if la == 0:
        return lb
    if lb == 0:
        return la
    key = (ia << 24) | ib
    v = _memo.get(key)
    if v is None:
        v = min(
            _dist(ta, ib) + 1,
            _dist(ia, tb) + 1,
            _dist(ta, tb) + (ha != hb),
        )
        _memo[key] = v
    return v


def oracle_edit_distance(a, b):
    """Textbook recursive definition of Levenshtein distance, memoized."""
    return _dist(_intern(tuple(a)), _intern(tuple(b)))


def oracle_best_window(pred, transcript, slack):
    """Enumerate every (start, length) candidate; keep the first minimum in
    (start asc, length asc) order."""
    p, m = len(pred), len(transcript)
    hi = min(p + slack, m)
    lo = min(max(1, p - slack), hi)
    best = None
    for a in range(m):
        for length in range(lo, hi + 1):
            if a + length > m:
                break
            d = oracle_edit_distance(pred, transcript[a : a + length])
            if best is None or d < best[2]:
                best = (a, length, d)
    return best
