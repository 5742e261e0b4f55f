"""Portable deterministic PRNG: xoshiro256** seeded through splitmix64.

Constants follow the reference implementations (Blackman & Vigna), so fixtures
reproduce bit-identically in any language. Integer draws use modulo reduction
(documented, bias negligible at our range sizes).
"""

_MASK = (1 << 64) - 1


def splitmix64_next(state):
    """One splitmix64 step; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & _MASK


class Rng:
    """xoshiro256** stream."""

    def __init__(self, seed):
        s = seed & _MASK
        self.state = []
        for _ in range(4):
            s, out = splitmix64_next(s)
            self.state.append(out)

    def next_u64(self):
        s0, s1, s2, s3 = self.state
        result = (_rotl((s1 * 5) & _MASK, 7) * 9) & _MASK
        t = (s1 << 17) & _MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self.state = [s0, s1, s2, s3]
        return result

    def below(self, n):
        """Uniform integer in [0, n)."""
        return self.next_u64() % n

    def between(self, lo, hi):
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p):
        """True with probability p."""
        return self.next_u64() < int(p * (1 << 64))

    def shuffle(self, items):
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def child(self, index):
        """Independent sub-stream for parallel per-item work."""
        _, mixed = splitmix64_next((self.state[0] ^ (index + 1)) & _MASK)
        return Rng(mixed)
