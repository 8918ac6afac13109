"""Counter-based random number streams.

Every stochastic routine in the package draws from a Philox generator keyed by
(seed, module tag, stream index), so path i's randomness is a pure function of
those three values and never depends on scheduling or worker count.
"""

from __future__ import annotations

import numpy as np

_MASK32 = 0xFFFFFFFF
_MASK64 = 0xFFFFFFFFFFFFFFFF


def _fnv1a32(text: str) -> int:
    # FNV-1a, platform-independent 32-bit hash of the module tag
    h = 0x811C9DC5
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * 0x01000193) & _MASK32
    return h


def rng_for(seed: int, tag: str, index: int = 0) -> np.random.Generator:
    """Return the Generator for stream `index` of module `tag` under `seed`."""
    if index < 0:
        raise ValueError("stream index must be nonnegative")
    key = np.array(
        [seed & _MASK64, ((_fnv1a32(tag) << 32) | (index & _MASK32)) & _MASK64],
        dtype=np.uint64,
    )
    return np.random.Generator(np.random.Philox(key=key))


def subseed(seed: int, tag: str, index: int = 0) -> int:
    """A 63-bit integer seed derived from the (seed, tag, index) stream.

    Used to key in-loop PRNGs (e.g. inside jitted code) that cannot host a
    Generator object while keeping the counter-based derivation.
    """
    return int(rng_for(seed, tag, index).integers(0, 2**63 - 1, dtype=np.int64))
