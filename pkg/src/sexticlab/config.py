"""Process-wide seed handling for randomized internals.

The seed never changes any verdict produced by the library: it only steers
search order inside Pollard rho and the randomized equal-degree splitter,
so runs are reproducible cell by cell.
"""

from __future__ import annotations

import os
import random

ENV_SEED = "SEXTICLAB_SEED"

_seed: int | None = None


def global_seed() -> int:
    """Return the active seed (``--seed`` flag, else SEXTICLAB_SEED, else 0)."""
    global _seed
    if _seed is None:
        raw = os.environ.get(ENV_SEED, "").strip()
        if not raw:
            _seed = 0
        else:
            try:
                _seed = int(raw)
            except ValueError:
                raise ValueError(f"{ENV_SEED} must be an integer, got {raw!r}") from None
    return _seed


def set_global_seed(seed: int) -> None:
    global _seed
    _seed = int(seed)


def derived_rng(*key: object) -> random.Random:
    """Deterministic child RNG for a namespaced key.

    String seeding is stable across runs and interpreter versions, so the
    same (seed, key) pair always replays the same stream.
    """
    tag = ":".join(str(k) for k in key)
    return random.Random(f"sexticlab:{global_seed()}:{tag}")
