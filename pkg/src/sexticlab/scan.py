"""Grid scans over the quadrinomial families, reported as JSON lines.

Each parameter cell is evaluated independently by pure library calls, so the
scan partitions freely across worker processes; records are merged by key
and the emitted stream is always sorted by parameters, making output
deterministic for any worker count (the per-cell ``ms`` timing field is the
only wall-clock-dependent value).
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from . import config, zfactor
from .intkit import DEFAULT_RHO_BUDGET, DEFAULT_TRIAL_BOUND, factorize
from .monogenic import is_monogenic_generic, jkk_check, jly_check
from .polyz import discriminant
from .sextic import EvenSextic, classify

FAMILIES = ("f1", "f2", "f3", "a4")

_RECORD_FIELDS = (
    "family",
    "params",
    "irreducible",
    "galois",
    "monogenic",
    "witness",
    "disc_sign",
    "disc_factors",
    "ms",
)


@dataclass
class ScanRecord:
    family: str
    params: dict[str, int]
    irreducible: bool
    galois: str | None
    monogenic: str | None
    witness: int | None
    disc_sign: int
    disc_factors: list[list[int]]
    ms: float

    def to_json(self) -> str:
        data = {name: getattr(self, name) for name in _RECORD_FIELDS}
        return json.dumps(data, separators=(",", ":"))

    def sort_key(self) -> tuple:
        return tuple(self.params[k] for k in sorted(self.params))


def family_cells(family: str, lo: int, hi: int) -> Iterator[dict[str, int]]:
    if family in ("f1", "f2"):
        for a in range(lo, hi + 1):
            for b in range(lo, hi + 1):
                yield {"a": a, "b": b}
    elif family in ("f3", "a4"):
        for n in range(lo, hi + 1):
            yield {"n": n}
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_sextic(family: str, params: dict[str, int]) -> EvenSextic:
    if family == "f1":
        a, b = params["a"], params["b"]
        return EvenSextic(2 * a, a * a, b)
    if family == "f2":
        a, b = params["a"], params["b"]
        return EvenSextic(a * b * b, 2 * a * b, a)
    if family == "f3":
        n = params["n"]
        return EvenSextic(n * n + 5, n * n + 2 * n + 6, 1)
    if family == "a4":
        n = params["n"]
        return EvenSextic(3 * n + 4, 3 * n + 1, -1)
    raise ValueError(f"unknown family {family!r}")


def evaluate_cell(
    family: str,
    params: dict[str, int],
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> ScanRecord:
    start = time.perf_counter()
    sext = family_sextic(family, params)
    poly = sext.as_poly()
    irreducible = zfactor.is_irreducible_q(poly)
    galois = monogenic = witness = None
    if irreducible:
        galois = classify(sext).galois.value
        if family == "f1":
            verdict = jly_check(
                params["a"], params["b"], trial_bound, rho_budget, assume_irreducible=True
            )
        elif family == "f2":
            verdict = jkk_check(
                params["a"], params["b"], trial_bound, rho_budget, assume_irreducible=True
            )
        else:
            verdict = is_monogenic_generic(
                poly, trial_bound, rho_budget, assume_irreducible=True
            )
        monogenic = verdict.status.value
        witness = verdict.witness_prime
    disc = discriminant(poly)
    if disc == 0:
        disc_sign, disc_factors = 0, []
    else:
        fac = factorize(disc, trial_bound, rho_budget)
        disc_sign = fac.sign
        disc_factors = [[p, e] for p, e in fac.factors]
        if not fac.complete:
            disc_factors.append([fac.cofactor, 1])
    ms = (time.perf_counter() - start) * 1e3
    return ScanRecord(
        family=family,
        params=params,
        irreducible=irreducible,
        galois=galois,
        monogenic=monogenic,
        witness=witness,
        disc_sign=disc_sign,
        disc_factors=disc_factors,
        ms=round(ms, 3),
    )


def _init_worker(seed: int) -> None:
    config.set_global_seed(seed)


def _evaluate_star(args: tuple) -> ScanRecord:
    family, params, trial_bound, rho_budget = args
    return evaluate_cell(family, params, trial_bound, rho_budget)


def run_scan(
    family: str,
    lo: int,
    hi: int,
    jobs: int = 1,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> list[ScanRecord]:
    """Evaluate every cell of the family grid; records sorted by parameters."""
    if hi < lo:
        raise ValueError("scan range is empty (max < min)")
    cells = list(family_cells(family, lo, hi))
    if jobs <= 1:
        records = [evaluate_cell(family, c, trial_bound, rho_budget) for c in cells]
    else:
        work = [(family, c, trial_bound, rho_budget) for c in cells]
        with ProcessPoolExecutor(
            max_workers=jobs,
            initializer=_init_worker,
            initargs=(config.global_seed(),),
        ) as pool:
            chunk = max(1, len(work) // (jobs * 8))
            records = list(pool.map(_evaluate_star, work, chunksize=chunk))
    records.sort(key=ScanRecord.sort_key)
    return records
