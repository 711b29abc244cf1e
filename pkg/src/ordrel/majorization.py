"""Majorization relations and numerical Schur-convexity certification.

The relations are exact prefix-sum comparisons with a float tolerance scaled
by the vector magnitude.  ``schur_certify`` is a sampler, not a prover:
"certified" means no violation of the pairwise difference criterion

    Delta = (a_i - a_j) * (df/da_i - df/da_j)

was found across the sample (Delta >= 0 everywhere characterises a
Schur-convex function, Delta <= 0 a Schur-concave one).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .errors import ParameterDomainError

_REL_TOL = 1e-12


def _prep(a, b):
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise ParameterDomainError("majorization compares equal-length vectors only")
    if len(a) < 2:
        raise ParameterDomainError("vectors need at least two entries")
    if not all(math.isfinite(v) for v in a + b):
        raise ParameterDomainError("vector entries must be finite")
    return a, b


def _tol(a, b):
    scale = max([abs(v) for v in a + b] + [1.0])
    return _REL_TOL * scale * len(a)


def majorizes(a, b) -> bool:
    """a majorized by b (a < b in the majorization pre-order): equal sums and
    every ascending prefix sum of a at least that of b."""
    a, b = _prep(a, b)
    tol = _tol(a, b)
    if abs(sum(a) - sum(b)) > tol:
        return False
    sa, sb = sorted(a), sorted(b)
    ca = cb = 0.0
    for i in range(len(a) - 1):
        ca += sa[i]
        cb += sb[i]
        if ca < cb - tol:
            return False
    return True


def weak_submajorizes(a, b) -> bool:
    """a weakly submajorized by b: every descending prefix sum of a is at
    most that of b."""
    a, b = _prep(a, b)
    tol = _tol(a, b)
    sa = sorted(a, reverse=True)
    sb = sorted(b, reverse=True)
    ca = cb = 0.0
    for x, y in zip(sa, sb):
        ca += x
        cb += y
        if ca > cb + tol:
            return False
    return True


def weak_supermajorizes(a, b) -> bool:
    """a weakly supermajorized by b: every ascending prefix sum of a is at
    least that of b."""
    a, b = _prep(a, b)
    tol = _tol(a, b)
    sa, sb = sorted(a), sorted(b)
    ca = cb = 0.0
    for x, y in zip(sa, sb):
        ca += x
        cb += y
        if ca < cb - tol:
            return False
    return True


@dataclass(frozen=True)
class SchurCertificate:
    mode: str  # "convex" | "concave"
    verdict: str  # "certified" | "refuted" | "inconclusive"
    min_delta: float
    max_delta: float
    samples: int
    witness: tuple[tuple[float, ...], int, int, float] | None  # (point, i, j, delta)
    seed: int

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"

    def to_json(self) -> dict:
        out = {"mode": self.mode, "verdict": self.verdict,
               "min_delta": self.min_delta, "max_delta": self.max_delta,
               "samples": self.samples, "seed": self.seed}
        if self.witness is not None:
            out["witness"] = {"point": list(self.witness[0]), "i": self.witness[1],
                              "j": self.witness[2], "delta": self.witness[3]}
        return out


def _partial(f, a, i, h):
    up = list(a)
    dn = list(a)
    up[i] += h
    dn[i] -= h
    return (f(up) - f(dn)) / (2.0 * h)


def schur_certify(f, region, mode: str = "convex", samples: int = 200,
                  seed: int = 0, delta_tol: float = 1e-7,
                  symmetry_tol: float = 1e-8) -> SchurCertificate:
    """Sample the Schur criterion for f over a box region [(lo, hi), ...].

    Symmetry of f is the caller's responsibility but is spot-checked on a
    few sampled permutations; an asymmetric f raises immediately.
    """
    if mode not in ("convex", "concave"):
        raise ParameterDomainError(f"unknown mode {mode!r}")
    region = [(float(lo), float(hi)) for lo, hi in region]
    n = len(region)
    if n < 2:
        raise ParameterDomainError("region must be at least 2-dimensional")
    rng = random.Random(seed)
    min_d, max_d = math.inf, -math.inf
    witness = None
    evaluated = 0
    for k in range(samples):
        a = [lo + rng.random() * (hi - lo) for lo, hi in region]
        if k < 5:
            # symmetry spot check on a random permutation
            perm = a[:]
            rng.shuffle(perm)
            if abs(f(a) - f(perm)) > symmetry_tol * (1.0 + abs(f(a))):
                raise ParameterDomainError("function is not symmetric on the region")
        for i, j in itertools.combinations(range(n), 2):
            hi_ = 1e-5 * (1.0 + abs(a[i]))
            hj_ = 1e-5 * (1.0 + abs(a[j]))
            di = _partial(f, a, i, hi_)
            dj = _partial(f, a, j, hj_)
            delta = (a[i] - a[j]) * (di - dj)
            if not math.isfinite(delta):
                continue
            evaluated += 1
            min_d = min(min_d, delta)
            max_d = max(max_d, delta)
            bad = delta < -delta_tol if mode == "convex" else delta > delta_tol
            if bad and witness is None:
                witness = (tuple(a), i, j, delta)
    if evaluated == 0:
        return SchurCertificate(mode, "inconclusive", math.nan, math.nan,
                                samples, None, seed)
    verdict = "refuted" if witness is not None else "certified"
    return SchurCertificate(mode, verdict, min_d, max_d, samples, witness, seed)


@dataclass(frozen=True)
class ImplicationResult:
    """Outcome of the weak-majorization implication for a monotone
    Schur-convex function: relation used, implied direction and the direct
    function evaluations confirming (or not) that direction."""

    relation: str | None  # "submajorize" | "supermajorize" | None
    direction: str | None  # "f(a) <= f(b)" when the implication applies
    f_a: float
    f_b: float
    confirmed: bool


def monotone_schur_implication(f, a, b, monotonicity: str,
                               tol: float = 1e-9) -> ImplicationResult:
    """Implication for f certified monotone and Schur-convex.

    increasing + Schur-convex: a weakly submajorized by b  => f(a) <= f(b);
    decreasing + Schur-convex: a weakly supermajorized by b => f(a) <= f(b).
    The implied inequality is also evaluated directly.
    """
    if monotonicity not in ("increasing", "decreasing"):
        raise ParameterDomainError(f"unknown monotonicity {monotonicity!r}")
    f_a, f_b = f(list(a)), f(list(b))
    if monotonicity == "increasing":
        applies = weak_submajorizes(a, b)
        relation = "submajorize" if applies else None
    else:
        applies = weak_supermajorizes(a, b)
        relation = "supermajorize" if applies else None
    if not applies:
        return ImplicationResult(None, None, f_a, f_b, False)
    confirmed = f_a <= f_b + tol * (1.0 + abs(f_b))
    return ImplicationResult(relation, "f(a) <= f(b)", f_a, f_b, confirmed)
