"""Archimedean generators and the dependent-model survival functions.

Shipped generators: independence (psi = exp(-x)), Clayton (theta > 0) and
Frank (theta != 0).  All three are completely monotone on their stated
parameter ranges; the numeric convexity and round-trip checks in the tests
serve as guards rather than a symbolic n-monotonicity proof.

phi(0) is represented by the saturating sentinel ``math.inf`` with
psi(inf) = 0, so a vanished survival term never poisons the generator sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import Distribution
from .errors import ParameterDomainError


class Generator:
    """Archimedean generator psi with inverse phi."""

    family = "abstract"
    dim: int

    def psi(self, x: float) -> float:
        raise NotImplementedError

    def phi(self, u: float) -> float:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


def _check_psi_arg(x: float):
    if x < 0.0:
        raise ParameterDomainError(f"psi needs x >= 0, got {x}")


def _check_phi_arg(u: float):
    if not (0.0 <= u <= 1.0):
        raise ParameterDomainError(f"phi needs u in [0,1], got {u}")


@dataclass(frozen=True)
class Independence(Generator):
    dim: int = 2
    family = "independence"

    def psi(self, x):
        _check_psi_arg(x)
        return math.exp(-x) if not math.isinf(x) else 0.0

    def phi(self, u):
        _check_phi_arg(u)
        if u == 0.0:
            return math.inf
        return -math.log(u)

    def to_json(self):
        return {"family": "independence", "dim": self.dim}


@dataclass(frozen=True)
class Clayton(Generator):
    theta: float = 1.0
    dim: int = 2
    family = "clayton"

    def __post_init__(self):
        if not (self.theta > 0.0):
            raise ParameterDomainError("Clayton needs theta > 0")

    def psi(self, x):
        _check_psi_arg(x)
        if math.isinf(x):
            return 0.0
        return (1.0 + self.theta * x) ** (-1.0 / self.theta)

    def phi(self, u):
        _check_phi_arg(u)
        if u == 0.0:
            return math.inf
        return (u ** (-self.theta) - 1.0) / self.theta

    def to_json(self):
        return {"family": "clayton", "theta": self.theta, "dim": self.dim}


@dataclass(frozen=True)
class Frank(Generator):
    theta: float = 1.0
    dim: int = 2
    family = "frank"

    def __post_init__(self):
        if self.theta == 0.0 or not math.isfinite(self.theta):
            raise ParameterDomainError("Frank needs finite theta != 0")

    def psi(self, x):
        _check_psi_arg(x)
        if math.isinf(x):
            return 0.0
        t = self.theta
        return -math.log1p(-(1.0 - math.exp(-t)) * math.exp(-x)) / t

    def phi(self, u):
        _check_phi_arg(u)
        if u == 0.0:
            return math.inf
        t = self.theta
        return -math.log(math.expm1(-t * u) / math.expm1(-t))

    def to_json(self):
        return {"family": "frank", "theta": self.theta, "dim": self.dim}


_GEN_FAMILIES = {
    "independence": lambda o: Independence(dim=o.get("dim", 2)),
    "clayton": lambda o: Clayton(theta=o["theta"], dim=o.get("dim", 2)),
    "frank": lambda o: Frank(theta=o["theta"], dim=o.get("dim", 2)),
}


def generator_from_json(obj: dict) -> Generator:
    try:
        return _GEN_FAMILIES[obj["family"]](obj)
    except (KeyError, TypeError) as exc:
        raise ParameterDomainError(f"bad generator spec: {obj!r}") from exc


def copula_value(g: Generator, u) -> float:
    """C(u_1, ..., u_n) = psi(sum_k phi(u_k))."""
    total = 0.0
    for uk in u:
        p = g.phi(uk)
        if math.isinf(p):
            return 0.0
        total += p
    return g.psi(total)


def _second_diffs_sign(values, tol: float, want_nonneg: bool) -> bool:
    for i in range(1, len(values) - 1):
        d2 = values[i - 1] - 2.0 * values[i] + values[i + 1]
        scale = tol * (1.0 + abs(values[i]))
        if want_nonneg and d2 < -scale:
            return False
        if not want_nonneg and d2 > scale:
            return False
    return True


def _log_psi_grid(g: Generator, grid):
    if grid is None:
        n = 256
        grid = [1e-3 + i * (20.0 - 1e-3) / (n - 1) for i in range(n)]
    return grid, [math.log(g.psi(x)) for x in grid]


def is_log_convex(g: Generator, grid=None, tol: float = 1e-9) -> bool:
    """Numeric convexity of ln psi via second differences on a grid."""
    grid, logs = _log_psi_grid(g, grid)
    return _second_diffs_sign(logs, tol, want_nonneg=True)


def is_log_concave(g: Generator, grid=None, tol: float = 1e-9) -> bool:
    grid, logs = _log_psi_grid(g, grid)
    return _second_diffs_sign(logs, tol, want_nonneg=False)


def compose_phi_psi(outer: Generator, inner: Generator):
    """The composition phi_outer(psi_inner(x)) used in the generator-swap
    super-additivity condition."""
    def h(x: float) -> float:
        return outer.phi(inner.psi(x))

    return h


def super_additive_check(h, x_max: float = 10.0, n: int = 48,
                         tau: float = 1e-9) -> tuple[bool, tuple | None]:
    """Check h(x+y) >= h(x) + h(y) - tau over all grid pairs in [0, x_max].

    Returns (ok, witness); witness is (x, y, h(x+y), h(x)+h(y)) on failure.
    """
    xs = [i * x_max / (2 * (n - 1)) for i in range(n)]  # pairs stay in domain
    vals = [h(x) for x in xs]
    for i, x in enumerate(xs):
        for j in range(i, len(xs)):
            y = xs[j]
            lhs = h(x + y)
            rhs = vals[i] + vals[j]
            if lhs < rhs - tau * (1.0 + abs(rhs)):
                return False, (x, y, lhs, rhs)
    return True, None


@dataclass(frozen=True)
class ShiftedSystem:
    """Dependent lifetimes Y_i = X - mu_i coupled by an Archimedean
    survival copula."""

    baseline: Distribution
    shifts: tuple[float, ...]
    generator: Generator

    def __post_init__(self):
        if len(self.shifts) != self.generator.dim:
            raise ParameterDomainError(
                f"generator dimension {self.generator.dim} != "
                f"{len(self.shifts)} shifts")
        if len(self.shifts) < 2:
            raise ParameterDomainError("need at least two components")


def j1(s: ShiftedSystem, x: float) -> float:
    """Survival function of min(Y_1, ..., Y_n):
    psi(sum_k phi(sf(x + mu_k)))."""
    total = 0.0
    for mu in s.shifts:
        p = s.generator.phi(s.baseline.sf(x + mu))
        if math.isinf(p):
            return 0.0
        total += p
    return s.generator.psi(total)


def j2(s: ShiftedSystem, x: float) -> float:
    """Survival function of max(Y_1, ..., Y_n):
    1 - psi(sum_k phi(cdf(x + mu_k)))."""
    total = 0.0
    for mu in s.shifts:
        p = s.generator.phi(s.baseline.cdf(x + mu))
        if math.isinf(p):
            return 1.0
        total += p
    return 1.0 - s.generator.psi(total)


class DependentMin:
    """Minimal distribution surface (sf/cdf/support) for J1, so the order
    checkers can consume dependent minima."""

    def __init__(self, system: ShiftedSystem):
        self.system = system

    @property
    def support(self):
        lo, hi = self.system.baseline.support
        mn, mx = min(self.system.shifts), max(self.system.shifts)
        return (lo - mx, hi - mn)

    def sf(self, x):
        return j1(self.system, x)

    def cdf(self, x):
        return 1.0 - j1(self.system, x)


class DependentMax:
    """Distribution surface for J2 (survival of the dependent maximum)."""

    def __init__(self, system: ShiftedSystem):
        self.system = system

    @property
    def support(self):
        lo, hi = self.system.baseline.support
        mn, mx = min(self.system.shifts), max(self.system.shifts)
        return (lo - mx, hi - mn)

    def sf(self, x):
        return j2(self.system, x)

    def cdf(self, x):
        return 1.0 - j2(self.system, x)
