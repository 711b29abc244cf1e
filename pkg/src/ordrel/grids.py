"""Evaluation grids for the numerical order checkers and classifiers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ParameterDomainError

DEFAULT_TAU_MONO = 1e-9
DEFAULT_TAU_PT = 1e-9


@dataclass(frozen=True)
class GridSpec:
    """Either an x-grid (explicit or quantile-derived bounds) or a u-grid.

    kind="x": n points on [lo, hi]; lo/hi of None means "derive from the
    quantiles of the distributions under comparison".
    kind="u": n probability points on (eps, 1-eps).
    """

    kind: str = "x"  # "x" | "u"
    lo: float | None = None
    hi: float | None = None
    eps: float = 1e-3
    n: int = 512
    tau_mono: float = DEFAULT_TAU_MONO
    tau_pt: float = DEFAULT_TAU_PT

    def __post_init__(self):
        if self.kind not in ("x", "u"):
            raise ParameterDomainError(f"unknown grid kind {self.kind!r}")
        if self.n < 64:
            raise ParameterDomainError("grid needs at least 64 points")
        if not (0.0 < self.eps < 0.5):
            raise ParameterDomainError("eps must lie in (0, 0.5)")
        if self.tau_mono <= 0 or self.tau_pt <= 0:
            raise ParameterDomainError("tolerances must be positive")

    def u_points(self) -> list[float]:
        if self.kind != "u":
            raise ParameterDomainError("u_points requires a u-grid")
        lo, hi = self.eps, 1.0 - self.eps
        step = (hi - lo) / (self.n - 1)
        return [lo + i * step for i in range(self.n)]

    def x_points(self, dists=()) -> list[float]:
        """Grid points; bounds fall back to the pointwise quantile envelope
        of ``dists`` at probability 1e-4 / 1-1e-4."""
        if self.kind != "x":
            raise ParameterDomainError("x_points requires an x-grid")
        lo, hi = self.lo, self.hi
        if lo is None or hi is None:
            if not dists:
                raise ParameterDomainError("grid bounds unset and no distributions given")
            qlo = min(d.quantile(1e-4) for d in dists)
            qhi = max(d.quantile(1.0 - 1e-4) for d in dists)
            lo = qlo if lo is None else lo
            hi = qhi if hi is None else hi
        if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
            raise ParameterDomainError(f"bad grid bounds [{lo}, {hi}]")
        step = (hi - lo) / (self.n - 1)
        return [lo + i * step for i in range(self.n)]

    def to_json(self) -> dict:
        out = {"kind": self.kind, "n": self.n,
               "tau_mono": self.tau_mono, "tau_pt": self.tau_pt}
        if self.kind == "x":
            out["lo"] = self.lo
            out["hi"] = self.hi
        else:
            out["eps"] = self.eps
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "GridSpec":
        return cls(**obj)


def default_x_grid(**kw) -> GridSpec:
    return GridSpec(kind="x", **kw)


def default_u_grid(**kw) -> GridSpec:
    return GridSpec(kind="u", **kw)
