"""Curve-level analytics: coverage, difference of coverage, train/test fits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from scipy import stats

from .core import DegenerateFitError, EmptySpaceError, FrontierCurve, weakly_dominates


@dataclass(frozen=True)
class CoverageReport:
    """Both coverage directions between two curves; ``doc_xy = c_xy - c_yx``."""

    c_xy: float
    c_yx: float

    def __post_init__(self) -> None:
        for v in (self.c_xy, self.c_yx):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"coverage value {v} outside [0, 1]")

    @property
    def doc_xy(self) -> float:
        return self.c_xy - self.c_yx


@dataclass(frozen=True)
class FitReport:
    """Ordinary least squares fit of one series onto another."""

    slope: float
    intercept: float
    r: float
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("a fit needs at least two samples")
        if abs(self.r) > 1 + 1e-12:
            raise ValueError(f"correlation coefficient {self.r} outside [-1, 1]")
        object.__setattr__(self, "r", max(-1.0, min(1.0, self.r)))


def coverage(x: FrontierCurve, y: FrontierCurve) -> float:
    """Fraction of y's points weakly dominated by at least one point of x.

    Weak dominance means tied points count as covered, so coverage of a
    curve over itself is 1.  The two directions are independent and in
    general do not sum to 1.
    """
    if len(x) == 0 or len(y) == 0:
        raise EmptySpaceError("coverage is undefined for empty curves")
    xs = x.tradeoffs()
    covered = sum(
        1 for q in y.tradeoffs() if any(weakly_dominates(p, q) for p in xs)
    )
    return covered / len(y)


def difference_of_coverage(x: FrontierCurve, y: FrontierCurve) -> float:
    """Coverage of x over y minus coverage of y over x, in [-1, 1].

    Positive values mean x dominates more of y than the reverse.
    """
    return coverage(x, y) - coverage(y, x)


def coverage_report(x: FrontierCurve, y: FrontierCurve) -> CoverageReport:
    return CoverageReport(coverage(x, y), coverage(y, x))


def linear_fit_correlation(train: Sequence[float], test: Sequence[float]) -> FitReport:
    """Least-squares fit predicting ``test`` from ``train`` plus Pearson's r.

    Raises ``DegenerateFitError`` when the series lengths differ, fewer than
    two samples are given, or the training series has no variance.
    """
    if len(train) != len(test):
        raise DegenerateFitError(
            f"series lengths differ: {len(train)} vs {len(test)}"
        )
    if len(train) < 2:
        raise DegenerateFitError("need at least two samples to fit")
    if min(train) == max(train):
        raise DegenerateFitError("training series has zero variance")
    fit = stats.linregress(train, test)
    return FitReport(float(fit.slope), float(fit.intercept), float(fit.rvalue), len(train))


def arithmetic_mean(values: Sequence[float]) -> float:
    return sum(values) / len(values)


def harmonic_mean(values: Sequence[float]) -> float | None:
    """Harmonic mean, or None when undefined (any value not strictly positive)."""
    if any(v <= 0 for v in values):
        return None
    return len(values) / sum(1.0 / v for v in values)
