"""Shared substrate for accuracy-loss/runtime trade-off analysis.

A trade-off space maps configurations of one tunable framework to 2-D
trade-off points (accuracy loss, runtime), both minimized.  This module
holds the domain types plus the dominance, frontier, hull, and
normalized-distance machinery every search and metric builds on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence


class DataError(ValueError):
    """Malformed or contradictory input data."""


class DegenerateMathError(ValueError):
    """Structurally valid input on which the requested quantity is undefined."""


class EmptySpaceError(DataError):
    """A space, curve, or point sequence is empty where content is required."""


class EvaluatorMissError(DataError):
    """An evaluator has no measurement for a requested (configuration, input)."""


class DegenerateRangeError(DegenerateMathError):
    """Compared hull spans do not overlap with positive width."""


class DegenerateFitError(DegenerateMathError):
    """Too little data or spread to fit or correlate."""


class CapExceededError(DataError):
    """Exhaustive enumeration requested on a space above the configured cap."""


@dataclass(frozen=True)
class Knob:
    """One tunable parameter: an ordered set of discrete levels.

    Level values are opaque tokens; configurations refer to them by index.
    ``default_index`` names the level used when the knob is left untouched.
    """

    name: str
    levels: tuple[str, ...]
    default_index: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(str(v) for v in self.levels))
        if not self.levels:
            raise ValueError(f"knob {self.name!r} has no levels")
        if len(set(self.levels)) != len(self.levels):
            raise ValueError(f"knob {self.name!r} has duplicate level values")
        if not 0 <= self.default_index < len(self.levels):
            raise ValueError(
                f"knob {self.name!r} default index {self.default_index} out of range"
            )


@dataclass(frozen=True, order=True)
class Configuration:
    """Assignment of a level index to every knob of one framework.

    The assignment is stored as a name-sorted tuple of pairs so that
    configurations are hashable and totally ordered; the ordering is the
    deterministic tie-break key used everywhere duplicates must be resolved.
    """

    framework_id: str
    assignment: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        items: Iterable
        raw = self.assignment
        items = raw.items() if isinstance(raw, Mapping) else raw
        normalized = tuple(sorted((str(k), int(v)) for k, v in items))
        if len({k for k, _ in normalized}) != len(normalized):
            raise ValueError("configuration assigns the same knob twice")
        object.__setattr__(self, "assignment", normalized)

    def as_dict(self) -> dict[str, int]:
        return dict(self.assignment)

    def key(self) -> tuple:
        return (self.framework_id, self.assignment)


@dataclass(frozen=True, order=True)
class TradeoffPoint:
    """One observed trade-off: accuracy loss and runtime, both minimized."""

    accuracy_loss: float
    runtime: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "accuracy_loss", float(self.accuracy_loss))
        object.__setattr__(self, "runtime", float(self.runtime))
        if not (math.isfinite(self.accuracy_loss) and math.isfinite(self.runtime)):
            raise ValueError("trade-off coordinates must be finite")
        if self.accuracy_loss < 0:
            raise ValueError("accuracy loss must be non-negative")
        if self.runtime <= 0:
            raise ValueError("runtime must be positive")


@dataclass(frozen=True)
class TradeoffSpace:
    """All measured (configuration, trade-off) records of one framework."""

    framework_id: str
    knobs: tuple[Knob, ...]
    records: tuple[tuple[Configuration, TradeoffPoint], ...]
    default_config: Configuration

    def __post_init__(self) -> None:
        object.__setattr__(self, "knobs", tuple(self.knobs))
        object.__setattr__(self, "records", tuple(tuple(r) for r in self.records))
        if not self.records:
            raise EmptySpaceError(f"space {self.framework_id!r} has no records")
        names = [k.name for k in self.knobs]
        if len(set(names)) != len(names):
            raise ValueError(f"space {self.framework_id!r} has duplicate knob names")
        levels = {k.name: len(k.levels) for k in self.knobs}
        seen: set[tuple] = set()
        for config, _ in self.records:
            self._check_config(config, levels)
            if config.assignment in seen:
                raise ValueError(
                    f"space {self.framework_id!r} has duplicate configuration "
                    f"{config.as_dict()}"
                )
            seen.add(config.assignment)
        self._check_config(self.default_config, levels)
        if self.default_config.assignment not in seen:
            raise ValueError(
                f"default configuration of {self.framework_id!r} missing from records"
            )

    def _check_config(self, config: Configuration, levels: dict[str, int]) -> None:
        if config.framework_id != self.framework_id:
            raise ValueError(
                f"configuration for {config.framework_id!r} in space "
                f"{self.framework_id!r}"
            )
        assigned = config.as_dict()
        if assigned.keys() != levels.keys():
            raise ValueError(
                f"configuration knobs {sorted(assigned)} do not match space knobs "
                f"{sorted(levels)}"
            )
        for name, idx in assigned.items():
            if not 0 <= idx < levels[name]:
                raise ValueError(f"level index {idx} out of range for knob {name!r}")

    def knob(self, name: str) -> Knob:
        for k in self.knobs:
            if k.name == name:
                return k
        raise KeyError(name)


@dataclass(frozen=True)
class NormalizationBounds:
    """Per-dimension min/max used to rescale trade-offs onto [0, 1]."""

    accuracy_min: float
    accuracy_max: float
    runtime_min: float
    runtime_max: float

    def __post_init__(self) -> None:
        for lo, hi, label in (
            (self.accuracy_min, self.accuracy_max, "accuracy"),
            (self.runtime_min, self.runtime_max, "runtime"),
        ):
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise ValueError(f"{label} bounds must be finite")
            if lo > hi:
                raise ValueError(f"{label} bounds inverted: [{lo}, {hi}]")


@dataclass(frozen=True)
class FrontierCurve:
    """A Pareto-efficient curve and its lower convex hull.

    ``points`` is sorted by ascending accuracy loss with strictly decreasing
    runtime; under weak dominance those two facts make the points mutually
    non-dominated.  ``hull`` is the convex-from-below subset used for runtime
    interpolation at arbitrary accuracy loss.
    """

    points: tuple[tuple[Any, TradeoffPoint], ...]
    hull: tuple[TradeoffPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(tuple(p) for p in self.points))
        object.__setattr__(self, "hull", tuple(self.hull))
        if not self.points:
            raise EmptySpaceError("frontier curve has no points")
        pts = self.tradeoffs()
        for a, b in zip(pts, pts[1:]):
            if not (a.accuracy_loss < b.accuracy_loss and a.runtime > b.runtime):
                raise ValueError(
                    "frontier points must strictly increase in accuracy loss "
                    "and strictly decrease in runtime"
                )
        pt_set = set(pts)
        if not self.hull or self.hull[0] != pts[0] or self.hull[-1] != pts[-1]:
            raise ValueError("hull must span the frontier endpoints")
        for v in self.hull:
            if v not in pt_set:
                raise ValueError("hull vertex is not a frontier point")
        for o, a, b in zip(self.hull, self.hull[1:], self.hull[2:]):
            if _cross(o, a, b) <= 0:
                raise ValueError("hull is not strictly convex from below")

    def tradeoffs(self) -> tuple[TradeoffPoint, ...]:
        return tuple(p for _, p in self.points)

    def configurations(self) -> tuple[Any, ...]:
        return tuple(c for c, _ in self.points)

    def __len__(self) -> int:
        return len(self.points)


def weakly_dominates(p: TradeoffPoint, q: TradeoffPoint) -> bool:
    """True iff ``p`` is at least as good as ``q`` in both objectives."""
    return p.accuracy_loss <= q.accuracy_loss and p.runtime <= q.runtime


def dominates(p: TradeoffPoint, q: TradeoffPoint) -> bool:
    """True iff ``p`` is strictly better than ``q`` in both objectives."""
    return p.accuracy_loss < q.accuracy_loss and p.runtime < q.runtime


def beats(p: TradeoffPoint, q: TradeoffPoint) -> bool:
    """Frontier-membership relation: weak dominance between distinct points.

    Strict dominance alone would admit redundant points tied in one
    coordinate; plain weak dominance would let identical points eliminate
    each other.  This relation is what frontier extraction and
    non-dominated sorting peel with.
    """
    return weakly_dominates(p, q) and p != q


def pareto_points(
    records: Sequence[tuple[Any, TradeoffPoint]],
) -> list[tuple[Any, TradeoffPoint]]:
    """Extract the Pareto-efficient records, deduplicated and sorted.

    A record survives iff no record with a distinct trade-off weakly
    dominates it.  Records with exactly equal trade-offs collapse to the one
    with the smallest configuration key.  Output is sorted by ascending
    accuracy loss (hence strictly decreasing runtime).
    """
    if not records:
        raise EmptySpaceError("cannot extract a frontier from zero records")
    ordered = sorted(records, key=lambda rec: (rec[1].accuracy_loss, rec[1].runtime, rec[0]))
    result: list[tuple[Any, TradeoffPoint]] = []
    best_runtime = math.inf
    i = 0
    n = len(ordered)
    while i < n:
        config, point = ordered[i]
        # within an equal-accuracy group only the head can survive: it has the
        # minimal runtime, ties broken by smallest configuration
        if point.runtime < best_runtime:
            result.append((config, point))
            best_runtime = point.runtime
        acc = point.accuracy_loss
        while i < n and ordered[i][1].accuracy_loss == acc:
            i += 1
    return result


def lower_convex_hull(points: Sequence[TradeoffPoint]) -> list[TradeoffPoint]:
    """Monotone-chain lower hull of points sorted by ascending accuracy loss.

    Requires distinct accuracy-loss values (a frontier guarantees this).
    The first and last input points are always retained; every input point
    lies on or above the returned polyline.  Collinear interior points are
    dropped, which makes the operation idempotent.
    """
    if not points:
        raise EmptySpaceError("cannot take the hull of zero points")
    for a, b in zip(points, points[1:]):
        if b.accuracy_loss <= a.accuracy_loss:
            raise ValueError("hull input must be strictly increasing in accuracy loss")
    hull: list[TradeoffPoint] = []
    for p in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def _cross(o: TradeoffPoint, a: TradeoffPoint, b: TradeoffPoint) -> float:
    return (a.accuracy_loss - o.accuracy_loss) * (b.runtime - o.runtime) - (
        a.runtime - o.runtime
    ) * (b.accuracy_loss - o.accuracy_loss)


def frontier_from_records(
    records: Sequence[tuple[Any, TradeoffPoint]],
) -> FrontierCurve:
    """Build a FrontierCurve (points + hull) from arbitrary records."""
    pts = pareto_points(records)
    hull = lower_convex_hull([p for _, p in pts])
    return FrontierCurve(tuple(pts), tuple(hull))


def pareto_extract(space: TradeoffSpace) -> FrontierCurve:
    """Pareto-efficient frontier of one framework's trade-off space."""
    return frontier_from_records(space.records)


def normalization_bounds(space: TradeoffSpace) -> NormalizationBounds:
    """Per-dimension min/max over all records of one framework's space."""
    accs = [p.accuracy_loss for _, p in space.records]
    rts = [p.runtime for _, p in space.records]
    return NormalizationBounds(min(accs), max(accs), min(rts), max(rts))


def normalized_euclidean_distance(
    p: TradeoffPoint, q: TradeoffPoint, bounds: NormalizationBounds
) -> float:
    """Euclidean distance after min-max rescaling each dimension onto [0, 1].

    A degenerate dimension (min == max) has no spread and contributes zero.
    """
    da = _normalized_delta(p.accuracy_loss, q.accuracy_loss, bounds.accuracy_min, bounds.accuracy_max)
    dr = _normalized_delta(p.runtime, q.runtime, bounds.runtime_min, bounds.runtime_max)
    return math.hypot(da, dr)


def _normalized_delta(a: float, b: float, lo: float, hi: float) -> float:
    span = hi - lo
    if span == 0:
        return 0.0
    return (a - b) / span
