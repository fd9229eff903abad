"""Shared fixtures: space builders and independent brute-force oracles."""

from __future__ import annotations

import random

import numpy as np

from tradespace.core import Configuration, Knob, TradeoffPoint, TradeoffSpace


def pt(acc: float, rt: float) -> TradeoffPoint:
    return TradeoffPoint(acc, rt)


def single_knob_space(framework_id: str, points, default_index: int = 0) -> TradeoffSpace:
    """Space with one knob whose i-th level maps to the i-th point."""
    points = [TradeoffPoint(a, r) for a, r in points]
    knob = Knob("level", tuple(str(i) for i in range(len(points))), default_index)
    records = tuple(
        (Configuration(framework_id, (("level", i),)), p) for i, p in enumerate(points)
    )
    return TradeoffSpace(framework_id, (knob,), records, records[default_index][0])


def random_space(framework_id: str, seed: int, max_points: int = 200) -> TradeoffSpace:
    rng = random.Random(seed)
    n = rng.randint(1, max_points)
    points = []
    for _ in range(n):
        acc = round(rng.uniform(0.0, 1.0), 3)
        rt = round(rng.uniform(0.1, 2.0), 3)
        points.append((acc, rt))
    return single_knob_space(framework_id, points)


def brute_force_pareto(records):
    """O(n^2) oracle: vectorized pairwise weak-dominance with the
    distinct-point exception, plus lexicographic dedup of exact duplicates.

    Independent of the sort-and-sweep implementation under test.
    """
    acc = np.array([p.accuracy_loss for _, p in records])
    rt = np.array([p.runtime for _, p in records])
    weakly = (acc[:, None] <= acc[None, :]) & (rt[:, None] <= rt[None, :])
    distinct = (acc[:, None] != acc[None, :]) | (rt[:, None] != rt[None, :])
    beaten = (weakly & distinct).any(axis=0)
    survivors = [records[i] for i in range(len(records)) if not beaten[i]]
    deduped = {}
    for config, point in survivors:
        key = (point.accuracy_loss, point.runtime)
        if key not in deduped or config < deduped[key][0]:
            deduped[key] = (config, point)
    return sorted(deduped.values(), key=lambda rec: rec[1].accuracy_loss)


def brute_force_ranks(points) -> list[int]:
    """Rank oracle: iteratively peel the non-dominated set."""
    acc = np.array([p.accuracy_loss for p in points])
    rt = np.array([p.runtime for p in points])
    weakly = (acc[:, None] <= acc[None, :]) & (rt[:, None] <= rt[None, :])
    distinct = (acc[:, None] != acc[None, :]) | (rt[:, None] != rt[None, :])
    beats = weakly & distinct
    ranks = [-1] * len(points)
    remaining = set(range(len(points)))
    rank = 0
    while remaining:
        idx = sorted(remaining)
        front = [
            i for i in idx if not any(beats[j, i] for j in idx)
        ]
        for i in front:
            ranks[i] = rank
        remaining -= set(front)
        rank += 1
    return ranks
