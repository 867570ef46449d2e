"""Dominant theme colors via weighted K-Means over distinct colors in LAB.

Clustering runs over distinct color values weighted by their proportion
share, not per-occurrence duplicates: the optimum is the same and "highest
proportion within the cluster" stays well defined. Tiny problems are solved
by exhaustive partition search (the exact K-Means optimum, fully
deterministic); larger ones fall back to seeded k-means++ with Lloyd
iterations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .colorspace import Lab, Rgba, delta_e, rgb_to_lab
from .errors import EmptyDocument
from .occurrences import OccurrenceSet

__all__ = [
    "ThemeConfig",
    "ThemeSwatch",
    "extract_theme",
    "similar_colors",
    "color_weights",
    "DEFAULT_SIMILARITY_THRESHOLD",
]

DEFAULT_SIMILARITY_THRESHOLD = 20.0

# Exhaustive search is used while the number of set partitions stays below
# this budget; beyond it, Lloyd's algorithm takes over.
_EXACT_PARTITION_BUDGET = 20_000


@dataclass(frozen=True)
class ThemeConfig:
    k: int = 5
    seed: int = 42
    max_iterations: int = 100
    convergence_epsilon: float = 1e-6  # centroid shift in DeltaE

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")


@dataclass
class ThemeSwatch:
    """One dominant color: always an actual document color, never a centroid."""

    color: Rgba
    proportion: float  # share of the whole cluster
    cluster_members: list[tuple[Rgba, float]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "color": self.color.to_hex(),
            "proportion": self.proportion,
            "members": len(self.cluster_members),
        }


def color_weights(occurrence_set: OccurrenceSet) -> dict[Rgba, float]:
    """Proportion per distinct color; zero-weight colors are kept at 0."""
    if not occurrence_set.occurrences:
        raise EmptyDocument("no color occurrences to analyze")
    sums: dict[Rgba, float] = {}
    for occ in occurrence_set.occurrences:
        sums[occ.color] = sums.get(occ.color, 0.0) + occ.weight
    total = occurrence_set.total_weight
    if total <= 0:
        raise EmptyDocument("document carries no color weight")
    return {c: w / total for c, w in sums.items()}


def _sq_dist(a: Lab, b: Lab) -> float:
    return (a.L - b.L) ** 2 + (a.a - b.a) ** 2 + (a.b - b.b) ** 2


def _mean(points: list[Lab], weights: list[float]) -> Lab:
    total = sum(weights)
    if total <= 0:  # all-zero weights: plain average keeps things defined
        n = len(points)
        return Lab(
            sum(p.L for p in points) / n,
            sum(p.a for p in points) / n,
            sum(p.b for p in points) / n,
        )
    return Lab(
        sum(p.L * w for p, w in zip(points, weights)) / total,
        sum(p.a * w for p, w in zip(points, weights)) / total,
        sum(p.b * w for p, w in zip(points, weights)) / total,
    )


def _partition_inertia(labels, points, weights, k):
    clusters = [[i for i, l in enumerate(labels) if l == j] for j in range(k)]
    inertia = 0.0
    for members in clusters:
        if not members:
            continue
        centroid = _mean([points[i] for i in members], [weights[i] for i in members])
        inertia += sum(weights[i] * _sq_dist(points[i], centroid) for i in members)
    return inertia, clusters


def _stirling2(n: int, k: int) -> int:
    row = [1] + [0] * k
    for _ in range(n):
        nxt = [0] * (k + 1)
        for j in range(1, k + 1):
            nxt[j] = row[j - 1] + j * row[j]
        row = nxt
        row[0] = 0
    return row[k]


def _exact_partition(points, weights, k):
    """Minimal-inertia partition by enumerating restricted growth strings."""
    n = len(points)
    best_labels = None
    best = float("inf")
    labels = [0] * n

    def rec(i: int, used: int):
        nonlocal best, best_labels
        if n - i < k - used:  # can't reach k nonempty clusters anymore
            return
        if i == n:
            if used == k:
                inertia, _ = _partition_inertia(labels, points, weights, k)
                if inertia < best - 1e-12:
                    best = inertia
                    best_labels = labels.copy()
            return
        for label in range(min(used + 1, k)):
            labels[i] = label
            rec(i + 1, max(used, label + 1))

    rec(0, 0)
    return best_labels


def _weighted_pick(rng: random.Random, weights: list[float]) -> int:
    total = sum(weights)
    if total <= 0:
        return 0
    r = rng.random() * total
    acc = 0.0
    for i, w in enumerate(weights):
        acc += w
        if r < acc:
            return i
    return len(weights) - 1


def _lloyd(points, weights, cfg: ThemeConfig):
    """Seeded k-means++ init followed by Lloyd iterations."""
    k = cfg.k
    rng = random.Random(cfg.seed)
    centroids = [points[_weighted_pick(rng, weights)]]
    while len(centroids) < k:
        d2 = [min(_sq_dist(p, c) for c in centroids) * w for p, w in zip(points, weights)]
        centroids.append(points[_weighted_pick(rng, d2)])

    labels = [0] * len(points)
    last_inertia = float("inf")
    for _ in range(cfg.max_iterations):
        inertia = 0.0
        for i, p in enumerate(points):
            dists = [_sq_dist(p, c) for c in centroids]
            labels[i] = dists.index(min(dists))
            inertia += weights[i] * dists[labels[i]]
        assert inertia <= last_inertia + 1e-9, "k-means inertia increased"
        last_inertia = inertia

        clusters = [[i for i, l in enumerate(labels) if l == j] for j in range(k)]
        for j, members in enumerate(clusters):
            if members:
                continue
            # Re-seed an empty cluster with the worst-fitting point that is
            # not alone in its own cluster.
            candidates = [
                i for i in range(len(points)) if len(clusters[labels[i]]) > 1
            ]
            worst = max(
                candidates, key=lambda i: (weights[i] * _sq_dist(points[i], centroids[labels[i]]), i)
            )
            clusters[labels[worst]].remove(worst)
            labels[worst] = j
            clusters[j] = [worst]

        shift = 0.0
        for j, members in enumerate(clusters):
            new_c = _mean([points[i] for i in members], [weights[i] for i in members])
            shift = max(shift, _sq_dist(new_c, centroids[j]) ** 0.5)
            centroids[j] = new_c
        if shift < cfg.convergence_epsilon:
            break
    return labels


def extract_theme(occurrence_set: OccurrenceSet, cfg: ThemeConfig = ThemeConfig()) -> list[ThemeSwatch]:
    """Derive the k dominant theme colors, deterministically for a fixed seed."""
    weights_by_color = color_weights(occurrence_set)
    # Canonical input order makes the result independent of occurrence order.
    colors = sorted(weights_by_color, key=lambda c: c.sort_token())
    weights = [weights_by_color[c] for c in colors]
    points = [rgb_to_lab(c) for c in colors]

    if len(colors) <= cfg.k:
        clusters = [[i] for i in range(len(colors))]
    else:
        if _stirling2(len(colors), cfg.k) <= _EXACT_PARTITION_BUDGET:
            labels = _exact_partition(points, weights, cfg.k)
        else:
            labels = _lloyd(points, weights, cfg)
        clusters = [
            [i for i, l in enumerate(labels) if l == j]
            for j in range(cfg.k)
            if j in labels
        ]

    swatches = []
    for members in clusters:
        centroid = _mean([points[i] for i in members], [weights[i] for i in members])
        share = sum(weights[i] for i in members)
        # Highest proportion wins; ties break toward the centroid, then hex.
        lead = min(
            members,
            key=lambda i: (-weights[i], _sq_dist(points[i], centroid), colors[i].sort_token()),
        )
        member_list = sorted(
            ((colors[i], weights[i]) for i in members),
            key=lambda cw: (-cw[1], cw[0].sort_token()),
        )
        swatches.append(ThemeSwatch(colors[lead], share, member_list))
    swatches.sort(key=lambda s: (-s.proportion, s.color.sort_token()))
    return swatches


def similar_colors(theme: Rgba, candidates: list[Rgba], threshold: float) -> list[Rgba]:
    """Candidates within the DeltaE threshold of the theme, order preserved."""
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    anchor = rgb_to_lab(theme)
    return [c for c in candidates if delta_e(anchor, rgb_to_lab(c)) <= threshold]
