"""Deterministic k-means for the prototype anchor-placement strategy."""

from __future__ import annotations

import numpy as np


def _pairwise_sq_dists(X: np.ndarray, centers: np.ndarray) -> np.ndarray:
    # (N, m) squared Euclidean distances without the N x m x n intermediate
    d2 = (X**2).sum(axis=1)[:, None] + (centers**2).sum(axis=1)[None, :] - 2.0 * X @ centers.T
    np.maximum(d2, 0.0, out=d2)
    return d2


def _kmeanspp_init(X: np.ndarray, m: int, rng: np.random.Generator) -> np.ndarray:
    """Seed centers one by one, each with probability proportional to the
    squared distance from the nearest center already chosen."""
    centers = np.empty((m, X.shape[1]))
    centers[0] = X[int(rng.integers(0, len(X)))]
    closest = ((X - centers[0]) ** 2).sum(axis=1)
    for j in range(1, m):
        total = float(closest.sum())
        if total <= 0.0:
            # all remaining points coincide with a chosen center
            centers[j] = X[int(rng.integers(0, len(X)))]
            continue
        r = rng.uniform(0.0, total)
        idx = int(np.searchsorted(np.cumsum(closest), r))
        idx = min(idx, len(X) - 1)
        centers[j] = X[idx]
        closest = np.minimum(closest, ((X - centers[j]) ** 2).sum(axis=1))
    return centers


def kmeans_prototypes(
    X: np.ndarray, m: int, max_iters: int = 100, seed: int = 0
) -> np.ndarray:
    """Cluster X into m groups and return the centroids, (m, n).

    Lloyd iteration with k-means++ seeding; deterministic given the seed. A
    cluster that goes empty is re-seeded to the point farthest from its
    assigned centroid.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise ValueError(f"X must be 2-D, got shape {X.shape}")
    if m < 1:
        raise ValueError(f"cluster count must be >= 1, got {m}")
    if len(X) < m:
        raise ValueError(f"need at least m={m} samples, got {len(X)}")

    rng = np.random.default_rng(seed)
    centers = _kmeanspp_init(X, m, rng)
    for _ in range(max_iters):
        d2 = _pairwise_sq_dists(X, centers)
        labels = d2.argmin(axis=1)
        point_d2 = d2[np.arange(len(X)), labels]
        new_centers = centers.copy()
        for j in range(m):
            mask = labels == j
            if mask.any():
                new_centers[j] = X[mask].mean(axis=0)
            else:
                far = int(point_d2.argmax())
                new_centers[j] = X[far]
                point_d2[far] = 0.0  # do not hand the same point to two empty clusters
        if np.array_equal(new_centers, centers):
            break
        centers = new_centers
    return centers
