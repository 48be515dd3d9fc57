"""Single-hidden-layer sigmoid network with a least-squares linear readout.

The hidden layer is frozen (see :mod:`slopenet.hidden`); fitting solves the
minimum-norm least-squares problem H beta = y through an SVD-backed solver.
There is no output bias: a constant offset is representable by flat sigmoids.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hidden import HiddenParams

# rows processed per block; keeps peak memory flat for very large inputs
_BLOCK_ROWS = 8192

# nearest float64 neighbours of 0 and 1 inside the open interval
_H_LO = np.nextafter(0.0, 1.0)
_H_HI = np.nextafter(1.0, 0.0)


def sigmoid(z):
    """Numerically stable logistic function 1 / (1 + exp(-z)).

    Works on scalars and arrays; never overflows, saturating to 0 or 1 for
    large |z|.
    """
    z = np.asarray(z, dtype=float)
    e = np.exp(-np.abs(z))
    out = np.where(z >= 0, 1.0 / (1.0 + e), e / (1.0 + e))
    return float(out) if out.ndim == 0 else out


def hidden_matrix(X: np.ndarray, params: HiddenParams) -> np.ndarray:
    """Hidden-layer outputs H, shape (N, m): H[l, i] = sigmoid(A_i . x_l + b_i).

    Entries are clamped to the nearest representable values inside the open
    interval (0, 1); saturated sigmoids would otherwise round to exactly 0
    or 1 in float64.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != params.n:
        raise ValueError(f"X has {X.shape[1]} columns, hidden layer expects {params.n}")
    H = np.empty((X.shape[0], params.m))
    for start in range(0, X.shape[0], _BLOCK_ROWS):
        sl = slice(start, min(start + _BLOCK_ROWS, X.shape[0]))
        H[sl] = sigmoid(X[sl] @ params.A.T + params.b)
    np.clip(H, _H_LO, _H_HI, out=H)
    return H


def fit_output_weights(H: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Minimum-norm least-squares readout beta for H beta ~= y.

    SVD-based; singular values below eps * max(N, m) relative to the largest
    are treated as zero.
    """
    H = np.asarray(H, dtype=float)
    y = np.asarray(y, dtype=float)
    if H.ndim != 2 or y.ndim != 1 or H.shape[0] != y.shape[0]:
        raise ValueError(f"shape mismatch: H {H.shape} vs y {y.shape}")
    if not np.all(np.isfinite(H)):
        raise ValueError("hidden matrix contains non-finite entries")
    if not np.all(np.isfinite(y)):
        raise ValueError("target vector contains non-finite entries")
    rcond = np.finfo(float).eps * max(H.shape)
    beta, *_ = np.linalg.lstsq(H, y, rcond=rcond)
    return beta


def rmse(y_hat: np.ndarray, y: np.ndarray) -> float:
    """Root-mean-square error between two equal-length vectors."""
    y_hat = np.asarray(y_hat, dtype=float)
    y = np.asarray(y, dtype=float)
    if y_hat.shape != y.shape or y_hat.ndim != 1:
        raise ValueError(f"shape mismatch: {y_hat.shape} vs {y.shape}")
    if y_hat.size == 0:
        raise ValueError("rmse of empty vectors is undefined")
    return float(np.sqrt(np.mean((y_hat - y) ** 2)))


@dataclass
class Network:
    """A frozen hidden layer plus (after fit) the linear readout beta."""

    hidden: HiddenParams
    beta: np.ndarray | None = None

    @property
    def fitted(self) -> bool:
        return self.beta is not None

    def fit(self, X: np.ndarray, y: np.ndarray) -> "Network":
        H = hidden_matrix(X, self.hidden)
        self.beta = fit_output_weights(H, np.asarray(y, dtype=float))
        return self

    def predict(self, X: np.ndarray) -> np.ndarray:
        if not self.fitted:
            raise RuntimeError("network is not fitted; call fit() first")
        X = np.atleast_2d(np.asarray(X, dtype=float))
        y_hat = np.empty(X.shape[0])
        for start in range(0, X.shape[0], _BLOCK_ROWS):
            sl = slice(start, min(start + _BLOCK_ROWS, X.shape[0]))
            y_hat[sl] = hidden_matrix(X[sl], self.hidden) @ self.beta
        return y_hat
