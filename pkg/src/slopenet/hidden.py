"""Hidden-node weight and bias generation for randomized sigmoid networks.

Two generators are provided:

* :func:`generate_hidden_params` draws, for each node, a slope angle of the
  sigmoid at its inflection point, a random rotation of the tangent
  hyperplane around the output axis, and an anchor point in the input region
  where the inflection is placed. Weights and biases follow from those three
  choices, so the steep part of every sigmoid lands inside the data region.
* :func:`generate_standard` is the conventional baseline that draws every
  weight and bias i.i.d. uniform from a fixed symmetric interval.

Angles are degrees everywhere in the public API; conversion to radians
happens only inside the trigonometric helpers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rng import node_stream

PLACEMENT_HYPERCUBE = "hypercube"
PLACEMENT_TRAINING = "training"
PLACEMENT_PROTOTYPES = "prototypes"
PLACEMENTS = (PLACEMENT_HYPERCUBE, PLACEMENT_TRAINING, PLACEMENT_PROTOTYPES)

# samples this close to 90 degrees are redrawn; tan() is singular at 90
_MAX_ANGLE_MARGIN_DEG = 1e-9
# a rotation normal with smaller Euclidean norm is considered degenerate
_MIN_NORMAL_NORM = 1e-12


def _tan_deg(angle_deg: float) -> float:
    return math.tan(math.radians(angle_deg))


@dataclass(frozen=True)
class GenConfig:
    """Hyperparameters of the slope-angle generator.

    m, n            node count and input dimension
    alpha_min/max   slope-angle interval in degrees, sampled as the open
                    interval (alpha_min, alpha_max); 90 is allowed as an
                    upper bound that is never attained
    placement       anchor strategy, one of PLACEMENTS
    rotation_bound  half-width d of the interval the rotation-normal
                    components are drawn from; the direction distribution
                    does not depend on it (it also serves as the symmetric
                    interval bound of the standard baseline in the
                    experiment drivers)
    seed            base seed; node i uses a substream derived from (seed, i)
    """

    m: int
    n: int
    alpha_min: float = 0.0
    alpha_max: float = 90.0
    placement: str = PLACEMENT_HYPERCUBE
    rotation_bound: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"node count m must be >= 1, got {self.m}")
        if self.n < 1:
            raise ValueError(f"input dimension n must be >= 1, got {self.n}")
        if not 0.0 <= self.alpha_min < self.alpha_max <= 90.0:
            raise ValueError(
                "need 0 <= alpha_min < alpha_max <= 90 degrees, got "
                f"({self.alpha_min}, {self.alpha_max})"
            )
        if self.alpha_min >= 90.0 - _MAX_ANGLE_MARGIN_DEG:
            raise ValueError(f"alpha_min={self.alpha_min} leaves no sampleable angle below 90")
        if self.rotation_bound <= 0:
            raise ValueError(f"rotation_bound must be > 0, got {self.rotation_bound}")
        if self.placement not in PLACEMENTS:
            raise ValueError(f"unknown placement {self.placement!r}, expected one of {PLACEMENTS}")


@dataclass
class PlacementContext:
    """Data the anchor-placement strategies draw from.

    bounds      (n, 2) per-dimension [lo, hi] of the input region; None means
                the unit hypercube
    train_X     (N, n) training inputs, required for 'training' placement
    prototypes  (m, n) cluster prototypes, required for 'prototypes'
                placement, row i anchors node i
    """

    bounds: np.ndarray | None = None
    train_X: np.ndarray | None = None
    prototypes: np.ndarray | None = None

    def resolved_bounds(self, n: int) -> np.ndarray:
        if self.bounds is None:
            return np.column_stack([np.zeros(n), np.ones(n)])
        b = np.asarray(self.bounds, dtype=float)
        if b.shape != (n, 2):
            raise ValueError(f"bounds must have shape ({n}, 2), got {b.shape}")
        if not np.all(b[:, 1] > b[:, 0]):
            raise ValueError("every hypercube bound needs hi > lo")
        return b


@dataclass
class HiddenParams:
    """Frozen random layer: weights A (m, n), biases b (m,).

    For layers built by the slope-angle generator, ``anchors`` records each
    node's inflection point x* (the sigmoid equals 0.5 there) and ``angles``
    the sampled slope angle in degrees; the baseline generator leaves both
    None.
    """

    A: np.ndarray
    b: np.ndarray
    anchors: np.ndarray | None = None
    angles: np.ndarray | None = None

    @property
    def m(self) -> int:
        return self.A.shape[0]

    @property
    def n(self) -> int:
        return self.A.shape[1]


def sample_slope_angle(cfg: GenConfig, rng: np.random.Generator) -> float:
    """Draw a slope angle in degrees, uniform on the open (alpha_min, alpha_max).

    A draw on the boundary, at or above 90 - 1e-9 degrees, or with a
    non-finite tangent is rejected and redrawn.
    """
    hi_cap = 90.0 - _MAX_ANGLE_MARGIN_DEG
    while True:
        alpha = float(rng.uniform(cfg.alpha_min, cfg.alpha_max))
        if cfg.alpha_min < alpha < cfg.alpha_max and alpha < hi_cap and math.isfinite(
            _tan_deg(alpha)
        ):
            return alpha


def sample_rotation_normal(n: int, d: float, rng: np.random.Generator) -> np.ndarray:
    """Draw the first n components of the tangent-hyperplane normal, i.i.d. U(-d, d).

    A degenerate draw (norm <= 1e-12) is resampled wholesale.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if d <= 0:
        raise ValueError(f"interval bound d must be > 0, got {d}")
    while True:
        a_prime = rng.uniform(-d, d, size=n)
        if float(np.linalg.norm(a_prime)) > _MIN_NORMAL_NORM:
            return a_prime


def compute_a0(a_prime: np.ndarray, alpha_deg: float, sign_bit: int) -> float:
    """Output-axis component of the normal vector: (-1)^sign_bit * ||a'|| / tan(alpha).

    Fixing this component makes the tangent hyperplane meet the input
    hyperplane at exactly the requested slope angle.
    """
    if not 0.0 < alpha_deg < 90.0:
        raise ValueError(f"slope angle must lie strictly inside (0, 90) degrees, got {alpha_deg}")
    norm = float(np.linalg.norm(a_prime))
    if norm <= 0.0:
        raise ValueError("rotation normal must have positive norm")
    a0 = (-1.0) ** (sign_bit & 1) * norm / _tan_deg(alpha_deg)
    if not math.isfinite(a0) or a0 == 0.0:
        raise ValueError(f"degenerate normal component a0={a0} at alpha={alpha_deg}")
    return a0


def weights_from_normal(a_prime: np.ndarray, a0: float) -> np.ndarray:
    """Sigmoid weights from the hyperplane normal: a_k = -4 a'_k / a0."""
    if a0 == 0.0:
        raise ValueError("a0 must be nonzero")
    return -4.0 * np.asarray(a_prime, dtype=float) / a0


def bias_from_anchor(a: np.ndarray, x_star: np.ndarray) -> float:
    """Bias that puts the sigmoid inflection at x_star: b = -(a . x_star)."""
    a = np.asarray(a, dtype=float)
    x_star = np.asarray(x_star, dtype=float)
    if a.shape != x_star.shape:
        raise ValueError(f"weight/anchor length mismatch: {a.shape} vs {x_star.shape}")
    return -float(np.dot(a, x_star))


def select_anchor(
    ctx: PlacementContext,
    placement: str,
    n: int,
    node_index: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Pick the inflection anchor x* for one node according to the strategy."""
    if placement == PLACEMENT_HYPERCUBE:
        bounds = ctx.resolved_bounds(n)
        return rng.uniform(bounds[:, 0], bounds[:, 1])
    if placement == PLACEMENT_TRAINING:
        if ctx.train_X is None or len(ctx.train_X) == 0:
            raise ValueError("'training' placement needs a nonempty train_X in the context")
        X = np.asarray(ctx.train_X, dtype=float)
        if X.ndim != 2 or X.shape[1] != n:
            raise ValueError(f"train_X must be (N, {n}), got {X.shape}")
        return X[int(rng.integers(0, len(X)))].copy()
    if placement == PLACEMENT_PROTOTYPES:
        if ctx.prototypes is None:
            raise ValueError("'prototypes' placement needs a prototype matrix in the context")
        P = np.asarray(ctx.prototypes, dtype=float)
        if P.ndim != 2 or P.shape[1] != n:
            raise ValueError(f"prototypes must be (m, {n}), got {P.shape}")
        if not 0 <= node_index < len(P):
            raise ValueError(f"node index {node_index} outside prototype rows 0..{len(P) - 1}")
        return P[node_index].copy()
    raise ValueError(f"unknown placement {placement!r}")


def generate_hidden_params(cfg: GenConfig, ctx: PlacementContext | None = None) -> HiddenParams:
    """Generate the full hidden layer by the slope-angle/rotation/anchor scheme.

    Per node i, on a substream derived from (cfg.seed, i): draw the slope
    angle, draw the rotation normal, fix its output-axis component with a
    random sign, convert to weights, pick the anchor, and set the bias so the
    inflection sits on the anchor. Deterministic given (cfg, ctx).
    """
    if ctx is None:
        ctx = PlacementContext()
    if cfg.placement == PLACEMENT_PROTOTYPES:
        P = ctx.prototypes
        if P is None or len(P) != cfg.m:
            have = "none" if P is None else str(len(P))
            raise ValueError(f"'prototypes' placement needs exactly m={cfg.m} rows, got {have}")

    A = np.empty((cfg.m, cfg.n))
    b = np.empty(cfg.m)
    anchors = np.empty((cfg.m, cfg.n))
    angles = np.empty(cfg.m)
    for i in range(cfg.m):
        rng = node_stream(cfg.seed, i)
        alpha = sample_slope_angle(cfg, rng)
        a_prime = sample_rotation_normal(cfg.n, cfg.rotation_bound, rng)
        sign_bit = int(rng.integers(0, 2))
        a0 = compute_a0(a_prime, alpha, sign_bit)
        a = weights_from_normal(a_prime, a0)
        x_star = select_anchor(ctx, cfg.placement, cfg.n, i, rng)
        A[i] = a
        b[i] = bias_from_anchor(a, x_star)
        anchors[i] = x_star
        angles[i] = alpha
    return HiddenParams(A=A, b=b, anchors=anchors, angles=angles)


def generate_standard(
    m: int, n: int, s: float = 1.0, seed: int | np.random.Generator = 0
) -> HiddenParams:
    """Conventional baseline: every weight and bias i.i.d. uniform on [-s, s]."""
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    if s <= 0:
        raise ValueError(f"interval bound s must be > 0, got {s}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    A = rng.uniform(-s, s, size=(m, n))
    b = rng.uniform(-s, s, size=m)
    return HiddenParams(A=A, b=b)


def weight_to_angle(a: np.ndarray) -> float:
    """Slope angle in degrees implied by a weight vector: arctan(||a|| / 4)."""
    norm = float(np.linalg.norm(np.asarray(a, dtype=float)))
    return math.degrees(math.atan(norm / 4.0))
