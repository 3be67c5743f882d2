"""Uniform directions on the unit sphere and weighted phase-vector sums."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidArgument, InvalidDimension, ShapeMismatch

_UNIT_NORM_TOL = 1e-12
# Below this the Gaussian draw is redrawn so normalization never divides by ~0.
_MIN_GAUSS_NORM = 1e-300
# Batch sizing target for the Monte Carlo sampler (number of float64 elements).
_BATCH_ELEMS = 4_000_000

_MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class RngStream:
    """Deterministic random stream identified by (seed, stream_index).

    Distinct stream indices derived from the same seed give statistically
    independent substreams, so Monte Carlo work can be split across workers
    without coordination. Equal (seed, stream_index) always reproduces the
    identical sample sequence. A single instance is stateful and must not be
    shared between workers without external ordering.
    """

    seed: int
    stream_index: int = 0
    generator: np.random.Generator = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not (0 <= int(self.seed) <= _MAX_SEED):
            raise InvalidArgument(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if int(self.stream_index) < 0:
            raise InvalidArgument(f"stream_index must be non-negative, got {self.stream_index}")
        gen = np.random.Generator(np.random.PCG64([int(self.seed), int(self.stream_index)]))
        object.__setattr__(self, "generator", gen)


@dataclass
class Direction:
    """Unit vector on the sphere S^(d-1), stored as a length-d coordinate array."""

    coords: np.ndarray

    def __post_init__(self) -> None:
        coords = np.asarray(self.coords, dtype=float)
        if coords.ndim != 1 or coords.size < 1:
            raise InvalidDimension("direction needs a one-dimensional coordinate array of length >= 1")
        length = float(np.sqrt(coords @ coords))
        if abs(length - 1.0) > _UNIT_NORM_TOL:
            raise InvalidArgument(f"direction is not a unit vector (norm {length!r})")
        self.coords = coords

    @property
    def d(self) -> int:
        return self.coords.size


def sample_directions(d: int, count: int, rng: RngStream) -> np.ndarray:
    """Draw `count` independent uniform points on S^(d-1) as a (count, d) array.

    Each point is an i.i.d. standard Gaussian vector scaled to unit length,
    which is exactly uniform for every d >= 1; for d=1 this reduces to the
    sign of a single Gaussian, i.e. +1 or -1 with equal probability.
    """
    if d < 1:
        raise InvalidDimension(f"sphere dimension must be >= 1, got {d}")
    if count < 0:
        raise InvalidArgument(f"count must be non-negative, got {count}")
    gen = rng.generator
    g = gen.standard_normal((count, d))
    nrm = np.sqrt(np.einsum("nd,nd->n", g, g))
    while nrm.size and nrm.min() < _MIN_GAUSS_NORM:
        bad = np.nonzero(nrm < _MIN_GAUSS_NORM)[0]
        g[bad] = gen.standard_normal((bad.size, d))
        nrm[bad] = np.sqrt(np.einsum("nd,nd->n", g[bad], g[bad]))
    return g / nrm[:, None]


def sample_direction(d: int, rng: RngStream) -> Direction:
    """Draw one uniform point on S^(d-1)."""
    return Direction(sample_directions(d, 1, rng)[0])


def _direction_matrix(directions) -> np.ndarray:
    if isinstance(directions, np.ndarray):
        mat = np.asarray(directions, dtype=float)
        if mat.ndim != 2:
            raise ShapeMismatch(f"direction array must be 2-d (n, d), got shape {mat.shape}")
        return mat
    rows = []
    d = None
    for item in directions:
        coords = item.coords if isinstance(item, Direction) else np.asarray(item, dtype=float)
        if d is None:
            d = coords.size
        elif coords.size != d:
            raise ShapeMismatch("directions do not share a common dimension")
        rows.append(coords)
    if not rows:
        return np.empty((0, 1))
    return np.vstack(rows)


def phase_sum(weights: Sequence[float], directions) -> np.ndarray:
    """Componentwise sum of weights[i] * directions[i].

    `directions` may be a sequence of Direction objects or an (n, d) array.
    """
    w = np.asarray(weights, dtype=float)
    mat = _direction_matrix(directions)
    if w.ndim != 1:
        raise ShapeMismatch(f"weights must be one-dimensional, got shape {w.shape}")
    if w.size != mat.shape[0]:
        raise ShapeMismatch(f"{w.size} weights but {mat.shape[0]} directions")
    return w @ mat


def norm(v: Sequence[float]) -> float:
    """Euclidean (L2) length of a vector."""
    arr = np.asarray(v, dtype=float)
    return float(np.sqrt(arr @ arr))


def sample_phase_sum_norms(
    weights: Sequence[float],
    d: int,
    rng: RngStream,
    n_samples: int,
    batch_size: int | None = None,
) -> np.ndarray:
    """Monte Carlo samples of || sum_i weights[i] * omega_i || with fresh uniform
    directions omega_i per sample.

    Returns an (n_samples,) array. The draw order is fixed by (rng, n_samples)
    alone, so results do not depend on the internal batching.
    """
    if d < 1:
        raise InvalidDimension(f"sphere dimension must be >= 1, got {d}")
    if n_samples < 1:
        raise InvalidArgument(f"n_samples must be >= 1, got {n_samples}")
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size < 1:
        raise ShapeMismatch("weights must be a non-empty one-dimensional sequence")
    n = w.size
    if batch_size is None:
        batch_size = max(1, _BATCH_ELEMS // (n * d))
    gen = rng.generator
    out = np.empty(n_samples)
    done = 0
    while done < n_samples:
        m = min(batch_size, n_samples - done)
        g = gen.standard_normal((m, n, d))
        nrm = np.sqrt(np.einsum("snd,snd->sn", g, g))
        while nrm.min() < _MIN_GAUSS_NORM:
            bad = np.nonzero(nrm < _MIN_GAUSS_NORM)
            fresh = gen.standard_normal((bad[0].size, d))
            g[bad] = fresh
            nrm[bad] = np.sqrt(np.einsum("nd,nd->n", fresh, fresh))
        scale = w / nrm
        s = np.einsum("sn,snd->sd", scale, g)
        out[done : done + m] = np.sqrt(np.einsum("sd,sd->s", s, s))
        done += m
    return out
