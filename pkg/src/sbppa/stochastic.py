"""Seedable random primitives: uniform/normal draws, Poisson arrival
probabilities, exponential service density, and heavy-tailed step generation
via Mantegna's algorithm.

All stochastic state lives in :class:`RngStream`, a thin wrapper around
``numpy.random.Generator`` seeded with PCG64.  Two streams built from the
same seed replay the same draw sequence exactly, which is what makes every
search run in this package reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "RngStream",
    "LevyParams",
    "poisson_pmf",
    "exponential_service_density",
    "mantegna_sigma",
    "levy_step",
]

# Retries allowed when the denominator normal draw underflows to zero.
_LEVY_MAX_RETRIES = 100


class RngStream:
    """A deterministic random stream owned by exactly one run.

    Parameters
    ----------
    seed : int
        64-bit unsigned seed.  The mapping seed -> sequence is PCG64 as
        shipped by numpy, so sequences are stable across platforms and
        library versions that keep the PCG64 reference implementation.
    """

    def __init__(self, seed: int):
        seed = int(seed)
        if seed < 0:
            raise ValueError("seed must be a nonnegative 64-bit integer")
        self.seed = seed
        self._gen = np.random.Generator(np.random.PCG64(seed))

    @property
    def generator(self) -> np.random.Generator:
        """The underlying numpy Generator (for bulk array draws)."""
        return self._gen

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        """One draw from the half-open interval [lo, hi)."""
        if not lo < hi:
            raise ValueError(f"uniform bounds must satisfy lo < hi, got [{lo}, {hi})")
        return float(self._gen.uniform(lo, hi))

    def unit_normal(self) -> float:
        """One standard normal draw."""
        return float(self._gen.standard_normal())

    def poisson(self, lam: float) -> int:
        """One Poisson(lam) count draw."""
        if lam <= 0:
            raise ValueError("poisson rate must be positive")
        return int(self._gen.poisson(lam))

    def integer(self, lo: int, hi: int) -> int:
        """One integer draw from [lo, hi)."""
        if not lo < hi:
            raise ValueError(f"integer bounds must satisfy lo < hi, got [{lo}, {hi})")
        return int(self._gen.integers(lo, hi))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"RngStream(seed={self.seed})"


@dataclass(frozen=True)
class LevyParams:
    """Parameters of the Mantegna step sampler.

    ``sigma_u`` is derived from ``beta`` and cached here so the per-step
    cost is two normal draws; it always equals ``mantegna_sigma(beta)``.
    """

    beta: float = 1.5
    sigma_u: float = field(default=0.0)

    def __post_init__(self) -> None:
        if not 0.0 < self.beta < 2.0:
            raise ValueError(f"beta must lie in (0, 2), got {self.beta}")
        if self.sigma_u == 0.0:
            object.__setattr__(self, "sigma_u", mantegna_sigma(self.beta))
        elif self.sigma_u <= 0.0:
            raise ValueError("sigma_u must be positive")


def poisson_pmf(k: int, lam: float, t: float = 1.0) -> float:
    """P(N = k) for a Poisson arrival process with rate ``lam`` over time ``t``.

    Computed as ``exp(k*ln(lam*t) - lam*t - lnGamma(k+1))`` so large counts
    do not overflow a factorial.
    """
    if k < 0 or int(k) != k:
        raise ValueError(f"k must be a nonnegative integer, got {k}")
    if lam <= 0.0:
        raise ValueError(f"lam must be positive, got {lam}")
    if t <= 0.0:
        raise ValueError(f"t must be positive, got {t}")
    k = int(k)
    if k == 0:
        return math.exp(-lam * t)
    return math.exp(k * math.log(lam * t) - lam * t - math.lgamma(k + 1))


def exponential_service_density(t: float, mu: float) -> float:
    """Density ``mu * exp(-mu*t)`` of an exponential service time.

    Exposed for model exposition only; the search loop never calls it.
    """
    if mu <= 0.0:
        raise ValueError(f"mu must be positive, got {mu}")
    if t < 0.0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return mu * math.exp(-mu * t)


def mantegna_sigma(beta: float) -> float:
    """Numerator scale sigma_u of Mantegna's algorithm for stability index beta.

    sigma_u = [Gamma(1+beta)*sin(pi*beta/2) /
               (Gamma((1+beta)/2) * beta * 2^((beta-1)/2))]^(1/beta)
    """
    if not 0.0 < beta < 2.0:
        raise ValueError(f"beta must lie in (0, 2), got {beta}")
    num = math.gamma(1.0 + beta) * math.sin(math.pi * beta / 2.0)
    den = math.gamma((1.0 + beta) / 2.0) * beta * 2.0 ** ((beta - 1.0) / 2.0)
    return (num / den) ** (1.0 / beta)


def levy_step(rng: RngStream, params: LevyParams) -> float:
    """One heavy-tailed step ``s = u / |v|^(1/beta)``.

    ``u ~ Normal(0, sigma_u^2)`` and ``v ~ Normal(0, 1)``.  The result is
    symmetric about zero with tail exponent beta.  A denominator draw that
    underflows to exactly zero is redrawn; after 100 dead draws (which a
    working normal sampler cannot produce) this raises RuntimeError.
    """
    u = rng.unit_normal() * params.sigma_u
    for _ in range(_LEVY_MAX_RETRIES):
        v = rng.unit_normal()
        if v != 0.0:
            return u / abs(v) ** (1.0 / params.beta)
    raise RuntimeError("levy_step: denominator draw underflowed 100 times")
