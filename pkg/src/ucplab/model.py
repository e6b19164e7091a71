"""Events, states and conditional probabilities over the matrix algebras.

A state is a positive trace-one density rho; it evaluates elements through
the trace form mu(x) = <rho, x>.  Conditioning on an idempotent e follows
the compression map: mu(f | e) = mu(U_e f) / mu(e), and the conditioned
state itself has density U_e rho / mu(e).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import jordan
from .jordan import (
    AlgebraDescriptor,
    AlgebraElement,
    DEFAULT_TOL,
    NotIdempotentError,
    inner,
    is_idempotent,
    quadratic_map_U,
)


class ConditioningOnNullError(ValueError):
    """Conditioning on an event of (numerically) zero probability."""


@dataclass(frozen=True)
class State:
    density: AlgebraElement

    def __post_init__(self):
        rho = self.density
        if abs(jordan.trace(rho) - 1.0) > 1e-6:
            raise ValueError("state density must have trace one")

    @property
    def descriptor(self) -> AlgebraDescriptor:
        return self.density.descriptor

    @classmethod
    def random(cls, desc: AlgebraDescriptor, rng_seed=0) -> "State":
        return cls(jordan.random_state_density(desc, rng_seed))

    @classmethod
    def mix(cls, s: float, mu: "State", nu: "State") -> "State":
        return cls(s * mu.density + (1.0 - s) * nu.density)


def evaluate(mu: State, x: AlgebraElement) -> float:
    """Linear extension of the state: mu(x) = trace(rho o x)."""
    return inner(mu.density, x)


def orthogonal(e: AlgebraElement, f: AlgebraElement, tol=1e-8) -> bool:
    """Events are orthogonal iff e + f is again an event, i.e. e o f = 0."""
    e._check(f)
    prod = jordan.jordan_product(e, f)
    scale = 1.0 + np.abs(e.entries).max() + np.abs(f.entries).max()
    return bool(np.abs(prod.entries).max() <= tol * scale)


def complement(e: AlgebraElement) -> AlgebraElement:
    return jordan.identity(e.descriptor) - e


def conditional_probability(mu: State, e: AlgebraElement, f: AlgebraElement, tol=DEFAULT_TOL) -> float:
    """mu(f | e) = mu(U_e f) / mu(e)."""
    pe = evaluate(mu, e)
    if pe <= tol:
        raise ConditioningOnNullError(f"mu(e) = {pe} is not positive")
    return evaluate(mu, quadratic_map_U(e, f)) / pe


def conditional_state(mu: State, e: AlgebraElement, tol=DEFAULT_TOL) -> State:
    """Density of the conditioned state: U_e rho / mu(e)."""
    pe = evaluate(mu, e)
    if pe <= tol:
        raise ConditioningOnNullError(f"mu(e) = {pe} is not positive")
    if not is_idempotent(e):
        raise NotIdempotentError("conditioning requires an idempotent event")
    return State((1.0 / pe) * quadratic_map_U(e, mu.density))
