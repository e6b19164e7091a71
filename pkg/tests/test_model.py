"""States, conditional probabilities and the mixture identity on matrix models."""

import numpy as np
import pytest

from ucplab.jordan import (
    AlgebraDescriptor,
    AlgebraElement,
    identity,
    random_projection,
    random_state_density,
)
from ucplab.model import (
    ConditioningOnNullError,
    State,
    complement,
    conditional_probability,
    conditional_state,
    evaluate,
    orthogonal,
)

MODELS = [("R", 2), ("R", 3), ("C", 2), ("C", 3), ("C", 4), ("H", 2), ("H", 3), ("O", 3)]


def diag_element(level, n, values):
    desc = AlgebraDescriptor(level, n)
    entries = np.zeros((n, n, desc.d))
    for i, v in enumerate(values):
        entries[i, i, 0] = float(v)
    return AlgebraElement(desc, entries)


def test_state_requires_trace_one():
    with pytest.raises(ValueError):
        State(diag_element("C", 2, [1.0, 1.0]))


def test_evaluate_diagonal_oracle():
    mu = State(diag_element("C", 2, [0.25, 0.75]))
    e = diag_element("C", 2, [1.0, 0.0])
    assert evaluate(mu, e) == pytest.approx(0.25)
    assert evaluate(mu, identity(e.descriptor)) == pytest.approx(1.0)


def test_conditional_probability_two_slit_oracle():
    # state = projection onto (1,1)/sqrt(2); conditioning on the first
    # diagonal unit reproduces the collapse value 1/2 * 1/2 / (1/2) = 1/2.
    desc = AlgebraDescriptor("C", 2)
    plus = np.zeros((2, 2, 2))
    plus[..., 0] = 0.5
    f = AlgebraElement(desc, plus)
    mu = State(f)
    e = diag_element("C", 2, [1.0, 0.0])
    assert evaluate(mu, e) == pytest.approx(0.5)
    assert conditional_probability(mu, e, f) == pytest.approx(0.5)
    # conditioned density is the first diagonal unit itself
    nu = conditional_state(mu, e)
    assert np.allclose(nu.density.entries, diag_element("C", 2, [1.0, 0.0]).entries, atol=1e-12)


def test_conditioning_on_null_event_raises():
    mu = State(diag_element("C", 2, [1.0, 0.0]))
    e = diag_element("C", 2, [0.0, 1.0])
    with pytest.raises(ConditioningOnNullError):
        conditional_state(mu, e)
    with pytest.raises(ConditioningOnNullError):
        conditional_probability(mu, e, identity(e.descriptor))


def test_orthogonality_and_complement():
    e = diag_element("R", 3, [1.0, 0.0, 0.0])
    f = diag_element("R", 3, [0.0, 1.0, 0.0])
    assert orthogonal(e, f)
    assert not orthogonal(e, e)
    assert np.allclose(complement(e).entries, diag_element("R", 3, [0.0, 1.0, 1.0]).entries)


@pytest.mark.parametrize("level,n", MODELS)
def test_conditional_state_is_a_state(level, n):
    desc = AlgebraDescriptor(level, n)
    mu = State.random(desc, rng_seed=3)
    e = random_projection(desc, rank=1, rng_seed=4)
    nu = conditional_state(mu, e)
    # trace one is asserted by the State constructor; check support: nu(e) = 1
    assert evaluate(nu, e) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("level,n", MODELS)
def test_mixture_identity(level, n):
    # conditional of s*mu + (1-s)*nu under e is the (renormalized) mixture
    # of the two conditionals with weights s*mu(e) and (1-s)*nu(e).
    desc = AlgebraDescriptor(level, n)
    rng = np.random.default_rng(17)
    for k in range(10):
        mu = State(random_state_density(desc, rng_seed=100 + k))
        nu = State(random_state_density(desc, rng_seed=200 + k))
        e = random_projection(desc, rank=1 + k % n, rng_seed=300 + k)
        s = float(rng.random())
        mix = State.mix(s, mu, nu)
        pe_mu, pe_nu = evaluate(mu, e), evaluate(nu, e)
        if min(pe_mu, pe_nu) < 1e-8:
            continue
        w = s * pe_mu / (s * pe_mu + (1.0 - s) * pe_nu)
        lhs = conditional_state(mix, e).density.entries
        rhs = (
            w * conditional_state(mu, e).density.entries
            + (1.0 - w) * conditional_state(nu, e).density.entries
        )
        assert np.abs(lhs - rhs).max() <= 1e-10
