"""Interference terms, the conditional-probability bound corridor, the
symmetry condition, and the lemma verification battery.

All the maps here are linear on the Hermitian elements of a matrix model:

  U_e x = 2 e o (e o x) - e o x        (conditionalization / compression)
  S_e x = 2 U_e x + 2 U_e' x - x       (its positivity gives the corridor)
  T_e x = (x + U_e x - U_e' x) / 2     (multiplication-by-e in quantum models)
  I2(e1, e2) = U_{e1+e2} - U_{e1} - U_{e2}
  I3(e1, e2, e3) = U_{e1+e2+e3} - sum of pair terms + sum of single terms

Each map is available as a closure on (batched) coordinate arrays and as a
dense matrix over the orthonormal Hermitian basis.  The seven terms of the
third-order map are built independently, so its vanishing is a genuine
numerical fact and not an algebraic simplification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import jordan, model
from .finite import FiniteLogic, conditional_table
from .jordan import (
    AlgebraDescriptor,
    AlgebraElement,
    NotIdempotentError,
    _eigenvalues_raw,
    _hermitize,
    _identity,
    _inner,
    _jp,
    _random_elements,
    _rng,
    _separated_spectral_batch,
    _trace,
    _u_apply,
    hermitian_basis,
)
from .model import State


class NotOrthogonalError(ValueError):
    pass


def _require_idempotent(desc, e, tol=1e-6):
    diff = _jp(e, e, desc.table) - e
    if np.abs(diff).max() > tol * (1.0 + np.abs(e).max()):
        raise NotIdempotentError("event must be idempotent")


def _require_orthogonal(desc, *events, tol=1e-6):
    for i in range(len(events)):
        for j in range(i + 1, len(events)):
            prod = _jp(events[i], events[j], desc.table)
            scale = 1.0 + np.abs(events[i]).max() + np.abs(events[j]).max()
            if np.abs(prod).max() > tol * scale:
                raise NotOrthogonalError("events must be mutually orthogonal")


@dataclass(frozen=True)
class LinearOperator:
    """Linear map on the Hermitian elements, applied via a closure.

    The closure operates on raw coordinate arrays and broadcasts over
    leading batch axes.
    """

    descriptor: AlgebraDescriptor
    apply_raw: callable

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.descriptor, self.apply_raw(x.entries))

    def basis_matrix(self) -> np.ndarray:
        """Dense matrix over the orthonormal Hermitian basis (column action)."""
        basis = hermitian_basis(self.descriptor)
        images = self.apply_raw(basis)
        return np.einsum("aijc,bijc->ab", basis, images)


def U_operator(e: AlgebraElement) -> LinearOperator:
    desc = e.descriptor
    _require_idempotent(desc, e.entries)
    ee = e.entries
    return LinearOperator(desc, lambda x: _u_apply(ee, x, desc.table))


def S_map(e: AlgebraElement) -> LinearOperator:
    """S_e = 2 U_e + 2 U_e' - id."""
    desc = e.descriptor
    _require_idempotent(desc, e.entries)
    ee = e.entries
    ec = _identity(desc) - ee
    table = desc.table
    return LinearOperator(
        desc, lambda x: 2.0 * _u_apply(ee, x, table) + 2.0 * _u_apply(ec, x, table) - x
    )


def T_map(e: AlgebraElement) -> LinearOperator:
    """T_e = (id + U_e - U_e') / 2."""
    desc = e.descriptor
    _require_idempotent(desc, e.entries)
    ee = e.entries
    ec = _identity(desc) - ee
    table = desc.table
    return LinearOperator(
        desc, lambda x: 0.5 * (x + _u_apply(ee, x, table) - _u_apply(ec, x, table))
    )


def I2_operator(e1: AlgebraElement, e2: AlgebraElement) -> LinearOperator:
    desc = e1.descriptor
    _require_orthogonal(desc, e1.entries, e2.entries)
    a, b = e1.entries, e2.entries
    table = desc.table

    def apply(x):
        return _u_apply(a + b, x, table) - _u_apply(a, x, table) - _u_apply(b, x, table)

    return LinearOperator(desc, apply)


def I3_operator(e1: AlgebraElement, e2: AlgebraElement, e3: AlgebraElement) -> LinearOperator:
    desc = e1.descriptor
    _require_orthogonal(desc, e1.entries, e2.entries, e3.entries)
    a, b, c = e1.entries, e2.entries, e3.entries
    table = desc.table

    def apply(x):
        return (
            _u_apply(a + b + c, x, table)
            - _u_apply(a + b, x, table)
            - _u_apply(b + c, x, table)
            - _u_apply(a + c, x, table)
            + _u_apply(a, x, table)
            + _u_apply(b, x, table)
            + _u_apply(c, x, table)
        )

    return LinearOperator(desc, apply)


def i3_basis_norm_max(desc: AlgebraDescriptor, trials: int, seed=0) -> float:
    """Max over random orthogonal triples of the dense-matrix max-norm of
    the third-order map.

    Each triple is three disjoint sums of primitive idempotents of one
    random spectral decomposition; the seven terms of the map are applied
    to the full orthonormal Hermitian basis, so the returned value is the
    entrywise max-norm of the dense matrices.
    """
    rng = _rng(seed)
    n, table = desc.n, desc.table
    basis = hermitian_basis(desc)
    worst = 0.0
    for start in range(0, trials, 200):
        count = min(200, trials - start)
        _, idem = _separated_spectral_batch(desc, rng, count)
        m1, m2, m3 = _random_partition_masks(rng, count, n, 3)
        g1 = np.einsum("bi,bijkc->bjkc", m1, idem)[:, None]
        g2 = np.einsum("bi,bijkc->bjkc", m2, idem)[:, None]
        g3 = np.einsum("bi,bijkc->bjkc", m3, idem)[:, None]
        bx = np.broadcast_to(basis, (count,) + basis.shape)

        def u(g, y):
            return _u_apply(g, y, table)

        image = (
            u(g1 + g2 + g3, bx)
            - u(g1 + g2, bx)
            - u(g2 + g3, bx)
            - u(g1 + g3, bx)
            + u(g1, bx)
            + u(g2, bx)
            + u(g3, bx)
        )
        dense = np.einsum("aijc,bnijc->bna", basis, image)
        worst = max(worst, float(np.abs(dense).max()))
    return worst


# ---------------------------------------------------------------------------
# scalar interference terms
# ---------------------------------------------------------------------------


def I2_scalar(mu: State, f: AlgebraElement, e1: AlgebraElement, e2: AlgebraElement) -> float:
    """mu(f|e1+e2) mu(e1+e2) - mu(f|e1) mu(e1) - mu(f|e2) mu(e2).

    Each term is evaluated as mu(U_e f), which stays well defined when
    mu(e) vanishes.
    """
    return model.evaluate(mu, I2_operator(e1, e2)(f))


def I3_scalar(
    mu: State,
    f: AlgebraElement,
    e1: AlgebraElement,
    e2: AlgebraElement,
    e3: AlgebraElement,
) -> float:
    """The seven-term alternating sum over one, two and three open slits."""
    return model.evaluate(mu, I3_operator(e1, e2, e3)(f))


# ---------------------------------------------------------------------------
# corridor bound
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorridorPoint:
    p: float  # mu(U_e f) + mu(U_e' f)
    q: float  # mu(f)
    lower_ok: bool  # q >= 2p - 1
    upper_ok: bool  # q <= 2p

    def row(self):
        return (self.p, self.q, self.lower_ok, self.upper_ok)


def corridor_sample(mu: State, e: AlgebraElement, f: AlgebraElement, tol=1e-9) -> CorridorPoint:
    desc = e.descriptor
    _require_idempotent(desc, e.entries)
    table = desc.table
    ec = _identity(desc) - e.entries
    p = float(
        _inner(mu.density.entries, _u_apply(e.entries, f.entries, table))
        + _inner(mu.density.entries, _u_apply(ec, f.entries, table))
    )
    q = float(_inner(mu.density.entries, f.entries))
    return CorridorPoint(p, q, q >= 2 * p - 1 - tol, q <= 2 * p + tol)


def corridor_samples(desc: AlgebraDescriptor, trials: int, seed=0, classical=False, tol=1e-9):
    """Batched corridor sampling of random (state, e, f) triples.

    With classical=True everything is drawn diagonal, which forces q = p
    (the no-interference diagonal of the corridor figure).
    """
    rng = _rng(seed)
    n, table = desc.n, desc.table
    if classical:
        diag = rng.random((trials, n))
        rho_diag = diag / diag.sum(axis=1, keepdims=True)
        rho = np.zeros((trials, n, n, desc.d))
        e = np.zeros_like(rho)
        f = np.zeros_like(rho)
        idx = np.arange(n)
        rho[:, idx, idx, 0] = rho_diag
        e[:, idx, idx, 0] = rng.integers(0, 2, (trials, n)).astype(float)
        f[:, idx, idx, 0] = rng.integers(0, 2, (trials, n)).astype(float)
    else:
        _, idem = _separated_spectral_batch(desc, rng, trials)
        mask_e = rng.integers(0, 2, (trials, n)).astype(float)
        e = np.einsum("bi,bijkc->bjkc", mask_e, idem)
        _, idem_f = _separated_spectral_batch(desc, rng, trials)
        mask_f = rng.integers(0, 2, (trials, n)).astype(float)
        f = np.einsum("bi,bijkc->bjkc", mask_f, idem_f)
        x = _random_elements(desc, rng, trials)
        sq = _jp(x, x, table)
        rho = sq / _trace(sq)[:, None, None, None]
    ec = _identity(desc)[None] - e
    p = _inner(rho, _u_apply(e, f, table)) + _inner(rho, _u_apply(ec, f, table))
    q = _inner(rho, f)
    return [
        CorridorPoint(float(pi), float(qi), bool(qi >= 2 * pi - 1 - tol), bool(qi <= 2 * pi + tol))
        for pi, qi in zip(p, q)
    ]


def saturating_configuration(desc: AlgebraDescriptor):
    """(state, e, f) pinned to the upper corridor boundary q = 2p.

    e is the first diagonal unit and f the rank-one projection onto the
    equal superposition of the first two diagonal directions; taking the
    state defined by f itself gives q = 1 and p = 1/2 exactly.
    """
    if desc.n < 2:
        raise ValueError("needs matrix size at least 2")
    e = np.zeros((desc.n, desc.n, desc.d))
    e[0, 0, 0] = 1.0
    f = np.zeros_like(e)
    f[0, 0, 0] = f[1, 1, 0] = f[0, 1, 0] = f[1, 0, 0] = 0.5
    element_e = AlgebraElement(desc, e)
    element_f = AlgebraElement(desc, f)
    return State(element_f), element_e, element_f


# ---------------------------------------------------------------------------
# symmetry condition
# ---------------------------------------------------------------------------


def _onorm(x, desc):
    return float(np.abs(_eigenvalues_raw(_hermitize(x), desc)).max())


def a1_check(e: AlgebraElement, f: AlgebraElement) -> float:
    """Residual of U_e f' + U_e' f = U_f e' + U_f' e, plus cross-checks.

    Returns the largest of: the order-unit norm of the defect, the defect of
    the equivalent symmetric form T_e f = T_f e, and (associative levels
    only) the distance of both sides from e + f - ef - fe.
    """
    desc = e.descriptor
    _require_idempotent(desc, e.entries)
    _require_idempotent(desc, f.entries)
    table = desc.table
    one = _identity(desc)
    ee, ff = e.entries, f.entries
    lhs = _u_apply(ee, one - ff, table) + _u_apply(one - ee, ff, table)
    rhs = _u_apply(ff, one - ee, table) + _u_apply(one - ff, ee, table)
    residual = _onorm(lhs - rhs, desc)
    t_defect = _onorm(T_map(e).apply_raw(ff) - T_map(f).apply_raw(ee), desc)
    residual = max(residual, t_defect)
    if desc.level != "O":
        from .jordan import _matmul

        anticomm = ee + ff - _matmul(ee, ff, table) - _matmul(ff, ee, table)
        residual = max(residual, _onorm(lhs - anticomm, desc), _onorm(rhs - anticomm, desc))
    return residual


def eq10_check(e: AlgebraElement, f: AlgebraElement) -> float:
    """Residual of I2(e, e') f - I2(f, f') e = 2 U_f e - 2 U_e f."""
    desc = e.descriptor
    _require_idempotent(desc, e.entries)
    _require_idempotent(desc, f.entries)
    table = desc.table
    one = _identity(desc)
    ee, ff = e.entries, f.entries

    def i2_cc(g, x):  # I2(g, g') x = x - U_g x - U_g' x
        return x - _u_apply(g, x, table) - _u_apply(one - g, x, table)

    lhs = i2_cc(ee, ff) - i2_cc(ff, ee)
    rhs = 2.0 * _u_apply(ff, ee, table) - 2.0 * _u_apply(ee, ff, table)
    return _onorm(lhs - rhs, desc)


def symmetry_battery(desc: AlgebraDescriptor, trials: int, seed=0) -> dict:
    """Worst-case residuals of the two-event symmetry identities over
    random pairs of independent projections.

    Keys: `compression_symmetry` (U_e f' + U_e' f = U_f e' + U_f' e, plus
    the T_e f = T_f e form), `second_order_difference` (the paired
    second-order identity), and on associative levels
    `anticommutator_form` (both sides equal e + f - ef - fe).
    """
    rng = _rng(seed)
    n, table = desc.n, desc.table
    one = _identity(desc)

    def u(g, y):
        return _u_apply(g, y, table)

    _, idem_e = _separated_spectral_batch(desc, rng, trials)
    e = np.einsum("bi,bijkc->bjkc", rng.integers(0, 2, (trials, n)).astype(float), idem_e)
    _, idem_f = _separated_spectral_batch(desc, rng, trials)
    f = np.einsum("bi,bijkc->bjkc", rng.integers(0, 2, (trials, n)).astype(float), idem_f)

    lhs = u(e, one - f) + u(one - e, f)
    rhs = u(f, one - e) + u(one - f, e)
    res = {"compression_symmetry": float(np.abs(lhs - rhs).max())}
    t_e_f = 0.5 * (f + u(e, f) - u(one - e, f))
    t_f_e = 0.5 * (e + u(f, e) - u(one - f, e))
    res["compression_symmetry"] = max(
        res["compression_symmetry"], float(np.abs(t_e_f - t_f_e).max())
    )

    def i2_cc(g, x):
        return x - u(g, x) - u(one - g, x)

    lhs2 = i2_cc(e, f) - i2_cc(f, e)
    rhs2 = 2.0 * u(f, e) - 2.0 * u(e, f)
    res["second_order_difference"] = float(np.abs(lhs2 - rhs2).max())

    if desc.level != "O":
        from .jordan import _matmul

        anticomm = e + f - _matmul(e, f, table) - _matmul(f, e, table)
        res["anticommutator_form"] = max(
            float(np.abs(lhs - anticomm).max()), float(np.abs(rhs - anticomm).max())
        )
    return res


def t_structure_battery(desc: AlgebraDescriptor, trials: int, seed=0) -> dict:
    """Structure of the multiplication map T_e over random projections.

    Keys: `spectrum` (distance of the dense-matrix eigenvalues from
    {0, 1/2, 1}), `quadratic_relation` (2 T_e^2 - T_e = U_e on a basis),
    `partition` (T_e + T_e' = id), `norm_excess` (sampled unit-ball norm
    above 1) and `witness_gap` (T_e e = e, so the norm 1 is attained).
    """
    rng = _rng(seed)
    n, table = desc.n, desc.table
    one = _identity(desc)
    basis = hermitian_basis(desc)

    def u(g, y):
        return _u_apply(g, y, table)

    def t(g, y):
        return 0.5 * (y + u(g, y) - u(one - g, y))

    _, idem = _separated_spectral_batch(desc, rng, trials)
    mask = rng.integers(0, 2, (trials, n)).astype(float)
    e = np.einsum("bi,bijkc->bjkc", mask, idem)
    e_b = e[:, None]
    bx = np.broadcast_to(basis, (trials,) + basis.shape)

    t_im = t(e_b, bx)
    dense = np.einsum("aijc,bnijc->bna", basis, t_im)
    eigs = np.linalg.eigvalsh(dense)
    targets = np.array([0.0, 0.5, 1.0])
    spectrum = float(np.abs(eigs[..., None] - targets).min(axis=-1).max())

    quad = 2.0 * t(e_b, t_im) - t_im - u(e_b, bx)
    partition = t(e_b, bx) + t(one - e_b, bx) - bx

    x = _random_elements(desc, rng, trials)
    x = x / np.abs(_eigenvalues_raw(x, desc)).max(axis=-1)[:, None, None, None]
    tx_norm = np.abs(_eigenvalues_raw(_hermitize(t(e, x)), desc)).max()

    return {
        "spectrum": spectrum,
        "quadratic_relation": float(np.abs(quad).max()),
        "partition": float(np.abs(partition).max()),
        "norm_excess": max(0.0, float(tx_norm) - 1.0),
        "witness_gap": float(np.abs(t(e, e) - e).max()),
    }


# ---------------------------------------------------------------------------
# lemma battery
# ---------------------------------------------------------------------------


def _random_partition_masks(rng, trials, n, parts):
    """Random assignment of the n primitive idempotents into `parts` bins."""
    labels = rng.integers(0, parts + 1, (trials, n))  # bin `parts` = leftover
    return [(labels == k).astype(float) for k in range(parts)]


def lemma_suite(desc: AlgebraDescriptor, trials: int, seed=0) -> dict:
    """Residuals for the compression/multiplication-map identities.

    Checks, over random configurations:
      a) e below f: U_e U_f = U_f U_e = U_e, U_e f = e = U_f e
      b) e orthogonal to f: U_e f = 0 = U_f e, U_e U_f = 0 = U_f U_e,
         and U_e' U_f' = U_(e+f)' = U_f' U_e'
      c) T_e T_f = T_f T_e for orthogonal pairs
      d) third-order map factorization I3(e1,e2,e3) = U_{e1+e2+e3} I3((e2+e3)', e2, e3)
         and T_e + T_f - T_{e+f} = I3(e, f, (e+f)') / 2, on a basis
      e) T additivity on orthogonal pairs
      f) T_e x + T_e' x = x, T_e U_e = U_e, T_e U_e' = 0
      g) operator norm of T_e: witness T_e e = e, sampled unit ball stays below 1
    """
    rng = _rng(seed)
    n, table = desc.n, desc.table
    one = _identity(desc)
    basis = hermitian_basis(desc)  # (D, n, n, d)

    _, idem = _separated_spectral_batch(desc, rng, trials)
    m_e, m_f = _random_partition_masks(rng, trials, n, 2)
    e = np.einsum("bi,bijkc->bjkc", m_e, idem)
    f_orth = np.einsum("bi,bijkc->bjkc", m_f, idem)
    f_above = e + f_orth  # e below f_above by construction
    x = _random_elements(desc, rng, trials)

    def u(g, y):
        return _u_apply(g, y, table)

    def t(g, y):
        return 0.5 * (y + u(g, y) - u(one - g, y))

    def worst(arr):
        return float(np.abs(arr).max()) if arr.size else 0.0

    res = {}

    # (a) comparable pairs
    res["below_uf_e"] = worst(u(e, f_above) - e)
    res["below_ue_from_f"] = worst(u(f_above, e) - e)
    bx = np.broadcast_to(basis, (trials,) + basis.shape)
    e_b = e[:, None]
    f_ab = f_above[:, None]
    res["below_ueuf"] = worst(u(e_b, u(f_ab, bx)) - u(e_b, bx))
    res["below_ufue"] = worst(u(f_ab, u(e_b, bx)) - u(e_b, bx))

    # (b) orthogonal pairs
    f_b = f_orth[:, None]
    res["orth_uef"] = worst(u(e, f_orth))
    res["orth_ufe"] = worst(u(f_orth, e))
    res["orth_ueuf"] = worst(u(e_b, u(f_b, bx)))
    res["orth_ufue"] = worst(u(f_b, u(e_b, bx)))
    comp_sum = one - e - f_orth
    res["orth_complement_product"] = max(
        worst(u(one - e_b, u(one - f_b, bx)) - u(comp_sum[:, None], bx)),
        worst(u(one - f_b, u(one - e_b, bx)) - u(comp_sum[:, None], bx)),
    )

    # (c) commuting multiplication maps
    res["t_commute"] = worst(t(e_b, t(f_b, bx)) - t(f_b, t(e_b, bx)))

    # (d) third-order identities on a basis
    m1, m2, m3 = _random_partition_masks(rng, trials, n, 3)
    g1 = np.einsum("bi,bijkc->bjkc", m1, idem)[:, None]
    g2 = np.einsum("bi,bijkc->bjkc", m2, idem)[:, None]
    g3 = np.einsum("bi,bijkc->bjkc", m3, idem)[:, None]

    def i3(a, b, c, y):
        return (
            u(a + b + c, y)
            - u(a + b, y)
            - u(b + c, y)
            - u(a + c, y)
            + u(a, y)
            + u(b, y)
            + u(c, y)
        )

    lhs = i3(g1, g2, g3, bx)
    rhs = u(g1 + g2 + g3, i3(one - g2 - g3, g2, g3, bx))
    res["i3_factorization"] = worst(lhs - rhs)
    pair_lhs = t(e_b, bx) + t(f_b, bx) - t(e_b + f_b, bx)
    pair_rhs = 0.5 * i3(e_b, f_b, one - e_b - f_b, bx)
    res["t_defect_is_i3"] = worst(pair_lhs - pair_rhs)

    # (e) T additivity on orthogonal pairs
    res["t_additive"] = worst(t(e_b + f_b, bx) - t(e_b, bx) - t(f_b, bx))

    # (f) partition of the identity and compression absorption
    res["t_partition"] = worst(t(e, x) + t(one - e, x) - x)
    res["t_absorbs_u"] = worst(t(e_b, u(e_b, bx)) - u(e_b, bx))
    res["t_kills_u_comp"] = worst(t(e_b, u(one - e_b, bx)))

    # (g) operator norm of T_e: witness plus sampled unit ball
    res["t_fixes_e"] = worst(t(e, e) - e)
    norms = np.abs(_eigenvalues_raw(x, desc)).max(axis=(-1,))
    unit = x / norms[:, None, None, None]
    tx = t(e, unit)
    res["t_norm_excess"] = max(
        0.0, float(np.abs(_eigenvalues_raw(_hermitize(tx), desc)).max() - 1.0)
    )

    return res


# ---------------------------------------------------------------------------
# finite-logic interference scan
# ---------------------------------------------------------------------------


def finite_I3_scan(logic: FiniteLogic, conditionals=None) -> dict:
    """Exact second- and third-order interference over a finite logic.

    Sweeps every vertex state, every event f and every pair/triple of
    mutually orthogonal events; each term mu(f|g) mu(g) is mu(g) nu_g(f)
    with nu_g the unique conditional, or zero when mu(g) = 0.
    Configurations whose conditionals do not exist uniquely are counted in
    `skipped` instead of being assigned a value.
    """
    if conditionals is None:
        conditionals = conditional_table(logic)
    verts = logic.state_vertices()
    events = logic.events
    zero = logic.zero_event

    missing = object()

    def term(g, vi, mu, f):
        pg = logic.evaluate(mu, g)
        if pg == 0:
            return Fraction(0)
        nu = conditionals.get((g.key, vi))
        if nu is None:
            return missing
        return pg * logic.evaluate(nu, f)

    def scan_tuples(tuples):
        best = Fraction(0)
        witness = None
        skipped = 0
        signs_cache = {}
        for parts, groups in tuples:
            for vi, mu in enumerate(verts):
                for f in events:
                    total = Fraction(0)
                    bad = False
                    for sign, g in groups:
                        val = term(g, vi, mu, f)
                        if val is missing:
                            bad = True
                            break
                        total += sign * val
                    if bad:
                        skipped += 1
                        continue
                    if abs(total) > abs(best):
                        best = total
                        witness = {
                            "events": [sorted(p.canonical_rep) for p in parts],
                            "f": sorted(f.canonical_rep),
                            "state_vertex": vi,
                            "value": str(total),
                        }
        return best, witness, skipped

    pair_tuples = []
    for i, e1 in enumerate(events):
        for e2 in events[i:]:
            if not logic.orthogonal(e1, e2):
                continue
            s12 = logic.sum(e1, e2)
            pair_tuples.append(((e1, e2), [(1, s12), (-1, e1), (-1, e2)]))
    max_i2, wit_i2, skip2 = scan_tuples(pair_tuples)

    triple_tuples = []
    for i, e1 in enumerate(events):
        for j, e2 in enumerate(events[i:], start=i):
            if not logic.orthogonal(e1, e2):
                continue
            s12 = logic.sum(e1, e2)
            for e3 in events[j:]:
                if not (logic.orthogonal(e1, e3) and logic.orthogonal(e2, e3)):
                    continue
                if not logic.orthogonal(s12, e3):
                    continue
                s13 = logic.sum(e1, e3)
                s23 = logic.sum(e2, e3)
                s123 = logic.sum(s12, e3)
                triple_tuples.append(
                    (
                        (e1, e2, e3),
                        [(1, s123), (-1, s12), (-1, s13), (-1, s23), (1, e1), (1, e2), (1, e3)],
                    )
                )
    max_i3, wit_i3, skip3 = scan_tuples(triple_tuples)

    return {
        "max_abs_i2": max_i2,
        "i2_witness": wit_i2,
        "max_abs_i3": max_i3,
        "i3_witness": wit_i3,
        "skipped_i2": skip2,
        "skipped_i3": skip3,
        "pairs": len(pair_tuples),
        "triples": len(triple_tuples),
        "vertex_states": len(verts),
    }
