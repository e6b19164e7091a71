"""Real composition algebras R, C, H, O built by Cayley-Dickson doubling.

Basis units follow the doubling order: unit k of the doubled algebra with
k >= d is e_{k-d} * e_d of the previous level, so the octonion table is
fixed by the recursion alone.  The table can be dumped as CSV for auditing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

LEVELS = ("R", "C", "H", "O")
LEVEL_DIM = {"R": 1, "C": 2, "H": 4, "O": 8}
DIM_LEVEL = {v: k for k, v in LEVEL_DIM.items()}


class LevelMismatchError(ValueError):
    """Raised when two scalars from different algebra levels are combined."""


@lru_cache(maxsize=None)
def multiplication_table(dim: int) -> np.ndarray:
    """Structure-constant tensor M with e_i e_j = sum_k M[i, j, k] e_k.

    Built by the Cayley-Dickson recursion
    (p, q)(r, s) = (p r - conj(s) q, s p + q conj(r)).
    """
    if dim == 1:
        return np.ones((1, 1, 1))
    half = dim // 2
    sub = multiplication_table(half)
    conj = -np.ones(half)
    conj[0] = 1.0
    m = np.zeros((dim, dim, dim))
    # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
    m[:half, :half, :half] = sub
    # (e_i, 0)(0, e_j) = (0, e_j e_i)
    m[:half, half:, half:] = np.transpose(sub, (1, 0, 2))
    # (0, e_i)(e_j, 0) = (0, e_i conj(e_j))
    m[half:, :half, half:] = sub * conj[None, :, None]
    # (0, e_i)(0, e_j) = (-conj(e_j) e_i, 0)
    m[half:, half:, :half] = -np.transpose(sub, (1, 0, 2)) * conj[None, :, None]
    m.setflags(write=False)
    return m


def cd_mul(a: np.ndarray, b: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Product of coordinate arrays (broadcasts over leading axes)."""
    return np.einsum("...i,...j,ijk->...k", a, b, table)


def cd_conj(a: np.ndarray) -> np.ndarray:
    out = -np.asarray(a, dtype=float).copy()
    out[..., 0] = np.asarray(a)[..., 0]
    return out


def cd_norm(a: np.ndarray) -> np.ndarray:
    """Composition norm: sum of squared coordinates."""
    return (np.asarray(a, dtype=float) ** 2).sum(axis=-1)


@dataclass(frozen=True)
class Scalar:
    """An element of R, C, H or O in Cayley-Dickson coordinates."""

    coords: tuple
    level: str

    def __post_init__(self):
        if self.level not in LEVELS:
            raise ValueError(f"unknown level {self.level!r}")
        if len(self.coords) != LEVEL_DIM[self.level]:
            raise ValueError(
                f"level {self.level} needs {LEVEL_DIM[self.level]} coordinates, "
                f"got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))

    @classmethod
    def from_real(cls, value: float, level: str) -> "Scalar":
        coords = [float(value)] + [0.0] * (LEVEL_DIM[level] - 1)
        return cls(tuple(coords), level)

    @classmethod
    def unit(cls, index: int, level: str) -> "Scalar":
        coords = [0.0] * LEVEL_DIM[level]
        coords[index] = 1.0
        return cls(tuple(coords), level)

    def _check(self, other: "Scalar"):
        if self.level != other.level:
            raise LevelMismatchError(f"{self.level} vs {other.level}")

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords)

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(tuple(self.array + other.array), self.level)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(tuple(self.array - other.array), self.level)

    def __neg__(self) -> "Scalar":
        return Scalar(tuple(-c for c in self.coords), self.level)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            self._check(other)
            table = multiplication_table(LEVEL_DIM[self.level])
            return Scalar(tuple(cd_mul(self.array, other.array, table)), self.level)
        return Scalar(tuple(float(other) * c for c in self.coords), self.level)

    __rmul__ = __mul__


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def conj(a: Scalar) -> Scalar:
    return Scalar(tuple(cd_conj(a.array)), a.level)


def real_part(a: Scalar) -> float:
    return a.coords[0]


def norm(a: Scalar) -> float:
    return float(cd_norm(a.array))


def dump_multiplication_table(level: str = "O") -> str:
    """CSV of signed unit indices: row i, column j holds e_i * e_j.

    Entry '+k' / '-k' means the product is plus or minus unit k.
    """
    dim = LEVEL_DIM[level]
    table = multiplication_table(dim)
    lines = ["," + ",".join(f"e{j}" for j in range(dim))]
    for i in range(dim):
        cells = []
        for j in range(dim):
            k = int(np.argmax(np.abs(table[i, j])))
            sign = "+" if table[i, j, k] > 0 else "-"
            cells.append(f"{sign}{k}")
        lines.append(f"e{i}," + ",".join(cells))
    return "\n".join(lines) + "\n"
