"""Laurent polynomial symbols with scalar and matrix coefficients.

A symbol is a finitely supported Laurent polynomial on the unit circle.
``ScalarSymbol`` holds complex coefficients, ``MatrixSymbol`` holds square
complex matrix coefficients.  Both are immutable value objects; all
arithmetic returns new instances, so they are safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

# Coefficients whose modulus falls below this after arithmetic are dropped,
# keeping the bandwidth meaningful for window computations.
COEFF_PRUNE_TOL = 1e-15

# |z| must be within this distance of 1 for point evaluation.
UNIT_CIRCLE_TOL = 1e-12


def _check_unit(z: complex) -> complex:
    z = complex(z)
    if abs(abs(z) - 1.0) > UNIT_CIRCLE_TOL:
        raise ValueError(f"evaluation point must lie on the unit circle, got |z|={abs(z)!r}")
    return z


class ScalarSymbol:
    """A complex Laurent polynomial, stored as a sparse index->coefficient map."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, complex] | None = None):
        pruned: dict[int, complex] = {}
        if coeffs:
            for n, c in coeffs.items():
                c = complex(c)
                if abs(c) >= COEFF_PRUNE_TOL:
                    pruned[int(n)] = c
        self._coeffs = pruned

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "ScalarSymbol":
        return cls()

    @classmethod
    def constant(cls, c: complex) -> "ScalarSymbol":
        return cls({0: c})

    @classmethod
    def monomial(cls, n: int, c: complex = 1.0) -> "ScalarSymbol":
        """The single term c * z**n (n may be negative)."""
        return cls({n: c})

    # -- structure queries ----------------------------------------------

    def coeff(self, n: int) -> complex:
        return self._coeffs.get(n, 0j)

    def items(self) -> Iterator[tuple[int, complex]]:
        return iter(sorted(self._coeffs.items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def bandwidth(self) -> int:
        """max(|lowest index|, highest index); 0 for constants and zero."""
        if not self._coeffs:
            return 0
        return max(max(self._coeffs), -min(self._coeffs), 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_analytic(self) -> bool:
        return all(n >= 0 for n in self._coeffs)

    def is_coanalytic(self) -> bool:
        return all(n <= 0 for n in self._coeffs)

    def max_modulus_coeff(self) -> float:
        return max((abs(c) for c in self._coeffs.values()), default=0.0)

    # -- algebra ---------------------------------------------------------

    def conj_reflect(self) -> "ScalarSymbol":
        """Symbol of the adjoint operator: coefficient at n becomes conj(c_{-n})."""
        return ScalarSymbol({-n: c.conjugate() for n, c in self._coeffs.items()})

    def __add__(self, other: "ScalarSymbol") -> "ScalarSymbol":
        if not isinstance(other, ScalarSymbol):
            return NotImplemented
        out = dict(self._coeffs)
        for n, c in other._coeffs.items():
            out[n] = out.get(n, 0j) + c
        return ScalarSymbol(out)

    def __sub__(self, other: "ScalarSymbol") -> "ScalarSymbol":
        return self + (-other)

    def __neg__(self) -> "ScalarSymbol":
        return ScalarSymbol({n: -c for n, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, ScalarSymbol):
            out: dict[int, complex] = {}
            for n, a in self._coeffs.items():
                for m, b in other._coeffs.items():
                    out[n + m] = out.get(n + m, 0j) + a * b
            return ScalarSymbol(out)
        if isinstance(other, (int, float, complex)):
            return ScalarSymbol({n: other * c for n, c in self._coeffs.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return ScalarSymbol({n: other * c for n, c in self._coeffs.items()})
        return NotImplemented

    def __call__(self, z: complex) -> complex:
        """Evaluate at a point of the unit circle."""
        z = _check_unit(z)
        return sum((c * z**n for n, c in self._coeffs.items()), 0j)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarSymbol):
            return NotImplemented
        return self._coeffs == other._coeffs

    def max_coeff_diff(self, other: "ScalarSymbol") -> float:
        """Largest modulus of a coefficient of self - other (no pruning)."""
        idx = set(self._coeffs) | set(other._coeffs)
        return max((abs(self.coeff(n) - other.coeff(n)) for n in idx), default=0.0)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "ScalarSymbol(0)"
        terms = ", ".join(f"{n}: {c}" for n, c in self.items())
        return f"ScalarSymbol({{{terms}}})"

    def as_matrix(self) -> "MatrixSymbol":
        return MatrixSymbol(1, {n: np.array([[c]], dtype=complex) for n, c in self._coeffs.items()})


class MatrixSymbol:
    """A d x d matrix-valued Laurent polynomial, one dense matrix per index."""

    __slots__ = ("_dim", "_coeffs")

    def __init__(self, dim: int, coeffs: Mapping[int, np.ndarray] | None = None):
        dim = int(dim)
        if dim < 1:
            raise ValueError(f"matrix symbol dimension must be >= 1, got {dim}")
        self._dim = dim
        pruned: dict[int, np.ndarray] = {}
        if coeffs:
            for n, mat in coeffs.items():
                arr = np.array(mat, dtype=complex)
                if arr.shape != (dim, dim):
                    raise ValueError(
                        f"coefficient at index {n} has shape {arr.shape}, expected {(dim, dim)}"
                    )
                arr[np.abs(arr) < COEFF_PRUNE_TOL] = 0
                if np.any(arr != 0):
                    arr.setflags(write=False)
                    pruned[int(n)] = arr
        self._coeffs = pruned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "MatrixSymbol":
        return cls(dim)

    @classmethod
    def identity(cls, dim: int) -> "MatrixSymbol":
        return cls(dim, {0: np.eye(dim, dtype=complex)})

    @classmethod
    def from_entries(cls, grid: Sequence[Sequence[ScalarSymbol]]) -> "MatrixSymbol":
        """Build from a d x d grid of scalar symbols."""
        d = len(grid)
        if any(len(row) != d for row in grid):
            raise ValueError("entry grid must be square")
        coeffs: dict[int, np.ndarray] = {}
        for i, row in enumerate(grid):
            for j, phi in enumerate(row):
                for n, c in phi.items():
                    coeffs.setdefault(n, np.zeros((d, d), dtype=complex))[i, j] = c
        return cls(d, coeffs)

    @classmethod
    def from_scalar(cls, phi: ScalarSymbol) -> "MatrixSymbol":
        return phi.as_matrix()

    # -- structure queries ---------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    def coeff(self, n: int) -> np.ndarray:
        mat = self._coeffs.get(n)
        if mat is None:
            return np.zeros((self._dim, self._dim), dtype=complex)
        return mat

    def items(self) -> Iterator[tuple[int, np.ndarray]]:
        return iter(sorted(self._coeffs.items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def bandwidth(self) -> int:
        if not self._coeffs:
            return 0
        return max(max(self._coeffs), -min(self._coeffs), 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_analytic(self) -> bool:
        return all(n >= 0 for n in self._coeffs)

    def is_coanalytic(self) -> bool:
        return all(n <= 0 for n in self._coeffs)

    def entry(self, i: int, j: int) -> ScalarSymbol:
        """Extract entry (i, j) across all indices as a ScalarSymbol."""
        return ScalarSymbol({n: mat[i, j] for n, mat in self._coeffs.items()})

    def max_modulus_coeff(self) -> float:
        return max((float(np.max(np.abs(m))) for m in self._coeffs.values()), default=0.0)

    # -- algebra ----------------------------------------------------------

    def adjoint(self) -> "MatrixSymbol":
        """Pointwise adjoint on the circle: coefficient at n is (coeff at -n)*."""
        return MatrixSymbol(self._dim, {-n: mat.conj().T for n, mat in self._coeffs.items()})

    def analytic_split(self) -> tuple["MatrixSymbol", "MatrixSymbol"]:
        """Split into (minus, plus) with self == adjoint(z * minus) + plus.

        Both parts are analytic: ``plus`` carries the indices n >= 0 verbatim,
        ``minus`` carries coefficient (coeff at -(m+1))* at index m.
        """
        plus = {n: mat for n, mat in self._coeffs.items() if n >= 0}
        minus = {-n - 1: mat.conj().T for n, mat in self._coeffs.items() if n < 0}
        return MatrixSymbol(self._dim, minus), MatrixSymbol(self._dim, plus)

    def _require_same_dim(self, other: "MatrixSymbol") -> None:
        if self._dim != other._dim:
            raise ValueError(f"dimension mismatch: {self._dim} vs {other._dim}")

    # Scaling and addition go entry by entry through Python complex
    # arithmetic so that extracting an entry commutes bitwise with the same
    # operation on ScalarSymbol (numpy's vectorized complex multiply may fuse
    # differently).  Dimensions are small, so this costs nothing.

    def __add__(self, other: "MatrixSymbol") -> "MatrixSymbol":
        if not isinstance(other, MatrixSymbol):
            return NotImplemented
        self._require_same_dim(other)
        d = self._dim
        out: dict[int, np.ndarray] = {}
        for n in set(self._coeffs) | set(other._coeffs):
            a, b = self.coeff(n), other.coeff(n)
            mat = np.empty((d, d), dtype=complex)
            for i in range(d):
                for j in range(d):
                    mat[i, j] = complex(a[i, j]) + complex(b[i, j])
            out[n] = mat
        return MatrixSymbol(d, out)

    def __sub__(self, other: "MatrixSymbol") -> "MatrixSymbol":
        return self + (-other)

    def __neg__(self) -> "MatrixSymbol":
        return MatrixSymbol(self._dim, {n: -m for n, m in self._coeffs.items()})

    def _scaled(self, factor: complex) -> "MatrixSymbol":
        d = self._dim
        out: dict[int, np.ndarray] = {}
        for n, src in self._coeffs.items():
            mat = np.empty((d, d), dtype=complex)
            for i in range(d):
                for j in range(d):
                    mat[i, j] = factor * complex(src[i, j])
            out[n] = mat
        return MatrixSymbol(d, out)

    def __mul__(self, other):
        if isinstance(other, MatrixSymbol):
            self._require_same_dim(other)
            out: dict[int, np.ndarray] = {}
            for n, a in self._coeffs.items():
                for m, b in other._coeffs.items():
                    k = n + m
                    prod = a @ b
                    if k in out:
                        out[k] = out[k] + prod
                    else:
                        out[k] = prod
            return MatrixSymbol(self._dim, out)
        if isinstance(other, (int, float, complex)):
            return self._scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self._scaled(other)
        return NotImplemented

    def __call__(self, z: complex) -> np.ndarray:
        """Evaluate at a point of the unit circle, returning a d x d array."""
        z = _check_unit(z)
        out = np.zeros((self._dim, self._dim), dtype=complex)
        for n, mat in self._coeffs.items():
            out += mat * z**n
        return out

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixSymbol):
            return NotImplemented
        if self._dim != other._dim or set(self._coeffs) != set(other._coeffs):
            return False
        return all(np.array_equal(self._coeffs[n], other._coeffs[n]) for n in self._coeffs)

    def max_coeff_diff(self, other: "MatrixSymbol") -> float:
        self._require_same_dim(other)
        idx = set(self._coeffs) | set(other._coeffs)
        return max(
            (float(np.max(np.abs(self.coeff(n) - other.coeff(n)))) for n in idx),
            default=0.0,
        )

    def __repr__(self) -> str:
        return f"MatrixSymbol(dim={self._dim}, support={list(self.support)})"


def unit_samples(count: int = 17) -> list[complex]:
    """Equispaced points e^(2 pi i t / count) on the unit circle.

    The default of 17 points (an odd prime) avoids aliasing against the small
    bandwidths used throughout.
    """
    return [complex(np.exp(2j * np.pi * t / count)) for t in range(count)]
