"""Isomorphism invariants, non-isomorphism certificates and norm checks."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import linalg
from .algebra_core import Algebra, find_identity
from .constructions import unitization
from .corpus import philox
from .scalar import ZERO

__all__ = [
    "Fingerprint",
    "Certificate",
    "NormReport",
    "fingerprint",
    "distinguish",
    "norm_report",
    "is_commutative",
    "center_dim",
    "radical_basis",
    "radical_dim",
    "NORM_TOLERANCE",
]

NORM_TOLERANCE = 1e-9

FINGERPRINT_FIELDS = ("dim", "unital", "commutative", "center_dim", "radical_dim")


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    unital: bool
    commutative: bool
    center_dim: int
    radical_dim: int

    def __post_init__(self):
        assert 0 <= self.radical_dim <= self.dim
        assert 0 <= self.center_dim <= self.dim

    @property
    def semisimple(self) -> bool:
        return self.radical_dim == 0

    def as_dict(self) -> dict:
        d = asdict(self)
        d["semisimple"] = self.semisimple
        return d


@dataclass(frozen=True)
class Certificate:
    """A fingerprint field on which two algebras differ."""

    field: str
    left: object
    right: object

    def __str__(self):
        fmt = lambda v: str(v).lower() if isinstance(v, bool) else str(v)
        return f"{self.field}: {fmt(self.left)} vs {fmt(self.right)}"


def is_commutative(A: Algebra) -> bool:
    t = A.tensor
    return all(t[i][j] == t[j][i] for i in range(A.dim) for j in range(i + 1, A.dim))


def center_dim(A: Algebra) -> int:
    # x = sum_a x_a e_a is central iff sum_a x_a (c[a][i][k] - c[i][a][k]) = 0 for all i, k
    n = A.dim
    t = A.tensor
    rows = [[t[a][i][k] - t[i][a][k] for a in range(n)] for i in range(n) for k in range(n)]
    return n - linalg.rank(rows, n)


def _trace_gram(A: Algebra) -> list:
    """G[i][j] = trace of left multiplication by e_i e_j."""
    n = A.dim
    t = A.tensor
    traces = [sum((t[k][j][j] for j in range(n)), ZERO) for k in range(n)]
    return [
        [sum((t[i][j][k] * traces[k] for k in range(n) if t[i][j][k]), ZERO) for j in range(n)]
        for i in range(n)
    ]


def radical_basis(A: Algebra) -> list[list]:
    """Basis (coordinates in A) of the Jacobson radical.

    Uses the characteristic-zero criterion rad = {x : tr L_{xy} = 0 for all y},
    evaluated in the unitization so that it applies to non-unital A, then
    intersected with A (the adjoined coordinate forced to zero).
    """
    Au, _ = unitization(A)
    n = A.dim
    G = _trace_gram(Au)
    rows = [list(r) for r in G]
    rows.append([ZERO] * n + [1])
    return [v[:n] for v in linalg.nullspace(rows, n + 1)]


def radical_dim(A: Algebra) -> int:
    return len(radical_basis(A))


def fingerprint(A: Algebra) -> Fingerprint:
    return Fingerprint(
        dim=A.dim,
        unital=find_identity(A) is not None,
        commutative=is_commutative(A),
        center_dim=center_dim(A),
        radical_dim=radical_dim(A),
    )


def distinguish(A: Algebra, B: Algebra) -> Certificate | None:
    """First differing fingerprint field, or None.  None does not mean isomorphic."""
    fa, fb = fingerprint(A), fingerprint(B)
    for name in FINGERPRINT_FIELDS:
        va, vb = getattr(fa, name), getattr(fb, name)
        if va != vb:
            return Certificate(name, va, vb)
    return None


@dataclass(frozen=True)
class NormReport:
    mult_constant: float
    renorm_factor: float
    samples_checked: int
    max_violation: float
    basis_pairs_ok: bool

    @property
    def passed(self) -> bool:
        return self.basis_pairs_ok and self.max_violation <= NORM_TOLERANCE

    def __bool__(self):
        return self.passed


def _l1_rows(vectors: np.ndarray) -> np.ndarray:
    return np.abs(vectors).sum(axis=-1)


def norm_report(A: Algebra, samples: int = 1000, seed: int = 0) -> NormReport:
    """Check that the scaled l1 norm ``max(M, 1) * ||x||_1`` is submultiplicative.

    M is the largest l1 norm of a product of two basis vectors.  Pairs of
    elements with real and imaginary parts uniform in [-1, 1] are sampled from
    a Philox stream keyed by ``seed``.
    """
    n = A.dim
    T = np.array([[[complex(c) for c in v] for v in row] for row in A.tensor])
    basis_norms = _l1_rows(T)  # ||e_i e_j||_1
    M = float(basis_norms.max())
    factor = max(M, 1.0) if M > 0 else 1.0

    # ||e_i e_j||' <= ||e_i||' ||e_j||'  <=>  ||e_i e_j||_1 <= factor; no tolerance
    basis_ok = bool((basis_norms <= factor).all())

    max_violation = -math.inf
    if samples > 0:
        rng = philox("norm_report", A.name, seed)
        parts = rng.uniform(-1.0, 1.0, size=(4, samples, n))
        X = parts[0] + 1j * parts[1]
        Y = parts[2] + 1j * parts[3]
        XY = np.einsum("si,sj,ijk->sk", X, Y, T)
        lhs = factor * _l1_rows(XY)
        rhs = (factor * _l1_rows(X)) * (factor * _l1_rows(Y))
        max_violation = float((lhs - rhs).max())
    return NormReport(M, factor, samples, max_violation, basis_ok)
