"""Linear maps between algebras and the verdicts built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .algebra_core import Algebra, Element, format_vector
from .errors import AlgebraMismatchError
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "LinearMap",
    "HomReport",
    "CharReport",
    "IsoReport",
    "Subspace",
    "SubspaceReport",
    "is_homomorphism",
    "is_character",
    "verify_isomorphism",
    "check_multiplicative",
    "subspace_report",
]

CONTINUITY_NOTE = "automatic: every linear map between finite-dimensional spaces is bounded"


@dataclass(frozen=True, eq=False)
class LinearMap:
    """``matrix`` has one row per codomain basis vector; column j is the image of e_j."""

    domain: Algebra
    codomain: Algebra
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(as_scalar(c) for c in row) for row in self.matrix)
        if len(m) != self.codomain.dim or any(len(r) != self.domain.dim for r in m):
            raise ValueError(
                f"matrix must be {self.codomain.dim}x{self.domain.dim} "
                f"for a map {self.domain.name} -> {self.codomain.name}"
            )
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_images(cls, domain: Algebra, codomain: Algebra, images: Sequence[Element]) -> LinearMap:
        if len(images) != domain.dim:
            raise ValueError("need one image per domain basis vector")
        for im in images:
            if im.algebra != codomain:
                raise AlgebraMismatchError()
        cols = [im.coeffs for im in images]
        return cls(domain, codomain, tuple(zip(*cols)) if cols else ((),) * codomain.dim)

    @classmethod
    def identity(cls, A: Algebra) -> LinearMap:
        return cls(A, A, linalg.identity(A.dim))

    @classmethod
    def zero(cls, domain: Algebra, codomain: Algebra) -> LinearMap:
        return cls(domain, codomain, linalg.zeros(codomain.dim, domain.dim))

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self.matrix))

    def column(self, j: int) -> Element:
        return Element(self.codomain, tuple(row[j] for row in self.matrix))

    @cached_property
    def columns(self) -> tuple[Element, ...]:
        return tuple(self.column(j) for j in range(self.domain.dim))

    @cached_property
    def _sparse_columns(self) -> tuple:
        return tuple(
            tuple((r, row[j]) for r, row in enumerate(self.matrix) if row[j])
            for j in range(self.domain.dim)
        )

    def __call__(self, x: Element) -> Element:
        if not (x.algebra is self.domain or x.algebra == self.domain):
            raise AlgebraMismatchError()
        out = [ZERO] * self.codomain.dim
        cols = self._sparse_columns
        for j, c in enumerate(x.coeffs):
            if c:
                for r, m in cols[j]:
                    out[r] = out[r] + m * c
        return Element(self.codomain, tuple(out))

    def compose(self, inner: LinearMap) -> LinearMap:
        """``self ∘ inner``: apply ``inner`` first."""
        if inner.codomain != self.domain:
            raise AlgebraMismatchError("composition: inner codomain differs from outer domain")
        return LinearMap(inner.domain, self.codomain, linalg.matmul(self.matrix, inner.matrix))

    def is_zero(self) -> bool:
        return not any(c for row in self.matrix for c in row)

    @property
    def is_square(self) -> bool:
        return self.domain.dim == self.codomain.dim

    def rank(self) -> int:
        return linalg.rank(self.matrix, self.domain.dim)

    def determinant(self) -> Scalar:
        return linalg.determinant(self.matrix)

    def inverse(self) -> LinearMap | None:
        if not self.is_square:
            return None
        inv = linalg.inverse(self.matrix)
        if inv is None:
            return None
        return LinearMap(self.codomain, self.domain, inv)

    def __repr__(self):
        return f"LinearMap({self.domain.name} -> {self.codomain.name})"


@dataclass(frozen=True)
class HomReport:
    passed: bool
    witness: tuple[int, int] | None = None
    lhs: Element | None = None
    rhs: Element | None = None
    pairs_checked: int = 0
    continuity: str = CONTINUITY_NOTE

    def __bool__(self):
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"multiplicative on {self.pairs_checked} pairs"
        return f"T(x*y) = {self.lhs} but T(x)*T(y) = {self.rhs} at pair {self.witness}"


def is_homomorphism(T: LinearMap) -> HomReport:
    """T(e_i e_j) == T(e_i) T(e_j) for all basis pairs; first failure is the witness."""
    A = T.domain
    cols = T.columns
    n = A.dim
    for i in range(n):
        for j in range(n):
            lhs = T(A.product_of_basis(i, j))
            rhs = cols[i] * cols[j]
            if lhs != rhs:
                return HomReport(False, (i, j), lhs, rhs, i * n + j + 1)
    return HomReport(True, pairs_checked=n * n)


def check_multiplicative(T: LinearMap, pairs: Iterable[tuple[Element, Element]]) -> HomReport:
    """Same test as :func:`is_homomorphism` but on arbitrary element pairs."""
    count = 0
    for idx, (x, y) in enumerate(pairs):
        count += 1
        lhs = T(x * y)
        rhs = T(x) * T(y)
        if lhs != rhs:
            return HomReport(False, (idx, idx), lhs, rhs, count)
    return HomReport(True, pairs_checked=count)


def _is_canonical_c(A: Algebra) -> bool:
    return A.dim == 1 and A.tensor[0][0][0] == ONE


@dataclass(frozen=True)
class CharReport:
    passed: bool
    nonzero: bool
    multiplicative: HomReport

    def __bool__(self):
        return self.passed

    @property
    def witness(self):
        return self.multiplicative.witness

    def describe(self) -> str:
        if self.passed:
            return "nonzero and multiplicative"
        if not self.nonzero:
            return "the zero functional is not a character"
        return self.multiplicative.describe()


def is_character(chi: LinearMap) -> CharReport:
    if not _is_canonical_c(chi.codomain):
        raise ValueError("character codomain must be ℂ")
    nonzero = not chi.is_zero()
    hom = is_homomorphism(chi)
    return CharReport(nonzero and hom.passed, nonzero, hom)


@dataclass(frozen=True)
class IsoReport:
    passed: bool
    square: bool
    rank: int
    determinant: Scalar | None
    homomorphism: HomReport | None
    failed_clause: str | None = None
    continuity: str = CONTINUITY_NOTE

    def __bool__(self):
        return self.passed

    @property
    def witness(self):
        return self.homomorphism.witness if self.homomorphism is not None else None

    def describe(self) -> str:
        if self.passed:
            return f"isomorphism: bijective (det {self.determinant}) and multiplicative"
        if self.failed_clause == "multiplicative":
            return f"not multiplicative: {self.homomorphism.describe()}"
        return f"not bijective: rank {self.rank}, square={self.square}, det {self.determinant}"


def verify_isomorphism(f: LinearMap) -> IsoReport:
    square = f.is_square
    rank = f.rank()
    det = f.determinant() if square else None
    hom = is_homomorphism(f)
    bijective = square and rank == f.domain.dim
    if not bijective:
        clause = "bijective"
    elif not hom:
        clause = "multiplicative"
    else:
        clause = None
    return IsoReport(clause is None, square, rank, det, hom, clause)


@dataclass(frozen=True)
class Subspace:
    ambient: Algebra
    spanning: tuple[Element, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "spanning", tuple(self.spanning))
        for v in self.spanning:
            if v.algebra != self.ambient:
                raise AlgebraMismatchError("spanning vector outside the ambient algebra")

    @cached_property
    def echelon(self) -> tuple[tuple, tuple]:
        rows, pivots = linalg.rref([v.coeffs for v in self.spanning], self.ambient.dim)
        return tuple(tuple(r) for r in rows), tuple(pivots)

    @property
    def rank(self) -> int:
        return len(self.echelon[1])

    @property
    def codimension(self) -> int:
        return self.ambient.dim - self.rank

    def basis(self) -> list[Element]:
        """The reduced row-echelon basis."""
        return [Element(self.ambient, row) for row in self.echelon[0]]

    def contains(self, v: Element) -> bool:
        rows, pivots = self.echelon
        return not any(linalg.reduce_against(v.coeffs, rows, pivots))

    def coordinates(self, v: Element) -> tuple:
        """Coordinates of a member in the reduced basis (its pivot entries)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v.coeffs[p] for p in self.echelon[1])

    def as_algebra(self, name: str, labels: Sequence[str] | None = None) -> Algebra:
        """Restrict the ambient product to this subspace (must be a subalgebra)."""
        B = self.basis()
        if labels is None:
            labels = [format_vector(b.coeffs, self.ambient.basis) for b in B]
        tensor = [[self.coordinates(x * y) for y in B] for x in B]
        return Algebra(name, labels, tensor)


@dataclass(frozen=True)
class SubspaceReport:
    rank: int
    codimension: int
    is_subalgebra: bool
    is_left_ideal: bool
    is_right_ideal: bool
    subalgebra_witness: tuple[Element, Element, Element] | None = None
    left_witness: tuple[Element, Element, Element] | None = None
    right_witness: tuple[Element, Element, Element] | None = None

    def __post_init__(self):
        if self.is_ideal and not self.is_subalgebra:
            raise AssertionError("an ideal must be a subalgebra")

    @property
    def is_ideal(self) -> bool:
        return self.is_left_ideal and self.is_right_ideal

    @property
    def ideal_witness(self):
        return self.left_witness or self.right_witness

    def describe(self) -> str:
        lines = [
            f"rank {self.rank}, codimension {self.codimension}",
            f"subalgebra: {self.is_subalgebra}" + _witness_text(self.subalgebra_witness),
            f"left ideal: {self.is_left_ideal}" + _witness_text(self.left_witness),
            f"right ideal: {self.is_right_ideal}" + _witness_text(self.right_witness),
            f"two-sided ideal: {self.is_ideal}",
        ]
        return "\n".join(lines)


def _witness_text(w) -> str:
    if w is None:
        return ""
    x, y, p = w
    return f" (witness: ({x}) * ({y}) = {p} is not in the subspace)"


def subspace_report(S: Subspace) -> SubspaceReport:
    B = S.basis()
    ambient = S.ambient.basis_elements()

    sub_w = None
    for x in B:
        for y in B:
            p = x * y
            if not S.contains(p):
                sub_w = (x, y, p)
                break
        if sub_w:
            break

    left_w = right_w = None
    for a in ambient:
        for s in B:
            if left_w is None:
                p = a * s
                if not S.contains(p):
                    left_w = (a, s, p)
            if right_w is None:
                p = s * a
                if not S.contains(p):
                    right_w = (s, a, p)
        if left_w and right_w:
            break

    return SubspaceReport(
        rank=S.rank,
        codimension=S.codimension,
        is_subalgebra=sub_w is None,
        is_left_ideal=left_w is None,
        is_right_ideal=right_w is None,
        subalgebra_witness=sub_w,
        left_witness=left_w,
        right_witness=right_w,
    )
