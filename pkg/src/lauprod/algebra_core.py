"""Structure-constant algebras over exact complex rationals.

Convention: ``tensor[i][j][k]`` is the coefficient of ``e_k`` in ``e_i * e_j``
(the first index is the left factor).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .errors import AlgebraMismatchError, NonAssociativeError
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Algebra",
    "Element",
    "AssociativityReport",
    "multiply",
    "is_associative",
    "find_identity",
    "complex_field",
]


class Algebra:
    """A finite-dimensional algebra given by its structure tensor.

    The checked constructor rejects non-associative tensors with
    :class:`NonAssociativeError`; ``Algebra.unchecked`` skips the test and is
    meant for exercising the checker itself.
    """

    __slots__ = ("_name", "_basis", "_tensor", "_products", "_hash")

    def __init__(self, name: str, basis: Sequence[str], tensor, *, check: bool = True):
        basis = tuple(str(b) for b in basis)
        n = len(basis)
        if n == 0:
            raise ValueError("an algebra needs a positive dimension")
        if len(set(basis)) != n:
            raise ValueError(f"basis labels are not distinct: {basis}")
        if len(tensor) != n or any(len(row) != n for row in tensor):
            raise ValueError(f"structure tensor must be {n}x{n}x{n}")
        rows = []
        for row in tensor:
            r = []
            for vec in row:
                if len(vec) != n:
                    raise ValueError(f"structure tensor must be {n}x{n}x{n}")
                r.append(tuple(as_scalar(c) for c in vec))
            rows.append(tuple(r))
        self._name = str(name)
        self._basis = basis
        self._tensor = tuple(rows)
        # sparse view used by every product: products[i][j] = ((k, c), ...)
        self._products = tuple(
            tuple(tuple((k, c) for k, c in enumerate(vec) if c) for vec in row)
            for row in self._tensor
        )
        self._hash = None
        if check:
            report = is_associative(self)
            if not report:
                raise NonAssociativeError(report)

    @classmethod
    def unchecked(cls, name: str, basis: Sequence[str], tensor) -> Algebra:
        return cls(name, basis, tensor, check=False)

    @classmethod
    def from_products(cls, name: str, basis: Sequence[str], rule, *, check: bool = True) -> Algebra:
        """Build from ``rule(i, j) -> {k: coeff}`` giving ``e_i * e_j``."""
        n = len(basis)
        tensor = []
        for i in range(n):
            row = []
            for j in range(n):
                vec = [ZERO] * n
                for k, c in rule(i, j).items():
                    vec[k] = vec[k] + as_scalar(c)
                row.append(vec)
            tensor.append(row)
        return cls(name, basis, tensor, check=check)

    @property
    def name(self) -> str:
        return self._name

    @property
    def basis(self) -> tuple[str, ...]:
        return self._basis

    @property
    def dim(self) -> int:
        return len(self._basis)

    @property
    def tensor(self) -> tuple:
        return self._tensor

    def product_of_basis(self, i: int, j: int) -> Element:
        return Element(self, self._tensor[i][j])

    def element(self, coeffs) -> Element:
        return Element(self, tuple(as_scalar(c) for c in coeffs))

    def zero(self) -> Element:
        return Element(self, (ZERO,) * self.dim)

    def basis_element(self, i: int) -> Element:
        return Element(self, tuple(ONE if k == i else ZERO for k in range(self.dim)))

    def basis_elements(self) -> list[Element]:
        return [self.basis_element(i) for i in range(self.dim)]

    def renamed(self, name: str) -> Algebra:
        return Algebra(name, self._basis, self._tensor, check=False)

    def same_tensor(self, other: Algebra) -> bool:
        return self._tensor == other._tensor

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self._name == other._name
            and self._basis == other._basis
            and self._tensor == other._tensor
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._name, self._basis, self._tensor))
        return self._hash

    def __repr__(self):
        return f"Algebra({self._name!r}, dim={self.dim})"


@dataclass(frozen=True)
class Element:
    algebra: Algebra
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.algebra.dim:
            raise ValueError(
                f"expected {self.algebra.dim} coefficients, got {len(self.coeffs)}"
            )

    def _check(self, other: Element) -> None:
        if not (self.algebra is other.algebra or self.algebra == other.algebra):
            raise AlgebraMismatchError()

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.algebra, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(self.algebra, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Element(self.algebra, tuple(-x for x in self.coeffs))

    def scale(self, c) -> Element:
        c = as_scalar(c)
        return Element(self.algebra, tuple(c * x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        return format_vector(self.coeffs, self.algebra.basis)


def format_vector(coeffs, basis) -> str:
    terms = []
    for c, label in zip(coeffs, basis):
        if not c:
            continue
        if c == 1:
            terms.append(label)
        elif c == -1:
            terms.append(f"-{label}")
        elif c.is_real():
            terms.append(f"{c}*{label}")
        else:
            terms.append(f"({c})*{label}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def multiply(x: Element, y: Element) -> Element:
    A = x.algebra
    if not (A is y.algebra or A == y.algebra):
        raise AlgebraMismatchError()
    out = [ZERO] * A.dim
    products = A._products
    ycoeffs = [(j, yj) for j, yj in enumerate(y.coeffs) if yj]
    for i, xi in enumerate(x.coeffs):
        if not xi:
            continue
        row = products[i]
        for j, yj in ycoeffs:
            prods = row[j]
            if not prods:
                continue
            xy = xi * yj
            for k, c in prods:
                out[k] = out[k] + xy * c
    return Element(A, tuple(out))


@dataclass(frozen=True)
class AssociativityReport:
    passed: bool
    witness: tuple[int, int, int] | None = None
    left: tuple | None = None
    right: tuple | None = None
    basis: tuple[str, ...] = ()

    def __bool__(self):
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return "associative on all basis triples"
        i, j, k = self.witness
        b = self.basis
        return (
            f"({b[i]}*{b[j]})*{b[k]} = {format_vector(self.left, b)} but "
            f"{b[i]}*({b[j]}*{b[k]}) = {format_vector(self.right, b)} at triple {self.witness}"
        )


def _times_basis_right(A: Algebra, vec: dict, k: int) -> dict:
    out: dict = {}
    for m, c in vec.items():
        for t, d in A._products[m][k]:
            out[t] = out.get(t, ZERO) + c * d
    return {t: c for t, c in out.items() if c}


def _times_basis_left(A: Algebra, i: int, vec: dict) -> dict:
    out: dict = {}
    for m, c in vec.items():
        for t, d in A._products[i][m]:
            out[t] = out.get(t, ZERO) + c * d
    return {t: c for t, c in out.items() if c}


def is_associative(A: Algebra) -> AssociativityReport:
    """Check (e_i e_j) e_k == e_i (e_j e_k) on every basis triple, in order."""
    n = A.dim
    prods = [[dict(p) for p in row] for row in A._products]
    for i in range(n):
        for j in range(n):
            ij = prods[i][j]
            for k in range(n):
                left = _times_basis_right(A, ij, k)
                right = _times_basis_left(A, i, prods[j][k])
                if left != right:
                    as_vec = lambda d: tuple(d.get(t, ZERO) for t in range(n))
                    return AssociativityReport(
                        False, (i, j, k), as_vec(left), as_vec(right), A.basis
                    )
    return AssociativityReport(True, basis=A.basis)


def find_identity(A: Algebra) -> Element | None:
    """The two-sided identity, found by solving u e_j = e_j = e_j u exactly."""
    n = A.dim
    t = A.tensor
    rows = []
    rhs = []
    for j in range(n):
        for k in range(n):
            delta = ONE if j == k else ZERO
            rows.append([t[a][j][k] for a in range(n)])
            rhs.append(delta)
            rows.append([t[j][a][k] for a in range(n)])
            rhs.append(delta)
    u = linalg.solve(rows, rhs)
    if u is None:
        return None
    return Element(A, tuple(u))


def complex_field() -> Algebra:
    """The canonical one-dimensional unital algebra C."""
    return Algebra("C", ("1",), [[[ONE]]], check=False)
