"""Direct sums, unitization, Lau products and the maps relating them.

Every product construction orders its basis A-block first, then B-block;
unitization appends the adjoined unit last.
"""

from __future__ import annotations

from . import linalg
from .algebra_core import Algebra, find_identity
from .errors import NonUnitalError, NotACharacterError, NotAHomomorphismError
from .morphisms import LinearMap, is_character, is_homomorphism
from .scalar import ONE, ZERO

__all__ = [
    "direct_sum",
    "unitization",
    "generalized_lau_product",
    "lau_product",
    "character_to_hom",
    "trivializing_isomorphism",
    "unitization_embedding",
]


def _joined_labels(A: Algebra, B: Algebra) -> list[str]:
    if set(A.basis) & set(B.basis):
        return [f"L.{b}" for b in A.basis] + [f"R.{b}" for b in B.basis]
    return list(A.basis) + list(B.basis)


def _block_tensor(A: Algebra, B: Algebra, cross) -> list:
    """Tensor on A (+) B with block-diagonal products plus ``cross(i, j)`` terms.

    ``cross(i, j)`` returns the A-part contribution (a length-n vector or
    None) for the mixed basis pair (i, j), with indices in the joined basis.
    """
    n, m = A.dim, B.dim
    N = n + m
    tensor = []
    for i in range(N):
        row = []
        for j in range(N):
            vec = [ZERO] * N
            if i < n and j < n:
                vec[:n] = A.tensor[i][j]
            elif i >= n and j >= n:
                vec[n:] = B.tensor[i - n][j - n]
            else:
                extra = cross(i, j)
                if extra is not None:
                    vec[:n] = extra
            row.append(vec)
        tensor.append(row)
    return tensor


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    tensor = _block_tensor(A, B, lambda i, j: None)
    return Algebra(f"dsum({A.name},{B.name})", _joined_labels(A, B), tensor, check=False)


def unitization(A: Algebra) -> tuple[Algebra, LinearMap]:
    """Adjoin a unit ``u`` (last basis vector); also return the inclusion A -> A#."""
    n = A.dim
    label = "u"
    while label in A.basis:
        label += "'"
    tensor = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            vec = [ZERO] * (n + 1)
            if i < n and j < n:
                vec[:n] = A.tensor[i][j]
            elif i == n and j == n:
                vec[n] = ONE
            else:
                vec[i if j == n else j] = ONE
            row.append(vec)
        tensor.append(row)
    Au = Algebra(f"unitize({A.name})", list(A.basis) + [label], tensor, check=False)
    incl = LinearMap(A, Au, linalg.identity(n) + [[ZERO] * n])
    return Au, incl


def _require_hom(T: LinearMap, A: Algebra, B: Algebra) -> None:
    if T.domain != B or T.codomain != A:
        raise ValueError(
            f"expected a map {B.name} -> {A.name}, got {T.domain.name} -> {T.codomain.name}"
        )
    report = is_homomorphism(T)
    if not report:
        raise NotAHomomorphismError(report)


def _require_character(chi: LinearMap, B: Algebra) -> None:
    if chi.domain != B:
        raise ValueError(f"character must be defined on {B.name}, got {chi.domain.name}")
    report = is_character(chi)
    if not report:
        raise NotACharacterError(report)


def generalized_lau_product(A: Algebra, B: Algebra, T: LinearMap) -> Algebra:
    """A x_T B: (a1, b1)(a2, b2) = (a1 a2 + T(b1) a2 + a1 T(b2), b1 b2)."""
    _require_hom(T, A, B)
    n = A.dim
    images = T.columns
    basis = A.basis_elements()

    def cross(i, j):
        if i < n:
            return (basis[i] * images[j - n]).coeffs
        return (images[i - n] * basis[j]).coeffs

    tensor = _block_tensor(A, B, cross)
    return Algebra(f"genlau({A.name},{B.name})", _joined_labels(A, B), tensor, check=False)


def lau_product(A: Algebra, B: Algebra, chi: LinearMap) -> Algebra:
    """A x_chi B: (a1, b1)(a2, b2) = (a1 a2 + chi(b1) a2 + chi(b2) a1, b1 b2).

    Needs no identity in A.
    """
    _require_character(chi, B)
    n = A.dim
    values = chi.matrix[0]

    def cross(i, j):
        vec = [ZERO] * n
        if i < n:
            vec[i] = values[j - n]
        else:
            vec[j] = values[i - n]
        return vec

    tensor = _block_tensor(A, B, cross)
    return Algebra(f"lau({A.name},{B.name})", _joined_labels(A, B), tensor, check=False)


def character_to_hom(A: Algebra, chi: LinearMap) -> LinearMap:
    """T(b) = chi(b) e_A, for A with identity e_A."""
    _require_character(chi, chi.domain)
    e = find_identity(A)
    if e is None:
        raise NonUnitalError(
            f"requires unital A: {A.name} has no identity element, so chi(b)*e_A is undefined"
        )
    return LinearMap.from_images(chi.domain, A, [e.scale(v) for v in chi.matrix[0]])


def trivializing_isomorphism(A: Algebra, B: Algebra, T: LinearMap) -> LinearMap:
    """(a, b) -> (a + T(b), b) from A x_T B onto A (+) B."""
    domain = generalized_lau_product(A, B, T)
    codomain = direct_sum(A, B)
    n, m = A.dim, B.dim
    top = [list(r) + list(t) for r, t in zip(linalg.identity(n), T.matrix)]
    bottom = [[ZERO] * n + r for r in linalg.identity(m)]
    return LinearMap(domain, codomain, top + bottom)


def unitization_embedding(A: Algebra, B: Algebra, chi: LinearMap) -> LinearMap:
    """(a, b) -> ((a, chi(b)), b) from A x_chi B into A# (+) B."""
    domain = lau_product(A, B, chi)
    Au, _ = unitization(A)
    codomain = direct_sum(Au, B)
    n, m = A.dim, B.dim
    rows = [[ZERO] * (n + m) for _ in range(n + 1 + m)]
    for i in range(n):
        rows[i][i] = ONE
    for j in range(m):
        rows[n][n + j] = chi.matrix[0][j]
        rows[n + 1 + j][n + j] = ONE
    return LinearMap(domain, codomain, rows)
