"""End-to-end verifications behind the ``collapse`` and ``embed`` commands."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra_core import Algebra
from .constructions import trivializing_isomorphism, unitization_embedding
from .corpus import random_elements
from .morphisms import (
    HomReport,
    IsoReport,
    LinearMap,
    SubspaceReport,
    Subspace,
    check_multiplicative,
    is_homomorphism,
    subspace_report,
    verify_isomorphism,
)


@dataclass(frozen=True)
class CollapseReport:
    phi: LinearMap
    iso: IsoReport
    sampled: HomReport

    @property
    def passed(self) -> bool:
        return self.iso.passed and self.sampled.passed and self.iso.determinant == 1

    def __bool__(self):
        return self.passed


def collapse(A: Algebra, B: Algebra, T: LinearMap, samples: int = 100, seed: int = 0,
             bound: int = 3) -> CollapseReport:
    """Build A x_T B and (a, b) -> (a + T(b), b); check it is an isomorphism onto A (+) B.

    Multiplicativity is checked on every basis pair and on ``samples`` seeded
    random element pairs.
    """
    phi = trivializing_isomorphism(A, B, T)
    iso = verify_isomorphism(phi)
    D = phi.domain
    xs = random_elements(D, seed, 2 * samples, bound)
    pairs = zip(xs[::2], xs[1::2])
    return CollapseReport(phi, iso, check_multiplicative(phi, pairs))


@dataclass(frozen=True)
class EmbedReport:
    psi: LinearMap
    hom: HomReport
    injective: bool
    image: SubspaceReport

    @property
    def passed(self) -> bool:
        return (
            self.hom.passed
            and self.injective
            and self.image.codimension == 1
            and self.image.is_subalgebra
        )

    def __bool__(self):
        return self.passed


def embed(A: Algebra, B: Algebra, chi: LinearMap) -> EmbedReport:
    psi = unitization_embedding(A, B, chi)
    image = Subspace(psi.codomain, psi.columns)
    return EmbedReport(
        psi,
        is_homomorphism(psi),
        psi.rank() == psi.domain.dim,
        subspace_report(image),
    )
