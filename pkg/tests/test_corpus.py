import pytest
from hypothesis import given, strategies as st

from lauprod import LinearMap, find_identity, is_associative, is_homomorphism
from lauprod.analysis import fingerprint
from lauprod.constructions import unitization
from lauprod.corpus import (
    FAMILIES,
    CatalogSpec,
    HomSpec,
    acceptance_triples,
    applicable_homs,
    catalog_algebra,
    catalog_characters,
    catalog_homomorphism,
    random_element,
    random_elements,
)
from lauprod.errors import CatalogError
from lauprod.formats import algebra_to_json

ALL_SPECS = [CatalogSpec(f, p) for f in FAMILIES for p in range(1, 5)]


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_catalog_algebras_are_associative(spec):
    A = catalog_algebra(spec)
    assert A.dim == spec.dim
    assert is_associative(A)


def test_catalog_bounds():
    with pytest.raises(CatalogError):
        CatalogSpec("matrix", 9)
    with pytest.raises(CatalogError):
        CatalogSpec("zero", 0)
    with pytest.raises(CatalogError):
        CatalogSpec.parse("banach:2")
    assert CatalogSpec("trunc_poly_k", 3) == CatalogSpec.parse("poly:3")


def test_catalog_examples():
    fp = fingerprint(catalog_algebra("pointwise:2"))
    assert fp.unital and fp.commutative
    f = fingerprint(catalog_algebra("matrix:2"))
    assert (f.dim, f.unital, f.commutative, f.center_dim, f.radical_dim) == (4, True, False, 1, 0)


def test_poly2_is_unitization_of_zero1():
    P = catalog_algebra("poly:2")  # basis 1, x
    U, _ = unitization(catalog_algebra("zero:1"))  # basis x, u
    perm = [1, 0]
    relabeled = [[[U.tensor[perm[i]][perm[j]][perm[k]] for k in range(2)] for j in range(2)] for i in range(2)]
    assert relabeled == [[list(v) for v in row] for row in P.tensor]


def test_catalog_is_deterministic():
    catalog_algebra.cache_clear()
    first = algebra_to_json(catalog_algebra("cyclic:4"))
    catalog_algebra.cache_clear()
    assert algebra_to_json(catalog_algebra("cyclic:4")) == first


def test_cyclic_characters():
    assert len(catalog_characters("cyclic:2")) == 2
    assert len(catalog_characters("cyclic:3")) == 1
    assert len(catalog_characters("cyclic:4")) == 4
    assert catalog_characters("matrix:2") == ()
    assert catalog_characters("zero:3") == ()


def test_zero_strategy():
    T = catalog_homomorphism(HomSpec("zero", "matrix:2", "poly:3"))
    assert T.is_zero() and is_homomorphism(T)


def test_unital_scalar_into_m2():
    T = catalog_homomorphism(HomSpec("scalar", "pointwise:2", "matrix:2", character=0))
    A = T.codomain
    b = T.domain.element([5, 7])
    assert T(b) == 5 * find_identity(A)


def test_inclusion_line_into_c2():
    T = catalog_homomorphism(HomSpec("inclusion", "pointwise:1", "pointwise:2"))
    assert T.column(0) == T.codomain.basis_element(0)
    assert is_homomorphism(T)


def test_inapplicable_strategies():
    with pytest.raises(CatalogError):
        catalog_homomorphism(HomSpec("scalar", "pointwise:2", "zero:2"))
    with pytest.raises(CatalogError):
        catalog_homomorphism(HomSpec("projection", "matrix:2", "pointwise:2"))
    with pytest.raises(CatalogError):
        catalog_homomorphism(HomSpec("identity", "poly:2", "poly:3"))


def test_homspec_string_round_trip():
    for a, b, h in acceptance_triples():
        assert HomSpec.parse(str(h), b, a) == h


def test_composition():
    h = HomSpec.parse("scalar:0|pointwise:1|inclusion", "poly:3", "pointwise:3")
    T = catalog_homomorphism(h)
    assert T.column(0) == T.codomain.basis_element(0)
    assert T.column(1).is_zero()
    with pytest.raises(CatalogError):
        HomSpec("composition", "poly:3", "pointwise:3",
                steps=(HomSpec("zero", "poly:3", "pointwise:1"),))


def test_acceptance_corpus_size():
    triples = acceptance_triples()
    assert len(set(triples)) == len(triples) >= 50
    for a, b, h in triples:
        assert a.dim <= 3 and b.dim <= 3
        assert is_homomorphism(catalog_homomorphism(h))


@pytest.mark.parametrize("spec", ["zero:3", "matrix:2", "poly:1"])
def test_random_element_determinism(spec):
    A = catalog_algebra(spec)
    assert random_element(A, 5, 4) == random_element(A, 5, 4)


def test_random_elements_differ_by_seed():
    A = catalog_algebra("pointwise:3")
    assert random_element(A, 0, 2) != random_element(A, 1, 2)


@given(st.integers(0, 10**9), st.integers(1, 6))
def test_random_element_ranges(seed, bound):
    A = catalog_algebra("cyclic:3")
    for c in random_element(A, seed, bound).coeffs:
        for part in (c.re, c.im):
            assert abs(part.numerator) <= bound
            # the reduced denominator divides some d in [1, bound]
            assert part.denominator <= bound


@given(st.integers(0, 10**9))
def test_bound_one_gives_unit_coefficients(seed):
    A = catalog_algebra("poly:3")
    for c in random_element(A, seed, 1).coeffs:
        assert c.re in (-1, 0, 1) and c.im in (-1, 0, 1)
    for c in random_element(A, seed, 1, imaginary=False).coeffs:
        assert c in (-1, 0, 1)


@given(st.integers(0, 10**6), st.integers(1, 5), st.integers(1, 5))
def test_stream_prefixes_agree(seed, short, extra):
    A = catalog_algebra("matrix:2")
    assert random_elements(A, seed, short) == random_elements(A, seed, short + extra)[:short]


def test_random_element_rejects_bad_bound():
    with pytest.raises(ValueError):
        random_element(catalog_algebra("poly:2"), 0, 0)


def test_applicable_homs_nonzero_unless_zero_strategy():
    for h in applicable_homs("pointwise:3", "matrix:2"):
        T = catalog_homomorphism(h)
        assert h.strategy == "zero" or not T.is_zero()
