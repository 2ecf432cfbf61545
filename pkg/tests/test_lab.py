import pytest

from lauprod.corpus import LAB_CORPUS, CatalogSpec
from lauprod.lab import PREDICATES, SECTIONS, case_ids, evaluate_case, run_lab

SMALL = [CatalogSpec.parse(s) for s in ("zero:1", "pointwise:1", "poly:2", "matrix:2")]


@pytest.fixture(scope="module")
def reports():
    return {p: run_lab(p) for p in PREDICATES}


def test_commutative_has_no_failures(reports):
    r = reports["commutative"]
    assert r.failure_count == 0
    assert all(sec.cases > 0 for sec in r.sections().values())


def test_semisimple_fails_only_on_upper_triangular(reports):
    r = reports["semisimple"]
    assert [f.case_id for f in r.h3_finite_codim.failures] == ["H3:upper-triangular"]
    assert r.failure_count == 1
    f = r.h3_finite_codim.failures[0]
    assert "ambient radical_dim = 0" in f.detail and "subalgebra radical_dim = 1" in f.detail


def test_unital_fails_only_on_span_x(reports):
    r = reports["unital"]
    assert [f.case_id for f in r.h3_finite_codim.failures] == ["H3:span-x"]
    assert r.failure_count == 1


@pytest.mark.parametrize("predicate", PREDICATES)
def test_failures_replay(reports, predicate):
    for sec in reports[predicate].sections().values():
        for f in sec.failures:
            assert f.command == f"lauprod lab --predicate {predicate} --case '{f.case_id}'"
            again = evaluate_case(predicate, f.case_id)
            assert again.failed and again.detail == f.detail


def test_diagonal_subalgebra():
    for p in ("unital", "semisimple"):
        res = evaluate_case(p, "H3:diagonal")
        assert res.applicable and res.holds
    # matrix:2 itself is not commutative, so there is nothing to test
    assert not evaluate_case("commutative", "H3:diagonal").applicable


def test_inapplicable_case_is_not_counted():
    # zero:1 is not unital, so H1 has nothing to test
    res = evaluate_case("unital", "H1:zero:1")
    assert not res.applicable and not res.failed


def test_psi_images_and_conclusion():
    res = evaluate_case("commutative", "H3:psi:poly:2+pointwise:1+char:0")
    assert res.applicable and res.holds and "codimension 1" in res.detail
    res = evaluate_case("semisimple", "C:pointwise:2+cyclic:2+char:1")
    assert res.applicable and res.holds


def test_section_counts_match_case_ids():
    ids = case_ids(SMALL)
    r = run_lab("commutative", SMALL)
    assert list(r.sections()) == list(SECTIONS)
    assert len(ids["h2_direct_sum"]) == len(SMALL) * (len(SMALL) + 1) // 2
    # commutative: zero:1, pointwise:1, poly:2 (matrix:2 is not)
    assert r.h1_unitization.cases == 3
    assert r.h2_direct_sum.cases == 6


def test_explicit_pairs():
    pairs = [(CatalogSpec.parse("zero:1"), CatalogSpec.parse("pointwise:1"), 0)]
    r = run_lab("unital", SMALL, pairs)
    # zero:1 is not unital so the conclusion never applies
    assert r.conclusion_lau.cases == 0


def test_default_corpus_is_shipped():
    assert len(LAB_CORPUS) >= 8


@pytest.mark.parametrize(
    "predicate, case_id",
    [
        ("simple", "H1:zero:1"),
        ("unital", "H9:zero:1"),
        ("unital", "nonsense"),
        ("unital", "H2:zero:1"),
        ("unital", "H3:lower-triangular"),
        ("unital", "C:zero:1+matrix:2+char:0"),
        ("unital", "C:zero:1+pointwise:1"),
    ],
)
def test_bad_cases(predicate, case_id):
    with pytest.raises(ValueError):
        evaluate_case(predicate, case_id)


def test_unknown_predicate():
    with pytest.raises(ValueError, match="unknown predicate"):
        run_lab("simple")
