"""Empirical harness for "Q is preserved by Lau products".

Given a fingerprint predicate Q, the lab checks on a fixed corpus:

* H1: Q(A) implies Q(unitization of A)
* H2: Q(A1) and Q(A2) imply Q(A1 (+) A2)
* H3: Q(ambient) implies Q(S) for a shipped list of finite-codimension subalgebras S
* conclusion: Q(A) and Q(B) imply Q(A x_chi B)

Nothing here is a proof; a failure is a concrete counterexample to one
hypothesis, and every case carries an id that ``lauprod lab --case`` replays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra_core import Algebra
from .analysis import Fingerprint, fingerprint
from .constructions import direct_sum, lau_product, unitization, unitization_embedding
from .corpus import LAB_CORPUS, CatalogSpec, catalog_algebra, catalog_characters, lab_pairs
from .errors import LauprodError
from .morphisms import Subspace

__all__ = ["PREDICATES", "SECTIONS", "LabFailure", "SectionResult", "LabReport",
           "CaseResult", "run_lab", "evaluate_case", "replay_command"]

PREDICATES = ("unital", "commutative", "semisimple")
SECTIONS = ("h1_unitization", "h2_direct_sum", "h3_finite_codim", "conclusion_lau")
_PREFIX = {"h1_unitization": "H1", "h2_direct_sum": "H2", "h3_finite_codim": "H3",
           "conclusion_lau": "C"}


class UnknownCaseError(LauprodError, ValueError):
    pass


@lru_cache(maxsize=4096)
def _fingerprint(A: Algebra) -> Fingerprint:
    return fingerprint(A)


def _q(predicate: str, A: Algebra) -> bool:
    fp = _fingerprint(A)
    if predicate == "unital":
        return fp.unital
    if predicate == "commutative":
        return fp.commutative
    if predicate == "semisimple":
        return fp.semisimple
    raise ValueError(f"unknown predicate {predicate!r}; expected one of {PREDICATES}")


def _field(predicate: str) -> str:
    return "radical_dim" if predicate == "semisimple" else predicate


def _matrix_sub(labels: list[str]) -> tuple[Algebra, Subspace]:
    M = catalog_algebra("matrix:2")
    idx = [M.basis.index(lab) for lab in labels]
    return M, Subspace(M, [M.basis_element(i) for i in idx])


def _shipped_subalgebra(name: str) -> tuple[Algebra, Subspace]:
    if name == "upper-triangular":
        return _matrix_sub(["e11", "e12", "e22"])
    if name == "diagonal":
        return _matrix_sub(["e11", "e22"])
    if name == "span-x":
        P = catalog_algebra("poly:2")
        return P, Subspace(P, [P.basis_element(1)])
    raise UnknownCaseError(f"no shipped subalgebra named {name!r}")


SHIPPED_SUBALGEBRAS = ("upper-triangular", "diagonal", "span-x")
_SHIPPED_DESCRIPTION = {
    "upper-triangular": "upper-triangular matrices in matrix:2",
    "diagonal": "diagonal matrices in matrix:2",
    "span-x": "span{x} in poly:2",
}


def _triple_id(a: CatalogSpec, b: CatalogSpec, k: int) -> str:
    return f"{a}+{b}+char:{k}"


def _parse_triple(text: str) -> tuple[CatalogSpec, CatalogSpec, int]:
    parts = text.split("+")
    if len(parts) != 3 or not parts[2].startswith("char:") or not parts[2][5:].isdigit():
        raise UnknownCaseError(f"bad triple {text!r}; expected A+B+char:N")
    return CatalogSpec.parse(parts[0]), CatalogSpec.parse(parts[1]), int(parts[2][5:])


def _lau_inputs(text: str):
    a, b, k = _parse_triple(text)
    chars = catalog_characters(b)
    if not 0 <= k < len(chars):
        raise UnknownCaseError(f"{b} has no catalog character {k}")
    return catalog_algebra(a), catalog_algebra(b), chars[k]


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    applicable: bool
    holds: bool
    detail: str

    @property
    def failed(self) -> bool:
        return self.applicable and not self.holds


def _verdict(predicate, case_id, hyps: list[tuple[str, Algebra]], target: tuple[str, Algebra]):
    """Hypotheses must all satisfy Q; the case then checks Q on the target."""
    f = _field(predicate)
    for label, H in hyps:
        if not _q(predicate, H):
            return CaseResult(case_id, False, True,
                              f"not applicable: {label} has {f} = {getattr(_fingerprint(H), f)}")
    label, X = target
    ok = _q(predicate, X)
    given = ", ".join(f"{lab} {f} = {getattr(_fingerprint(H), f)}" for lab, H in hyps)
    return CaseResult(case_id, True, ok,
                      f"{given}; {label} {f} = {getattr(_fingerprint(X), f)}")


def evaluate_case(predicate: str, case_id: str) -> CaseResult:
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; expected one of {PREDICATES}")
    section, sep, rest = case_id.partition(":")
    if not sep:
        raise UnknownCaseError(f"bad case id {case_id!r}")
    if section == "H1":
        A = catalog_algebra(CatalogSpec.parse(rest))
        return _verdict(predicate, case_id, [(rest, A)], ("unitization", unitization(A)[0]))
    if section == "H2":
        left, plus, right = rest.partition("+")
        if not plus:
            raise UnknownCaseError(f"bad H2 case {case_id!r}; expected H2:A+B")
        A1, A2 = catalog_algebra(CatalogSpec.parse(left)), catalog_algebra(CatalogSpec.parse(right))
        return _verdict(predicate, case_id, [(left, A1), (right, A2)],
                        ("direct sum", direct_sum(A1, A2)))
    if section == "H3":
        if rest.startswith("psi:"):
            A, B, chi = _lau_inputs(rest[4:])
            psi = unitization_embedding(A, B, chi)
            ambient, S = psi.codomain, Subspace(psi.codomain, psi.columns)
            what = f"image of A x_chi B in {ambient.name}"
        else:
            ambient, S = _shipped_subalgebra(rest)
            what = _SHIPPED_DESCRIPTION[rest]
        sub = S.as_algebra(f"sub({rest})")
        res = _verdict(predicate, case_id, [("ambient", ambient)], ("subalgebra", sub))
        return CaseResult(case_id, res.applicable, res.holds,
                          f"{what} (codimension {S.codimension}): {res.detail}")
    if section == "C":
        A, B, chi = _lau_inputs(rest)
        a, b, _ = _parse_triple(rest)
        return _verdict(predicate, case_id, [(str(a), A), (str(b), B)],
                        ("Lau product", lau_product(A, B, chi)))
    raise UnknownCaseError(f"unknown lab section {section!r}")


def replay_command(predicate: str, case_id: str) -> str:
    return f"lauprod lab --predicate {predicate} --case '{case_id}'"


@dataclass(frozen=True)
class LabFailure:
    case_id: str
    detail: str
    command: str


@dataclass
class SectionResult:
    cases: int = 0
    failures: list[LabFailure] = field(default_factory=list)


@dataclass
class LabReport:
    predicate: str
    h1_unitization: SectionResult
    h2_direct_sum: SectionResult
    h3_finite_codim: SectionResult
    conclusion_lau: SectionResult

    def sections(self) -> dict[str, SectionResult]:
        return {name: getattr(self, name) for name in SECTIONS}

    @property
    def failure_count(self) -> int:
        return sum(len(s.failures) for s in self.sections().values())

    def describe(self) -> str:
        lines = [f"predicate: {self.predicate}"]
        for name, sec in self.sections().items():
            lines.append(f"{name}: {sec.cases} cases, {len(sec.failures)} failures")
            for f in sec.failures:
                lines.append(f"  FAIL {f.case_id}: {f.detail}")
                lines.append(f"    replay: {f.command}")
        return "\n".join(lines)


def case_ids(corpus=LAB_CORPUS, pairs=None) -> dict[str, list[str]]:
    corpus = list(corpus)
    if pairs is None:
        pairs = lab_pairs(corpus)
    ids = {
        "h1_unitization": [f"H1:{a}" for a in corpus],
        "h2_direct_sum": [f"H2:{a}+{b}" for i, a in enumerate(corpus) for b in corpus[i:]],
        "h3_finite_codim": [f"H3:{s}" for s in SHIPPED_SUBALGEBRAS]
        + [f"H3:psi:{_triple_id(a, b, k)}" for a, b, k in pairs],
        "conclusion_lau": [f"C:{_triple_id(a, b, k)}" for a, b, k in pairs],
    }
    return ids


def run_lab(predicate: str, corpus=LAB_CORPUS, pairs=None) -> LabReport:
    """Run all four sections for ``predicate`` over ``corpus``.

    ``pairs`` lists ``(A, B, k)`` with k indexing the catalog characters of B;
    it defaults to every corpus pair whose B has characters.
    """
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; expected one of {PREDICATES}")
    results = {}
    for section, ids in case_ids(corpus, pairs).items():
        sec = SectionResult()
        for cid in ids:
            res = evaluate_case(predicate, cid)
            if res.applicable:
                sec.cases += 1
            if res.failed:
                sec.failures.append(LabFailure(cid, res.detail, replay_command(predicate, cid)))
        results[section] = sec
    return LabReport(predicate, **results)
