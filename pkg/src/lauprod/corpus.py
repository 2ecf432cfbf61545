"""Deterministic catalog of small algebras and verified homomorphisms.

Catalog algebras are addressed by strings ``family:parameter``, for example
``matrix:2``, ``zero:1``, ``poly:3``, ``cyclic:4`` and ``pointwise:2``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra_core import Algebra, Element, complex_field, find_identity
from .errors import CatalogError
from .morphisms import LinearMap, is_character, is_homomorphism
from .scalar import ONE, ZERO, I, Scalar

__all__ = [
    "FAMILIES",
    "MAX_PARAMETER",
    "CatalogSpec",
    "HomSpec",
    "catalog_algebra",
    "catalog_characters",
    "catalog_homomorphism",
    "applicable_homs",
    "random_element",
    "random_elements",
    "philox",
    "acceptance_specs",
    "acceptance_triples",
    "LAB_CORPUS",
    "lab_pairs",
]

FAMILIES = ("zero", "pointwise", "poly", "matrix", "cyclic")
_ALIASES = {
    "zero_n": "zero",
    "pointwise_n": "pointwise",
    "trunc_poly_k": "poly",
    "trunc_poly": "poly",
    "matrix_n": "matrix",
    "cyclic_group_k": "cyclic",
    "cyclic_group": "cyclic",
}
MAX_PARAMETER = 8


def philox(*key_parts) -> np.random.Generator:
    """A Philox (counter-based) generator keyed by a stable hash of ``key_parts``."""
    digest = hashlib.blake2b(repr(key_parts).encode(), digest_size=16).digest()
    return np.random.Generator(np.random.Philox(key=int.from_bytes(digest, "little")))


@dataclass(frozen=True, order=True)
class CatalogSpec:
    family: str
    parameter: int

    def __post_init__(self):
        family = _ALIASES.get(self.family, self.family)
        if family not in FAMILIES:
            raise CatalogError(f"unknown algebra family {self.family!r}; expected one of {FAMILIES}")
        if not 1 <= self.parameter <= MAX_PARAMETER:
            raise CatalogError(
                f"parameter {self.parameter} out of bounds for {family} (1..{MAX_PARAMETER})"
            )
        object.__setattr__(self, "family", family)

    @classmethod
    def parse(cls, text: str) -> CatalogSpec:
        family, sep, param = text.partition(":")
        if not sep or not param.isdigit():
            raise CatalogError(f"bad catalog spec {text!r}; expected family:parameter")
        return cls(family, int(param))

    def __str__(self):
        return f"{self.family}:{self.parameter}"

    @property
    def dim(self) -> int:
        return self.parameter**2 if self.family == "matrix" else self.parameter


@lru_cache(maxsize=None)
def catalog_algebra(spec: CatalogSpec | str) -> Algebra:
    if isinstance(spec, str):
        spec = CatalogSpec.parse(spec)
    f, p = spec.family, spec.parameter
    name = str(spec)
    if f == "zero":
        labels = ["x"] if p == 1 else [f"x{i + 1}" for i in range(p)]
        return Algebra.from_products(name, labels, lambda i, j: {})
    if f == "pointwise":
        labels = [f"e{i + 1}" for i in range(p)]
        return Algebra.from_products(name, labels, lambda i, j: {i: 1} if i == j else {})
    if f == "poly":
        labels = ["1", "x"] + [f"x^{a}" for a in range(2, p)]
        return Algebra.from_products(
            name, labels[:p], lambda a, b: {a + b: 1} if a + b < p else {}
        )
    if f == "cyclic":
        labels = ["1", "g"] + [f"g^{a}" for a in range(2, p)]
        return Algebra.from_products(name, labels[:p], lambda a, b: {(a + b) % p: 1})
    # matrix units e_rc, index r * p + c
    labels = [f"e{r + 1}{c + 1}" for r in range(p) for c in range(p)]

    def units(i, j):
        r1, c1 = divmod(i, p)
        r2, c2 = divmod(j, p)
        return {r1 * p + c2: 1} if c1 == r2 else {}

    return Algebra.from_products(name, labels, units)


def _as_spec(spec) -> CatalogSpec:
    return CatalogSpec.parse(spec) if isinstance(spec, str) else spec


@lru_cache(maxsize=None)
def catalog_characters(spec: CatalogSpec | str) -> tuple[LinearMap, ...]:
    """All characters of a catalog algebra that take exact values in Q(i)."""
    spec = _as_spec(spec)
    B = catalog_algebra(spec)
    C = complex_field()
    f, p = spec.family, spec.parameter
    rows: list[list[Scalar]] = []
    if f == "pointwise":
        rows = [[ONE if j == i else ZERO for j in range(p)] for i in range(p)]
    elif f == "poly":
        rows = [[ONE] + [ZERO] * (p - 1)]
    elif f == "matrix" and p == 1:
        rows = [[ONE]]
    elif f == "cyclic":
        for w in (ONE, -ONE, I, -I):
            powers = [ONE]
            for _ in range(1, p):
                powers.append(powers[-1] * w)
            if powers[-1] * w == ONE:
                rows.append(powers)
    chars = tuple(LinearMap(B, C, [r]) for r in rows)
    for chi in chars:
        if not is_character(chi):
            raise AssertionError(f"catalog character on {spec} failed verification")
    return chars


@dataclass(frozen=True)
class HomSpec:
    """How to build a homomorphism ``source -> target`` (that is, T: B -> A).

    ``strategy`` is one of zero, identity, inclusion, projection, scalar
    (``character`` indexes :func:`catalog_characters` of the source) or
    composition (``steps`` chain through intermediate catalog algebras).
    """

    strategy: str
    source: CatalogSpec
    target: CatalogSpec
    character: int = 0
    steps: tuple[HomSpec, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "source", _as_spec(self.source))
        object.__setattr__(self, "target", _as_spec(self.target))
        if self.strategy == "composition":
            if not self.steps:
                raise CatalogError("composition needs at least one step")
            chain = [self.source] + [s.target for s in self.steps]
            if any(s.source != a for s, a in zip(self.steps, chain)) or chain[-1] != self.target:
                raise CatalogError("composition steps do not chain from source to target")

    def __str__(self):
        if self.strategy == "composition":
            parts = [_step_token(self.steps[0])]
            for s in self.steps[1:]:
                parts += [str(s.source), _step_token(s)]
            return "|".join(parts)
        return _step_token(self)

    @classmethod
    def parse(cls, text: str, source, target) -> HomSpec:
        """Inverse of ``str``: ``zero``, ``scalar:1``, ``projection|pointwise:1|inclusion`` ..."""
        source, target = _as_spec(source), _as_spec(target)
        tokens = text.split("|")
        if len(tokens) % 2 == 0:
            raise CatalogError(f"bad homomorphism spec {text!r}")
        if len(tokens) == 1:
            return _simple(tokens[0], source, target)
        mids = [CatalogSpec.parse(t) for t in tokens[1::2]]
        ends = [source] + mids + [target]
        steps = tuple(_simple(tok, a, b) for tok, a, b in zip(tokens[::2], ends, ends[1:]))
        return cls("composition", source, target, steps=steps)


_SIMPLE = ("zero", "identity", "inclusion", "projection", "scalar")


def _step_token(h: HomSpec) -> str:
    return f"scalar:{h.character}" if h.strategy == "scalar" else h.strategy


def _simple(token: str, source: CatalogSpec, target: CatalogSpec) -> HomSpec:
    name, _, arg = token.partition(":")
    if name not in _SIMPLE:
        raise CatalogError(f"unknown homomorphism strategy {token!r}")
    if name == "scalar":
        if not arg.isdigit():
            raise CatalogError(f"scalar strategy needs a character index, got {token!r}")
        return HomSpec("scalar", source, target, character=int(arg))
    if arg:
        raise CatalogError(f"strategy {name!r} takes no argument")
    return HomSpec(name, source, target)


def _images_inclusion(B: CatalogSpec, A: CatalogSpec):
    """Index images e_j -> (k, coeff) for the inclusions the catalog supports."""
    fb, m, fa, n = B.family, B.parameter, A.family, A.parameter
    if fb == fa and fb in ("pointwise", "zero") and m <= n:
        return [{j: 1} for j in range(m)]
    if fb == fa == "matrix" and m <= n:
        return [{(j // m) * n + j % m: 1} for j in range(m * m)]
    if fb == fa == "cyclic" and n % m == 0:
        return [{(j * (n // m)) % n: 1} for j in range(m)]
    if fb == "pointwise" and fa == "matrix" and m <= n:
        return [{j * n + j: 1} for j in range(m)]
    if fb == "zero" and fa == "poly" and 2 * m <= n:
        return [{n - 1 - j: 1} for j in range(m)]
    return None


def _images_projection(B: CatalogSpec, A: CatalogSpec):
    fb, m, fa, n = B.family, B.parameter, A.family, A.parameter
    if fb != fa:
        return None
    if fb in ("pointwise", "zero", "poly") and n <= m:
        return [{j: 1} if j < n else {} for j in range(m)]
    if fb == "cyclic" and m % n == 0:
        return [{j % n: 1} for j in range(m)]
    return None


def _matrix_from(images, dim_b: int, dim_a: int) -> list:
    rows = [[ZERO] * dim_b for _ in range(dim_a)]
    for j, img in enumerate(images):
        for k, c in img.items():
            rows[k][j] = Scalar(c)
    return rows


def _build(spec: HomSpec) -> LinearMap:
    B = catalog_algebra(spec.source)
    A = catalog_algebra(spec.target)
    s = spec.strategy
    if s == "zero":
        return LinearMap.zero(B, A)
    if s == "identity":
        if spec.source != spec.target:
            raise CatalogError(f"identity needs equal endpoints, got {spec.source} -> {spec.target}")
        return LinearMap.identity(A)
    if s in ("inclusion", "projection"):
        finder = _images_inclusion if s == "inclusion" else _images_projection
        images = finder(spec.source, spec.target)
        if images is None:
            raise CatalogError(f"no {s} {spec.source} -> {spec.target} in the catalog")
        return LinearMap(B, A, _matrix_from(images, B.dim, A.dim))
    if s == "scalar":
        chars = catalog_characters(spec.source)
        if not 0 <= spec.character < len(chars):
            raise CatalogError(f"{spec.source} has {len(chars)} catalog characters, no index {spec.character}")
        e = find_identity(A)
        if e is None:
            raise CatalogError(f"scalar strategy needs a unital target; {spec.target} has no identity")
        chi = chars[spec.character]
        return LinearMap.from_images(B, A, [e.scale(v) for v in chi.matrix[0]])
    if s == "composition":
        T = _build(spec.steps[0])
        for step in spec.steps[1:]:
            T = _build(step).compose(T)
        return T
    raise CatalogError(f"unknown homomorphism strategy {s!r}")


@lru_cache(maxsize=None)
def catalog_homomorphism(spec: HomSpec) -> LinearMap:
    T = _build(spec)
    report = is_homomorphism(T)
    if not report:
        raise AssertionError(f"generator bug: {spec} ({spec.source} -> {spec.target}) {report.describe()}")
    return T


def applicable_homs(source, target) -> list[HomSpec]:
    """Every catalog homomorphism ``source -> target`` the generators can build."""
    source, target = _as_spec(source), _as_spec(target)
    candidates = [HomSpec("zero", source, target)]
    if source == target:
        candidates.append(HomSpec("identity", source, target))
    candidates.append(HomSpec("inclusion", source, target))
    candidates.append(HomSpec("projection", source, target))
    n_chars = len(catalog_characters(source))
    candidates += [HomSpec("scalar", source, target, character=k) for k in range(n_chars)]
    line = CatalogSpec("pointwise", 1)
    if line not in (source, target):
        for k in range(n_chars):
            to_line = HomSpec("scalar", source, line, character=k)
            candidates.append(
                HomSpec("composition", source, target,
                        steps=(to_line, HomSpec("inclusion", line, target)))
            )
    out = []
    for h in candidates:
        try:
            T = catalog_homomorphism(h)
        except CatalogError:
            continue
        if h.strategy != "zero" and T.is_zero():
            continue
        out.append(h)
    return out


def random_elements(A: Algebra, seed: int, count: int, bound: int = 3, *,
                    imaginary: bool = True) -> list[Element]:
    """``count`` consecutive elements of the stream keyed by ``(A.name, seed)``.

    Element k only depends on draws made for elements 0..k, so any prefix of
    a longer request is identical to a shorter one.  Each rational part is
    a/d with |a| <= bound and 1 <= d <= bound.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = philox("random_element", A.name, seed)
    n = A.dim
    span = 2 * bound + 1
    # one draw per rational part encodes numerator and denominator together;
    # the array is filled in order, so prefixes agree across counts
    draws = rng.integers(0, span * bound, size=(count, 2 * n)).tolist()
    out = []
    for row in draws:
        num = [v // bound - bound for v in row]
        den = [v % bound + 1 for v in row]
        coeffs = []
        for k in range(n):
            a, d = num[k], den[k]
            if imaginary:
                b, e = num[n + k], den[n + k]
                coeffs.append(Scalar._raw(a * e, b * d, d * e))
            else:
                coeffs.append(Scalar._raw(a, 0, d))
        out.append(Element(A, tuple(coeffs)))
    return out


def random_element(A: Algebra, seed: int, bound: int = 3, *, imaginary: bool = True) -> Element:
    """Seeded element; the same ``(A.name, seed, bound)`` always gives the same element."""
    return random_elements(A, seed, 1, bound, imaginary=imaginary)[0]


def acceptance_specs(max_dim: int = 3) -> list[CatalogSpec]:
    """Catalog algebras of dimension <= max_dim, one per distinct structure tensor."""
    seen = []
    out = []
    for family in ("zero", "pointwise", "poly", "cyclic", "matrix"):
        for p in range(1, MAX_PARAMETER + 1):
            spec = CatalogSpec(family, p)
            if spec.dim > max_dim:
                break
            t = catalog_algebra(spec).tensor
            if t in seen:
                continue
            seen.append(t)
            out.append(spec)
    return out


def acceptance_triples(max_dim: int = 3) -> list[tuple[CatalogSpec, CatalogSpec, HomSpec]]:
    """All (A, B, T) with A, B from :func:`acceptance_specs` and T: B -> A verified."""
    specs = acceptance_specs(max_dim)
    return [(a, b, h) for a in specs for b in specs for h in applicable_homs(b, a)]


LAB_CORPUS = tuple(
    CatalogSpec.parse(s)
    for s in (
        "zero:1", "zero:2", "pointwise:1", "pointwise:2", "pointwise:3",
        "poly:2", "poly:3", "cyclic:2", "cyclic:4", "matrix:2",
    )
)


def lab_pairs(corpus=LAB_CORPUS) -> list[tuple[CatalogSpec, CatalogSpec, int]]:
    """(A, B, character index on B) for every corpus pair where B has characters."""
    return [
        (a, b, k)
        for a in corpus
        for b in corpus
        for k in range(len(catalog_characters(b)))
    ]
