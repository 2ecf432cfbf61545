"""Command-line interface.

Algebra arguments are either a path to an algebra file or a catalog spec such
as ``matrix:2``.  Exit status: 0 when every check passes, 1 when a
mathematical check fails (a witness is printed), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .algebra_core import Algebra, complex_field, is_associative
from .analysis import fingerprint, norm_report
from .checks import collapse, embed
from .constructions import direct_sum, generalized_lau_product, lau_product, unitization
from .corpus import CatalogSpec, HomSpec, catalog_algebra, catalog_characters, catalog_homomorphism
from .errors import LauprodError, NotACharacterError, NotAHomomorphismError
from .formats import algebra_to_json, parse_algebra_file, parse_map_file
from .lab import PREDICATES, evaluate_case, run_lab
from .morphisms import LinearMap, verify_isomorphism

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class InputError(LauprodError):
    pass


def _resolve(arg: str, *, unchecked: bool = False) -> tuple[Algebra, CatalogSpec | None]:
    path = Path(arg)
    if path.is_file():
        return parse_algebra_file(path, unchecked=unchecked), None
    try:
        spec = CatalogSpec.parse(arg)
    except LauprodError as exc:
        raise InputError(f"{arg!r} is neither a file nor a catalog spec ({exc})") from exc
    return catalog_algebra(spec), spec


def _resolve_hom(arg: str, A, a_spec, B, b_spec) -> LinearMap:
    """T: B -> A from a map file or a catalog strategy string."""
    if Path(arg).is_file():
        return parse_map_file(arg, B, A)
    if arg == "zero":
        return LinearMap.zero(B, A)
    if a_spec is None or b_spec is None:
        raise InputError("strategy strings other than 'zero' need catalog algebras; pass a map file")
    return catalog_homomorphism(HomSpec.parse(arg, b_spec, a_spec))


def _resolve_char(arg: str, B, b_spec) -> LinearMap:
    if Path(arg).is_file():
        return parse_map_file(arg, B, complex_field())
    index = arg[5:] if arg.startswith("char:") else arg
    if not index.isdigit():
        raise InputError(f"bad character {arg!r}; expected a map file or char:N")
    if b_spec is None:
        raise InputError("catalog characters need a catalog algebra; pass a map file")
    chars = catalog_characters(b_spec)
    k = int(index)
    if k >= len(chars):
        raise InputError(f"{b_spec} has {len(chars)} catalog characters, no index {k}")
    return chars[k]


def _out(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_describe(args) -> int:
    A, _ = _resolve(args.algebra, unchecked=True)
    print(f"name: {A.name}")
    print(f"dim: {A.dim}")
    print(f"basis: {' '.join(A.basis)}")
    assoc = is_associative(A)
    print(f"associative: {assoc.passed}")
    if not assoc:
        print(f"  witness: {assoc.describe()}")
        return EXIT_CHECK_FAILED
    for key, value in fingerprint(A).as_dict().items():
        print(f"{key}: {value}")
    return EXIT_OK


def cmd_construct(args) -> int:
    A, a_spec = _resolve(args.A)
    if args.kind == "unitize":
        if args.B:
            raise InputError("unitize takes a single algebra")
        result = unitization(A)[0]
    else:
        if not args.B:
            raise InputError(f"{args.kind} needs two algebras")
        B, b_spec = _resolve(args.B)
        if args.kind == "dsum":
            result = direct_sum(A, B)
        elif args.kind == "lau":
            if not args.char:
                raise InputError("lau needs --char")
            result = lau_product(A, B, _resolve_char(args.char, B, b_spec))
        else:
            if not args.hom:
                raise InputError("gen-lau needs --hom")
            result = generalized_lau_product(A, B, _resolve_hom(args.hom, A, a_spec, B, b_spec))
    _out(algebra_to_json(result), args.output)
    return EXIT_OK


def cmd_collapse(args) -> int:
    A, a_spec = _resolve(args.A)
    B, b_spec = _resolve(args.B)
    T = _resolve_hom(args.hom, A, a_spec, B, b_spec)
    report = collapse(A, B, T, samples=args.samples, seed=args.seed)
    iso = report.iso
    print(f"A x_T B = {report.phi.domain.name} (dim {report.phi.domain.dim})")
    print(f"phi(a, b) = (a + T(b), b): determinant {iso.determinant}, rank {iso.rank}")
    print(f"basis pairs: {iso.homomorphism.describe()}")
    print(f"random pairs (seed {args.seed}): {report.sampled.describe()}")
    print(f"continuity: {iso.continuity}")
    print("verdict: isomorphism" if report else "verdict: FAILED")
    return EXIT_OK if report else EXIT_CHECK_FAILED


def cmd_verify_iso(args) -> int:
    A, _ = _resolve(args.A)
    B, _ = _resolve(args.B)
    f = parse_map_file(args.map, A, B)
    report = verify_isomorphism(f)
    print(report.describe())
    return EXIT_OK if report else EXIT_CHECK_FAILED


def cmd_embed(args) -> int:
    A, _ = _resolve(args.A)
    B, b_spec = _resolve(args.B)
    chi = _resolve_char(args.char, B, b_spec)
    report = embed(A, B, chi)
    print(f"psi: {report.psi.domain.name} -> {report.psi.codomain.name}")
    print(f"homomorphism: {report.hom.describe()}")
    print(f"injective: {report.injective}")
    print(report.image.describe())
    print("verdict: codimension-one subalgebra" if report else "verdict: FAILED")
    return EXIT_OK if report else EXIT_CHECK_FAILED


def cmd_norm_check(args) -> int:
    A, _ = _resolve(args.algebra)
    r = norm_report(A, samples=args.samples, seed=args.seed)
    print(f"mult_constant: {r.mult_constant!r}")
    print(f"renorm_factor: {r.renorm_factor!r}")
    print(f"samples_checked: {r.samples_checked}")
    print(f"max_violation: {r.max_violation!r}")
    print(f"basis_pairs_ok: {r.basis_pairs_ok}")
    print("verdict: submultiplicative" if r else "verdict: FAILED")
    return EXIT_OK if r else EXIT_CHECK_FAILED


def cmd_lab(args) -> int:
    if args.case:
        res = evaluate_case(args.predicate, args.case)
        status = "n/a" if not res.applicable else ("holds" if res.holds else "FAIL")
        print(f"{status} {res.case_id}: {res.detail}")
        return EXIT_CHECK_FAILED if res.failed else EXIT_OK
    report = run_lab(args.predicate)
    print(report.describe())
    return EXIT_CHECK_FAILED if report.failure_count else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lauprod", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("describe", help="associativity and fingerprint of an algebra")
    d.add_argument("algebra")
    d.set_defaults(func=cmd_describe)

    c = sub.add_parser("construct", help="build an algebra and write it as an algebra file")
    c.add_argument("kind", choices=["dsum", "unitize", "lau", "gen-lau"])
    c.add_argument("A")
    c.add_argument("B", nargs="?")
    c.add_argument("--char", help="character on B: map file or char:N")
    c.add_argument("--hom", help="homomorphism B -> A: map file or strategy string")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    k = sub.add_parser("collapse", help="check A x_T B is isomorphic to A (+) B")
    k.add_argument("A")
    k.add_argument("B")
    k.add_argument("--hom", required=True)
    k.add_argument("--samples", type=int, default=100)
    k.add_argument("--seed", type=int, default=0)
    k.set_defaults(func=cmd_collapse)

    v = sub.add_parser("verify-iso", help="check a supplied map A -> B is an isomorphism")
    v.add_argument("A")
    v.add_argument("B")
    v.add_argument("--map", required=True)
    v.set_defaults(func=cmd_verify_iso)

    e = sub.add_parser("embed", help="embed A x_chi B in unitization(A) (+) B")
    e.add_argument("A")
    e.add_argument("B")
    e.add_argument("--char", required=True)
    e.set_defaults(func=cmd_embed)

    n = sub.add_parser("norm-check", help="sampled submultiplicativity of the rescaled l1 norm")
    n.add_argument("algebra")
    n.add_argument("--samples", type=int, default=1000)
    n.add_argument("--seed", type=int, default=0)
    n.set_defaults(func=cmd_norm_check)

    lab = sub.add_parser("lab", help="property lab for Lau-product preservation")
    lab.add_argument("--predicate", required=True, choices=PREDICATES)
    lab.add_argument("--case", help="replay a single case id")
    lab.set_defaults(func=cmd_lab)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotAHomomorphismError, NotACharacterError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (LauprodError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
