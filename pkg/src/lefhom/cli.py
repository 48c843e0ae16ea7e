"""Command-line front end.

Exit codes: 0 success, 1 computation mismatch (unequal braids, failed report),
2 usage or input error. Errors are printed as ``error[<code>]: <message>``.

Scenario files are line oriented, ``#`` starts a comment::

    fiber A 4 2
    cycle vector 0 1 0 0
    cycle word -3 2 3 base 2
    monodromy word 1 2 3

``cycle word W base j`` is the class rho(W)(e_j) with W in B_{m+1}.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .abelian import IntMatrix, cokernel_invariants, smith_normal_form
from .braid import (
    BraidWord,
    Factorization,
    artin_action,
    braids_equal,
    hurwitz_move,
    hurwitz_move_inverse,
    hurwitz_orbit,
    partial_twist,
    product,
)
from .exceptions import InvalidInputError, LefhomError, ScenarioError
from .fibration import (
    LefschetzModel,
    OpenBookModel,
    boundary_homology,
    filling_homology,
    is_homotopy_sphere,
)
from .milnor import HomologyClass, MilnorLattice, rho_matrix
from .paperlab import verify_paper


# --- scenarios ----------------------------------------------------------------


@dataclass(frozen=True)
class VectorCycle:
    coords: tuple[int, ...]


@dataclass(frozen=True)
class WordCycle:
    word: tuple[int, ...]
    base: int


@dataclass(frozen=True)
class Scenario:
    m: int
    n: int
    cycles: tuple[VectorCycle | WordCycle, ...] = ()
    monodromy: tuple[int, ...] | None = None
    family: str = "A"

    @property
    def lattice(self) -> MilnorLattice:
        return MilnorLattice(self.m, self.n)

    def cycle_classes(self) -> tuple[HomologyClass, ...]:
        lat = self.lattice
        out = []
        for c in self.cycles:
            if isinstance(c, VectorCycle):
                out.append(lat.vector(c.coords))
            else:
                word = BraidWord(self.m + 1, c.word)
                out.append(lat.basis(c.base).transform(rho_matrix(word, lat)))
        return tuple(out)

    def lefschetz_model(self) -> LefschetzModel:
        if self.monodromy is not None:
            raise InvalidInputError("fill needs vanishing cycles, not a monodromy word")
        return LefschetzModel(self.lattice, self.cycle_classes())

    def open_book(self) -> OpenBookModel:
        lat = self.lattice
        if self.monodromy is not None:
            return OpenBookModel(lat, rho_matrix(BraidWord(self.m + 1, self.monodromy), lat))
        return OpenBookModel.from_cycles(self.cycle_classes(), lat)

    def to_text(self) -> str:
        lines = [f"fiber {self.family} {self.m} {self.n}"]
        for c in self.cycles:
            if isinstance(c, VectorCycle):
                lines.append("cycle vector " + " ".join(map(str, c.coords)))
            else:
                lines.append(" ".join(["cycle word", *map(str, c.word), "base", str(c.base)]))
        if self.monodromy is not None:
            lines.append(" ".join(["monodromy word", *map(str, self.monodromy)]))
        return "\n".join(lines) + "\n"


def _ints(tokens, lineno) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ScenarioError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def _check_word(word, m, lineno) -> None:
    for x in word:
        if x == 0 or abs(x) > m:
            raise ScenarioError(lineno, f"braid letter {x} out of range for B_{m + 1}")


def parse_scenario(text: str) -> Scenario:
    fiber = None
    cycles: list = []
    monodromy = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        key = toks[0]
        if key == "fiber":
            if fiber is not None:
                raise ScenarioError(lineno, "duplicate fiber line")
            if len(toks) != 4 or toks[1] != "A":
                raise ScenarioError(lineno, "expected 'fiber A <m> <n>'")
            m, n = _ints(toks[2:], lineno)
            if m < 1 or n < 2:
                raise ScenarioError(lineno, "need m >= 1 and n >= 2")
            fiber = (m, n)
            continue
        if fiber is None:
            raise ScenarioError(lineno, f"'{key}' before the fiber line")
        m = fiber[0]
        if key == "cycle" and len(toks) >= 2 and toks[1] == "vector":
            coords = _ints(toks[2:], lineno)
            if len(coords) != m:
                raise ScenarioError(lineno, f"cycle vector needs {m} entries")
            cycles.append(VectorCycle(coords))
        elif key == "cycle" and len(toks) >= 2 and toks[1] == "word":
            if len(toks) < 4 or toks[-2] != "base":
                raise ScenarioError(lineno, "expected 'cycle word <ints...> base <j>'")
            word = _ints(toks[2:-2], lineno)
            (base,) = _ints(toks[-1:], lineno)
            _check_word(word, m, lineno)
            if not 1 <= base <= m:
                raise ScenarioError(lineno, f"base index {base} outside 1..{m}")
            cycles.append(WordCycle(word, base))
        elif key == "monodromy" and len(toks) >= 2 and toks[1] == "word":
            if monodromy is not None:
                raise ScenarioError(lineno, "duplicate monodromy line")
            monodromy = _ints(toks[2:], lineno)
            _check_word(monodromy, m, lineno)
        else:
            raise ScenarioError(lineno, f"unknown directive {' '.join(toks[:2])!r}")
        if cycles and monodromy is not None:
            raise ScenarioError(lineno, "a scenario holds either cycles or a monodromy word, not both")
    if fiber is None:
        raise ScenarioError(0, "missing fiber line")
    return Scenario(fiber[0], fiber[1], tuple(cycles), monodromy)


def parse_matrix(text: str) -> IntMatrix:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            rows.append(_ints(toks, lineno))
    if len({len(r) for r in rows}) > 1:
        raise InvalidInputError("matrix rows have different lengths")
    return IntMatrix.from_rows(rows)


# --- output -------------------------------------------------------------------


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ": "), indent=2)


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, data: dict, text: str) -> None:
        print(_dump(data) if self.as_json else text)


# --- commands -----------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidInputError(str(exc)) from None


def cmd_snf(args, out: _Out) -> int:
    m = parse_matrix(_read(args.file))
    d, _, _ = smith_normal_form(m)
    g = cokernel_invariants(m)
    out.emit({"diagonal": list(d.diagonal()), **g.to_json()}, f"diagonal: {list(d.diagonal())}\ncokernel: {g}")
    return 0


def cmd_braid(args, out: _Out) -> int:
    if args.action == "eq":
        u = BraidWord.parse(args.words[0], args.strands)
        v = BraidWord.parse(args.words[1], args.strands)
        eq = braids_equal(u, v)
        out.emit({"equal": eq}, "equal" if eq else "not equal")
        return 0 if eq else 1
    if args.action == "product":
        f = Factorization.parse(args.words[0], args.strands)
        w = product(f)
        out.emit({"word": list(w.letters)}, str(w))
        return 0
    w = BraidWord.parse(args.words[0], args.strands)
    images = artin_action(w).images
    out.emit(
        {"images": [list(img) for img in images]},
        "\n".join(f"x{i} -> {' '.join(map(str, img))}" for i, img in enumerate(images, start=1)),
    )
    return 0


def cmd_factor(args, out: _Out) -> int:
    f = Factorization.parse(args.factorization, args.strands)
    if args.action == "hurwitz":
        g = (hurwitz_move_inverse if args.inverse else hurwitz_move)(f, args.index)
    elif args.action == "partial-twist":
        try:
            first, last = (int(x) for x in args.range.split(".."))
        except ValueError:
            raise InvalidInputError(f"range must look like i..j, got {args.range!r}") from None
        g = partial_twist(f, first, last, BraidWord.parse(args.by, args.strands))
    else:
        size = len(hurwitz_orbit(f, args.depth))
        out.emit({"depth": args.depth, "orbit_size": size}, f"orbit size at depth {args.depth}: {size}")
        return 0
    out.emit({"entries": [list(e.letters) for e in g.entries]}, str(g))
    return 0


def cmd_fib(args, out: _Out) -> int:
    sc = parse_scenario(_read(args.scenario))
    if args.action == "fill":
        g = filling_homology(sc.lefschetz_model())
    else:
        g = boundary_homology(sc.open_book())
    out.emit(g.to_json(), str(g))
    return 0


def cmd_brieskorn(args, out: _Out) -> int:
    verdict = is_homotopy_sphere(args.exponents).value
    out.emit({"exponents": args.exponents, "homotopy_sphere": verdict}, verdict)
    return 0


def _parse_n_set(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InvalidInputError(f"bad --n list {text!r}") from None
    if not values or min(values) < 2:
        raise InvalidInputError("--n values must be >= 2")
    return values


def cmd_paper(args, out: _Out) -> int:
    if args.kmax < 1 or args.lmax < 1:
        raise InvalidInputError("--kmax and --lmax must be >= 1")
    report = verify_paper(args.kmax, args.lmax, _parse_n_set(args.n))
    lines = [
        f"grid k=0..{args.kmax} l=1..{args.lmax} n={','.join(map(str, report.n_values))}",
        f"centralizer certificate: {'ok' if report.centralizer_ok else 'FAIL'}",
        f"fillings distinct in k: {'ok' if report.fillings_distinct_in_k else 'FAIL'}",
        f"boundaries distinct in l: {'ok' if report.boundaries_distinct_in_l else 'FAIL'}",
    ]
    for c in report.cells:
        lines.append(
            f"k={c.k} l={c.l} n={c.n} W={c.filling} M={c.boundary} {'pass' if c.passed else 'FAIL'}"
        )
    failed = sum(not c.passed for c in report.cells)
    lines.append(f"{len(report.cells) - failed}/{len(report.cells)} cells pass")
    out.emit(report.to_json(), "\n".join(lines))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lefhom", description=__doc__.split("\n")[0])
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", help="Smith form and cokernel of an integer matrix file")
    p.add_argument("file", help="whitespace-separated rows, '-' for stdin")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("braid", help="braid word operations")
    p.add_argument("action", choices=["eq", "product", "act"])
    p.add_argument("words", nargs="+", help="braid words such as '1 -3 -3 2'; product takes 'w1; w2; ...'")
    p.add_argument("--strands", type=int, default=4)
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("factor", help="Hurwitz moves and partial twists on factorizations")
    p.add_argument("action", choices=["hurwitz", "orbit", "partial-twist"])
    p.add_argument("factorization", help="entries separated by ';'")
    p.add_argument("--strands", type=int, default=4)
    p.add_argument("--index", type=int, default=1)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--range", default="1..1", help="1-based inclusive range i..j")
    p.add_argument("--by", default="", help="conjugating braid word")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("fib", help="homology of a filling or open-book boundary from a scenario file")
    p.add_argument("action", choices=["fill", "boundary"])
    p.add_argument("scenario", help="scenario file, '-' for stdin")
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("brieskorn", help="homotopy-sphere criterion for Sigma(a_1, ..., a_N)")
    p.add_argument("action", choices=["check"])
    p.add_argument("exponents", type=int, nargs="+")
    p.set_defaults(func=cmd_brieskorn)

    p = sub.add_parser("paper", help="reproduce the W_{k,l} and M_l computations")
    p.add_argument("action", choices=["reproduce"])
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--lmax", type=int, default=20)
    p.add_argument("--n", default="2,3", help="comma-separated dimension parameters")
    p.set_defaults(func=cmd_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "braid" and len(args.words) != (2 if args.action == "eq" else 1):
        parser.error(f"braid {args.action} takes {2 if args.action == 'eq' else 1} word argument(s)")
    try:
        return args.func(args, _Out(args.json))
    except LefhomError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
