"""Group input formats, builder expressions, report output and lattice caching.

Three input forms are accepted:

* generator files (``.grp``)::

      name S3
      degree 3
      gen (1 2)
      gen (1 2 3)
      order 6        # optional; checked against the computed order

* Cayley tables (``.tbl``): the first line holds ``n``, then ``n`` rows of
  entries in ``1..n``.
* builder files (``.expr``): ``name`` and ``expr`` lines, plus an optional
  ``order`` line, where the expression uses ``cyclic(n)``, ``dihedral(n)``,
  ``symmetric(n)``, ``alternating(n)``, ``quaternion(8)``,
  ``directProduct(a, b)`` and ``fromGenerators((1 2)(3 4), (1 2 3))``.
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import (DegreeMismatch, GroupSyntaxError, GroupTooLarge,
                     InputError, Malformed,
                     NoIdentity, NoInverse, NotABijection, NotAssociative,
                     OrderMismatch)
from .lattice import SubgroupLattice
from .perm import DEFAULT_CAP, Group, Permutation

CACHE_VERSION = 1
SUFFIXES = (".grp", ".tbl", ".expr")

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


# -- cycle notation -------------------------------------------------------

def parse_cycles(text: str, line: int | None = None) -> list[tuple[int, ...]]:
    """Parse ``(1 2)(3 4 5)`` into cycles; ``()`` is the identity."""
    s = text.strip()
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise GroupSyntaxError(f"unexpected text {s[pos:m.start()].strip()!r}", line)
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = tuple(int(x) for x in body)
        except ValueError:
            raise GroupSyntaxError(f"non-integer point in ({m.group(1)})", line) from None
        if any(p < 1 for p in pts):
            raise GroupSyntaxError("points are numbered from 1", line)
        if pts:
            cycles.append(pts)
    if s[pos:].strip() or not s:
        raise GroupSyntaxError(f"cannot parse cycles {text!r}", line)
    return cycles


def permutation_from_cycles(degree: int, cycles, line: int | None = None) -> Permutation:
    seen = set()
    for cyc in cycles:
        for pt in cyc:
            if pt > degree:
                raise DegreeMismatch(f"point {pt} exceeds degree {degree}", line)
            if pt in seen:
                raise NotABijection(f"point {pt} appears twice", line)
            seen.add(pt)
    return Permutation.from_cycles(degree, cycles)


# -- builders -------------------------------------------------------------

def cyclic(n: int) -> list[Permutation]:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    if n == 1:
        return [Permutation.identity(1)]
    return [Permutation.from_cycles(n, [tuple(range(1, n + 1))])]


def dihedral(n: int) -> list[Permutation]:
    """Symmetries of an n-gon, of order 2n (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3")
    rot = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    ref = Permutation.from_cycles(n, [(i, n + 1 - i) for i in range(1, n // 2 + 1)])
    return [rot, ref]


def symmetric(n: int) -> list[Permutation]:
    if n < 1:
        raise ValueError("symmetric(n) needs n >= 1")
    if n == 1:
        return [Permutation.identity(1)]
    if n == 2:
        return [Permutation.from_cycles(2, [(1, 2)])]
    return [Permutation.from_cycles(n, [tuple(range(1, n + 1))]),
            Permutation.from_cycles(n, [(1, 2)])]


def alternating(n: int) -> list[Permutation]:
    if n < 1:
        raise ValueError("alternating(n) needs n >= 1")
    if n < 3:
        return [Permutation.identity(n)]
    return [Permutation.from_cycles(n, [(1, 2, k)]) for k in range(3, n + 1)]


def _quaternion_table() -> list[list[int]]:
    # units as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
    units = [(s, a) for a in range(4) for s in (1, -1)]
    prod = {(1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
            (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
            (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}
    table = []
    for s1, a1 in units:
        row = []
        for s2, a2 in units:
            if a1 == 0 or a2 == 0:
                s, a = 1, a1 + a2
            else:
                s, a = prod[(a1, a2)]
            row.append(units.index((s * s1 * s2, a)) + 1)
        table.append(row)
    return table


def quaternion(n: int = 8) -> list[Permutation]:
    if n != 8:
        raise ValueError("only quaternion(8) is available")
    return cayley_generators(_quaternion_table())


def direct_product(a: Sequence[Permutation], b: Sequence[Permutation]) -> list[Permutation]:
    """Generators of ``A x B`` acting on the disjoint union of the point sets."""
    da, db = a[0].degree, b[0].degree
    left = [Permutation._from_af(x.af + tuple(range(da, da + db))) for x in a]
    right = [Permutation._from_af(tuple(range(da)) + tuple(da + y for y in x.af)) for x in b]
    return left + right


def from_generators(cycle_lists: Sequence[list[tuple[int, ...]]]) -> list[Permutation]:
    pts = [p for cycles in cycle_lists for c in cycles for p in c]
    degree = max(pts, default=1)
    return [permutation_from_cycles(degree, c) for c in cycle_lists]


_INT_BUILDERS = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric,
                 "alternating": alternating, "quaternion": quaternion}


class _ExprParser:
    """Recursive descent over ``name(args)`` builder calls."""

    def __init__(self, text: str, line: int | None):
        self.s = text
        self.i = 0
        self.line = line

    def fail(self, msg):
        raise GroupSyntaxError(f"{msg} at column {self.i + 1} of {self.s!r}", self.line)

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def expect(self, ch):
        self.ws()
        if not self.s.startswith(ch, self.i):
            self.fail(f"expected {ch!r}")
        self.i += 1

    def peek(self):
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def ident(self):
        self.ws()
        m = re.compile(r"[A-Za-z_]\w*").match(self.s, self.i)
        if not m:
            self.fail("expected a builder name")
        self.i = m.end()
        return m.group(0)

    def integer(self):
        self.ws()
        m = re.compile(r"\d+").match(self.s, self.i)
        if not m:
            self.fail("expected an integer")
        self.i = m.end()
        return int(m.group(0))

    def cycles(self):
        self.ws()
        m = re.compile(r"(\([^()]*\)\s*)+").match(self.s, self.i)
        if not m:
            self.fail("expected cycle notation")
        self.i = m.end()
        return parse_cycles(m.group(0), self.line)

    def expr(self) -> list[Permutation]:
        name = self.ident()
        self.expect("(")
        if name in _INT_BUILDERS:
            n = self.integer()
            self.expect(")")
            try:
                return _INT_BUILDERS[name](n)
            except ValueError as exc:
                raise GroupSyntaxError(str(exc), self.line) from None
        if name == "directProduct":
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            return direct_product(a, b)
        if name == "fromGenerators":
            lists = [self.cycles()]
            while self.peek() == ",":
                self.i += 1
                lists.append(self.cycles())
            self.expect(")")
            return from_generators(lists)
        self.fail(f"unknown builder {name!r}")

    def parse(self):
        out = self.expr()
        self.ws()
        if self.i != len(self.s):
            self.fail("trailing text")
        return out


def build_generators(expr: str, line: int | None = None) -> list[Permutation]:
    """Generators for a builder expression such as ``directProduct(cyclic(2), symmetric(3))``."""
    return _ExprParser(expr, line).parse()


def build(expr: str, cap: int = DEFAULT_CAP) -> Group:
    G = Group(build_generators(expr), cap=cap)
    if G.order > cap:
        raise GroupTooLarge(f"order {G.order} exceeds cap {cap}")
    return G


# -- Cayley tables --------------------------------------------------------

def validate_cayley(table) -> np.ndarray:
    """Return the table as a 0-based array after checking the group axioms."""
    try:
        t = np.asarray(table, dtype=np.int64)
    except (ValueError, TypeError):
        raise Malformed("Cayley table rows must be equal-length integer lists") from None
    n = t.shape[0] if t.ndim == 2 else 0
    if t.ndim != 2 or t.shape != (n, n) or n == 0:
        raise Malformed("Cayley table must be a non-empty square array")
    if t.min() < 1 or t.max() > n:
        raise Malformed(f"entries must lie in 1..{n}")
    t = t - 1
    ar = np.arange(n)
    # (xy)z == x(yz) for all triples
    left = t[t[:, :, None], ar[None, None, :]]
    right = t[ar[:, None, None], t[None, :, :]]
    if not (left == right).all():
        bad = np.argwhere(left != right)[0] + 1
        raise NotAssociative(f"(x y) z != x (y z) for x, y, z = {tuple(bad.tolist())}")
    if not ((t[0] == ar).all() and (t[:, 0] == ar).all()):
        raise NoIdentity("element 1 is not a two-sided identity")
    for x in range(n):
        if not ((t[x] == 0) & (t[:, x] == 0)).any():
            raise NoInverse(f"element {x + 1} has no inverse")
    return t


def cayley_generators(table) -> list[Permutation]:
    """Right regular representation on ``n`` points, using a greedy generating set."""
    t = validate_cayley(table)
    n = t.shape[0]
    reached = {0}
    gens = []
    for x in range(n):
        if x in reached:
            continue
        gens.append(x)
        frontier = list(reached)
        reached_new = set(reached)
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = int(t[y, g])
                    if z not in reached_new:
                        reached_new.add(z)
                        nxt.append(z)
            frontier = nxt
        reached = reached_new
    if not gens:
        return [Permutation.identity(n)]
    return [Permutation._from_af(tuple(int(v) for v in t[:, g])) for g in gens]


# -- file formats ---------------------------------------------------------

class SourceKind(str, Enum):
    GENERATORS = "GENERATORS"
    CAYLEY = "CAYLEY"
    BUILDER = "BUILDER"


@dataclass
class GroupSource:
    """A named group description.

    ``payload`` keeps the parsed input (cycle lists, the table, or the
    expression text); ``generators`` is the permutation form derived from it.
    """

    name: str
    kind: SourceKind
    payload: object
    generators: list[Permutation]
    expected_order: int | None = None
    origin: str = ""

    def group(self, cap: int = DEFAULT_CAP) -> Group:
        G = Group(self.generators, cap=cap)
        if G.order > cap:
            raise GroupTooLarge(f"{self.name}: order {G.order} exceeds cap {cap}")
        if self.expected_order is not None and G.order != self.expected_order:
            raise OrderMismatch(f"{self.name}: declared order {self.expected_order}, computed {G.order}")
        return G


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _int_field(value: str, key: str, no: int) -> int:
    try:
        v = int(value)
    except ValueError:
        raise GroupSyntaxError(f"{key} must be an integer, got {value!r}", no) from None
    if v < 1:
        raise GroupSyntaxError(f"{key} must be positive", no)
    return v


def parse_generator_text(text: str, default_name: str = "G") -> GroupSource:
    name, degree, order = default_name, None, None
    pending, cycle_lists = [], []
    for no, line in _content_lines(text):
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "name":
            if not rest:
                raise GroupSyntaxError("empty name", no)
            name = rest
        elif key == "degree":
            if degree is not None:
                raise GroupSyntaxError("degree given twice", no)
            degree = _int_field(rest, "degree", no)
        elif key == "gen":
            if degree is None:
                raise GroupSyntaxError("gen before degree", no)
            cycles = parse_cycles(rest, no)
            pending.append(permutation_from_cycles(degree, cycles, no))
            cycle_lists.append(cycles)
        elif key == "order":
            order = _int_field(rest, "order", no)
        else:
            raise GroupSyntaxError(f"unknown keyword {key!r}", no)
    if degree is None:
        raise GroupSyntaxError("missing degree line")
    if not pending:
        pending = [Permutation.identity(degree)]
    return GroupSource(name, SourceKind.GENERATORS, (degree, cycle_lists), pending, order)


def parse_cayley_text(text: str, default_name: str = "G") -> GroupSource:
    lines = list(_content_lines(text))
    if not lines:
        raise Malformed("empty Cayley table")
    no, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise Malformed(f"first line must be the order, got {first!r}", no) from None
    rows = []
    for no, line in lines[1:]:
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise Malformed("non-integer entry", no) from None
        if len(row) != n:
            raise Malformed(f"row has {len(row)} entries, expected {n}", no)
        rows.append(row)
    if len(rows) != n:
        raise Malformed(f"expected {n} rows, found {len(rows)}")
    return GroupSource(default_name, SourceKind.CAYLEY, rows, cayley_generators(rows), n)


def parse_builder_text(text: str, default_name: str = "G") -> GroupSource:
    name, expr, order = default_name, None, None
    for no, line in _content_lines(text):
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "name":
            name = rest
        elif key == "expr":
            expr = (rest, no)
        elif key == "order":
            order = _int_field(rest, "order", no)
        else:
            raise GroupSyntaxError(f"unknown keyword {key!r}", no)
    if expr is None:
        raise GroupSyntaxError("missing expr line")
    return GroupSource(name, SourceKind.BUILDER, expr[0], build_generators(*expr), order)


parse_group_file = parse_generator_text
parse_cayley_table = parse_cayley_text

_PARSERS = {".grp": parse_generator_text, ".tbl": parse_cayley_text,
            ".expr": parse_builder_text}


def load_group_file(path) -> GroupSource:
    path = Path(path)
    parser = _PARSERS.get(path.suffix)
    if parser is None:
        raise InputError(f"{path}: unknown suffix {path.suffix!r}; use one of {SUFFIXES}")
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    src = parser(text, default_name=path.stem)
    src.origin = str(path)
    return src


def corpus_files(directory) -> list[Path]:
    d = Path(directory)
    if not d.is_dir():
        raise InputError(f"{d}: not a directory")
    return sorted(p for p in d.iterdir() if p.suffix in SUFFIXES)


def bundled_corpus_dir() -> Path:
    return Path(__file__).parent / "corpus"


def format_group_file(name: str, gens: Sequence[Permutation], order: int | None = None) -> str:
    lines = [f"name {name}", f"degree {gens[0].degree}"]
    lines += [f"gen {g}" for g in gens]
    if order is not None:
        lines.append(f"order {order}")
    return "\n".join(lines) + "\n"


# -- lattice cache --------------------------------------------------------

def group_hash(G: Group) -> str:
    h = hashlib.sha256()
    h.update(f"{G.degree}".encode())
    for g in G.generators:
        h.update(b"|" + ",".join(map(str, g.af)).encode())
    return h.hexdigest()


def write_lattice_cache(L: SubgroupLattice, directory) -> Path:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    key = group_hash(L.group)
    path = d / f"{key}.lattice"
    lines = [f"cache-version {CACHE_VERSION}", f"group {key}", f"order {L.n}",
             f"subgroups {len(L)}"]
    lines += [" ".join(map(str, e)) for e in L.elements]
    tmp = path.with_suffix(".tmp")
    tmp.write_text("\n".join(lines) + "\n")
    tmp.replace(path)
    return path


def read_lattice_cache(G: Group, directory, cap: int | None = None) -> SubgroupLattice | None:
    """Load a cached lattice for ``G``; None when absent, stale or unreadable."""
    key = group_hash(G)
    path = Path(directory) / f"{key}.lattice"
    if not path.is_file():
        return None
    lines = path.read_text().splitlines()
    try:
        if lines[0] != f"cache-version {CACHE_VERSION}" or lines[1] != f"group {key}":
            return None
        if int(lines[2].split()[1]) != G.order:
            return None
        count = int(lines[3].split()[1])
        subs = [tuple(int(x) for x in ln.split()) for ln in lines[4:4 + count]]
    except (IndexError, ValueError):
        return None
    if len(subs) != count:
        return None
    kwargs = {} if cap is None else {"cap": cap}
    return SubgroupLattice(G, subgroups=subs, **kwargs)


def lattice_for(G: Group, cache_dir=None, cap: int | None = None) -> SubgroupLattice:
    kwargs = {} if cap is None else {"cap": cap}
    if cache_dir is not None:
        L = read_lattice_cache(G, cache_dir, cap)
        if L is not None:
            return L
    L = SubgroupLattice(G, **kwargs)
    if cache_dir is not None:
        write_lattice_cache(L, cache_dir)
    return L


# -- reports --------------------------------------------------------------

def _b(x: bool) -> str:
    return "true" if x else "false"


def emit_report(report) -> str:
    """Fixed-order ``key: value`` text for a classification report."""
    fields = [
        ("group", report.group_name),
        ("order", str(report.order)),
        ("pi", " ".join(map(str, report.primes)) or "-"),
        ("soluble", _b(report.soluble)),
        ("supersoluble", _b(report.supersoluble)),
        ("p2", _b(report.p2)),
        ("p3", _b(report.p3)),
        ("uresidual_order", str(report.u_residual_order)),
        ("labels", " ".join(map(str, report.labels))),
        ("equivalence", "ok" if report.equivalence_ok else "FAIL"),
        ("witnesses", " ".join(report.witnesses) or "-"),
    ]
    return "".join(f"{k}: {v}\n" for k, v in fields)
