"""Toric arrangement data model, text format, named families, restriction.

A hypersurface is the level set of a primitive Laurent-monomial character:
``{z : z^chi = c}`` with the constant ``c`` a root of unity stored by its
rational argument ``b`` (``c = exp(2*pi*i*b)``, ``0 <= b < 1``).  All the
component geometry in this package therefore happens in exact rational
arithmetic mod 1 (log coordinates).

``(chi, b)`` and ``(-chi, -b mod 1)`` cut out the same set; hypersurfaces are
normalized to the representative whose first nonzero exponent is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lattice import IntMatrix, is_primitive, snf, vec_mul


class ParseError(ValueError):
    """Arrangement file error, carrying a line number and a stable code.

    Codes: ``malformed``, ``nonprimitive``, ``dimension``, ``duplicate``.
    """

    def __init__(self, line_no: int, code: str, message: str):
        super().__init__(f"line {line_no}: {code}: {message}")
        self.line_no = line_no
        self.code = code


def mod1(x) -> Fraction:
    return Fraction(x) % 1


def _canonical_pair(chi, b):
    chi = tuple(int(x) for x in chi)
    lead = next((x for x in chi if x), 0)
    if lead < 0:
        chi = tuple(-x for x in chi)
        b = -b
    return chi, mod1(b)


@dataclass(frozen=True)
class Hypersurface:
    """Connected toric hypersurface {z : z^chi = exp(2*pi*i*b)}."""

    chi: tuple[int, ...]
    b: Fraction

    def __post_init__(self):
        chi, b = _canonical_pair(self.chi, self.b)
        if not is_primitive(chi):
            raise ValueError(f"character {chi} is not primitive")
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class ToricArrangement:
    """Finite ordered list of toric hypersurfaces in the torus (C*)^dim."""

    dim: int
    hypersurfaces: tuple[Hypersurface, ...]

    def __post_init__(self):
        object.__setattr__(self, "hypersurfaces", tuple(self.hypersurfaces))
        if self.dim < 0:
            raise ValueError("torus dimension must be nonnegative")
        seen = set()
        for h in self.hypersurfaces:
            if len(h.chi) != self.dim:
                raise ValueError(f"character {h.chi} has wrong length for dimension {self.dim}")
            key = (h.chi, h.b)
            if key in seen:
                raise ValueError(f"duplicate hypersurface {h.chi} @ {h.b}")
            seen.add(key)

    @property
    def n(self) -> int:
        return len(self.hypersurfaces)

    def char_matrix(self) -> IntMatrix:
        return IntMatrix(self.n, self.dim, tuple(h.chi for h in self.hypersurfaces))

    def b_vector(self) -> tuple[Fraction, ...]:
        return tuple(h.b for h in self.hypersurfaces)


@dataclass(frozen=True)
class RestrictedArrangement:
    """Trace of an arrangement on one of its hypersurfaces.

    ``ambient`` lives in a torus of one dimension less.  ``origin_map[k]``
    lists, for restricted hypersurface k, the pairs (parent index, component
    index) of every connected component of a parent intersection that was
    identified with it.
    """

    ambient: ToricArrangement
    origin_map: tuple[tuple[tuple[int, int], ...], ...]


# -- text format ---------------------------------------------------------------

def parse(text: str) -> ToricArrangement:
    """Parse the line-oriented arrangement format.

    ::

        torus <l>
        hyp <a_1> ... <a_l> @ <p>/<q>     # one line per hypersurface

    Raises :class:`ParseError` with a line number and error code on bad input.
    """
    dim = None
    hyps: list[Hypersurface] = []
    seen: dict[tuple, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if dim is None:
            if tokens[0] != "torus" or len(tokens) != 2:
                raise ParseError(line_no, "malformed", "expected 'torus <l>'")
            try:
                dim = int(tokens[1])
            except ValueError:
                raise ParseError(line_no, "malformed", f"bad dimension {tokens[1]!r}") from None
            if dim < 0:
                raise ParseError(line_no, "malformed", "negative torus dimension")
            continue
        if tokens[0] != "hyp":
            raise ParseError(line_no, "malformed", f"expected 'hyp', got {tokens[0]!r}")
        if len(tokens) < 3 or tokens[-2] != "@":
            raise ParseError(line_no, "malformed", "expected 'hyp <exponents> @ <p>/<q>'")
        exps = tokens[1:-2]
        if len(exps) != dim:
            raise ParseError(line_no, "dimension",
                             f"{len(exps)} exponents for a torus of dimension {dim}")
        try:
            chi = tuple(int(t) for t in exps)
        except ValueError:
            raise ParseError(line_no, "malformed", "exponents must be integers") from None
        frac = tokens[-1].split("/")
        if len(frac) != 2:
            raise ParseError(line_no, "malformed", f"bad constant {tokens[-1]!r}")
        try:
            p, q = int(frac[0]), int(frac[1])
        except ValueError:
            raise ParseError(line_no, "malformed", f"bad constant {tokens[-1]!r}") from None
        if q < 1 or not 0 <= p < q:
            raise ParseError(line_no, "malformed",
                             f"constant must satisfy 0 <= p < q, got {p}/{q}")
        try:
            h = Hypersurface(chi, Fraction(p, q))
        except ValueError:
            raise ParseError(line_no, "nonprimitive",
                             f"character {chi} is not primitive") from None
        key = (h.chi, h.b)
        if key in seen:
            raise ParseError(line_no, "duplicate",
                             f"same hypersurface as line {seen[key]}")
        seen[key] = line_no
        hyps.append(h)
    if dim is None:
        raise ParseError(1, "malformed", "missing 'torus <l>' header")
    return ToricArrangement(dim, tuple(hyps))


def serialize(arr: ToricArrangement) -> str:
    """Bit-exact inverse of :func:`parse` on normalized arrangements."""
    lines = [f"torus {arr.dim}"]
    for h in arr.hypersurfaces:
        exps = " ".join(str(x) for x in h.chi)
        lines.append(f"hyp {exps} @ {h.b.numerator}/{h.b.denominator}")
    return "\n".join(lines) + "\n"


# -- named families -------------------------------------------------------------

def braid(l: int) -> ToricArrangement:
    """The arrangement {z_i / z_j = 1, i < j} in (C*)^l."""
    if l < 2:
        raise ValueError("braid arrangement needs l >= 2")
    hyps = []
    for i in range(l):
        for j in range(i + 1, l):
            chi = [0] * l
            chi[i], chi[j] = 1, -1
            hyps.append(Hypersurface(tuple(chi), Fraction(0)))
    return ToricArrangement(l, tuple(hyps))


_CHAIN_FAMILIES = {"A", "B", "C", "D"}


def _cartan_matrix(family: str, rank_: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(rank_)] for i in range(rank_)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j], c[j][i] = cij, cji

    if family == "G2":
        bond(0, 1, cij=-3, cji=-1)
        return c
    for i in range(rank_ - 1):
        bond(i, i + 1)
    if family == "B" and rank_ >= 2:
        # last simple root short: reflection in it adds it twice
        c[rank_ - 1][rank_ - 2] = -2
    elif family == "C" and rank_ >= 2:
        c[rank_ - 2][rank_ - 1] = -2
    elif family == "D":
        bond(rank_ - 2, rank_ - 1, 0, 0)
        bond(rank_ - 3, rank_ - 1)
    return c


_POSITIVE_COUNT = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "G2": lambda r: 6,
}


def positive_roots(family: str, rank_: int) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by reflection closure.

    Sorted by height then reverse-lexicographically, so the simple roots come
    first in their natural order.
    """
    if family == "G2":
        if rank_ != 2:
            raise ValueError("G2 has rank 2")
    elif family == "A":
        if rank_ < 1:
            raise ValueError("type A needs rank >= 1")
    elif family in ("B", "C"):
        if rank_ < 2:
            raise ValueError(f"type {family} needs rank >= 2")
    elif family == "D":
        if rank_ < 3:
            raise ValueError("type D needs rank >= 3")
    else:
        raise ValueError(f"unknown family {family!r}")
    cartan = _cartan_matrix(family, rank_)
    simples = [tuple(1 if j == i else 0 for j in range(rank_)) for i in range(rank_)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank_):
                pairing = sum(beta[j] * cartan[i][j] for j in range(rank_))
                refl = tuple(x - pairing if j == i else x for j, x in enumerate(beta))
                if refl not in roots:
                    roots.add(refl)
                    nxt.append(refl)
        frontier = nxt
    pos = [r for r in roots if all(x >= 0 for x in r)]
    assert len(pos) == _POSITIVE_COUNT[family](rank_)
    pos.sort(key=lambda r: (sum(r), tuple(-x for x in r)))
    return pos


def weyl(family: str, rank_: int, simple_only: bool = False) -> ToricArrangement:
    """Toric Weyl arrangement of the given type.

    One hypersurface ``exp(root) = 1`` per positive root of the root system,
    with characters written in simple-root coordinates.  With ``simple_only``
    the simple roots alone are used (a coordinate arrangement).
    """
    roots = positive_roots(family, rank_)
    if simple_only:
        roots = [r for r in roots if sum(abs(x) for x in r) == 1]
    hyps = tuple(Hypersurface(r, Fraction(0)) for r in roots)
    return ToricArrangement(rank_, hyps)


# -- restriction ----------------------------------------------------------------

def _completion_to_basis(chi: tuple[int, ...]) -> IntMatrix:
    """Unimodular V with chi @ V = (1, 0, ..., 0), for primitive chi."""
    row = IntMatrix.from_rows([chi])
    res = snf(row)
    if res.D.entries[0][0] != 1:
        raise ValueError(f"character {chi} is not primitive")
    v = [list(r) for r in res.V.entries]
    if res.U.entries[0][0] == -1:
        for r in v:
            r[0] = -r[0]
    return IntMatrix.from_rows(v)


def restrict(arr: ToricArrangement, i: int, prefix) -> RestrictedArrangement:
    """Arrangement traced on hypersurface ``i`` by the hypersurfaces in ``prefix``.

    Reparametrizes K_i as a torus of dimension ``dim - 1`` and collects every
    connected component of K_r ∩ K_i for r in prefix, as primitive-character
    hypersurfaces.  Empty intersections are dropped; coincident components are
    deduplicated with all their parents recorded in ``origin_map``.
    Indices are 0-based.
    """
    prefix = sorted(set(prefix))
    if not 0 <= i < arr.n:
        raise ValueError(f"hypersurface index {i} out of range")
    if i in prefix:
        raise ValueError(f"index {i} appears in its own prefix")
    if any(not 0 <= r < arr.n for r in prefix):
        raise ValueError("prefix index out of range")
    hi = arr.hypersurfaces[i]
    v = _completion_to_basis(hi.chi)
    order: list[Hypersurface] = []
    index: dict[Hypersurface, int] = {}
    origins: list[list[tuple[int, int]]] = []
    for r in prefix:
        hr = arr.hypersurfaces[r]
        prime = vec_mul(hr.chi, v)
        head, tail = prime[0], prime[1:]
        b = mod1(hr.b - head * hi.b)
        if not any(tail):
            # K_r parallel to K_i; distinct hypersurfaces, so the trace is empty
            assert b != 0, "duplicate hypersurface escaped arrangement validation"
            continue
        g = 0
        for x in tail:
            g = gcd(g, x)
        chi0 = tuple(x // g for x in tail)
        for t in range(g):
            h = Hypersurface(chi0, Fraction(b + t, g))
            if h not in index:
                index[h] = len(order)
                order.append(h)
                origins.append([])
            origins[index[h]].append((r, t))
    ambient = ToricArrangement(arr.dim - 1, tuple(order))
    return RestrictedArrangement(ambient, tuple(tuple(o) for o in origins))
