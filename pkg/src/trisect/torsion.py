"""Torsion points of an elliptic curve and intersection combinatorics of
curves and divisors on its third symmetric product.

Points live in E[M] = (Z/M)^2 but are stored at their minimal level, so
equality, hashing and set algebra work across working levels and the order
of a point is just its level.  A working level M is always a multiple of 6
(both the two- and three-torsion must be visible); computations that would
need more torsion than E[M] holds raise InsufficientLevelError instead of
silently returning partial answers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import gcd, lcm

from .fixtures import load_entries

DEFAULT_LEVEL = 24


class InsufficientLevelError(ValueError):
    """A computation needs torsion beyond the working level."""


def check_level(m: int) -> int:
    if m < 6 or m % 6:
        raise InsufficientLevelError(f"working level must be a positive multiple of 6, got {m}")
    return m


@dataclass(frozen=True, order=True)
class TorsionPt:
    """Element of the torsion group (Q/Z)^2, stored at its minimal level.

    The invariant gcd(a, b, level) == 1 (with the origin at level 1) makes
    the representation canonical: points constructed at different working
    levels compare equal exactly when they are the same point, and the group
    order of the point equals `level`.
    """

    level: int
    a: int
    b: int

    @staticmethod
    def make(level: int, a: int, b: int) -> "TorsionPt":
        if level < 1:
            raise ValueError("level must be positive")
        a %= level
        b %= level
        g = gcd(gcd(a, b), level)
        return TorsionPt(level // g, a // g, b // g)

    @property
    def order(self) -> int:
        return self.level

    def coords_at(self, m: int) -> tuple[int, int]:
        if m % self.level:
            raise InsufficientLevelError(f"{self} does not lie in E[{m}]")
        s = m // self.level
        return (self.a * s, self.b * s)

    def __add__(self, other: "TorsionPt") -> "TorsionPt":
        m = lcm(self.level, other.level)
        sa, sb = self.coords_at(m)
        oa, ob = other.coords_at(m)
        return TorsionPt.make(m, sa + oa, sb + ob)

    def __neg__(self) -> "TorsionPt":
        return TorsionPt.make(self.level, -self.a, -self.b)

    def __sub__(self, other: "TorsionPt") -> "TorsionPt":
        return self + (-other)

    def __rmul__(self, k: int) -> "TorsionPt":
        if not isinstance(k, int):
            return NotImplemented
        return TorsionPt.make(self.level, k * self.a, k * self.b)

    __mul__ = __rmul__

    def __str__(self):
        return f"({Fraction(self.a, self.level)}, {Fraction(self.b, self.level)})"

    __repr__ = __str__


ORIGIN = TorsionPt(1, 0, 0)

# The eight nonzero three-torsion points, named by the four +/- classes.
ETA = {
    1: TorsionPt.make(3, 0, 1),
    2: TorsionPt.make(3, 1, 0),
    3: TorsionPt.make(3, 1, 1),
    4: TorsionPt.make(3, 1, 2),
}

# The three nonzero two-torsion points.
XI = {
    1: TorsionPt.make(2, 0, 1),
    2: TorsionPt.make(2, 1, 0),
    3: TorsionPt.make(2, 1, 1),
}

THREE_TORSION = tuple(sorted(
    TorsionPt.make(3, a, b) for a in range(3) for b in range(3)
    if (a, b) != (0, 0)))


def class_rep(pt: TorsionPt) -> TorsionPt:
    """Representative of {p, -p} for a nonzero three-torsion point."""
    if pt.level != 3:
        raise ValueError(f"{pt} is not a nonzero three-torsion point")
    return min(pt, -pt)


CLASS_REPS = tuple(sorted({class_rep(p) for p in THREE_TORSION}))


def grid(m: int):
    """All points of E[m]."""
    return (TorsionPt.make(m, i, j) for i in range(m) for j in range(m))


@dataclass(frozen=True, order=True)
class Triple:
    """Unordered triple of torsion points (an effective degree-three cycle)."""

    points: tuple[TorsionPt, TorsionPt, TorsionPt]

    @staticmethod
    def of(p: TorsionPt, q: TorsionPt, r: TorsionPt) -> "Triple":
        return Triple(tuple(sorted((p, q, r))))

    @property
    def total(self) -> TorsionPt:
        p, q, r = self.points
        return p + q + r

    def level(self) -> int:
        return lcm(*(p.level for p in self.points))

    def __str__(self):
        return "{" + " + ".join(str(p) for p in self.points) + "}"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Loci: curves and hypersurfaces of the third symmetric product
# ---------------------------------------------------------------------------

CURVE1 = "CURVE1"
SURFACE_D = "SURFACE_D"
SURFACE_F = "SURFACE_F"
SURFACE_Y = "SURFACE_Y"


@dataclass(frozen=True, order=True)
class AffineMap:
    """x -> shift + mult * x on the torsion group."""

    shift: TorsionPt
    mult: int

    def __call__(self, x: TorsionPt) -> TorsionPt:
        return self.shift + self.mult * x


@dataclass(frozen=True)
class Locus:
    """A subvariety of the third symmetric product, described exactly.

    CURVE1 is the image of the elliptic curve under three affine maps,
    x -> {m1(x), m2(x), m3(x)}.  SURFACE_D(u) is the divisor of triples with
    u among their points; SURFACE_F(u) the divisor of triples with sum u;
    SURFACE_Y the divisor of triples where one point is the sum of the other
    two.
    """

    kind: str
    label: str
    maps: tuple[AffineMap, AffineMap, AffineMap] | tuple = ()
    anchor: TorsionPt | None = None

    def constants_level(self) -> int:
        levels = [m.shift.level for m in self.maps]
        if self.anchor is not None:
            levels.append(self.anchor.level)
        return lcm(*levels) if levels else 1

    def __str__(self):
        return self.label

    __repr__ = __str__


def curve_locus(label: str, maps) -> Locus:
    maps = tuple(AffineMap(s, k) for (s, k) in maps)
    if len(maps) != 3:
        raise ValueError("a CURVE1 locus needs exactly three affine maps")
    return Locus(CURVE1, label, maps=maps)


def locus_D(u: TorsionPt) -> Locus:
    return Locus(SURFACE_D, f"D{u}", anchor=u)


def locus_F(u: TorsionPt) -> Locus:
    return Locus(SURFACE_F, f"F{u}", anchor=u)


def locus_Y() -> Locus:
    return Locus(SURFACE_Y, "Y")


def locus_A(i: int) -> Locus:
    """Triples {xi_i, x, -x}: antidiagonal translates through a two-torsion
    point.  Index 0 names the origin."""
    xi = ORIGIN if i == 0 else XI[i]
    return curve_locus(f"A[xi{i}]", ((xi, 0), (ORIGIN, 1), (ORIGIN, -1)))


def locus_N(pt: TorsionPt) -> Locus:
    """Triples {x, x + eta, x + 2 eta} for eta in the +/- class of pt."""
    rep = class_rep(pt)
    return curve_locus(f"N{rep}", ((ORIGIN, 1), (rep, 1), (2 * rep, 1)))


def locus_M(i: int) -> Locus:
    """Triples {x, eta_i, 2 eta_i}: a moving point plus a fixed three-torsion
    pair."""
    eta = ETA[i]
    return curve_locus(f"M{i}", ((ORIGIN, 1), (eta, 0), (2 * eta, 0)))


def locus_line(i: int) -> Locus:
    """Triples {xi_i, x, x + xi_i}."""
    xi = XI[i]
    return curve_locus(f"l{i}", ((xi, 0), (ORIGIN, 1), (xi, 1)))


def locus_Gamma() -> Locus:
    """Triples {x, x + xi_1, x + xi_2}."""
    return curve_locus("Gamma", ((ORIGIN, 1), (XI[1], 1), (XI[2], 1)))


def locus_B(i: int, j: int) -> Locus:
    """Triples {xi_i, x, x + xi_j}, i != j."""
    if i == j:
        raise ValueError("locus_B needs two distinct two-torsion indices")
    return curve_locus(f"B{i}{j}", ((XI[i], 0), (ORIGIN, 1), (XI[j], 1)))


# ---------------------------------------------------------------------------
# Enumeration and membership
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def curve_triples(locus: Locus, m: int) -> frozenset:
    """All triples of the curve whose three points lie in E[m].

    The parameter runs over E[g*m] with g the lcm of the nonzero multipliers,
    and images are filtered to E[m]; any qualifying triple arises from such a
    parameter, so the enumeration is complete.
    """
    check_level(m)
    if locus.kind != CURVE1:
        raise ValueError("curve_triples expects a CURVE1 locus")
    if locus.constants_level() and m % locus.constants_level():
        raise InsufficientLevelError(
            f"{locus} has constants of level {locus.constants_level()}, not visible in E[{m}]")
    mults = [abs(mp.mult) for mp in locus.maps if mp.mult]
    g = lcm(*mults) if mults else 1
    out = set()
    for x in grid(g * m):
        pts = tuple(mp(x) for mp in locus.maps)
        if all(m % p.level == 0 for p in pts):
            out.add(Triple.of(*pts))
    return frozenset(out)


def member(locus: Locus, triple: Triple) -> bool:
    """Exact membership of a triple in a locus, at any level."""
    p, q, r = triple.points
    if locus.kind == SURFACE_D:
        return locus.anchor in triple.points
    if locus.kind == SURFACE_F:
        return triple.total == locus.anchor
    if locus.kind == SURFACE_Y:
        return p == q + r or q == p + r or r == p + q
    # CURVE1: find the parameter through a unit-multiplier map, or fall back
    # to a complete bounded search.
    unit = next((k for k, mp in enumerate(locus.maps) if mp.mult in (1, -1)), None)
    if unit is not None:
        mp = locus.maps[unit]
        for perm in permutations(triple.points):
            x = (perm[unit] - mp.shift) * (1 if mp.mult == 1 else -1)
            if Triple.of(*(m_(x) for m_ in locus.maps)) == triple:
                return True
        return False
    bound = triple.level()
    for mp in locus.maps:
        bound = lcm(bound, mp.shift.level)
    mults = [abs(mp.mult) for mp in locus.maps if mp.mult]
    bound *= lcm(*mults) if mults else 1
    return any(Triple.of(*(mp(x) for mp in locus.maps)) == triple
               for x in grid(bound))


def intersect_loci(l1: Locus, l2: Locus, m: int = DEFAULT_LEVEL) -> frozenset:
    """Triples of E[m]^3 lying on both loci."""
    check_level(m)
    for locus in (l1, l2):
        if m % locus.constants_level():
            raise InsufficientLevelError(
                f"{locus} needs level {locus.constants_level()} | m, got {m}")
    if l2.kind == CURVE1 and l1.kind != CURVE1:
        l1, l2 = l2, l1
    if l1.kind == CURVE1:
        return frozenset(t for t in curve_triples(l1, m) if member(l2, t))
    return frozenset(t for t in _surface_triples(l1, m) if member(l2, t))


@lru_cache(maxsize=None)
def _surface_triples(locus: Locus, m: int) -> frozenset:
    out = set()
    if locus.kind == SURFACE_D:
        u = locus.anchor
        for y in grid(m):
            for z in grid(m):
                out.add(Triple.of(u, y, z))
    elif locus.kind == SURFACE_F:
        for p in grid(m):
            for q in grid(m):
                out.add(Triple.of(p, q, locus.anchor - p - q))
    elif locus.kind == SURFACE_Y:
        for q in grid(m):
            for r in grid(m):
                out.add(Triple.of(q + r, q, r))
    else:
        raise ValueError(f"not a surface locus: {locus}")
    return frozenset(out)


def contains_locus(surface: Locus, curve: Locus) -> bool:
    """Exact symbolic test that a curve locus lies inside a surface locus.

    Correctness does not depend on any working level: each criterion states
    that the defining identity holds as an identity of affine maps, and a
    failed identity can hold at only finitely many parameters (a proper
    coset), never on the whole curve.
    """
    if curve.kind != CURVE1:
        raise ValueError("contains_locus expects a CURVE1 second argument")
    maps = curve.maps
    if surface.kind == SURFACE_D:
        return any(mp.mult == 0 and mp.shift == surface.anchor for mp in maps)
    if surface.kind == SURFACE_F:
        total_mult = sum(mp.mult for mp in maps)
        total_shift = maps[0].shift + maps[1].shift + maps[2].shift
        return total_mult == 0 and total_shift == surface.anchor
    if surface.kind == SURFACE_Y:
        for i, j, k in permutations(range(3)):
            if (maps[i].mult == maps[j].mult + maps[k].mult
                    and maps[i].shift == maps[j].shift + maps[k].shift):
                return True
        return False
    raise ValueError(f"not a surface locus: {surface}")


def solve_linear(a: int, t: TorsionPt, m: int = DEFAULT_LEVEL) -> frozenset:
    """All x in E[m] with a*x = t, complete or an error.

    The full solution set of a*x = t (a != 0) is a coset x0 + E[|a|] whose
    points all have order |a| * order(t) up to the coset's torsion, so it
    lies inside E[m] exactly when |a| * order(t) divides m; any other m would
    return a wrong (partial or empty) answer and raises instead.
    """
    check_level(m)
    if a == 0:
        if t == ORIGIN:
            return frozenset(grid(m))
        return frozenset()
    needed = abs(a) * t.order
    if m % needed:
        raise InsufficientLevelError(
            f"solutions of {a}*x = {t} live in E[{needed}], not complete in E[{m}]")
    return frozenset(x for x in grid(m) if a * x == t)


# ---------------------------------------------------------------------------
# The fibre intersection table and the base point enumeration
# ---------------------------------------------------------------------------

def fibre_intersection_rule(p: TorsionPt, q: TorsionPt):
    """Intersection of the two elliptic fibrations attached to distinct
    nonzero three-torsion points p and q: the common fibres, with
    multiplicities.

    When q = -p the two fibrations share the three curves of the remaining
    classes, transversally.  Otherwise they meet transversally along the
    class of p + q and with simple contact along the class of p - q.
    """
    if p.level != 3 or q.level != 3 or p == q:
        raise ValueError("the rule needs two distinct nonzero three-torsion points")
    if q == -p:
        skip = class_rep(p)
        return tuple((rep, 1) for rep in CLASS_REPS if rep != skip)
    return tuple(sorted(((class_rep(p + q), 1), (class_rep(p - q), 2))))


def build_intersection_table() -> dict:
    """The rule evaluated on all 28 unordered pairs of distinct nonzero
    three-torsion points."""
    table = {}
    for i, p in enumerate(THREE_TORSION):
        for q in THREE_TORSION[i + 1:]:
            table[frozenset((p, q))] = fibre_intersection_rule(p, q)
    return table


def common_fibre_classes(points) -> tuple:
    """Classes of fibres shared by every fibration in `points` (all four
    classes when `points` is empty)."""
    excluded = {class_rep(p) for p in points}
    return tuple(rep for rep in CLASS_REPS if rep not in excluded)


def intersection_term(xs, ds, m: int = DEFAULT_LEVEL) -> frozenset:
    """One term of the expanded eightfold intersection: the fibrations of the
    points in `xs` intersected with the divisors D_u for u in `ds`.

    The fibrations cut the union of their common fibres; at least four
    distinct D anchors kill the term outright (a triple has three points),
    exactly three pin a single candidate triple, and two leave a curve-level
    computation in E[m].
    """
    check_level(m)
    anchors = sorted(set(ds))
    common = common_fibre_classes(xs)
    if not common:
        return frozenset()
    if len(anchors) >= 4:
        return frozenset()
    if len(anchors) == 3:
        candidate = Triple.of(*anchors)
        if any(member(locus_N(rep), candidate) for rep in common):
            return frozenset((candidate,))
        return frozenset()
    if len(anchors) == 2:
        d1, d2 = (locus_D(u) for u in anchors)
        out = set()
        for rep in common:
            for t in intersect_loci(locus_N(rep), d1, m):
                if member(d2, t):
                    out.add(t)
        return frozenset(out)
    raise ValueError("a term needs at least two divisor constraints to be finite")


@dataclass(frozen=True)
class TermRecord:
    xs: tuple
    ds: tuple
    triples: frozenset


@dataclass(frozen=True)
class BasePointReport:
    base_points: frozenset
    terms: tuple
    nonempty_terms: tuple
    candidate_b_terms: tuple


def enumerate_base_points(m: int = DEFAULT_LEVEL) -> BasePointReport:
    """Expand the eightfold intersection of (fibration union boundary
    divisor) over all nonzero three-torsion points into 256 terms and
    collect the surviving triples.

    For each three-torsion point eta one factor contributes either its
    elliptic fibration or the boundary divisor D at 2*eta.  The expansion
    evaluates every choice exactly; the result is the set of common points
    of the eight original unions.
    """
    check_level(m)
    terms = []
    points = set()
    for choice in product((True, False), repeat=8):
        xs = tuple(eta for eta, chosen in zip(THREE_TORSION, choice) if chosen)
        ds = tuple(sorted({2 * eta for eta, chosen in zip(THREE_TORSION, choice)
                           if not chosen}))
        if len(ds) >= 4 or not common_fibre_classes(xs):
            triples = frozenset()
        else:
            triples = intersection_term(xs, ds, m)
        terms.append(TermRecord(xs, ds, triples))
        points.update(triples)
    nonempty = tuple(t for t in terms if t.triples)
    b_candidates = tuple(t for t in terms if len(t.ds) == 3)
    return BasePointReport(frozenset(points), tuple(terms), nonempty, b_candidates)


def expected_base_points() -> frozenset:
    """The four triples {0, eta, 2 eta}, one per three-torsion class."""
    return frozenset(Triple.of(ORIGIN, ETA[i], 2 * ETA[i]) for i in (1, 2, 3, 4))


# ---------------------------------------------------------------------------
# The meeting table as printed in its fixture file
# ---------------------------------------------------------------------------

_PT3 = re.compile(r"\((\d),\s*(\d)\)")
_NCURVE = re.compile(r"N\((\d),\s*(\d)\)\*(\d)")


def _parse_pt3(text: str) -> TorsionPt:
    m = _PT3.fullmatch(text.strip())
    if not m:
        raise ValueError(f"bad three-torsion coordinates: {text!r}")
    return TorsionPt.make(3, int(m.group(1)), int(m.group(2)))


def printed_intersection_table() -> dict:
    """The table from bielliptic_table.txt: 28 unordered pairs of nonzero
    three-torsion classes -> ((fibre class, multiplicity), ...)."""
    table = {}
    for label, value, _ in load_entries("bielliptic_table.txt"):
        _, ptext, qtext = label.split()
        p, q = _parse_pt3(ptext), _parse_pt3(qtext)
        curves = []
        for piece in value.split("+"):
            m = _NCURVE.fullmatch(piece.strip())
            if not m:
                raise ValueError(f"bad table value piece: {piece!r}")
            curves.append((TorsionPt.make(3, int(m.group(1)), int(m.group(2))),
                           int(m.group(3))))
        table[frozenset((p, q))] = tuple(sorted(curves))
    return table
