"""The order-27 group acting on plane cubics: character spaces and the
intersection pattern of the eigencubics with the four triangle members of the
invariant pencil.

The group is generated by the cyclic coordinate shift and the diagonal
automorphism diag(1, w^2, w); both have order three and commute up to the
scalar w, so degree-three forms carry an honest action of the quotient
(Z/3)^2 and split into nine character spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .curves import Form, ProjPoint, fulton_mult, line_intersection, parse_form
from .field import Eis, w_pow
from .fixtures import load_entries

Char = tuple[int, int]

CHARACTERS: tuple[Char, ...] = tuple((a, b) for a in range(3) for b in range(3))
NONZERO_CHARS: tuple[Char, ...] = tuple(c for c in CHARACTERS if c != (0, 0))
TRIANGLE_CLASSES: tuple[Char, ...] = ((1, 0), (0, 1), (1, 1), (1, 2))

DEGREE3_MONOMIALS = tuple(sorted(
    ((i, j, 3 - i - j) for i in range(4) for j in range(4 - i)), reverse=True))


def act_sigma(form: Form) -> Form:
    """Coordinate shift x_i -> x_{i-1}: exponents (a, b, c) -> (b, c, a)."""
    return Form({(m[1], m[2], m[0]): c for m, c in form.coeffs.items()})


def act_tau(form: Form) -> Form:
    """Diagonal map x_i -> w^{-i} x_i: the coefficient of x0^a x1^b x2^c is
    scaled by w^{-(b + 2c)}."""
    return Form({m: w_pow(-(m[1] + 2 * m[2])) * c for m, c in form.coeffs.items()})


def act(form: Form, s: int, t: int) -> Form:
    """Apply the diagonal map t times, then the shift s times."""
    out = form
    for _ in range(t % 3):
        out = act_tau(out)
    for _ in range(s % 3):
        out = act_sigma(out)
    return out


def char_class(char: Char) -> Char:
    """Representative of {c, -c} among the four triangle class labels."""
    a, b = char[0] % 3, char[1] % 3
    if (a, b) == (0, 0):
        raise ValueError("the zero character has no triangle class")
    return min((a, b), ((-a) % 3, (-b) % 3))


def char_add(c1: Char, c2: Char) -> Char:
    return ((c1[0] + c2[0]) % 3, (c1[1] + c2[1]) % 3)


def char_neg(c: Char) -> Char:
    return ((-c[0]) % 3, (-c[1]) % 3)


def character_projection(form: Form, char: Char) -> Form:
    """Average of the nine translates against the character (a, b)."""
    a, b = char
    out = Form({})
    for s in range(3):
        for t in range(3):
            out = out + act(form, s, t).scale(w_pow(-(a * s + b * t)))
    return out.scale(Eis(Fraction(1, 9)))


def _form_vector(form: Form) -> list[Eis]:
    return [form.coeffs.get(m, Eis(0)) for m in DEGREE3_MONOMIALS]


def _vector_form(vec) -> Form:
    return Form(dict(zip(DEGREE3_MONOMIALS, vec)))


def _rref(rows: list[list[Eis]]) -> list[list[Eis]]:
    rows = [row[:] for row in rows if any(row)]
    pivot_row = 0
    width = len(DEGREE3_MONOMIALS)
    for col in range(width):
        src = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if src is None:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [inv * x for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [row for row in rows[:pivot_row] if any(row)]


@lru_cache(maxsize=None)
def decompose_degree3() -> dict:
    """Reduced monic basis of each character space of degree-three forms.

    The nine spaces together have dimension ten: the invariant space is a
    pencil and every nonzero character space is a line.
    """
    out = {}
    for char in CHARACTERS:
        projections = []
        for mono in DEGREE3_MONOMIALS:
            proj = character_projection(Form({mono: Eis(1)}), char)
            if proj:
                projections.append(_form_vector(proj))
        out[char] = tuple(_vector_form(row) for row in _rref(projections))
    return out


# ---------------------------------------------------------------------------
# Fixtures: the eigencubics and triangles as printed in hesse_fixtures.txt
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Triangle:
    label: Char
    factors: tuple[Form, Form, Form]
    product: Form
    vertices: tuple[ProjPoint, ProjPoint, ProjPoint]


def _parse_char(text: str) -> Char:
    inner = text.strip()[1:-1]
    a, b = inner.split(",")
    return (int(a), int(b))


@lru_cache(maxsize=None)
def printed_eigencubics() -> dict:
    """Fixture forms: char -> tuple of monic forms (a pair for the invariant
    character, a single form for the rest)."""
    table: dict[Char, list[Form]] = {}
    for label, value, _ in load_entries("hesse_fixtures.txt"):
        if not label.startswith("cubic"):
            continue
        char = _parse_char(label.split()[1])
        table.setdefault(char, []).append(parse_form(value))
    return {char: tuple(forms) for char, forms in table.items()}


@lru_cache(maxsize=None)
def triangles() -> tuple[Triangle, ...]:
    out = []
    for label, value, _ in load_entries("hesse_fixtures.txt"):
        if not label.startswith("triangle"):
            continue
        char = _parse_char(label.split()[1])
        factors = tuple(parse_form(part) for part in value.split(";"))
        if len(factors) != 3 or any(f.degree != 1 for f in factors):
            raise ValueError(f"triangle {char} must have three line factors")
        product = factors[0] * factors[1] * factors[2]
        verts = tuple(line_intersection(factors[i], factors[j])
                      for i, j in ((0, 1), (0, 2), (1, 2)))
        out.append(Triangle(char, factors, product, verts))
    return tuple(out)


def triangle_by_class(cls: Char) -> Triangle:
    for tri in triangles():
        if tri.label == cls:
            return tri
    raise KeyError(cls)


def pencil_generators() -> tuple[Form, Form]:
    """The two invariant cubics spanning the pencil."""
    return printed_eigencubics()[(0, 0)]


def in_pencil(form: Form) -> bool:
    f0, f_inf = pencil_generators()
    lam = form.coeffs.get((3, 0, 0), Eis(0))
    mu = form.coeffs.get((1, 1, 1), Eis(0))
    return form == f0.scale(lam) + f_inf.scale(mu)


def base_points() -> tuple[ProjPoint, ...]:
    """The nine common points of all pencil members."""
    pts = []
    for k in range(3):
        m = -w_pow(k)
        pts.extend((ProjPoint(0, 1, m), ProjPoint(1, 0, m), ProjPoint(1, m, 0)))
    return tuple(pts)


# ---------------------------------------------------------------------------
# Vertex containment and pencil pair intersections, checked pointwise
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContainmentCheck:
    """One (eigencubic, triangle) pair: the cubic contains all three triangle
    vertices exactly when the triangle class differs from the cubic's, and
    then with local multiplicity three at each vertex."""

    cubic: Char
    triangle: Char
    expected_contained: bool
    contained: bool
    vertex_mults: tuple
    ok: bool


def verify_vertex_containment() -> tuple[ContainmentCheck, ...]:
    eigen = printed_eigencubics()
    checks = []
    for char in NONZERO_CHARS:
        curve = eigen[char][0]
        for tri in triangles():
            expected = tri.label != char_class(char)
            mults = tuple(fulton_mult(curve, tri.product, v) for v in tri.vertices)
            contained = all(not curve.evaluate(v) for v in tri.vertices)
            ok = contained == expected and (mults == (3, 3, 3) if expected else True)
            checks.append(ContainmentCheck(
                char, tri.label, expected, contained, mults, ok))
    return tuple(checks)


@dataclass(frozen=True)
class PairCheck:
    """One unordered pair of eigencubics: their nine Bezout intersection
    points all sit at triangle vertices, in the pattern predicted from the
    character sum and difference."""

    labels: tuple[Char, Char]
    antipodal: bool
    expected: tuple          # ((triangle class, per-vertex mult), ...)
    actual: tuple            # ((triangle class, (m, m, m)), ...)
    total: int
    bezout: int
    ok: bool


def expected_pair_pattern(c1: Char, c2: Char) -> dict:
    if c2 == char_neg(c1):
        skip = char_class(c1)
        return {cls: 1 for cls in TRIANGLE_CLASSES if cls != skip}
    return {char_class(char_add(c1, c2)): 1,
            char_class(char_add(c1, char_neg(c2))): 2}


def verify_pencil_pairs() -> tuple[PairCheck, ...]:
    eigen = printed_eigencubics()
    checks = []
    for c1, c2 in combinations(NONZERO_CHARS, 2):
        f, g = eigen[c1][0], eigen[c2][0]
        pattern = expected_pair_pattern(c1, c2)
        actual = []
        total = 0
        ok = True
        for tri in triangles():
            mults = tuple(fulton_mult(f, g, v) for v in tri.vertices)
            actual.append((tri.label, mults))
            want = pattern.get(tri.label, 0)
            if mults != (want, want, want):
                ok = False
            if all(isinstance(m, int) for m in mults):
                total += sum(mults)
            else:
                ok = False
        bezout = f.degree * g.degree
        if total != bezout:
            ok = False
        checks.append(PairCheck(
            (c1, c2), c2 == char_neg(c1),
            tuple(sorted(pattern.items())), tuple(actual), total, bezout, ok))
    return tuple(checks)
