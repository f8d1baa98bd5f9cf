"""Integral lattices: constructors, complements, saturation, discriminant forms.

A lattice is a free Z-module with an integer Gram matrix on a fixed basis.
Vectors are plain integer tuples in that basis. All values are immutable
and all operations are pure functions.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from . import intlinalg
from .intlinalg import hnf, kernel, rational_inverse, smith_normal_form

Vector = tuple[int, ...]

_JSON_INT_LIMIT = 2 ** 53


class DegenerateLatticeError(ValueError):
    """Raised when an operation requires det != 0."""


@dataclass(frozen=True)
class Lattice:
    """Finitely generated free abelian group with a symmetric integer Gram matrix."""

    gram: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        n = len(self.gram)
        for row in self.gram:
            if len(row) != n:
                raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return intlinalg.det(self.gram)

    def is_even(self) -> bool:
        # x^2 parity is determined by the Gram diagonal
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_degenerate(self) -> bool:
        return self.det() == 0

    def signature(self) -> tuple[int, int]:
        pos, neg, zero = intlinalg.signature(self.gram)
        if zero:
            raise DegenerateLatticeError("degenerate form has no signature pair")
        return pos, neg

    def inner(self, x: Vector, y: Vector) -> int:
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError("vector length does not match lattice rank")
        g = self.gram
        return sum(x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def norm(self, x: Vector) -> int:
        return self.inner(x, x)

    def __repr__(self):
        label = self.name or f"rank-{self.rank} lattice"
        return f"Lattice({label})"


@dataclass(frozen=True)
class Sublattice:
    """A sublattice given by basis row vectors in the ambient basis."""

    ambient: Lattice
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if intlinalg.rank(list(self.basis)) != len(self.basis):
            raise ValueError("sublattice basis rows must be linearly independent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def induced_gram(self) -> tuple[tuple[int, ...], ...]:
        b = [list(r) for r in self.basis]
        g = [list(r) for r in self.ambient.gram]
        bg = intlinalg.mat_mul(b, g)
        return tuple(tuple(r) for r in intlinalg.mat_mul(bg, intlinalg.transpose(b)))

    def lattice(self, name: str | None = None) -> Lattice:
        return Lattice(self.induced_gram(), name=name)

    def is_degenerate(self) -> bool:
        return intlinalg.det(self.induced_gram()) == 0

    def to_ambient(self, coeffs: Vector) -> Vector:
        if len(coeffs) != self.rank:
            raise ValueError("coefficient length does not match sublattice rank")
        n = self.ambient.rank
        return tuple(sum(c * row[j] for c, row in zip(coeffs, self.basis)) for j in range(n))

    def from_ambient(self, v: Vector) -> Vector:
        """Coordinates of an ambient vector in this basis; error if not in the span."""
        sol = intlinalg.solve_rational(intlinalg.transpose(list(self.basis)), list(v))
        if sol is None:
            raise ValueError("vector does not lie in the sublattice span")
        if any(x.denominator != 1 for x in sol):
            raise ValueError("vector lies in the span but not in the sublattice")
        return tuple(int(x) for x in sol)

    def contains(self, v: Vector) -> bool:
        sol = intlinalg.solve_rational(intlinalg.transpose(list(self.basis)), list(v))
        return sol is not None and all(x.denominator == 1 for x in sol)


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """Finite abelian group with Q/2Z quadratic and Q/Z bilinear values on generators.

    `invariant_factors` lists cyclic orders d_1 | d_2 | ... (all > 1); elements
    are exponent tuples mod the d_i. `q` is None for forms induced by odd
    lattices, where only the bilinear form is well defined.
    """

    invariant_factors: tuple[int, ...]
    q: tuple[Fraction, ...] | None
    b: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors) if self.invariant_factors else 1

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def elements(self):
        if not self.invariant_factors:
            yield ()
            return
        idx = [0] * len(self.invariant_factors)
        while True:
            yield tuple(idx)
            i = 0
            while i < len(idx):
                idx[i] += 1
                if idx[i] < self.invariant_factors[i]:
                    break
                idx[i] = 0
                i += 1
            else:
                return

    def add(self, x, y):
        return tuple((a + c) % d for a, c, d in zip(x, y, self.invariant_factors))

    def neg(self, x):
        return tuple((-a) % d for a, d in zip(x, self.invariant_factors))

    def element_order(self, x) -> int:
        o = 1
        for a, d in zip(x, self.invariant_factors):
            if a:
                o = o * (d // gcd(a, d)) // gcd(o, d // gcd(a, d))
        return o

    def q_of(self, x) -> Fraction:
        if self.q is None:
            raise ValueError("quadratic values not defined (odd lattice)")
        total = sum((Fraction(a * a) * qq for a, qq in zip(x, self.q)), Fraction(0))
        k = len(x)
        for i in range(k):
            for j in range(i + 1, k):
                total += 2 * x[i] * x[j] * self.b[i][j]
        return total % 2

    def b_of(self, x, y) -> Fraction:
        total = Fraction(0)
        k = len(x)
        for i in range(k):
            for j in range(k):
                total += x[i] * y[j] * self.b[i][j]
        return total % 1


@dataclass(frozen=True)
class GenusInvariants:
    """Rank, signature, parity and discriminant form: the genus comparison data."""

    rank: int
    signature: tuple[int, int]
    even: bool
    disc: FiniteQuadraticForm

    def matches(self, other: "GenusInvariants") -> bool:
        return (self.rank == other.rank
                and self.signature == other.signature
                and self.even == other.even
                and fqf_isomorphic(self.disc, other.disc))


_ADE_RE = re.compile(r"^([ADE])(\d+)$")
_DIAG_RE = re.compile(r"^diag\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)$")
_IPQ_RE = re.compile(r"^I[_ ]?[({]?\s*(\d+)\s*,\s*(\d+)\s*[)}]?$")


def cartan_gram(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of an irreducible A-D-E root lattice (roots of norm 2)."""
    if family == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2
            if i + 1 < n:
                g[i][i + 1] = g[i + 1][i] = -1
        return tuple(tuple(r) for r in g)
    if family == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = -1
        # fork: the last node attaches to node n-3
        g[n - 3][n - 1] = g[n - 1][n - 3] = -1
        return tuple(tuple(r) for r in g)
    if family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        # chain 1-3-4-5-6(-7-8) with node 2 attached to node 4
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            g[a][b] = g[b][a] = -1
        g[1][3] = g[3][1] = -1
        return tuple(tuple(r) for r in g)
    raise ValueError(f"unknown family {family!r}")


def standard_lattice(label: str) -> Lattice:
    """Named building blocks: A_n, D_n, E6/E7/E8, U, diag(...), I_{p,q}."""
    text = label.strip()
    if text == "U":
        return Lattice(((0, 1), (1, 0)), name="U")
    m = _ADE_RE.match(text)
    if m:
        family, n = m.group(1), int(m.group(2))
        return Lattice(cartan_gram(family, n), name=f"{family}{n}")
    m = _DIAG_RE.match(text)
    if m:
        entries = [int(x) for x in m.group(1).split(",")]
        g = tuple(tuple(e if i == j else 0 for j in range(len(entries)))
                  for i, e in enumerate(entries))
        return Lattice(g, name=text)
    m = _IPQ_RE.match(text)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        entries = [1] * p + [-1] * q
        g = tuple(tuple(e if i == j else 0 for j in range(len(entries)))
                  for i, e in enumerate(entries))
        return Lattice(g, name=f"I{p},{q}")
    raise ValueError(f"unrecognized lattice label {label!r}")


def direct_sum(*lattices: Lattice, name: str | None = None) -> Lattice:
    """Block-diagonal Gram; rank and signature add."""
    n = sum(l.rank for l in lattices)
    g = [[0] * n for _ in range(n)]
    off = 0
    for lat in lattices:
        for i in range(lat.rank):
            for j in range(lat.rank):
                g[off + i][off + j] = lat.gram[i][j]
        off += lat.rank
    if name is None:
        parts = [l.name or "?" for l in lattices]
        name = " + ".join(parts)
    return Lattice(tuple(tuple(r) for r in g), name=name)


def inner_product(lat: Lattice, x: Vector, y: Vector) -> int:
    return lat.inner(x, y)


def span_sublattice(lat: Lattice, vectors) -> Sublattice:
    """Sublattice generated by integer vectors, with canonical HNF basis."""
    basis = hnf([list(v) for v in vectors])
    return Sublattice(lat, tuple(tuple(r) for r in basis))


def orthogonal_complement(lat: Lattice, sub: Sublattice) -> Sublattice:
    """{x in L : x.s = 0 for all s in S}, canonical HNF basis, primitive in L."""
    if lat.is_degenerate():
        raise DegenerateLatticeError("complement requires a nondegenerate ambient lattice")
    bg = intlinalg.mat_mul([list(r) for r in sub.basis], [list(r) for r in lat.gram])
    ker = kernel(bg)
    return Sublattice(lat, tuple(tuple(r) for r in ker))


def saturation(lat: Lattice, sub: Sublattice) -> Sublattice:
    """Primitive closure QS intersect L; idempotent, finite index over S."""
    ker = kernel([list(r) for r in sub.basis])
    if not ker:
        sat_basis = hnf(intlinalg.identity(lat.rank))
    else:
        sat_basis = kernel(ker)
    return Sublattice(lat, tuple(tuple(r) for r in sat_basis))


def saturation_index(lat: Lattice, sub: Sublattice) -> int:
    """[sat(S) : S]; 1 iff S is primitive."""
    sat = saturation(lat, sub)
    d_sub = abs(intlinalg.det(intlinalg.mat_mul(
        [list(r) for r in sub.basis],
        intlinalg.transpose([list(r) for r in sub.basis]))))
    d_sat = abs(intlinalg.det(intlinalg.mat_mul(
        [list(r) for r in sat.basis],
        intlinalg.transpose([list(r) for r in sat.basis]))))
    # [sat:S]^2 = gram-det ratio of the coordinate rows
    ratio = Fraction(d_sub, d_sat)
    root = intlinalg.floor_sqrt_fraction(ratio)
    if root * root != ratio:
        raise ArithmeticError("saturation index is not integral (bug)")
    return root


@dataclass(frozen=True)
class DiscriminantData:
    """Discriminant form together with rational lifts of its generators.

    `lifts[i]` is a representative of generator i in L*, as rational
    coordinates in the basis of L.
    """

    form: FiniteQuadraticForm
    lifts: tuple[tuple[Fraction, ...], ...]

    def lift(self, element) -> tuple[Fraction, ...]:
        n = len(self.lifts[0]) if self.lifts else 0
        out = [Fraction(0)] * n
        for a, gen in zip(element, self.lifts):
            for j in range(n):
                out[j] += a * gen[j]
        return tuple(out)


def discriminant_data(lat: Lattice) -> DiscriminantData:
    """Discriminant form with generator lifts, via Smith normal form."""
    if lat.is_degenerate():
        raise DegenerateLatticeError("discriminant group requires det != 0")
    g = [list(r) for r in lat.gram]
    d, p, _q = smith_normal_form(g)
    p_inv = rational_inverse(p)
    gens = []
    factors = []
    for i, di in enumerate(d):
        if di > 1:
            factors.append(di)
            gens.append([int(row[i]) for row in p_inv])
    g_inv = rational_inverse(g)
    even = lat.is_even()
    qvals = []
    bvals = [[Fraction(0)] * len(gens) for _ in range(len(gens))]
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            val = sum(Fraction(gi[a]) * g_inv[a][b] * gj[b]
                      for a in range(lat.rank) for b in range(lat.rank))
            bvals[i][j] = val % 1
            if i == j and even:
                qvals.append(val % 2)
    form = FiniteQuadraticForm(
        invariant_factors=tuple(factors),
        q=tuple(qvals) if even else None,
        b=tuple(tuple(r) for r in bvals),
    )
    lifts = tuple(tuple(sum(Fraction(gi[a]) * g_inv[a][b] for a in range(lat.rank))
                        for b in range(lat.rank)) for gi in gens)
    return DiscriminantData(form=form, lifts=lifts)


def discriminant_group(lat: Lattice) -> FiniteQuadraticForm:
    """L*/L with its torsion quadratic/bilinear values; order equals |det|."""
    return discriminant_data(lat).form


def genus_invariants(lat: Lattice) -> GenusInvariants:
    if lat.is_degenerate():
        raise DegenerateLatticeError("genus invariants require det != 0")
    return GenusInvariants(
        rank=lat.rank,
        signature=lat.signature(),
        even=lat.is_even(),
        disc=discriminant_group(lat),
    )


_FQF_ORDER_LIMIT = 100


def fqf_isomorphic(a: FiniteQuadraticForm, b: FiniteQuadraticForm) -> bool:
    """Brute-force isomorphism test preserving q (and b); orders capped at 100."""
    if a.order > _FQF_ORDER_LIMIT or b.order > _FQF_ORDER_LIMIT:
        raise ValueError(f"group order exceeds supported bound {_FQF_ORDER_LIMIT}")
    if a.invariant_factors != b.invariant_factors:
        return False
    if (a.q is None) != (b.q is None):
        return False
    if a.is_trivial():
        return True
    k = len(a.invariant_factors)
    gens_a = [tuple(1 if i == j else 0 for j in range(k)) for i in range(k)]
    elements_b = list(b.elements())

    def compatible(ga, image):
        if b.element_order(image) != a.element_order(ga):
            return False
        if a.q is not None and b.q_of(image) != a.q_of(ga):
            return False
        return True

    def extend(idx, images):
        if idx == k:
            # images define a homomorphism; bijectivity <=> they generate b
            seen = {tuple(0 for _ in range(k))}
            frontier = [tuple(0 for _ in range(k))]
            for img in images:
                new = set()
                for base in seen:
                    cur = base
                    for _ in range(b.element_order(img) - 1):
                        cur = b.add(cur, img)
                        if cur not in seen:
                            new.add(cur)
                seen |= new
            if len(seen) != b.order:
                return False
            return True
        ga = gens_a[idx]
        for cand in elements_b:
            if not compatible(ga, cand):
                continue
            ok = True
            for prev_i, prev in enumerate(images):
                if b.b_of(cand, prev) != a.b[idx][prev_i] % 1:
                    ok = False
                    break
            if ok and extend(idx + 1, images + [cand]):
                return True
        return False

    return extend(0, [])


def vector_divisibility(lat: Lattice, v: Vector) -> int:
    """gcd of the pairings of v with a basis of L."""
    if not any(v):
        raise ValueError("divisibility of the zero vector is undefined")
    pairings = intlinalg.mat_vec([list(r) for r in lat.gram], list(v))
    return gcd(*pairings) if len(pairings) > 1 else abs(pairings[0])


def is_primitive(v: Vector) -> bool:
    nz = [x for x in v if x]
    if not nz:
        return False
    return gcd(*nz) == 1 if len(nz) > 1 else abs(nz[0]) == 1


# -- JSON interchange ---------------------------------------------------------
#
# {"name": str?, "gram": [[int, ...], ...]}. Entries are JSON numbers when
# |x| < 2^53 and decimal strings otherwise, so round trips are bit exact.

def _encode_int(x: int):
    return x if abs(x) < _JSON_INT_LIMIT else str(x)


def _decode_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ValueError(f"gram entries must be integers or decimal strings, got {x!r}")
    return int(x)


def lattice_to_json(lat: Lattice) -> str:
    doc = {"gram": [[_encode_int(x) for x in row] for row in lat.gram]}
    if lat.name is not None:
        doc = {"name": lat.name, **doc}
    return json.dumps(doc)


def lattice_from_json(text: str) -> Lattice:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "gram" not in doc:
        raise ValueError("lattice document must be an object with a 'gram' key")
    gram = tuple(tuple(_decode_int(x) for x in row) for row in doc["gram"])
    return Lattice(gram, name=doc.get("name"))
