"""Even overlattices from isotropic glue, and the rank-24 unimodular lattices.

The full census of 24 root systems is embedded data; lattices are built on
demand, only for the six entries whose root system contains an E_r summand.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm

from . import intlinalg
from .lattices import (
    DiscriminantData,
    FiniteQuadraticForm,
    Lattice,
    Sublattice,
    Vector,
    direct_sum,
    discriminant_data,
    standard_lattice,
)
from .roots import (
    RootSystemLabel,
    ade_coxeter_number,
    identify_root_system,
    roots,
)


@dataclass(frozen=True)
class GlueGroup:
    """An isotropic subgroup of a discriminant form, by generator representatives.

    Generators are rational coordinate vectors in the basis of the lattice
    being glued (elements of the dual lattice).
    """

    ambient: FiniteQuadraticForm
    generators: tuple[tuple[Fraction, ...], ...]

    def order_bound(self) -> int:
        o = 1
        for _ in self.generators:
            o *= self.ambient.order
        return o


@dataclass(frozen=True)
class NiemeierEntry:
    root_system: RootSystemLabel
    coxeter_number: int

    def root_count(self) -> int:
        return 24 * self.coxeter_number


@dataclass(frozen=True)
class GluedLattice:
    """Result of an overlattice construction, with basis bookkeeping.

    `new_in_old` expresses the new basis in (rational) old coordinates;
    `old_in_new` expresses the old basis integrally in the new one.
    """

    lattice: Lattice
    new_in_old: tuple[tuple[Fraction, ...], ...]
    old_in_new: tuple[tuple[int, ...], ...]
    glue_order: int

    def old_vector_in_new(self, v: Vector) -> Vector:
        m = [list(r) for r in self.old_in_new]
        return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(v)))


class GlueError(ValueError):
    """Invalid glue: non-isotropic vector or non-integral resulting pairings."""


def overlattice(lat: Lattice, glue: GlueGroup) -> GluedLattice:
    """Even overlattice generated by L and the glue representatives.

    Index over L equals the glue order; the discriminant order drops by its
    square. Errors out if a glue vector is not isotropic for the quadratic
    form or the resulting pairings are not integral.
    """
    if not lat.is_even():
        raise GlueError("gluing is defined here for even lattices only")
    n = lat.rank
    g = [list(r) for r in lat.gram]
    rows = [[Fraction(x) for x in row] for row in intlinalg.identity(n)]
    for gen in glue.generators:
        pairings = [sum(gen[i] * g[i][j] for i in range(n)) for j in range(n)]
        if any(p.denominator != 1 for p in pairings):
            raise GlueError("glue vector does not lie in the dual lattice")
        nrm = sum(gen[i] * g[i][j] * gen[j] for i in range(n) for j in range(n))
        if nrm % 2 != 0:
            raise GlueError("glue vector is not isotropic (norm not in 2Z)")
        rows.append(list(gen))
    den = lcm(*[x.denominator for row in rows for x in row])
    int_rows = [[int(x * den) for x in row] for row in rows]
    h = intlinalg.hnf(int_rows)
    if len(h) != n:
        raise GlueError("glue vectors do not preserve the rank (bug)")
    new_in_old = [[Fraction(x, den) for x in row] for row in h]
    gram_frac = intlinalg.mat_mul(intlinalg.mat_mul(new_in_old, g),
                                  intlinalg.transpose(new_in_old))
    if any(x.denominator != 1 for row in gram_frac for x in row):
        raise GlueError("resulting pairings are not integral: glue is not a subgroup"
                        " of the discriminant form")
    new_gram = tuple(tuple(int(x) for x in row) for row in gram_frac)
    result = Lattice(new_gram, name=(lat.name or "L") + " glued")
    if not result.is_even():
        raise GlueError("resulting lattice is odd: glue vector not isotropic mod 2Z")
    old_det = abs(lat.det())
    new_det = abs(result.det())
    index_sq = old_det // new_det if new_det else 0
    index = isqrt(index_sq)
    if index * index != index_sq or new_det * index_sq != old_det:
        raise ArithmeticError("overlattice index is not integral (bug)")
    b_inv = intlinalg.rational_inverse(new_in_old)
    old_in_new = tuple(tuple(int(b_inv[i][j]) for j in range(n)) for i in range(n))
    return GluedLattice(
        lattice=result,
        new_in_old=tuple(tuple(row) for row in new_in_old),
        old_in_new=old_in_new,
        glue_order=index,
    )


_NIEMEIER_TABLE = [
    ("D24", 46), ("D16+E8", 30), ("E8^3", 30), ("A24", 25), ("D12^2", 22),
    ("A17+E7", 18), ("D10+E7^2", 18), ("A15+D9", 16), ("D8^3", 14),
    ("A12^2", 13), ("A11+D7+E6", 12), ("E6^4", 12), ("A9^2+D6", 10),
    ("D6^4", 10), ("A8^3", 9), ("A7^2+D5^2", 8), ("A6^4", 7),
    ("A5^4+D4", 6), ("D4^6", 6), ("A4^6", 5), ("A3^8", 4), ("A2^12", 3),
    ("A1^24", 2), ("-", 0),
]


@lru_cache(maxsize=1)
def niemeier_table() -> tuple[NiemeierEntry, ...]:
    """The 24 root systems of the even unimodular rank-24 lattices.

    The last entry is the rootless one. Every entry satisfies the census
    invariant: total root count equals 24 times the common Coxeter number.
    """
    entries = []
    for text, h in _NIEMEIER_TABLE:
        label = RootSystemLabel.parse(text)
        for family, n in label.components:
            if ade_coxeter_number(family, n) != h:
                raise AssertionError(f"table entry {text} has mixed Coxeter numbers")
        if label.root_count() != 24 * h:
            raise AssertionError(f"table entry {text} fails the 24h census")
        entries.append(NiemeierEntry(root_system=label, coxeter_number=h))
    return tuple(entries)


def entries_with_e_summand() -> tuple[NiemeierEntry, ...]:
    """The entries whose root system contains an E6, E7 or E8 component."""
    return tuple(e for e in niemeier_table()
                 if any(f == "E" for f, _ in e.root_system.components))


def isotropic_subgroups(data: DiscriminantData, order: int):
    """All isotropic subgroups of the given order, as sorted element tuples.

    Exhaustive search; feasible for the discriminant forms in play here
    (order at most 144). Deterministic order.
    """
    form = data.form
    if order == 1:
        yield ((tuple(0 for _ in form.invariant_factors)),) if form.invariant_factors else ((),)
        return
    zero = tuple(0 for _ in form.invariant_factors)
    iso = [e for e in form.elements() if e != zero and form.q_of(e) == 0]
    seen = set()

    def closure(gens):
        elems = {zero}
        frontier = [zero]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = form.add(cur, g)
                if nxt not in elems:
                    elems.add(nxt)
                    frontier.append(nxt)
        return elems

    def extend(start, gens, current):
        if len(current) == order:
            key = tuple(sorted(current))
            if key not in seen:
                seen.add(key)
                yield key
            return
        if len(current) > order or order % len(current):
            return
        for i in range(start, len(iso)):
            g = iso[i]
            if g in current:
                continue
            bigger = closure(gens + [g])
            if len(bigger) > order or order % len(bigger):
                continue
            if any(form.q_of(e) != 0 for e in bigger):
                continue
            yield from extend(i + 1, gens + [g], bigger)

    yield from extend(0, [], {zero})


def _component_lattice(family: str, n: int) -> Lattice:
    return standard_lattice(f"{family}{n}")


@lru_cache(maxsize=None)
def construct_niemeier(entry: NiemeierEntry) -> GluedLattice:
    """Build the even unimodular lattice for one of the six E-containing entries.

    Glues the root-lattice direct sum along an isotropic subgroup of its
    discriminant form of the right order; the first candidate (in canonical
    search order) that is even, unimodular and adds no roots is returned.
    """
    if not any(f == "E" for f, _ in entry.root_system.components):
        raise ValueError("only the six E-containing entries are supported")
    comps = [_component_lattice(f, n) for f, n in entry.root_system.components]
    root_sum = direct_sum(*comps, name=str(entry.root_system))
    data = discriminant_data(root_sum)
    disc_order = data.form.order
    glue_order = isqrt(disc_order)
    if glue_order * glue_order != disc_order:
        raise ArithmeticError("discriminant order is not a perfect square (bad entry)")
    for subgroup in isotropic_subgroups(data, glue_order):
        gens = _minimal_generators(data.form, subgroup)
        glue = GlueGroup(ambient=data.form,
                         generators=tuple(data.lift(e) for e in gens))
        try:
            glued = overlattice(root_sum, glue)
        except GlueError:
            continue
        lat = glued.lattice
        if abs(lat.det()) != 1:
            continue
        if len(roots(lat)) != entry.root_count():
            continue
        return GluedLattice(
            lattice=Lattice(lat.gram, name=f"Niemeier({entry.root_system})"),
            new_in_old=glued.new_in_old,
            old_in_new=glued.old_in_new,
            glue_order=glued.glue_order,
        )
    raise RuntimeError(f"no valid glue found for {entry.root_system} (data or search bug)")


def _minimal_generators(form: FiniteQuadraticForm, subgroup):
    """A small generating set of a subgroup given as a tuple of elements."""
    zero = tuple(0 for _ in form.invariant_factors)
    gens = []
    generated = {zero}
    for e in sorted(subgroup, key=lambda x: (-form.element_order(x), x)):
        if e in generated:
            continue
        gens.append(e)
        frontier = list(generated)
        while frontier:
            cur = frontier.pop()
            nxt = form.add(cur, e)
            while nxt not in generated:
                generated.add(nxt)
                frontier.append(nxt)
                nxt = form.add(nxt, e)
        if len(generated) == len(subgroup):
            break
    return gens


@lru_cache(maxsize=None)
def embed_e6(lat: Lattice) -> Sublattice:
    """An E6 root subsystem inside an E_r component of the root system of L.

    Greedy Dynkin-subgraph search over the roots of the chosen component;
    the returned basis consists of six simple roots, so the induced Gram is
    the E6 Cartan matrix exactly.
    """
    all_roots = roots(lat)
    label = identify_root_system(lat, all_roots)
    if not any(f == "E" for f, _ in label.components):
        raise ValueError("root system of the input has no E_r component")
    component_roots = _component_of_family(lat, all_roots, "E")
    g = [list(r) for r in lat.gram]
    paired = {v: intlinalg.mat_vec(g, list(v)) for v in component_roots}
    target = standard_lattice("E6").gram
    chosen: list[Vector] = []

    def extend(k: int) -> bool:
        if k == 6:
            return True
        for cand in component_roots:
            if all(sum(a * b for a, b in zip(paired[chosen[j]], cand)) == target[k][j]
                   for j in range(k)):
                chosen.append(cand)
                if extend(k + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        raise RuntimeError("no E6 subsystem found (bug: component census said E_r)")
    return Sublattice(lat, tuple(chosen))


def _component_of_family(lat: Lattice, all_roots, family: str):
    """Roots of the first irreducible component of the given family (canonical order)."""
    halves = {}
    for v in all_roots:
        first = next((x for x in v if x), 0)
        canon = v if first > 0 else tuple(-x for x in v)
        halves[canon] = None
    halves = list(halves)
    g = [list(r) for r in lat.gram]
    gv = [intlinalg.mat_vec(g, list(v)) for v in halves]
    m = len(halves)
    visited = [False] * m
    for start in range(m):
        if visited[start]:
            continue
        queue = [start]
        visited[start] = True
        comp = [start]
        while queue:
            cur = queue.pop()
            w = gv[cur]
            for other in range(m):
                if not visited[other] and sum(a * b for a, b in zip(halves[other], w)):
                    visited[other] = True
                    queue.append(other)
                    comp.append(other)
        vectors = [halves[i] for i in comp]
        rk = intlinalg.rank([list(v) for v in vectors])
        count = 2 * len(comp)
        if family == "E" and rk in (6, 7, 8) and count == {6: 72, 7: 126, 8: 240}[rk]:
            out = []
            for v in sorted(vectors):
                out.append(v)
                out.append(tuple(-x for x in v))
            return out
    raise ValueError(f"no component of family {family} found")
