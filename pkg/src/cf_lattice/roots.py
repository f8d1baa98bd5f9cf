"""Short-vector enumeration, root-system identification, reflections.

Enumeration is Fincke-Pohst over an exact rational LDL^T decomposition;
definite lattices only. Output order is canonical (sign fixed by first
nonzero coordinate, then lexicographic) so results are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from . import intlinalg
from .intlinalg import floor_sqrt_fraction, rational_inverse
from .lattices import (
    Lattice,
    Vector,
    orthogonal_complement,
    span_sublattice,
    vector_divisibility,
)

_ROOT_COUNTS = {"A": lambda n: n * (n + 1), "D": lambda n: 2 * n * (n - 1),
                "E": lambda n: {6: 72, 7: 126, 8: 240}[n]}

_COXETER = {"A": lambda n: n + 1, "D": lambda n: 2 * n - 2,
            "E": lambda n: {6: 12, 7: 18, 8: 30}[n]}


def ade_root_count(family: str, n: int) -> int:
    return _ROOT_COUNTS[family](n)


def ade_coxeter_number(family: str, n: int) -> int:
    return _COXETER[family](n)


@dataclass(frozen=True)
class RootSystemLabel:
    """Formal multiset of irreducible A-D-E component labels."""

    components: tuple[tuple[str, int], ...]

    @staticmethod
    def of(*components: tuple[str, int]) -> "RootSystemLabel":
        return RootSystemLabel(tuple(sorted(components)))

    @staticmethod
    def parse(text: str) -> "RootSystemLabel":
        comps = []
        text = text.strip()
        if text in ("", "0", "-"):
            return RootSystemLabel(())
        for part in text.split("+"):
            part = part.strip()
            if "^" in part:
                base, _, mult = part.partition("^")
                mult = int(mult)
            else:
                base, mult = part, 1
            family, n = base[0], int(base[1:])
            if family not in _ROOT_COUNTS:
                raise ValueError(f"unknown root-system family in {part!r}")
            comps.extend([(family, n)] * mult)
        return RootSystemLabel(tuple(sorted(comps)))

    def root_count(self) -> int:
        return sum(ade_root_count(f, n) for f, n in self.components)

    def total_rank(self) -> int:
        return sum(n for _, n in self.components)

    def is_empty(self) -> bool:
        return not self.components

    def __str__(self):
        if not self.components:
            return "-"
        parts = []
        seen = []
        for comp in self.components:
            if seen and seen[-1][0] == comp:
                seen[-1][1] += 1
            else:
                seen.append([comp, 1])
        for (family, n), mult in seen:
            parts.append(f"{family}{n}" + (f"^{mult}" if mult > 1 else ""))
        return "+".join(parts)


@dataclass(frozen=True)
class Isometry:
    """Integer matrix preserving the Gram matrix; acts on coordinates by x -> M x."""

    lattice: Lattice
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = [list(r) for r in self.matrix]
        g = [list(r) for r in self.lattice.gram]
        mtgm = intlinalg.mat_mul(intlinalg.mat_mul(intlinalg.transpose(m), g), m)
        if mtgm != g:
            raise ValueError("matrix does not preserve the Gram matrix")

    def apply(self, v: Vector) -> Vector:
        return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in self.matrix)

    def compose(self, other: "Isometry") -> "Isometry":
        m = intlinalg.mat_mul([list(r) for r in self.matrix], [list(r) for r in other.matrix])
        return Isometry(self.lattice, tuple(tuple(r) for r in m))

    def det(self) -> int:
        return intlinalg.det(self.matrix)

    def is_identity(self) -> bool:
        n = self.lattice.rank
        return all(self.matrix[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))

    def is_involution(self) -> bool:
        return self.compose(self).is_identity()


def _ldl(gram):
    """G = L^T D L with unit upper-triangular L; errors unless positive definite."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise ValueError("lattice is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / d[i]
        for k in range(i + 1, n):
            for l in range(k, n):
                a[k][l] -= d[i] * mu[i][k] * mu[i][l]
                a[l][k] = a[k][l]
    return d, mu


def _enumerate_norm(gram, target: int):
    """All x (up to sign: last nonzero coordinate positive) with x^T G x = target."""
    n = len(gram)
    if n == 0:
        return []
    d, mu = _ldl(gram)
    target = Fraction(target)
    results = []
    x = [0] * n

    def descend(i, budget, zeros_so_far):
        if i < 0:
            if budget == 0 and not zeros_so_far:
                results.append(tuple(x))
            return
        c = sum(mu[i][j] * x[j] for j in range(i + 1, n))
        r = floor_sqrt_fraction(budget / d[i]) + 1
        lo_f = -c - r
        lo = int(lo_f) if lo_f.denominator == 1 else int(lo_f) - (1 if lo_f < 0 else 0)
        hi_f = -c + r
        hi = int(hi_f)
        if zeros_so_far and lo < 0:
            lo = 0
        for xi in range(lo, hi + 1):
            spent = d[i] * (xi + c) ** 2
            if spent > budget:
                continue
            x[i] = xi
            descend(i - 1, budget - spent, zeros_so_far and xi == 0)
        x[i] = 0

    descend(n - 1, target, True)
    return results


def _canonical_key(v: Vector):
    first = next((x for x in v if x), 0)
    canon = v if first > 0 else tuple(-x for x in v)
    return (canon, 0 if first > 0 else 1)


@lru_cache(maxsize=None)
def _short_vectors_cached(gram, norm: int):
    halves = _enumerate_norm(gram, norm)
    full = []
    for v in halves:
        full.append(v)
        full.append(tuple(-x for x in v))
    full.sort(key=_canonical_key)
    return tuple(full)


def short_vectors(lat: Lattice, norm: int) -> list[Vector]:
    """All vectors of the given norm, canonically sorted, closed under negation."""
    if norm <= 0:
        raise ValueError("norm must be positive")
    return list(_short_vectors_cached(lat.gram, norm))


def roots(lat: Lattice) -> list[Vector]:
    """Norm-2 vectors of a positive definite lattice."""
    return short_vectors(lat, 2)


def identify_root_system(lat: Lattice, root_list) -> RootSystemLabel:
    """Classify a set of norm-2 vectors into irreducible A-D-E components.

    Components are the connected parts of the nonzero-pairing graph; each is
    recognized by (rank, root count). A component outside the A-D-E census is
    an error: it signals a bug or an input that is not a full root system.
    """
    for v in root_list:
        if lat.norm(v) != 2:
            raise ValueError("input contains a vector of norm != 2")
    # work with one representative per +-pair; negation never changes components
    halves = {}
    for v in root_list:
        canon, _ = _canonical_key(v)
        halves[canon] = None
    halves = list(halves)
    g = [list(r) for r in lat.gram]
    gv = [intlinalg.mat_vec(g, list(v)) for v in halves]
    m = len(halves)
    visited = [False] * m
    comps = []
    for start in range(m):
        if visited[start]:
            continue
        queue = [start]
        visited[start] = True
        comp = []
        while queue:
            cur = queue.pop()
            comp.append(cur)
            w = gv[cur]
            for other in range(m):
                if not visited[other]:
                    if sum(a * b for a, b in zip(halves[other], w)):
                        visited[other] = True
                        queue.append(other)
        comps.append(comp)
    labels = []
    for comp in comps:
        vectors = [list(halves[i]) for i in comp]
        rk = intlinalg.rank(vectors)
        count = 2 * len(comp)
        family = None
        for fam in ("A", "D", "E"):
            try:
                expected = ade_root_count(fam, rk)
            except KeyError:
                continue
            if fam == "D" and rk < 4:
                continue
            if expected == count:
                family = fam
                break
        if family is None:
            raise ValueError(f"component of rank {rk} with {count} roots is not A-D-E")
        labels.append((family, rk))
    return RootSystemLabel(tuple(sorted(labels)))


def reflection(lat: Lattice, delta: Vector) -> Isometry:
    """The reflection x -> x - 2 (x.delta / delta.delta) delta.

    Integral exactly when delta is a generalized root: delta^2 | 2 delta.x
    for all x in L.
    """
    nrm = lat.norm(delta)
    if nrm == 0:
        raise ValueError("cannot reflect in an isotropic vector")
    pair = intlinalg.mat_vec([list(r) for r in lat.gram], list(delta))
    for p in pair:
        if (2 * p) % nrm:
            raise ValueError("not a generalized root: reflection is not integral")
    n = lat.rank
    m = [[(1 if i == j else 0) - delta[i] * (2 * pair[j] // nrm) for j in range(n)]
         for i in range(n)]
    return Isometry(lat, tuple(tuple(r) for r in m))


@dataclass(frozen=True)
class DiscAction:
    """Induced action of an isometry on the discriminant group, on Smith generators."""

    invariant_factors: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    def is_trivial(self) -> bool:
        k = len(self.invariant_factors)
        return all(self.matrix[i][j] % self.invariant_factors[i] == (1 if i == j else 0)
                   for i in range(k) for j in range(k))


def disc_action(lat: Lattice, iso: Isometry) -> DiscAction:
    """Action of an isometry on A_L = L*/L, expressed on the Smith generators."""
    g = [list(r) for r in lat.gram]
    d, p, _q = intlinalg.smith_normal_form(g)
    keep = [i for i, di in enumerate(d) if di > 1]
    factors = tuple(d[i] for i in keep)
    if not keep:
        return DiscAction((), ())
    p_inv = rational_inverse(p)
    gens_dual = [[int(row[i]) for row in p_inv] for i in keep]
    m_inv_t = intlinalg.transpose(rational_inverse([list(r) for r in iso.matrix]))
    action = []
    for i in keep:
        img = intlinalg.mat_vec(m_inv_t, gens_dual[keep.index(i)])
        if any(x.denominator != 1 for x in img):
            raise ArithmeticError("isometry does not act integrally on the dual (bug)")
        smith_coords = intlinalg.mat_vec(p, [int(x) for x in img])
        action.append(tuple(int(smith_coords[j]) % d[j] for j in keep))
    # action[i] is the image of generator i written in generator coordinates
    matrix = tuple(tuple(action[j][i] for j in range(len(keep))) for i in range(len(keep)))
    return DiscAction(factors, matrix)


class LongRootNotFound(RuntimeError):
    """Search bound exhausted; caller may enlarge the bound."""


def find_long_root(lam: Lattice, h: Vector, bound: int = 6) -> Vector:
    """A norm-6 vector orthogonal to h whose pairings with h-perp are divisible by 3.

    Searches for v with v.v = 1 and v.h = 1 over vectors of small support and
    bounded coefficients, then takes delta = 3v - h, which automatically makes
    h + delta divisible by 3. Deterministic: first hit in canonical order.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    n = lam.rank
    gh = intlinalg.mat_vec([list(r) for r in lam.gram], list(h))
    coeffs = []
    for a in range(1, bound + 1):
        coeffs.extend((a, -a))
    for support_size in range(1, 4):
        for positions in combinations(range(n), support_size):
            for cs in product(coeffs, repeat=support_size):
                if cs[0] < 0:
                    continue  # sign symmetry handled via the pairing below
                v = [0] * n
                for pos, c in zip(positions, cs):
                    v[pos] = c
                pair = sum(c * gh[pos] for pos, c in zip(positions, cs))
                if pair == -1:
                    v = [-c for c in v]
                elif pair != 1:
                    continue
                if lam.norm(tuple(v)) != 1:
                    continue
                delta = tuple(3 * a - b for a, b in zip(v, h))
                _check_long_root(lam, h, delta)
                return delta
    raise LongRootNotFound(f"no long root with support <= 3 and coefficients <= {bound}")


def _check_long_root(lam: Lattice, h: Vector, delta: Vector) -> None:
    if lam.inner(delta, h) != 0:
        raise AssertionError("long root candidate is not orthogonal to h")
    if lam.norm(delta) != 6:
        raise AssertionError("long root candidate has wrong norm")
    if any((a + b) % 3 for a, b in zip(h, delta)):
        raise AssertionError("h + delta is not divisible by 3")
    comp = orthogonal_complement(lam, span_sublattice(lam, [h]))
    core = comp.lattice()
    delta_in = comp.from_ambient(delta)
    if vector_divisibility(core, delta_in) % 3:
        raise AssertionError("long root candidate has divisibility not divisible by 3")
