"""Verification pipelines around the degree-3 polarized lattice model.

The model is the odd unimodular lattice I_{21,2} with polarization class
h = (1,...,1,3,3): h has square 3 and all its coordinates are odd, which
forces the orthogonal complement to be even. Everything downstream (the
determinant arrangement, the monodromy involution, boundary classification,
the degree-2/6 hyperplane dictionary inside E8, and the weight/vanishing
bookkeeping of the discriminant automorphic form) is exact arithmetic.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import gcd

from . import intlinalg
from .lattices import (
    Lattice,
    Sublattice,
    Vector,
    direct_sum,
    discriminant_data,
    genus_invariants,
    orthogonal_complement,
    saturation,
    span_sublattice,
    standard_lattice,
    vector_divisibility,
)
from .niemeier import (
    GlueGroup,
    construct_niemeier,
    embed_e6,
    entries_with_e_summand,
    isotropic_subgroups,
    overlattice,
)
from .report import VerificationReport, make_report
from .roots import (
    Isometry,
    RootSystemLabel,
    disc_action,
    find_long_root,
    identify_root_system,
    reflection,
    roots,
)


@dataclass(frozen=True)
class PeriodModel:
    """The ambient lattice, the polarization, its complement, and a long root."""

    ambient: Lattice
    polarization: Vector
    core: Sublattice          # orthogonal complement of the polarization
    long_root: Vector         # ambient coordinates; (h + delta)/3 is integral

    def core_lattice(self) -> Lattice:
        return self.core.lattice(name="polarization complement")


class ModelError(AssertionError):
    """A build-time verification of the model failed."""


@lru_cache(maxsize=1)
def build_period_model() -> PeriodModel:
    """Construct and verify the I_{21,2} model with h = (1,...,1,3,3)."""
    ambient = standard_lattice("I_{21,2}")
    h = tuple([1] * 21 + [3, 3])
    if ambient.inner(h, h) != 3:
        raise ModelError("polarization square is not 3")
    core = orthogonal_complement(ambient, span_sublattice(ambient, [h]))
    core_lat = core.lattice()
    if not core_lat.is_even():
        raise ModelError("polarization complement is not even")
    if core_lat.signature() != (20, 2):
        raise ModelError("polarization complement has wrong signature")
    disc = discriminant_data(core_lat).form
    if disc.invariant_factors != (3,):
        raise ModelError("discriminant group of the complement is not Z/3")
    delta = find_long_root(ambient, h)
    return PeriodModel(ambient=ambient, polarization=h, core=core, long_root=delta)


@dataclass(frozen=True)
class HyperplaneClass:
    """Rank-2 overlattice of the polarization attached to a primitive vector."""

    sublattice: Sublattice
    det: int
    family: str  # "H_infinity" | "H_Delta" | "other"


H_INFINITY = "H_infinity"
H_DELTA = "H_Delta"
OTHER = "other"


def classify_hyperplane(model: PeriodModel, v: Vector) -> HyperplaneClass:
    """Classify the saturated rank-2 lattice spanned by the polarization and v.

    v must be a primitive vector of the polarization complement (ambient
    coordinates). Determinant 2 corresponds to long roots, determinant 6 to
    roots; the determinant-2 structure is asserted, not assumed.
    """
    ambient = model.ambient
    h = model.polarization
    if ambient.inner(v, h) != 0:
        raise ValueError("vector is not orthogonal to the polarization")
    nz = [x for x in v if x]
    if not nz or (gcd(*nz) if len(nz) > 1 else abs(nz[0])) != 1:
        raise ValueError("vector must be primitive and nonzero")
    m = saturation(ambient, span_sublattice(ambient, [h, v]))
    d = intlinalg.det(m.induced_gram())
    family = H_INFINITY if d == 2 else H_DELTA if d == 6 else OTHER
    if family == H_INFINITY:
        if ambient.norm(v) != 6:
            raise AssertionError("determinant-2 class whose vector is not of norm 6")
        core_lat = model.core_lattice()
        if vector_divisibility(core_lat, model.core.from_ambient(v)) % 3:
            raise AssertionError("determinant-2 class whose vector is not 3-divisible")
    return HyperplaneClass(sublattice=m, det=d, family=family)


@dataclass(frozen=True)
class DeterminantSearch:
    """Outcome of the bounded witness search for realizable determinants."""

    lo: int
    hi: int
    realized: dict
    impossible: tuple[int, ...]
    unrealized_at_bound: tuple[int, ...]


def determinant_allowed(d: int) -> bool:
    """The congruence obstruction: realizable determinants are 0 or 2 mod 6."""
    return d % 6 in (0, 2)


def realizable_determinants(model: PeriodModel, lo: int, hi: int,
                            search_bound: int = 6) -> DeterminantSearch:
    """Search for positive definite rank-2 witnesses of each determinant in [lo, hi].

    Witness vectors v in the polarization complement arise as projections
    3u - (u.h) h of u with support at most 4 and coefficients bounded by
    search_bound; each candidate is confirmed through the saturated span
    exactly as classify_hyperplane does. Absence of a witness within the
    bound is reported as such; impossibility comes only from the mod-6
    congruence.
    """
    if hi > 30:
        raise ValueError("exhaustive search is validated for determinants <= 30 only")
    ambient = model.ambient
    h = model.polarization
    gh = intlinalg.mat_vec([list(r) for r in ambient.gram], list(h))
    diag = [ambient.gram[i][i] for i in range(ambient.rank)]
    n = ambient.rank
    wanted = [d for d in range(lo, hi + 1) if determinant_allowed(d)]
    realized: dict = {}

    def worth_confirming(d):
        # the saturated determinant is d / k^2 for some index k; only confirm
        # candidates that could realize a determinant not seen yet
        for k in (1, 2, 3):
            dd, rem = divmod(d, k * k)
            if rem == 0 and lo <= dd <= hi and dd not in realized:
                return True
        return False

    def confirm(positions, cs):
        t = sum(c * gh[p] for p, c in zip(positions, cs))
        vec = [0] * n
        for p, c in zip(positions, cs):
            vec[p] = 3 * c
        v = tuple(a - t * b for a, b in zip(vec, h))
        if not any(v):
            return
        g = 0
        for x in v:
            g = gcd(g, x)
        v = tuple(x // g for x in v)
        # saturated determinant without the full saturation: the index of
        # span(h, v) in its saturation is the gcd of the 2x2 minors
        vsq = sum(v[i] * v[i] * diag[i] for i in range(n))
        if vsq <= 0:
            return
        minor_gcd = 0
        for i in range(n):
            for j in range(i + 1, n):
                minor_gcd = gcd(minor_gcd, h[i] * v[j] - h[j] * v[i])
                if minor_gcd == 1:
                    break
            if minor_gcd == 1:
                break
        d_fast = 3 * vsq // (minor_gcd * minor_gcd)
        if not (lo <= d_fast <= hi) or d_fast in realized:
            return
        cls = classify_hyperplane(model, v)
        if cls.det != d_fast:
            raise AssertionError("minor-gcd determinant disagrees with saturation (bug)")
        if _is_pos_def_rank2(cls):
            realized[cls.det] = {"vector": v, "det": cls.det, "family": cls.family}

    for radius in range(1, search_bound + 1):
        coeff_range = [c for c in range(-radius, radius + 1) if c]
        for size in range(1, 5):
            for positions in combinations(range(n), size):
                gh_loc = [gh[p] for p in positions]
                dg_loc = [diag[p] for p in positions]
                for cs in product(coeff_range, repeat=size):
                    if max(abs(c) for c in cs) != radius:
                        continue  # enumerated at a smaller radius already
                    if cs[0] < 0:
                        continue  # v and -v classify identically
                    t = sum(c * w for c, w in zip(cs, gh_loc))
                    s = sum(c * c * w for c, w in zip(cs, dg_loc))
                    d = 3 * s - t * t
                    if d > 0 and worth_confirming(d):
                        confirm(positions, cs)
            if all(d in realized for d in wanted):
                break
        if all(d in realized for d in wanted):
            break
    impossible = tuple(d for d in range(lo, hi + 1) if not determinant_allowed(d))
    unrealized = tuple(d for d in wanted if d not in realized)
    return DeterminantSearch(lo=lo, hi=hi, realized=realized,
                             impossible=impossible, unrealized_at_bound=unrealized)


def _is_pos_def_rank2(cls: HyperplaneClass) -> bool:
    g = cls.sublattice.induced_gram()
    return g[0][0] > 0 and intlinalg.det(g) > 0


def monodromy_involution(model: PeriodModel) -> Isometry:
    """The involution fixing the polarization and acting as -s_delta on its complement.

    On the ambient lattice: x -> -x + (x.delta)/3 delta + 2 (x.h)/3 h. The
    matrix is asserted to be integral; the Isometry constructor checks that
    it preserves the form.
    """
    ambient = model.ambient
    h = model.polarization
    delta = model.long_root
    g = [list(r) for r in ambient.gram]
    gd = intlinalg.mat_vec(g, list(delta))
    gh = intlinalg.mat_vec(g, list(h))
    n = ambient.rank
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            val = Fraction(-(1 if i == j else 0)) \
                + Fraction(delta[i] * gd[j], 3) + Fraction(2 * h[i] * gh[j], 3)
            row.append(val)
        rows.append(row)
    if any(x.denominator != 1 for row in rows for x in row):
        raise ModelError("monodromy involution is not integral on the ambient lattice")
    return Isometry(ambient, tuple(tuple(int(x) for x in row) for row in rows))


_MONODROMY_CITATION = ("long-root involution: trivial on a rank-2 lattice of Gram "
                       "[[3,2],[2,2]] containing the polarization, minus identity on "
                       "its complement of genus (21,(19,2),even,Z/2), nontrivial on "
                       "the order-3 discriminant group")


def verify_monodromy_lemma(model: PeriodModel) -> VerificationReport:
    """Check every assertion of the long-root monodromy involution at once."""
    ambient = model.ambient
    h = model.polarization
    delta = model.long_root
    g = monodromy_involution(model)
    mid = tuple((a + b) // 3 for a, b in zip(h, delta))   # (h + delta)/3, integral
    second = tuple(a - b for a, b in zip(h, mid))         # h - (h + delta)/3
    fixed = span_sublattice(ambient, [h, second])
    actual: dict = {}
    expected: dict = {}
    expected["fixes_rank2_pointwise"] = True
    actual["fixes_rank2_pointwise"] = (g.apply(h) == h and g.apply(second) == second)
    expected["gram_of_fixed"] = [[3, 2], [2, 2]]
    actual["gram_of_fixed"] = [list(r) for r in
                               Sublattice(ambient, (h, second)).induced_gram()]
    comp = orthogonal_complement(ambient, fixed)
    expected["minus_identity_on_complement"] = True
    actual["minus_identity_on_complement"] = all(
        g.apply(row) == tuple(-x for x in row) for row in comp.basis)
    comp_lat = comp.lattice()
    inv = genus_invariants(comp_lat)
    reference = genus_invariants(direct_sum(
        standard_lattice("A1"), standard_lattice("E8"), standard_lattice("E8"),
        standard_lattice("U"), standard_lattice("U")))
    expected["complement_genus"] = {"rank": 21, "signature": [19, 2], "even": True,
                                    "disc_order": 2, "matches_A1_E8_E8_U_U": True}
    actual["complement_genus"] = {
        "rank": inv.rank, "signature": list(inv.signature), "even": inv.even,
        "disc_order": inv.disc.order, "matches_A1_E8_E8_U_U": inv.matches(reference)}
    expected["involution"] = True
    actual["involution"] = g.is_involution()
    expected["eigenvalue_ranks"] = {"fixed": 2, "negated": 21}
    ident = intlinalg.identity(ambient.rank)
    m = [list(r) for r in g.matrix]
    minus = [[m[i][j] - ident[i][j] for j in range(ambient.rank)] for i in range(ambient.rank)]
    plus = [[m[i][j] + ident[i][j] for j in range(ambient.rank)] for i in range(ambient.rank)]
    actual["eigenvalue_ranks"] = {"fixed": ambient.rank - intlinalg.rank(minus),
                                  "negated": ambient.rank - intlinalg.rank(plus)}
    expected["determinant"] = -1
    actual["determinant"] = g.det()
    core_lat = model.core_lattice()
    refl = reflection(core_lat, model.core.from_ambient(delta))
    expected["disc_action_nontrivial"] = True
    actual["disc_action_nontrivial"] = not disc_action(core_lat, refl).is_trivial()
    witnesses = [{"long_root": list(delta), "h_plus_delta_over_3": list(mid)}]
    return make_report("monodromy-lemma", expected, actual,
                       witnesses=witnesses, citation=_MONODROMY_CITATION)


# -- Boundary classification ----------------------------------------------------

# Matching of the six degeneration strata to complement root systems.
BOUNDARY_MATCHING = {
    "alpha": "A11+D7",
    "beta": "A2+E8^2",
    "gamma": "D10+E7",
    "delta": "E6^3",
    "epsilon": "A2+D16",
    "phi": "A17",
}

# Non-simple singularity content of the cubics over each stratum.
BOUNDARY_CONFIGURATIONS = {
    "alpha": ("elliptic_curve(4)", "rational_curve(1)"),
    "beta": ("Etilde8", "Etilde8"),
    "gamma": ("Etilde7", "elliptic_curve(2)"),
    "delta": ("Etilde6", "Etilde6", "Etilde6"),
    "epsilon": ("rational_curve(4)",),
    "phi": ("elliptic_curve(6)",),
}


@dataclass(frozen=True)
class BoundaryComponent:
    label: str
    root_sublattice: RootSystemLabel
    source_entry: str  # the rank-24 root system it came from


@lru_cache(maxsize=1)
def classify_boundary_components() -> tuple[BoundaryComponent, ...]:
    """The six complement root systems from the six E-containing rank-24 lattices."""
    by_system = {}
    for entry in entries_with_e_summand():
        glued = construct_niemeier(entry)
        sub = embed_e6(glued.lattice)
        comp = orthogonal_complement(glued.lattice, sub)
        comp_lat = comp.lattice()
        label = identify_root_system(comp_lat, roots(comp_lat))
        by_system[str(label)] = str(entry.root_system)
    components = []
    for label in sorted(BOUNDARY_MATCHING):
        system = BOUNDARY_MATCHING[label]
        if system not in by_system:
            raise AssertionError(f"complement root system {system} was not produced")
        components.append(BoundaryComponent(
            label=label,
            root_sublattice=RootSystemLabel.parse(system),
            source_entry=by_system[system],
        ))
    if len(by_system) != 6:
        raise AssertionError("expected exactly six distinct complement root systems")
    return tuple(components)


@dataclass(frozen=True)
class UnimodularExtension:
    """The even unimodular (26,2) lattice glued from the core and E6."""

    lattice: Lattice
    core_image: Sublattice
    e6_image: Sublattice
    core_disc_q: Fraction
    e6_disc_q: Fraction


def glue_unimodular_26_2(model: PeriodModel) -> UnimodularExtension:
    """Glue the polarization complement with E6 along their order-3 discriminants.

    The two discriminant forms are anti-isometric (q = 2/3 and 4/3 mod 2Z),
    so a diagonal isotropic Z/3 exists; the overlattice is even unimodular
    of signature (26, 2), and E6 lands as the orthogonal complement of the
    core inside it.
    """
    core_lat = model.core_lattice()
    e6 = standard_lattice("E6")
    total = direct_sum(core_lat, e6)
    core_q = discriminant_data(core_lat).form.q[0]
    e6_q = discriminant_data(e6).form.q[0]
    data = discriminant_data(total)
    glued = None
    for subgroup in isotropic_subgroups(data, 3):
        gens = [e for e in subgroup if any(e)]
        glue = GlueGroup(ambient=data.form, generators=(data.lift(gens[0]),))
        glued = overlattice(total, glue)
        break
    if glued is None:
        raise AssertionError("no isotropic Z/3 in the glued discriminant (bug)")
    lat = glued.lattice
    if not lat.is_even() or abs(lat.det()) != 1 or lat.signature() != (26, 2):
        raise AssertionError("glued lattice is not even unimodular of signature (26,2)")
    n_core = core_lat.rank

    def unit(i):
        return tuple(1 if j == i else 0 for j in range(total.rank))

    core_rows = tuple(glued.old_vector_in_new(unit(i)) for i in range(n_core))
    e6_rows = tuple(glued.old_vector_in_new(unit(n_core + i)) for i in range(6))
    core_image = Sublattice(lat, core_rows)
    e6_image = Sublattice(lat, e6_rows)
    comp = orthogonal_complement(lat, core_image)
    if saturation(lat, e6_image).basis != comp.basis:
        raise AssertionError("E6 image is not the complement of the core image")
    renamed = Lattice(lat.gram, name="II_{26,2}")
    return UnimodularExtension(
        lattice=renamed,
        core_image=Sublattice(renamed, core_rows),
        e6_image=Sublattice(renamed, e6_rows),
        core_disc_q=core_q,
        e6_disc_q=e6_q,
    )


# -- Positive definite dictionary inside E8 -------------------------------------

@dataclass(frozen=True)
class E8Dictionary:
    """Partition of the 240 roots of E8 relative to a fixed E6 subsystem."""

    lattice: Lattice
    e6: Sublattice
    in_e6: tuple
    orthogonal: tuple
    mixed_lines: tuple       # one primitive complement-projection per line
    mixed_by_line: dict      # line -> tuple of roots


@lru_cache(maxsize=1)
def e8_dictionary() -> E8Dictionary:
    e8 = standard_lattice("E8")
    e6 = embed_e6(e8)
    g6 = [list(r) for r in e6.induced_gram()]
    g6_inv = intlinalg.rational_inverse(g6)
    g = [list(r) for r in e8.gram]
    basis_pairings = [intlinalg.mat_vec(g, list(row)) for row in e6.basis]
    in_e6 = []
    orthogonal = []
    mixed_by_line: dict = {}
    for root in roots(e8):
        pair = [sum(a * b for a, b in zip(bp, root)) for bp in basis_pairings]
        if not any(pair):
            orthogonal.append(root)
            continue
        coeffs = intlinalg.mat_vec(g6_inv, pair)
        inside = [sum(Fraction(coeffs[i]) * e6.basis[i][j] for i in range(6))
                  for j in range(8)]
        proj = [Fraction(r) - x for r, x in zip(root, inside)]
        if not any(proj):
            in_e6.append(root)
            continue
        den = 1
        for x in proj:
            den = den * x.denominator // gcd(den, x.denominator)
        w = [int(x * den) for x in proj]
        gg = 0
        for x in w:
            gg = gcd(gg, x)
        w = tuple(x // gg for x in w)
        first = next(x for x in w if x)
        if first < 0:
            w = tuple(-x for x in w)
        mixed_by_line.setdefault(w, []).append(root)
    return E8Dictionary(
        lattice=e8,
        e6=e6,
        in_e6=tuple(in_e6),
        orthogonal=tuple(orthogonal),
        mixed_lines=tuple(sorted(mixed_by_line)),
        mixed_by_line={k: tuple(v) for k, v in mixed_by_line.items()},
    )


_DICTIONARY_CITATION = ("degree-2 hyperplanes correspond to roots spanning an E7 "
                        "with the fixed E6; the 240 roots of E8 split 72/6/162")


def hyperplane_dictionary_check() -> VerificationReport:
    """Partition counts and the E7 saturation census inside E8."""
    dic = e8_dictionary()
    e8 = dic.lattice
    mixed_count = sum(len(v) for v in dic.mixed_by_line.values())
    expected = {"in_e6": 72, "orthogonal": 6, "mixed": 162, "total": 240,
                "mixed_saturations": [{"rank": 7, "root_count": 126}] * 3}
    sat_summaries = []
    for line in dic.mixed_lines:
        rows = [list(r) for r in dic.e6.basis] + [list(line)]
        sat = saturation(e8, Sublattice(e8, tuple(tuple(r) for r in intlinalg.hnf(rows))))
        lat = sat.lattice()
        sat_summaries.append({"rank": sat.rank, "root_count": len(roots(lat))})
    actual = {"in_e6": len(dic.in_e6), "orthogonal": len(dic.orthogonal),
              "mixed": mixed_count,
              "total": len(dic.in_e6) + len(dic.orthogonal) + mixed_count,
              "mixed_saturations": sat_summaries}
    witnesses = [{"mixed_line_classes": [list(l) for l in dic.mixed_lines],
                  "mixed_class_sizes": [len(dic.mixed_by_line[l]) for l in dic.mixed_lines]}]
    return make_report("dictionary-counts", expected, actual,
                       witnesses=witnesses, citation=_DICTIONARY_CITATION)


_INTERSECTION_CITATION = ("pairwise intersections of degree-2 hyperplanes saturate to "
                          "E8 (codimension 2); near each boundary component the "
                          "qualifying projections span rank 0/0/1/1/2/2")


def intersection_codimension_check() -> VerificationReport:
    """Codimension-2 saturation in E8 and the per-boundary projection ranks."""
    dic = e8_dictionary()
    e8 = dic.lattice
    expected: dict = {"pairwise_saturations": "all E8"}
    pairwise_ok = True
    pair_summaries = []
    for l1, l2 in combinations(dic.mixed_lines, 2):
        rows = [list(r) for r in dic.e6.basis] + [list(l1), list(l2)]
        sat = saturation(e8, Sublattice(e8, tuple(tuple(r) for r in intlinalg.hnf(rows))))
        lat = sat.lattice()
        okay = (sat.rank == 8 and abs(lat.det()) == 1 and len(roots(lat)) == 240)
        pairwise_ok = pairwise_ok and okay
        pair_summaries.append({"rank": sat.rank, "det": lat.det(),
                               "root_count": len(roots(lat))})
    actual = {"pairwise_saturations": "all E8" if pairwise_ok else pair_summaries}

    expected_ranks = {"E6^4": 0, "A11+D7+E6": 0, "D10+E7^2": 1, "A17+E7": 1,
                      "E8^3": 2, "D16+E8": 2}
    actual_ranks = {}
    for entry in entries_with_e_summand():
        glued = construct_niemeier(entry)
        lat = glued.lattice
        sub = embed_e6(lat)
        actual_ranks[str(entry.root_system)] = _qualifying_projection_rank(lat, sub)
    expected["projection_ranks"] = expected_ranks
    actual["projection_ranks"] = actual_ranks
    return make_report("intersection-codims", expected, actual,
                       citation=_INTERSECTION_CITATION)


def _qualifying_projection_rank(lat: Lattice, e6sub: Sublattice) -> int:
    """Rank of the complement projections of roots whose span with E6 saturates to E7."""
    g = [list(r) for r in lat.gram]
    g6 = [list(r) for r in e6sub.induced_gram()]
    g6_inv = intlinalg.rational_inverse(g6)
    basis_pairings = [intlinalg.mat_vec(g, list(row)) for row in e6sub.basis]
    n = lat.rank
    lines: dict = {}
    for root in roots(lat):
        pair = [sum(a * b for a, b in zip(bp, root)) for bp in basis_pairings]
        if not any(pair):
            continue
        coeffs = intlinalg.mat_vec(g6_inv, pair)
        inside = [sum(Fraction(coeffs[i]) * e6sub.basis[i][j] for i in range(6))
                  for j in range(n)]
        proj = [Fraction(r) - x for r, x in zip(root, inside)]
        if not any(proj):
            continue
        den = 1
        for x in proj:
            den = den * x.denominator // gcd(den, x.denominator)
        w = [int(x * den) for x in proj]
        gg = 0
        for x in w:
            gg = gcd(gg, x)
        w = tuple(x // gg for x in w)
        first = next(x for x in w if x)
        if first < 0:
            w = tuple(-x for x in w)
        lines.setdefault(w, None)
    qualifying = []
    for w in lines:
        rows = [list(r) for r in e6sub.basis] + [list(w)]
        sat = saturation(lat, Sublattice(lat, tuple(tuple(r) for r in intlinalg.hnf(rows))))
        sat_lat = sat.lattice()
        if sat.rank == 7 and len(roots(sat_lat)) == 126:
            qualifying.append(list(w))
    if not qualifying:
        return 0
    return intlinalg.rank(qualifying)


_WEIGHT_CITATION = ("discriminant form weight 12 + 36 = 48; vanishing orders "
                    "(126-72)/2 = 27 and (74-72)/2 = 1 along the degree-2 and "
                    "degree-6 arrangements")


def automorphic_weight_and_orders() -> VerificationReport:
    """Weight and vanishing orders from actual root counts of E6, E7, E6+A1."""
    e6 = standard_lattice("E6")
    e7 = standard_lattice("E7")
    e6a1 = direct_sum(e6, standard_lattice("A1"))
    n6 = len(roots(e6))
    n7 = len(roots(e7))
    n6a1 = len(roots(e6a1))
    expected = {"weight": 48, "order_H_infinity": 27, "order_H_Delta": 1}
    actual = {"weight": 12 + n6 // 2,
              "order_H_infinity": (n7 - n6) // 2,
              "order_H_Delta": (n6a1 - n6) // 2}
    witnesses = [{"roots_E6": n6, "roots_E7": n7, "roots_E6_A1": n6a1}]
    return make_report("automorphic-weight-orders", expected, actual,
                       witnesses=witnesses, citation=_WEIGHT_CITATION)


# -- Boundary matching heuristic -------------------------------------------------

_DESCRIPTOR_RE = re.compile(
    r"^(?:Etilde(?P<er>[678])|elliptic_curve\((?P<ed>\d+)\)|rational_curve\((?P<rd>\d+)\))$")


def boundary_matching(descriptors) -> RootSystemLabel:
    """Apply the per-singularity rules and sum the resulting components.

    Rules: an Etilde_r singularity contributes E_r; an elliptic curve of
    degree d contributes A_{3d-1}; a rational curve of degree d contributes
    D_{3d+4}.
    """
    comps = []
    for text in descriptors:
        m = _DESCRIPTOR_RE.match(text.strip())
        if not m:
            raise ValueError(f"unknown singularity descriptor {text!r}")
        if m.group("er"):
            comps.append(("E", int(m.group("er"))))
        elif m.group("ed") is not None:
            d = int(m.group("ed"))
            comps.append(("A", 3 * d - 1))
        else:
            d = int(m.group("rd"))
            comps.append(("D", 3 * d + 4))
    return RootSystemLabel(tuple(sorted(comps)))


# The three strata where the literal rules disagree with the boundary matching,
# with the rule output recorded verbatim. Reported as known ambiguities.
KNOWN_MATCHING_DISCREPANCIES = {
    "beta": "E8^2",      # matching expects A2+E8^2
    "gamma": "A5+E7",    # matching expects D10+E7
    "epsilon": "D16",    # matching expects A2+D16
}
