"""Singularity spectra of quasihomogeneous hypersurface singularities.

The spectrum of a weighted-homogeneous singularity with weights w_i (degree
normalized to 1) is read off from the exact expansion of
prod_i (t^{w_i} - t) / (1 - t^{w_i}); the exponent multiset of the resulting
polynomial is {alpha + 1}. Suspension shifts every entry by 1/2. Cusp
spectra are shipped as curated data and validated against their invariants.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import lcm, prod
from pathlib import Path


def data_path(filename: str) -> Path:
    """Bundled data file, overridable via the CF_LATTICE_DATA directory."""
    override = os.environ.get("CF_LATTICE_DATA")
    if override:
        return Path(override) / filename
    return Path(str(resources.files("cf_lattice") / "data" / filename))


@dataclass(frozen=True)
class QhSingularity:
    """Quasihomogeneous isolated hypersurface singularity, by its weights."""

    weights: tuple[Fraction, ...]
    name: str | None = None

    def __post_init__(self):
        for w in self.weights:
            if not (0 < w < 1):
                raise ValueError("weights must lie strictly between 0 and 1")

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def milnor_number(self) -> int:
        mu = prod(1 / w - 1 for w in self.weights)
        if mu.denominator != 1 or mu <= 0:
            raise ValueError("weights do not define an isolated singularity")
        return int(mu)


@dataclass(frozen=True)
class SpectrumMultiset:
    """Multiset of exact rationals, symmetric about (nvars - 2) / 2."""

    entries: tuple[Fraction, ...]
    nvars: int

    @staticmethod
    def make(entries, nvars: int) -> "SpectrumMultiset":
        return SpectrumMultiset(tuple(sorted(Fraction(e) for e in entries)), nvars)

    def __len__(self):
        return len(self.entries)

    def minimum(self) -> Fraction:
        return self.entries[0]

    def maximum(self) -> Fraction:
        return self.entries[-1]

    def is_symmetric(self) -> bool:
        pivot = Fraction(self.nvars - 2, 2)
        reflected = sorted(2 * pivot - e for e in self.entries)
        return reflected == list(self.entries)

    def counts(self) -> dict:
        out: dict = {}
        for e in self.entries:
            out[e] = out.get(e, 0) + 1
        return out


def spectrum(s: QhSingularity) -> SpectrumMultiset:
    """Exact spectrum; errors if the weight system is not a valid one."""
    mu = s.milnor_number()
    d = lcm(*[w.denominator for w in s.weights])
    exps = [int(w * d) for w in s.weights]
    # numerator prod (x^{a_i} - x^d), denominator prod (1 - x^{a_i}); x = t^{1/d}
    num = [1]
    for a in exps:
        new = [0] * (len(num) + d)
        for k, c in enumerate(num):
            if c:
                new[k + a] += c
                new[k + d] -= c
        num = new
    for a in exps:
        num = _divide_by_one_minus_power(num, a)
    while num and num[-1] == 0:
        num.pop()
    if any(c < 0 for c in num):
        raise ValueError("expansion has negative coefficients: invalid weight system")
    entries = []
    for k, c in enumerate(num):
        entries.extend([Fraction(k, d) - 1] * c)
    if len(entries) != mu:
        raise ValueError("expansion size disagrees with the Milnor number: invalid weights")
    return SpectrumMultiset.make(entries, s.nvars)


def _divide_by_one_minus_power(poly, a: int):
    """Exact division by (1 - x^a); raises if the division is not exact."""
    out = [0] * len(poly)
    for k in range(len(poly)):
        out[k] = poly[k] + (out[k - a] if k >= a else 0)
    # verify: out * (1 - x^a) == poly
    for k in range(len(poly)):
        check = out[k] - (out[k - a] if k >= a else 0)
        if check != poly[k]:
            raise ValueError("non-polynomial expansion: invalid weight system")
    while out and out[-1] == 0:
        out.pop()
    return out


def suspend(sp: SpectrumMultiset, k: int) -> SpectrumMultiset:
    """Add k squares of new variables: every entry shifts by k/2."""
    if k < 0:
        raise ValueError("suspension count must be >= 0")
    shift = Fraction(k, 2)
    return SpectrumMultiset.make([e + shift for e in sp.entries], sp.nvars + k)


def interval_check(sp: SpectrumMultiset, lo, hi,
                   strict_lo: bool = False, strict_hi: bool = False) -> bool:
    """Containment of the whole multiset in an interval, per-endpoint strictness."""
    lo, hi = Fraction(lo), Fraction(hi)
    mn, mx = sp.minimum(), sp.maximum()
    ok_lo = mn > lo if strict_lo else mn >= lo
    ok_hi = mx < hi if strict_hi else mx <= hi
    return ok_lo and ok_hi


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "du_val" | "simple_elliptic"
    singularity: QhSingularity


def surface_catalog() -> tuple[CatalogEntry, ...]:
    """The shipped catalog of quasihomogeneous surface singularities."""
    with open(data_path("singularities.json"), encoding="utf-8") as fh:
        doc = json.load(fh)
    out = []
    for item in doc["entries"]:
        weights = tuple(Fraction(w) for w in item["weights"])
        out.append(CatalogEntry(
            name=item["name"],
            kind=item["kind"],
            singularity=QhSingularity(weights=weights, name=item["name"]),
        ))
    return tuple(out)


class CuspRangeError(ValueError):
    """Parameters outside 1/p + 1/q + 1/r < 1."""


def cusp_spectrum(p: int, q: int, r: int) -> SpectrumMultiset:
    """Spectrum of the hyperbolic T_{p,q,r} surface singularity, from shipped data.

    These are not quasihomogeneous, so the values are curated rather than
    computed; the count (mu = p+q+r-1), the symmetry about 1/2, containment
    in [0,1] and both endpoints are validated on every load.
    """
    if min(p, q, r) < 2:
        raise ValueError("cusp parameters must be at least 2")
    if Fraction(1, p) + Fraction(1, q) + Fraction(1, r) >= 1:
        raise CuspRangeError(
            f"T_({p},{q},{r}) is outside the cusp range: 1/p + 1/q + 1/r must be < 1")
    key = sorted((p, q, r))
    with open(data_path("cusp_spectra.json"), encoding="utf-8") as fh:
        doc = json.load(fh)
    for item in doc["entries"]:
        if sorted((item["p"], item["q"], item["r"])) == key:
            entries = [Fraction(e) for e in item["entries"]]
            sp = SpectrumMultiset.make(entries, 3)
            _validate_cusp(sp, p, q, r)
            return sp
    raise KeyError(f"T_({p},{q},{r}) is not in the shipped cusp table")


def _validate_cusp(sp: SpectrumMultiset, p: int, q: int, r: int) -> None:
    if len(sp) != p + q + r - 1:
        raise AssertionError("cusp table entry fails the mu = p+q+r-1 invariant")
    if not sp.is_symmetric():
        raise AssertionError("cusp table entry is not symmetric")
    if not interval_check(sp, 0, 1):
        raise AssertionError("cusp table entry leaves [0, 1]")
    if sp.minimum() != 0 or sp.maximum() != 1:
        raise AssertionError("cusp table entry does not attain both endpoints")
