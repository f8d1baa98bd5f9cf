import json
from fractions import Fraction
from itertools import product

import pytest

from cf_lattice.spectra import (
    CuspRangeError,
    QhSingularity,
    SpectrumMultiset,
    cusp_spectrum,
    data_path,
    interval_check,
    spectrum,
    surface_catalog,
    suspend,
)


def brieskorn_pham_oracle(exponents):
    """Independent oracle for x1^m1 + ... + xn^mn: the monomial basis of the
    Milnor algebra is x^a with 0 <= a_i <= m_i - 2, and each basis monomial
    contributes sum (a_i + 1)/m_i - 1."""
    out = []
    for a in product(*[range(m - 1) for m in exponents]):
        out.append(sum(Fraction(ai + 1, m) for ai, m in zip(a, exponents)) - 1)
    return sorted(out)


@pytest.mark.parametrize("exponents", [
    (2, 2, 2),       # ordinary double point
    (3, 3, 2),       # the D4-equivalent diagonal form
    (4, 3, 2),       # E6
    (5, 3, 2),       # E8
    (3, 3, 3),       # simple elliptic, degree-3 cone
    (4, 4, 2),       # simple elliptic
    (6, 3, 2),       # simple elliptic
    (5, 4, 3),       # a heavier diagonal form
])
def test_spectrum_matches_brieskorn_pham_oracle(exponents):
    weights = tuple(Fraction(1, m) for m in exponents)
    sp = spectrum(QhSingularity(weights))
    assert list(sp.entries) == brieskorn_pham_oracle(exponents)


def test_spectrum_of_node_and_d4():
    a1 = spectrum(QhSingularity((Fraction(1, 2),) * 3))
    assert a1.entries == (Fraction(1, 2),)
    d4 = spectrum(QhSingularity((Fraction(1, 3), Fraction(1, 3), Fraction(1, 2))))
    assert d4.entries == (Fraction(1, 6), Fraction(1, 2), Fraction(1, 2), Fraction(5, 6))


def test_spectrum_of_non_diagonal_weight_systems():
    # D5 (x^4 + x y^2 + z^2): Jacobian-basis oracle {1, x, x^2, x^3, y}
    # with weights (1/4, 3/8, 1/2) gives {1/8, 3/8, 1/2, 5/8, 7/8}
    d5 = spectrum(QhSingularity((Fraction(1, 4), Fraction(3, 8), Fraction(1, 2))))
    assert d5.entries == (Fraction(1, 8), Fraction(3, 8), Fraction(1, 2),
                          Fraction(5, 8), Fraction(7, 8))
    # E7 (x^3 + x y^3 + z^2): basis {1, y, y^2, y^3, y^4, x, x y},
    # weights (1/3, 2/9, 1/2)
    e7 = spectrum(QhSingularity((Fraction(1, 3), Fraction(2, 9), Fraction(1, 2))))
    assert e7.entries == tuple(Fraction(k, 18) for k in (1, 5, 7, 9, 11, 13, 17))


def test_spectrum_invalid_weights():
    with pytest.raises(ValueError):
        QhSingularity((Fraction(3, 2),))
    with pytest.raises(ValueError):
        # not a quasihomogeneous isolated-singularity weight system
        spectrum(QhSingularity((Fraction(2, 5), Fraction(3, 7))))


def test_milnor_number_and_symmetry_across_catalog():
    for entry in surface_catalog():
        sp = spectrum(entry.singularity)
        assert len(sp) == entry.singularity.milnor_number()
        assert sp.is_symmetric()


def test_catalog_dichotomy():
    for entry in surface_catalog():
        sp = spectrum(entry.singularity)
        if entry.kind == "du_val":
            assert interval_check(sp, 0, 1, strict_lo=True, strict_hi=True)
        else:
            assert entry.kind == "simple_elliptic"
            assert interval_check(sp, 0, 1)
            assert sp.minimum() == 0
            assert sp.maximum() == 1


def test_etilde8_extremes():
    sp = spectrum(QhSingularity((Fraction(1, 6), Fraction(1, 3), Fraction(1, 2))))
    assert len(sp) == 10
    assert sp.minimum() == 0
    assert sp.maximum() == 1


def test_e8_strictly_interior():
    sp = spectrum(QhSingularity((Fraction(1, 3), Fraction(1, 5), Fraction(1, 2))))
    assert sp.minimum() == Fraction(1, 30)
    assert interval_check(sp, 0, 1, strict_lo=True, strict_hi=True)


def test_suspension_shift_and_composition():
    a1 = spectrum(QhSingularity((Fraction(1, 2),) * 3))
    doubled = suspend(a1, 2)
    assert doubled.entries == (Fraction(3, 2),)
    assert doubled.nvars == 5
    assert interval_check(doubled, 1, 2)
    assert suspend(a1, 0) == a1
    assert suspend(suspend(a1, 1), 1) == suspend(a1, 2)
    with pytest.raises(ValueError):
        suspend(a1, -1)


def test_double_suspension_lands_in_1_2_for_whole_catalog():
    for entry in surface_catalog():
        sp = suspend(spectrum(entry.singularity), 2)
        assert interval_check(sp, 1, 2)
        assert sp.is_symmetric()


def test_interval_check_strictness_flags():
    sp = SpectrumMultiset.make([0, Fraction(1, 2), 1], 3)
    assert interval_check(sp, 0, 1)
    assert not interval_check(sp, 0, 1, strict_lo=True)
    assert not interval_check(sp, 0, 1, strict_hi=True)


def test_cusp_spectrum_examples():
    t237 = cusp_spectrum(2, 3, 7)
    assert len(t237) == 11
    assert t237.minimum() == 0 and t237.maximum() == 1
    assert t237.is_symmetric()
    counts = t237.counts()
    assert counts[Fraction(1, 2)] == 1
    assert counts[Fraction(1, 3)] == 1
    assert counts[Fraction(1, 7)] == 1
    assert len(cusp_spectrum(3, 3, 4)) == 9
    # argument order does not matter
    assert cusp_spectrum(7, 2, 3).entries == t237.entries


def test_cusp_spectrum_range_errors():
    with pytest.raises(CuspRangeError):
        cusp_spectrum(2, 3, 5)  # 1/2 + 1/3 + 1/5 > 1
    with pytest.raises(CuspRangeError):
        cusp_spectrum(3, 3, 3)  # boundary case is not hyperbolic
    with pytest.raises(ValueError):
        cusp_spectrum(1, 5, 9)


def test_cusp_table_is_validated_data():
    with open(data_path("cusp_spectra.json"), encoding="utf-8") as fh:
        doc = json.load(fh)
    assert doc["provenance"]
    for item in doc["entries"][:40]:
        sp = cusp_spectrum(item["p"], item["q"], item["r"])
        assert len(sp) == item["p"] + item["q"] + item["r"] - 1


def test_data_dir_override(tmp_path, monkeypatch):
    alt = tmp_path / "singularities.json"
    alt.write_text(json.dumps({"entries": [
        {"name": "only_node", "kind": "du_val", "weights": ["1/2", "1/2", "1/2"]}]}))
    monkeypatch.setenv("CF_LATTICE_DATA", str(tmp_path))
    cat = surface_catalog()
    assert [e.name for e in cat] == ["only_node"]
