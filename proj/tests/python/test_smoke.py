"""Smoke tests for the Python bindings."""

from fractions import Fraction

import lfspec


def test_triad_paper_example():
    r = lfspec.triad(2, 3, [0, 3, 4, 7])
    assert r["homogeneous"] is True
    assert r["cards"] == [2, 2, 4]
    assert r["tile"]["complement"] == [0, 2]
    assert r["spectrum"] == [0, 1, 4, 5]
    assert r["consistent"] is True


def test_triad_consistent_negative():
    r = lfspec.triad(2, 2, [0, 1, 2])
    assert r["homogeneous"] is False
    assert r["tile"] is None
    assert r["spectrum"] is None
    assert r["consistent"] is True


def test_ft_zero_set():
    values = lfspec.ft_atoms(2, "0,1/2", "0,1")
    assert values[0]["in_zero_set"] is False
    assert values[0]["value"]["scalar"] == "1"
    assert values[1]["in_zero_set"] is True


def test_spectral_check_basic_pair():
    v = lfspec.spectral_check(2, "0,1/2", "0,1")
    assert v["orthogonal"] is True
    assert v["complete_at_samples"] is True
    assert all(s["value"] == "1" for s in v["sums"])


def test_hadamard():
    ok, witness = lfspec.hadamard(2, "0/8,3/8,4/8,7/8", "0,1,4,5")
    assert ok and witness is None
    bad, rows = lfspec.hadamard(2, "0,1/2", "0,2")
    assert not bad and rows == (0, 1)


def test_landau_ball_case():
    rep = lfspec.landau(2, "ball(0,1)", "ball(0,2)")
    assert rep["multiplicity_of_one"] == 2
    assert rep["trace"] == "2"
    assert all(abs(e - 1) < 1e-9 or abs(e) < 1e-9 for e in rep["eigenvalues"])


def test_selfsimilar_paper_measure():
    r = lfspec.selfsimilar(2, 3, [0, 3, 4, 7], depth=2)
    assert Fraction(r["dimension"]) == Fraction(2, 3)
    for d in r["depths"]:
        assert d["homogeneous"] is True
        assert d["verdict"]["jp_complete"] is True
        assert d["verdict"]["limit_orthogonal"] is True
        assert d["verdict"]["bessel_le_one"] is True
    assert r["depths"][0]["spectrum"] == [0, 1, 4, 5]


def test_qlattice():
    r = lfspec.qlattice(2, 2)
    assert r["count"] == 4
    assert r["separation"] == "2"


def test_double_integral_agreement():
    for a in range(-3, 4):
        for b in range(-3, 4):
            closed, cells = lfspec.double_integral(3, a, b)
            assert closed == cells


def test_frame_bounds():
    a, b = lfspec.frame_bounds(2, "0,1/2", "0,1")
    assert abs(a - 1) < 1e-10 and abs(b - 1) < 1e-10


def test_acceptance_single_criterion():
    results = lfspec.acceptance(criteria=[4])
    assert len(results) == 1
    assert results[0]["passed"] is True
