import pytest

from stablehyper.facets import (
    UnsupportedParameters,
    closed_form_hrep,
    known_hrep,
    oracle_facets,
    positivity_halfspace,
    simplex_case_hrep,
    verify_hrep,
    window,
    window_halfspace,
)
from stablehyper.polytope import HalfSpace
from stablehyper.serialize import describe_halfspace
from stablehyper.stable import ParameterError


def test_window_wraps():
    assert window(7, 6, 3) == (6, 7, 1)


def test_closed_form_7_2_2():
    hp = closed_form_hrep(7, 2, 2)
    texts = {describe_halfspace(h) for h in hp.halfspaces}
    assert len(hp.halfspaces) == 14
    assert "x7 >= 0" in texts and "x1 + x7 <= 1" in texts and "x3 + x4 <= 1" in texts


def test_closed_form_classical_hypersimplex():
    hp = closed_form_hrep(6, 3, 1)
    assert set(hp.halfspaces) == {positivity_halfspace(6, l) for l in range(1, 7)} | {
        window_halfspace(6, l, 1) for l in range(1, 7)
    }
    assert len(closed_form_hrep(9, 3, 2).halfspaces) == 18


def test_closed_form_rejects_r_beyond_floor():
    with pytest.raises(ParameterError):
        closed_form_hrep(7, 3, 3)


@pytest.mark.parametrize("n,k,r", [(7, 3, 2), (8, 3, 2), (6, 2, 3)])
def test_closed_form_outside_range(n, k, r):
    with pytest.raises(UnsupportedParameters):
        closed_form_hrep(n, k, r)


def test_simplex_case_examples():
    assert len(simplex_case_hrep(7, 3, 2).halfspaces) == 7
    assert len(simplex_case_hrep(5, 2, 2).halfspaces) == 5
    assert verify_hrep(5, 2, 2).vertex_count == 5
    assert len(closed_form_hrep(4, 3, 1).halfspaces) == 4
    with pytest.raises(UnsupportedParameters):
        simplex_case_hrep(8, 3, 2)


def test_known_hrep_regimes():
    assert known_hrep(7, 3, 2)[0] == "simplex"
    assert known_hrep(7, 3, 1)[0] == "theorem"
    assert known_hrep(7, 1, 7)[0] == "standard-simplex"
    with pytest.raises(UnsupportedParameters):
        known_hrep(8, 3, 2)


@pytest.mark.parametrize("n,k,r,count", [(6, 2, 2, 12), (8, 2, 3, 16), (9, 3, 2, 18)])
def test_verify_hrep_examples(n, k, r, count):
    cert = verify_hrep(n, k, r)
    assert cert.passed and cert.facet_count == count
    assert cert.narrow_windows_found == []
    assert cert.mismatch_report() == []
    assert cert.to_dict()["passed"] is True


def test_mismatch_report_names_the_halfspace():
    cert = verify_hrep(6, 2, 2)
    cert.missing = [HalfSpace((1, 1, 1, 0, 0, 0), 1)]
    cert.oracle_matches = False
    assert not cert.passed
    assert "(1, 1, 1, 0, 0, 0)" in cert.mismatch_report()[0]


def test_outside_theorem_oracle_still_works():
    # r = floor(n/k) with n > kr + 1: no closed form, but the hull is computable
    facets = oracle_facets(8, 3, 2)
    assert facets and all(h.offset in (0, 1) for h in facets)
