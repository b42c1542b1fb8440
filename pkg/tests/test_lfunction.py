import pytest

from rootnum.lfunction import anlist, ap_good, root_number_analytic
from rootnum.localdata import curve_from_model, global_root_number_direct

CURVE_11A1 = (0, -1, 1, -10, -20)
CURVE_37A1 = (0, 0, 1, -1, 0)

# LMFDB q-expansions
AN_11A1 = [0, 1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, -2, 4, 4, -1, -4, -2,
           4, 0, 2]
AN_37A1 = [0, 1, -2, -3, 2, -2, 6, -1, 0, 6, 4, -5, -6, -2, 2, 6, -4, 0,
           -12, 0, -4]


def test_anlist_frozen():
    assert anlist(curve_from_model(CURVE_11A1), 20) == AN_11A1
    assert anlist(curve_from_model(CURVE_37A1), 20) == AN_37A1


def test_ap_good_matches_point_counts():
    for ai in (CURVE_11A1, CURVE_37A1):
        a1, a2, a3, a4, a6 = ai
        for p in (2, 3, 5, 7, 13, 101):
            if curve_from_model(ai).delta % p == 0:
                continue
            count = 1
            for x in range(p):
                for y in range(p):
                    if (y * y + a1 * x * y + a3 * y
                            - (x**3 + a2 * x * x + a4 * x + a6)) % p == 0:
                        count += 1
            assert ap_good(ai, p) == p + 1 - count, (ai, p)


def test_hasse_bound():
    import math

    ai = CURVE_37A1
    for p in (5, 11, 31, 97, 499):
        assert abs(ap_good(ai, p)) <= 2 * math.sqrt(p)


def test_analytic_signs_match_direct():
    cases = (
        CURVE_11A1, CURVE_37A1,
        (1, 0, 1, 4, -6),      # 14a1
        (1, 1, 1, -10, -10),   # 15a1
        (1, -1, 0, -2, -1),    # 49a1
        (0, 1, 1, -2, 0),      # 389a1
        (0, 0, 1, -7, 6),      # 5077a1
        (0, -1, 1, -929, -10595),  # N = 571
        (1, 0, 0, -45, 81),        # N = 66, multiplicative at 2, 3, 11
        (1, 1, 1, -135, -660),     # N = 15, deep I8 at 3
    )
    for ai in cases:
        f = curve_from_model(ai)
        sign, residual = root_number_analytic(f, return_residual=True)
        assert sign == global_root_number_direct(f), ai
        assert residual < 1e-3


def test_analytic_accepts_raw_tuple():
    assert root_number_analytic(CURVE_37A1) == -1


def test_analytic_rejects_corrupt_data():
    a = curve_from_model(CURVE_11A1)
    b = curve_from_model(CURVE_37A1)
    # a_n from one curve against the conductor of another: the functional
    # equation cannot hold and the check must refuse to certify
    franken = a.__class__(None, b.ai, 1, b.c4, b.c6, b.delta, a.local)
    with pytest.raises(ArithmeticError):
        root_number_analytic(franken)
