import pytest

from rootnum.intarith import padic_split
from rootnum.localdata import BadFiberError
from rootnum.polyring import IntPoly
from rootnum.signformula import (SIGN_CALIBRATION, ZeroAtMultiplicativePlace,
                                 _h_term, g_factor, g_factor_omega, h_factor,
                                 lambda_of_M, periodicity_data, phi,
                                 pinning_polys, root_number_formula)

T = IntPoly([0, 1])


def test_calibration_is_global_constant():
    assert SIGN_CALIBRATION == -1


def test_washington_anchor(surfaces):
    w = surfaces["washington"]
    for t in range(-20, 21):
        rep = root_number_formula(w, t)
        assert rep.W_direct == -1, t
        assert rep.W_formula == -1, t


def test_report_rebuild_identity(surfaces):
    for name in ("legendre", "H", "J"):
        s = surfaces[name]
        for t in (3, 7, -5, 12):
            if s.delta(t) == 0:
                continue
            rep = root_number_formula(s, t)
            w = SIGN_CALIBRATION * rep.lambda_M
            for wp in rep.delta_prime_part.values():
                w *= wp
            for h, g in rep.per_place.values():
                w *= h * g
            assert w == rep.W_formula
            # phi skips insipid g factors but keeps the W_p block
            expect_phi = 1
            for wp in rep.delta_prime_part.values():
                expect_phi *= wp
            for key, (_, g) in rep.per_place.items():
                if not key.endswith("!"):
                    expect_phi *= g
            assert rep.phi == expect_phi
            assert rep.phi == phi(s, t)
            assert rep.agree


def test_insipid_places_contribute_trivially(surfaces):
    cases = ((surfaces["washington"], IntPoly([9, 3, 1])),
             (surfaces["J"], IntPoly([1, -1, 1])))
    for s, poly in cases:
        place = s.place_for(poly)
        assert place.insipid
        for t in range(-15, 16):
            if s.delta(t) == 0 or poly(t) == 0:
                continue
            assert g_factor(s, place, t) == 1, (str(poly), t)
            assert h_factor(s, place, t) == 1, (str(poly), t)


def test_singular_fiber_raises(surfaces):
    leg = surfaces["legendre"]
    for t in (0, 1):
        with pytest.raises(BadFiberError):
            root_number_formula(leg, t)
        with pytest.raises(BadFiberError):
            phi(leg, t)
    with pytest.raises(ZeroAtMultiplicativePlace):
        lambda_of_M(leg, 0)
    with pytest.raises(ZeroAtMultiplicativePlace):
        g_factor(leg, leg.place_for(T), 0)


def test_lambda_of_M(surfaces):
    leg = surfaces["legendre"]
    from rootnum.intarith import liouville

    for t in (2, 3, -1, 10):
        assert lambda_of_M(leg, t) == liouville(t * t - t)
    # no multiplicative places: M = 1 and lambda = +1
    assert lambda_of_M(surfaces["washington"], 17) == 1


def test_g_factor_multiplicative_parity(surfaces):
    leg = surfaces["legendre"]
    place = leg.place_for(T)
    # P(2) = 2: entirely inside delta, so only the valuation parity remains
    assert g_factor(leg, place, 2) == -1
    # P(4) = 4 = 2^2: even valuation, empty symbol
    assert g_factor(leg, place, 4) == 1
    # P(t) odd prime outside delta: plain Legendre symbol of -c6(t)
    from rootnum.intarith import jacobi

    for t in (5, 7, 13):
        u = padic_split(-int(leg.c6(t)), t)[1] if leg.c6(t) % t == 0 else -int(leg.c6(t))
        assert g_factor(leg, place, t) == jacobi(u % t, t)


def test_g_factor_omega_variant_differs_only_by_parity_convention(surfaces):
    leg = surfaces["legendre"]
    place = leg.place_for(T)
    for t in (2, 3, 4, 5, 6, 8, 9, 12, 16, 18):
        g_nu = g_factor(leg, place, t)
        g_om = g_factor_omega(leg, place, t)
        nu = sum(padic_split(t, p)[0] for p in (2, 3))
        om = sum(1 for p in (2, 3) if t % p == 0)
        assert g_nu * g_om == (1 if (nu - om) % 2 == 0 else -1)
    # additive places: same function
    h = surfaces["H"]
    place = h.place_for(T)
    for t in (2, 3, 5):
        assert g_factor_omega(h, place, t) == g_factor(h, place, t)


H_TERM_TABLE = (
    # (kind, m, p, nu, -c6 unit) -> sign
    (("II", 0, 5, 2, None), -1),
    (("II", 0, 5, 4, None), -1),
    (("II", 0, 5, 3, None), 1),
    (("II", 0, 5, 6, None), 1),
    (("II", 0, 7, 2, None), 1),    # (-3/7) = +1
    (("III", 0, 7, 2, None), -1),  # (-1/7) = -1
    (("III", 0, 7, 6, None), -1),
    (("III", 0, 7, 4, None), 1),
    (("III", 0, 5, 2, None), 1),   # (-1/5) = +1
    (("IV", 0, 5, 2, None), -1),
    (("IV", 0, 5, 3, None), -1),
    (("IV", 0, 5, 4, None), -1),
    (("IV", 0, 5, 5, None), 1),
    (("I", 3, 7, 2, 1), -1),       # -(1/7)
    (("I", 3, 7, 2, 3), 1),        # -(3/7) = +1
    (("I", 3, 7, 3, 1), 1),        # odd valuation: no correction
    (("I", 0, 7, 2, None), 1),     # I0*: always trivial
)


def test_h_term_frozen():
    for args, expect in H_TERM_TABLE:
        assert _h_term(*args) == expect, args


def test_h_factor_trivial_on_squarefree_values(surfaces):
    h = surfaces["H"]
    place = h.place_for(T)
    for t in (1, 2, 3, 5, 7, 11):  # squarefree away from delta
        assert h_factor(h, place, t) == 1
    # t = 25: P(t) = 25 with (-1/5) = +1 -> III correction is trivial
    assert h_factor(h, place, 25) == 1
    # t = 49: P(t) = 7^2 and (-1/7) = -1 -> III correction fires
    assert h_factor(h, place, 49) == -1


def test_pinning_polys(surfaces):
    w = surfaces["washington"]
    polys = pinning_polys(w)
    assert IntPoly([9, 3, 1]) in polys
    assert all(p.lc > 0 and p.degree >= 1 for p in polys)
    leg_polys = pinning_polys(surfaces["legendre"])
    assert T in leg_polys and T - 1 in leg_polys


# family -> (N, alpha, R factor coefficient tuples)
PERIODICITY = {
    "washington": (4608, {2: 9, 3: 2}, ()),
    "legendre": (10616832, {2: 11, 3: 4},
                 ((-1, 1), (-2, 1), (-1, 2), (1, 1), (-2, 3, 1), (0, 1),
                  (-2, 3, 3), (-2, 3))),
    "F": (4478976, {2: 11, 3: 7}, ((-1, 1), (1, 1))),
    "G": (995328, {2: 12, 3: 5}, ((-1, 1), (0, 1))),
    "H": (18432, {2: 11, 3: 2}, ((0, 1), (8, -11, 8))),
    "I": (18432, {2: 11, 3: 2}, ((0, 1), (27, -10, 1))),
    "J": (746496, {2: 10, 3: 6}, ((1, 1),)),
    "L": (4478976, {2: 11, 3: 7}, ((0, 1), (2, 0, 1))),
}


def test_periodicity_data_frozen(surfaces):
    for name, (N, alpha, r_coeffs) in PERIODICITY.items():
        pd = periodicity_data(surfaces[name])
        assert pd.N == N, name
        assert pd.alpha == alpha, name
        assert pd.R_factors == tuple(IntPoly(c) for c in r_coeffs), name


def test_periodicity_data_invariants(surfaces):
    for s in surfaces.values():
        pd = periodicity_data(s)
        assert pd.N % 24 == 0
        assert sorted(pd.alpha) == [2, 3]
        for r in pd.R_factors:
            assert r.lc > 0 and r == r.primitive
        for p, a in pd.alpha.items():
            assert pd.N % p**a == 0


def _pinned(surface, pd, t):
    from rootnum.signformula import _UNIT_WIDTHS

    for p, a in pd.alpha.items():
        widths = _UNIT_WIDTHS[p]
        for q, width in zip((surface.c4, surface.c6, surface.delta), widths):
            if int(q(t)) == 0 or padic_split(int(q(t)), p)[0] + width > a:
                return False
    return True


def test_phi_periodic_on_pinned_classes(surfaces):
    for name in ("washington", "H"):
        s = surfaces[name]
        pd = periodicity_data(s)
        checked = 0
        t = 2
        while checked < 3:
            t += 1
            if s.delta(t) == 0 or not _pinned(s, pd, t):
                continue
            t2 = t + pd.N  # same sign pattern: both well right of all roots
            if s.delta(t2) == 0:
                continue
            assert phi(s, t) == phi(s, t2), (name, t)
            checked += 1
