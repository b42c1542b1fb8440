import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootnum.localdata import (BadFiberError, curve_from_model,
                               global_root_number_direct, hilbert_minus1,
                               minimal_model, model_from_invariants,
                               tate_local, transform)
from rootnum.surface import weierstrass_quantities

# label -> (model, conductor, W, [(p, kodaira, f_p, split)], ap at bad primes)
FAMOUS = {
    "11a1": ((0, -1, 1, -10, -20), 11, 1, [(11, "I5", 1, True)], {11: 1}),
    "14a1": ((1, 0, 1, 4, -6), 14, 1,
             [(2, "I6", 1, False), (7, "I3", 1, True)], {2: -1, 7: 1}),
    "15a1": ((1, 1, 1, -10, -10), 15, 1,
             [(3, "I4", 1, False), (5, "I4", 1, True)], {3: -1, 5: 1}),
    "37a1": ((0, 0, 1, -1, 0), 37, -1, [(37, "I1", 1, False)], {37: -1}),
    "49a1": ((1, -1, 0, -2, -1), 49, 1, [(7, "III", 2, None)], {7: 0}),
    "389a1": ((0, 1, 1, -2, 0), 389, 1, [(389, "I1", 1, True)], {389: 1}),
    "5077a1": ((0, 0, 1, -7, 6), 5077, -1, [(5077, "I1", 1, False)], {5077: -1}),
}


def test_famous_curves():
    for label, (ai, N, W, local, ap) in FAMOUS.items():
        f = curve_from_model(ai)
        assert f.u == 1, label
        assert f.conductor == N, label
        got = [(ld.p, str(ld.kodaira), ld.conductor, ld.split) for ld in f.local]
        assert got == local, label
        assert f.ap_bad == ap, label
        assert global_root_number_direct(f) == W, label


def test_good_prime_local_data():
    f = curve_from_model(FAMOUS["11a1"][0])
    ld = f.local_at(5)
    assert ld.is_good and ld.conductor == 0
    assert f.root_number_at(5) == 1


@given(st.sampled_from(sorted(FAMOUS)), st.sampled_from([2, 3, 5, 6]))
@settings(max_examples=28, deadline=None)
def test_unscaling_recovers_minimal_model(label, u):
    ai, N, W, _, _ = FAMOUS[label]
    a1, a2, a3, a4, a6 = ai
    big = (a1 * u, a2 * u**2, a3 * u**3, a4 * u**4, a6 * u**6)
    f = curve_from_model(big)
    assert f.u == u
    assert f.ai == curve_from_model(ai).ai
    assert f.conductor == N and global_root_number_direct(f) == W


def test_transform_preserves_curve():
    ai = FAMOUS["37a1"][0]
    moved = transform(ai, 1, 3, -2, 5)
    assert weierstrass_quantities(*moved)[6] == weierstrass_quantities(*ai)[6]
    with pytest.raises(ValueError):
        transform(ai, 2, 0, 0, 0)  # not divisible: integrality violated


@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8))
@settings(max_examples=60, deadline=None)
def test_transform_translations_compose(r, s, t):
    ai = FAMOUS["389a1"][0]
    there = transform(ai, 1, r, s, t)
    # undo: x = x' - r, y = y' - s x' + (s r - t)
    back = transform(there, 1, -r, -s, s * r - t)
    assert back == ai


def test_model_from_invariants_round_trip():
    for ai, *_ in FAMOUS.values():
        _, _, _, _, c4, c6, _ = weierstrass_quantities(*ai)
        back = model_from_invariants(c4, c6)
        chk = weierstrass_quantities(*back)
        assert (chk[4], chk[5]) == (c4, c6)
    with pytest.raises(ValueError):
        model_from_invariants(1, 1)


def test_minimal_model_strips_twelfth_powers():
    ai = FAMOUS["11a1"][0]
    a1, a2, a3, a4, a6 = ai
    big = (a1 * 6, a2 * 36, a3 * 216, a4 * 6**4, a6 * 6**6)
    mini, u = minimal_model(big)
    assert u == 6
    assert weierstrass_quantities(*mini)[6] == weierstrass_quantities(*ai)[6]


def test_tate_rejects_singular():
    with pytest.raises(BadFiberError):
        tate_local((0, 0, 0, 0, 0), 2)
    with pytest.raises(BadFiberError):
        curve_from_model((0, 1, 0, 0, 0))  # nodal: y^2 = x^3 + x^2


def test_bad_hint_must_cover():
    with pytest.raises(ValueError):
        curve_from_model(FAMOUS["14a1"][0], bad_hint=[2])
    f = curve_from_model(FAMOUS["14a1"][0], bad_hint=[2, 3, 5, 7])
    assert f.conductor == 14


def test_instantiate_fiber_and_singular_fibers(surfaces):
    from rootnum.localdata import instantiate_fiber

    leg = surfaces["legendre"]
    with pytest.raises(BadFiberError):
        instantiate_fiber(leg, 0)
    with pytest.raises(BadFiberError):
        instantiate_fiber(leg, 1)
    f = instantiate_fiber(leg, 2)
    assert f.t == 2 and f.delta != 0
    assert global_root_number_direct(f) in (-1, 1)

    w = surfaces["washington"]
    for t in (-3, 0, 5):
        f = instantiate_fiber(w, t)
        assert f.conductor % 1 == 0
        assert global_root_number_direct(f) == -1  # constant sign family


def test_hilbert_minus1_frozen():
    assert hilbert_minus1(-1, 2) == -1
    assert hilbert_minus1(1, 2) == 1
    assert hilbert_minus1(2, 2) == 1   # u = 1 mod 4... 2 = 2*1
    assert hilbert_minus1(-2, 2) == -1
    assert hilbert_minus1(5, 5) == 1   # p = 1 mod 4: always +1
    assert hilbert_minus1(3, 3) == -1  # odd valuation, p = 3 mod 4
    assert hilbert_minus1(9, 3) == 1
    assert hilbert_minus1(7, 7) == -1
