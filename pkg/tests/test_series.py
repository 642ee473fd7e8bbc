import pytest

from gnctrees.combinat import catalan, gnc_total, little_schroeder, ternary
from gnctrees.patterns import census
from gnctrees.series import (
    P_ONE,
    P_X,
    P_Y,
    P_Z,
    TriPoly,
    TriSeries,
    catalan_compose,
    coeff,
    eval_numeric,
    invert,
    render_series,
    series_terms,
    solve_master,
    solve_star,
    solve_star_pattern,
    solve_ternary_gf,
    solve_ud_du,
    solve_uu_dd,
    solve_uudd,
    tri_const,
    verify_identities,
)


def poly(**kw):
    mapping = {"one": (0, 0, 0), "x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}
    return TriPoly({mapping[k]: v for k, v in kw.items()})


def t_series(*polys, order=None):
    return TriSeries(list(polys), order if order is not None else len(polys) - 1)


def test_tripoly_arithmetic():
    p = P_X + P_Y
    q = P_X - P_Y
    assert (p * q).terms == {(2, 0, 0): 1, (0, 2, 0): -1}
    assert (p * 0).is_zero()
    assert P_X.swap_xz() == P_Z
    assert poly(one=2).eval(0, 0, 0) == 2


def test_ring_ops():
    one_plus_t = t_series(P_ONE, P_ONE)
    one_minus_t = t_series(P_ONE, -P_ONE)
    prod = one_plus_t * one_minus_t
    assert prod.coeffs[0] == P_ONE and prod.coeffs[1].is_zero()
    # order-2 inputs give order-2 output even when degree could grow
    f = t_series(P_ONE, P_ONE, P_ONE)
    assert (f * f).order == 2
    # exponent bookkeeping: (x t) * (z t) = x z t^2
    xt = t_series(TriPoly(), P_X, TriPoly())
    zt = t_series(TriPoly(), P_Z, TriPoly())
    assert (xt * zt).coeffs[2].terms == {(1, 0, 1): 1}


def test_shift_truncate_scale():
    f = tri_const(1, 3)
    assert f.shift().coeffs[1] == P_ONE
    assert f.shift(5).is_zero()
    assert f.truncate(1).order == 1
    assert f.truncate(5).order == 5
    assert f.scale(P_X).coeffs[0] == P_X
    assert f.scale(3).coeffs[0] == poly(one=3)


def test_invert_geometric():
    one_minus_t = TriSeries([P_ONE] + [-P_ONE] + [TriPoly()] * 9, 10)
    g = invert(one_minus_t)
    assert all(g.coeffs[n] == P_ONE for n in range(11))


def test_invert_multiplies_back_to_one():
    f = TriSeries([P_ONE, P_X + P_Y, P_Z * 2 - P_X, P_Y * 5], 3)
    g = invert(f)
    prod = f * g
    assert prod.coeffs[0] == P_ONE
    assert all(prod.coeffs[k].is_zero() for k in range(1, 4))


def test_invert_rejects_nonunit():
    with pytest.raises(ValueError):
        invert(tri_const(2, 3))
    with pytest.raises(ValueError):
        invert(tri_const(1, 3).shift())


def test_catalan_compose_catalan_numbers():
    t = tri_const(1, 20).shift()
    c = catalan_compose(t)
    for n in range(21):
        assert c.coeffs[n] == poly(one=catalan(n))


def test_catalan_compose_fixed_point_residual():
    # c = 1 + f c^2 for f = 2t(1 - t)
    f = TriSeries([TriPoly(), poly(one=2), poly(one=-2)] + [TriPoly()] * 10, 12)
    c = catalan_compose(f)
    residual = c - (tri_const(1, 12) + f * (c * c))
    assert residual.is_zero()


def test_catalan_compose_rejects_nonzero_constant():
    with pytest.raises(ValueError):
        catalan_compose(tri_const(1, 4))


def test_solve_ternary_gf():
    w = solve_ternary_gf(12)
    for n in range(13):
        assert w.coeffs[n].terms == {(0, n, 0): ternary(n)}


def test_solve_master_low_coefficients():
    t, u = solve_master(8)
    assert t.coeffs[1].terms == {(1, 0, 0): 1, (0, 1, 0): 1}
    assert t.coeffs[2].terms == {(2, 0, 0): 3, (1, 1, 0): 4, (1, 0, 1): 2, (0, 2, 0): 3}
    assert sum(t.coeffs[4].terms.values()) == 880
    assert eval_numeric(t, 1, 1, 1)[:7] == [gnc_total(n) for n in range(7)]
    assert u == t.swap_xz()


def test_solve_master_specializations():
    t, _ = solve_master(10)
    w = solve_ternary_gf(10)
    assert t.substitute(x=0) == w.substitute(x=0)
    assert eval_numeric(t, 0, 1, 0) == [ternary(n) for n in range(11)]
    assert eval_numeric(t, 1, 0, 0) == [little_schroeder(n) for n in range(11)]


def test_solve_master_homogeneous_nonnegative():
    t, u = solve_master(12)
    for f in (t, u):
        for n in range(13):
            for (a, b, c), v in f.coeffs[n].terms.items():
                assert a + b + c == n
                assert v > 0


def test_solve_star():
    s = solve_star(8)
    assert s.coeffs[1].terms == {(1, 0, 0): 1}
    assert s.coeffs[2].terms == {(2, 0, 0): 3, (1, 1, 0): 2, (1, 0, 1): 1}
    for n in range(5):
        assert s.coeffs[n].terms == census(n, (), star_only=True).as_terms()


def test_solve_uu_dd():
    a, b, c, d = solve_uu_dd(10)
    assert eval_numeric(a, 1, 1, 1)[2] == 11
    # independent oracle: iterate q = 1 - 3tq + 4tq^2 by convolution
    q = [1]
    for m in range(1, 11):
        sq = sum(q[i] * q[m - 1 - i] for i in range(m))
        q.append(-3 * q[m - 1] + 4 * sq)
    assert eval_numeric(c, 1, 0, 1) == q
    assert eval_numeric(a, 1, 0, 1)[:6] == [1, 1, 4, 20, 116, 740]
    assert b == c.swap_xz()
    assert d == a.swap_xz()


def test_solve_ud_du():
    e, f, g, h = solve_ud_du(10)
    assert eval_numeric(e, 1, 0, 1) == [little_schroeder(n) for n in range(11)]
    assert eval_numeric(g, 1, 0, 1)[:7] == [1, 1, 5, 27, 157, 957, 6025]
    assert eval_numeric(e, 1, 1, 1)[2] == 10
    assert f == g.swap_xz()
    assert h == e.swap_xz()


def test_solve_uudd():
    p, q = solve_uudd(10)
    assert eval_numeric(p, 1, 0, 1)[:7] == [1, 1, 4, 18, 88, 456, 2464]
    assert eval_numeric(p, -1, 0, 1)[:8] == [1, -1, 0, 2, 0, -8, 0, 40]
    assert q == p.swap_xz()
    for n in range(5):
        assert p.coeffs[n].terms == census(n, ("uu", "dd")).as_terms()


def test_solve_star_pattern():
    for sigma in ("uu", "dd", "ud", "du"):
        s = solve_star_pattern(6, sigma)
        assert s.coeffs[0] == P_ONE
        for n in range(5):
            assert s.coeffs[n].terms == census(n, (sigma,), star_only=True).as_terms(), (sigma, n)
    assert eval_numeric(solve_star_pattern(4, "uu"), 1, 1, 1)[1] == 1
    with pytest.raises(ValueError):
        solve_star_pattern(4, "hh")


def test_coeff_and_eval():
    t, _ = solve_master(4)
    assert coeff(t, 2, 1, 0, 1) == 2
    assert coeff(t, 2, 0, 0, 2) == 0
    with pytest.raises(ValueError):
        coeff(t, 9, 0, 0, 0)
    vals = eval_numeric(t, 1, 1, 1)
    assert vals == [1, 2, 12, 96, 880]
    assert all(isinstance(v, int) for v in vals)


def test_prefix_stability():
    t8, u8 = solve_master(8)
    t10, u10 = solve_master(10)
    assert t10.coeffs[:9] == t8.coeffs
    assert u10.coeffs[:9] == u8.coeffs
    a8 = solve_uu_dd(8)
    a10 = solve_uu_dd(10)
    for f8, f10 in zip(a8, a10):
        assert f10.coeffs[:9] == f8.coeffs


def test_partial_substitution():
    t, _ = solve_master(4)
    # setting y = 0 keeps exactly the level-free part of each coefficient
    t0 = t.substitute(y=0)
    for n in range(5):
        expected = {
            (a, 0, c): v
            for (a, b, c), v in census(n).as_terms().items()
            if b == 0
        }
        assert t0.coeffs[n].terms == expected
    # full substitution agrees with numeric evaluation, signs included
    sub = t.substitute(x=-1, y=0, z=1)
    assert [p.terms.get((0, 0, 0), 0) for p in sub.coeffs] == eval_numeric(t, -1, 0, 1)


def test_render_and_terms():
    t, _ = solve_master(2)
    text = render_series(t)
    assert "t^2: 3*x^2 + 4*x*y + 2*x*z + 3*y^2" in text
    assert "t^0: 1" in text
    terms = series_terms(t)
    assert {"n": 1, "x": 1, "y": 0, "z": 0, "coeff": 1} in terms


def test_verify_identities_all_pass():
    checks = verify_identities(8)
    assert checks
    failing = [c.name for c in checks if not c.ok]
    assert failing == []
    assert {c.category for c in checks} == {"defining", "derived"}


def test_verify_identities_rejects_tiny_order():
    with pytest.raises(ValueError):
        verify_identities(1)
