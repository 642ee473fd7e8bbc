"""Acceptance suite: one test per criterion, exact equality everywhere.

Each test prints a single pass line; a failed assertion preempts it.  Brute
force means full enumeration of the tree class, and every route (closed
formula, solved series, exhaustive census, path enumeration) must agree on
the nose.
"""

import json
import os
import subprocess
import sys
import time
from pathlib import Path

from gnctrees.combinat import gnc_total, little_schroeder
from gnctrees.formulas import (
    alternating,
    alternating_by_ascents,
    d_avoiding,
    d_avoiding_by_ascents,
    dd_h,
    du_h,
    h_avoiding,
    narayana_check,
    parity_signed,
    ud_h,
    uu_h,
)
from gnctrees.patterns import avoids, census
from gnctrees.schroder import (
    coker_count,
    decode_path,
    encode_tree,
    encode_tree_literal,
    enumerate_schroder,
)
from gnctrees.series import (
    eval_numeric,
    solve_master,
    solve_star,
    solve_star_pattern,
    solve_ud_du,
    solve_uu_dd,
    solve_uudd,
    verify_identities,
)
from gnctrees.trees import NcTree, enumerate_gnc, make_gnc

ORDER = 12


def report(k, name):
    print(f"criterion {k:02d} ({name}): PASS")


def test_criterion_01_totals():
    start = time.monotonic()
    expected = [1, 2, 12, 96, 880, 8736, 91392]
    counted = [sum(1 for _ in enumerate_gnc(n)) for n in range(7)]
    assert counted == expected
    assert [gnc_total(n) for n in range(7)] == expected
    elapsed = time.monotonic() - start
    assert elapsed < 30, f"{elapsed:.1f}s over budget"
    report(1, "brute-force totals match the bar-insertion formula, n<=6")


def test_criterion_02_h_avoiders():
    start = time.monotonic()
    published = [1, 1, 5, 31, 217, 1637, 12985]
    assert [h_avoiding(n) for n in range(7)] == published
    t_full, _ = solve_master(ORDER)
    assert eval_numeric(t_full, 1, 0, 1) == [h_avoiding(n) for n in range(ORDER + 1)]
    # independent series route: iterate the level-free cubic q = 1 - tq + 2tq^3
    q = [1]
    for m in range(1, 7):
        cube = [
            sum(
                q[i] * q[j] * q[k - i - j]
                for i in range(k + 1)
                for j in range(k - i + 1)
            )
            for k in range(m)
        ]
        q.append(-q[m - 1] + 2 * cube[m - 1])
    assert q == published
    assert [census(n, ("h",)).total for n in range(7)] == published
    elapsed = time.monotonic() - start
    assert elapsed < 60, f"{elapsed:.1f}s over budget"
    report(2, "level-free counts: formula = cubic series = brute force")


def test_criterion_03_d_avoiders():
    published = [1, 2, 10, 62, 424, 3070]
    assert [d_avoiding(n) for n in range(6)] == published
    t_full, _ = solve_master(ORDER)
    series_route = eval_numeric(t_full, 1, 1, 0)
    assert series_route[:6] == published
    assert [d_avoiding(n) for n in range(ORDER + 1)] == series_route
    assert [census(n, ("d",)).total for n in range(6)] == published
    for n in range(6):
        by_k = {}
        for st, c in census(n, ("d",)).items():
            by_k[st.u] = by_k.get(st.u, 0) + c
        for k in range(n + 1):
            assert d_avoiding_by_ascents(n, k) == by_k.get(k, 0), (n, k)
    for n in range(11):
        assert sum(d_avoiding_by_ascents(n, k) for k in range(n + 1)) == d_avoiding(n)
    report(3, "descent-free totals and ascent refinement agree three ways")


def test_criterion_04_hd_avoiders_little_schroeder():
    expected = [1, 1, 3, 11, 45, 197, 903]
    assert [little_schroeder(n) for n in range(7)] == expected
    t_full, _ = solve_master(ORDER)
    assert eval_numeric(t_full, 1, 0, 0) == [little_schroeder(n) for n in range(ORDER + 1)]
    assert [census(n, ("h", "d")).total for n in range(7)] == expected
    assert [sum(1 for _ in enumerate_schroder(n)) for n in range(7)] == expected
    report(4, "increasing trees are counted by little Schroeder numbers, 4 routes")


def test_criterion_05_bijection():
    start = time.monotonic()
    for n in range(7):
        kept = [t for t in enumerate_gnc(n) if n == 0 or avoids(t, ("h", "d"))]
        paths = [encode_tree(t) for t in kept]
        assert len({p.steps for p in paths}) == len(kept) == little_schroeder(n)
        assert {p.steps for p in paths} == {p.steps for p in enumerate_schroder(n)}
        for t, p in zip(kept, paths):
            assert decode_path(p) == t
        for p in enumerate_schroder(n):
            assert encode_tree(decode_path(p)).steps == p.steps
    base = NcTree.of(8, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (0, 6), (6, 7)])
    assert encode_tree(make_gnc(base, {1, 4, 6, 7})).as_text() == "UFFUFDDUUDD"
    # literal-rule diagnostic: exactly one 2-tree collision at n = 3
    kept3 = [t for t in enumerate_gnc(3) if avoids(t, ("h", "d"))]
    words = {}
    for t in kept3:
        w = encode_tree_literal(t)
        words[w] = words.get(w, 0) + 1
    assert sorted(words.values()) == [1] * 9 + [2]
    assert len({encode_tree(t).steps for t in kept3}) == 11
    elapsed = time.monotonic() - start
    assert elapsed < 60, f"{elapsed:.1f}s over budget"
    report(5, "encoding is a bijection onto little Schroeder paths, n<=6")


def test_criterion_06_length_two_with_h():
    a_uu, _, c_dd, _ = solve_uu_dd(ORDER)
    e_ud, _, g_du, _ = solve_ud_du(ORDER)
    table = [
        ("uu", uu_h, a_uu, [1, 1, 4, 20, 116, 740, 5028]),
        ("dd", dd_h, c_dd, [1, 1, 5, 29, 185, 1257, 8925]),
        ("ud", ud_h, e_ud, [1, 1, 3, 11, 45, 197, 903]),
        ("du", du_h, g_du, [1, 1, 5, 27, 157, 957, 6025]),
    ]
    for sigma, formula, solved, frozen in table:
        series_vals = eval_numeric(solved, 1, 0, 1)
        assert series_vals[:7] == frozen, sigma
        assert [formula(n) for n in range(ORDER + 1)] == series_vals, sigma
        brute = [census(n, (sigma, "h")).total for n in range(6)]
        assert brute == frozen[:6], sigma
    report(6, "length-two-plus-h classes: formula = series = brute force")


def test_criterion_07_alternating_and_parity():
    p_alt, _ = solve_uudd(ORDER)
    series_vals = eval_numeric(p_alt, 1, 0, 1)
    assert [alternating(n) for n in range(ORDER + 1)] == series_vals
    for n in range(6):
        cen = census(n, ("uu", "dd", "h"))
        assert cen.total == alternating(n)
        by_r = {}
        for st, c in cen.items():
            by_r[st.u] = by_r.get(st.u, 0) + c
        for r in range(n + 1):
            assert alternating_by_ascents(n, r) == by_r.get(r, 0), (n, r)
    signed = [census(n, ("uu", "dd", "h")).signed_by_ascents() for n in range(8)]
    assert signed == [1, -1, 0, 2, 0, -8, 0, 40]
    assert [parity_signed(n) for n in range(8)] == signed
    assert eval_numeric(p_alt, -1, 0, 1)[:8] == signed
    report(7, "alternating totals, refinement, and signed parity, brute to n=7")


def test_criterion_08_identity_suite():
    start = time.monotonic()
    checks = verify_identities(ORDER)
    failing = [c.name for c in checks if not c.ok]
    assert failing == []
    assert len(checks) >= 50
    elapsed = time.monotonic() - start
    assert elapsed < 60, f"{elapsed:.1f}s over budget"
    report(8, "every series identity has zero residual to order 12")


def test_criterion_09_trivariate_oracle():
    t_full, _ = solve_master(ORDER)
    s_star = solve_star(ORDER)
    a_uu, _, c_dd, _ = solve_uu_dd(ORDER)
    e_ud, _, g_du, _ = solve_ud_du(ORDER)
    p_alt, _ = solve_uudd(ORDER)
    families = [
        (t_full, (), False),
        (s_star, (), True),
        (a_uu, ("uu",), False),
        (c_dd, ("dd",), False),
        (e_ud, ("ud",), False),
        (g_du, ("du",), False),
        (p_alt, ("uu", "dd"), False),
    ] + [(solve_star_pattern(ORDER, s), (s,), True) for s in ("uu", "dd", "ud", "du")]
    for f, pats, star in families:
        for n in range(6):
            assert f.coeffs[n].terms == census(n, pats, star_only=star).as_terms(), (pats, star, n)
    report(9, "series coefficients equal census polynomials for n<=5, all families")


def test_criterion_10_coker_counts():
    frozen = [1, 1, 5, 29, 185, 1257, 8925, 65445]
    assert [dd_h(n) for n in range(8)] == frozen
    assert [coker_count(n) for n in range(8)] == frozen
    report(10, "big-step path counts equal the {dd,h} formula, n<=7")


def test_criterion_11_narayana():
    for n in range(1, 21):
        for q in range(-3, 4):
            assert narayana_check(n, q).equal, (n, q)
        chk = narayana_check(n, 0)
        assert chk.lhs == chk.rhs == 0
    report(11, "Narayana identity exact for n<=20, q in -3..3")


def test_criterion_12_cli_verify_all():
    start = time.monotonic()
    env = dict(os.environ)
    src = str(Path(__file__).resolve().parent.parent / "src")
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "gnctrees.cli", "verify", "--suite", "all"],
        capture_output=True,
        text=True,
        env=env,
        timeout=300,
    )
    elapsed = time.monotonic() - start
    assert proc.returncode == 0, proc.stderr[-2000:]
    payload = json.loads(proc.stdout)
    assert payload["ok"] is True and payload["failed"] == 0
    assert elapsed < 300, f"{elapsed:.1f}s over budget"
    report(12, f"full verify suite: {payload['passed']} checks in {elapsed:.1f}s, exit 0")
