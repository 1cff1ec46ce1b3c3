"""Acceptance suite: one criterion per test, one printed PASS/FAIL line each.

The grid criteria run over the canonical half-open parameter square
(-pi/2, pi/2]^2; permutation matrices are named by the 1-based index pairs
they swap (p_mat((1, 5)) swaps rows 2 and 6 when applied from the left).
"""

import math
import time
from itertools import product

import numpy as np
import pytest

from hadamard6 import (
    ComposeSpec,
    SearchConfig,
    SingularZ,
    admissible_sign_patterns,
    apply_equivalence,
    are_equivalent,
    classify,
    compose12,
    dagger,
    dita_corner,
    dita_d6,
    family_h,
    family_h_with_signs,
    fourier_f6,
    modulus_defect,
    project_search,
    solve_ab,
    transpose,
    unitarity_defect,
    verify_witness,
    z_block,
)

from conftest import random_witness

GRID_N = 33
GRID = [-np.pi / 2 + k * np.pi / GRID_N for k in range(1, GRID_N + 1)]


def p_mat(*swaps_1based):
    p = np.eye(6)
    for a, b in swaps_1based:
        p[[a - 1, b - 1]] = p[[b - 1, a - 1]]
    return p


def near_singular(x1, x2):
    s = math.sin(x1) * math.sin(x2)
    return min(abs(1 - s), abs(1 + s)) < 1e-6


def _report(num, desc, ok):
    print(f"criterion {num:02d} {desc}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num:02d} {desc} failed"


def test_c01_family_valid_on_grid():
    worst = 0.0
    for x1, x2 in product(GRID, GRID):
        if near_singular(x1, x2):
            continue
        m = family_h(x1, x2)
        worst = max(worst, modulus_defect(m), unitarity_defect(m))
    _report(1, f"family defects <= 1e-10 on the 33x33 grid (worst {worst:.2e})", worst <= 1e-10)


def test_c02_constraint_identities_on_grid():
    eye2 = np.eye(2)
    w_sum = w_unit = w_rel = w_mod = w_sep = 0.0
    for x1, x2 in product(GRID, GRID):
        if near_singular(x1, x2):
            continue
        z = z_block(x1, x2)
        a, b = solve_ab(x1, x2)
        z1, z2 = np.exp(1j * x1), np.exp(1j * x2)
        s = math.sin(x1) * math.sin(x2)
        w_sum = max(w_sum, np.max(np.abs(a + b + z)))
        w_unit = max(w_unit, np.max(np.abs(dagger(z) @ z - 2 * eye2)))
        w_rel = max(
            w_rel,
            abs(z[1, 0] - z1 * z2 * np.conj(z[0, 1])),
            abs(z[1, 1] + z1 * z2 * np.conj(z[0, 0])),
        )
        w_mod = max(
            w_mod,
            abs(abs(z[0, 0]) ** 2 - (1 + s)),
            abs(abs(z[0, 1]) ** 2 - (1 - s)),
            abs(abs(z[1, 0]) ** 2 - (1 - s)),
            abs(abs(z[1, 1]) ** 2 - (1 + s)),
        )
        w_sep = max(w_sep, np.max(np.abs((a - b) @ dagger(a - b) - 6 * eye2)))
    with pytest.raises(SingularZ):
        solve_ab(np.pi / 2, np.pi / 2)
    ok = w_sum <= 1e-12 and w_unit <= 1e-12 and w_rel <= 1e-14 and w_mod <= 1e-14 and w_sep <= 1e-12
    _report(
        2,
        "block constraints on the grid "
        f"(a+b={w_sum:.1e}, unitary={w_unit:.1e}, relations={w_rel:.1e}, "
        f"moduli={w_mod:.1e}, separation={w_sep:.1e})",
        ok,
    )


def test_c03_sign_patterns_equivalent_by_swaps():
    pats = admissible_sign_patterns()
    ms = [family_h_with_signs(0.3, 0.2, p) for p in pats]
    ok = len(pats) == 8 and all(modulus_defect(m) <= 1e-10 and unitarity_defect(m) <= 1e-10 for m in ms)
    swap_opts = [(), ((3, 5),), ((4, 6),), ((3, 5), (4, 6))]  # 1-based pairs
    for i, j in product(range(8), range(8)):
        found = False
        for row_sw, col_sw in product(swap_opts, swap_opts):
            cand = p_mat(*row_sw) @ ms[i] @ p_mat(*col_sw)
            if np.max(np.abs(cand - ms[j])) <= 1e-12:
                found = True
                break
        ok = ok and found
    _report(3, "8 sign completions pairwise equivalent via 16 swap combos", ok)


def test_c04_fourier_slice():
    rng = np.random.default_rng(20)
    xs = [-1.2, -0.6, 0.0, 0.3, 0.6, 0.9, 1.2, 1.5] + list(rng.uniform(-1.5, 1.5, 3))
    left = p_mat((2, 6)) @ p_mat((2, 4)) @ p_mat((3, 5))
    right = p_mat((2, 4)) @ p_mat((3, 5))
    worst = max(
        np.max(np.abs(left @ family_h(x, 0.0) @ right - fourier_f6(x, x))) for x in xs
    )
    ok = worst <= 1e-10
    for x in (-1.2, -0.3, 0.4, 0.9, 1.5):
        res = are_equivalent(family_h(0.0, x), transpose(fourier_f6(x, x)))
        ok = ok and res.decision == "equivalent"
    _report(4, f"Fourier slice chain (worst {worst:.2e}) and transposed slice", ok)


def test_c05_symmetric_subfamily():
    p46 = p_mat((4, 6))
    worst = 0.0
    for x in np.linspace(-1.5, 1.5, 11):
        m = p46 @ family_h(x, x)
        worst = max(worst, np.max(np.abs(m - m.T)))
    _report(5, f"row-swapped diagonal slice symmetric (worst {worst:.2e})", worst <= 1e-12)


def test_c06_self_adjoint_subfamily():
    p35, p46 = p_mat((3, 5)), p_mat((4, 6))
    worst = 0.0
    for x in np.linspace(-1.5, 1.5, 11):
        h = family_h(x, -x)
        worst = max(worst, np.max(np.abs(h - p35 @ dagger(h) @ p46)))
    ok = worst <= 1e-12
    for x in (0.4, -0.9, 1.1):
        h = family_h(x, -x)
        ok = ok and are_equivalent(h, dagger(h)).decision == "equivalent"
    _report(6, f"anti-diagonal slice self-adjoint up to swaps (worst {worst:.2e})", ok)


def test_c07_periodicity():
    rng = np.random.default_rng(21)
    p_cols = p_mat((3, 4)) @ p_mat((5, 6))
    p_rows = p_mat((3, 6)) @ p_mat((4, 5))
    worst = 0.0
    for _ in range(8):
        x1, x2 = rng.uniform(-1.5, 1.5, 2)
        h = family_h(x1, x2)
        worst = max(worst, np.max(np.abs(family_h(x1 + np.pi, x2) - h @ p_cols)))
        worst = max(worst, np.max(np.abs(family_h(x1, x2 + np.pi) - p_rows @ h)))
    _report(7, f"pi-periodicity up to pair swaps (worst {worst:.2e})", worst <= 1e-10)


def test_c08_dita_corner():
    ok = all(
        are_equivalent(dita_corner(x), dita_d6(-x)).decision == "equivalent"
        for x in (-0.6, 0.0, 0.4)
    )
    # explicit chain at x = 0.2: column phases, row swaps 1-2 and 3-4, column swap 3-4
    m = dita_corner(0.2) * np.array([1, -1, -1j, 1j, -1j, 1j])[None, :]
    m[[0, 1]] = m[[1, 0]]
    m[[2, 3]] = m[[3, 2]]
    m[:, [2, 3]] = m[:, [3, 2]]
    chain = np.max(np.abs(m - dita_d6(-0.2)))
    ok = ok and chain <= 1e-12
    t = 1e-4
    worst = max(
        np.max(
            np.abs(
                family_h(np.pi / 2 - t, np.pi / 2 - r * t)
                - dita_corner(np.arctan((1 - r) / (1 + r)))
            )
        )
        for r in (0.5, 1.0, 2.0)
    )
    ok = ok and worst <= 1e-3
    _report(8, f"corner equals the affine family (chain {chain:.1e}, limit {worst:.1e})", ok)


def test_c09_equivalence_engine():
    t0 = time.perf_counter()
    res = are_equivalent(fourier_f6(0.0, 0.0), dita_d6(0.0), screen=False)
    elapsed = time.perf_counter() - t0
    ok = res.decision == "inequivalent" and elapsed < 60.0
    rng = np.random.default_rng(22)
    tol = 1e-10
    for _ in range(20):
        x1, x2 = rng.uniform(-1.4, 1.4, 2)
        h1 = family_h(x1, x2)
        h2 = apply_equivalence(h1, random_witness(6, rng))
        r = are_equivalent(h1, h2, tol=tol)
        ok = ok and r.decision == "equivalent" and verify_witness(h1, h2, r.witness) <= 10 * tol
    _report(9, f"exhaustive engine ({elapsed:.1f}s) and 20 witness round-trips", ok)


def test_c10_order12_composition():
    rng = np.random.default_rng(23)
    families = ("f6", "f6t", "h")
    worst = 0.0
    for _ in range(20):
        spec = ComposeSpec(
            families[rng.integers(3)],
            tuple(rng.uniform(-1.4, 1.4, 2)),
            families[rng.integers(3)],
            tuple(rng.uniform(-1.4, 1.4, 2)),
            tuple(rng.uniform(0, 2 * np.pi, 5)),
        )
        m = compose12(spec)
        worst = max(worst, unitarity_defect(m))
    _report(10, f"20 random 12x12 compositions (worst defect {worst:.2e})", worst <= 1e-10)


def test_c11_search_and_classify():
    converged = sum(
        project_search(SearchConfig(rng_seed=s, tol=1e-8, max_iter=2000)).converged
        for s in range(100)
    )
    ok = converged >= 80
    rng = np.random.default_rng(24)
    recovered = 0
    for _ in range(10):
        # stay clear of the singular borders, the parameter-free axes, and
        # the |x1| = |x2| diagonal so the expected recovery is unambiguous
        while True:
            u, v = rng.uniform(0.15, 1.4, 2) * rng.choice((-1, 1), 2)
            if abs(abs(u) - abs(v)) >= 0.1:
                break
        c = classify(family_h(u, v))
        if c.label == "H-family" and np.max(np.abs(np.array(c.params) - (abs(u), abs(v)))) <= 1e-3:
            recovered += 1
        ok = ok and c.label == "H-family"
    ok = ok and recovered == 10
    _report(
        11,
        f"projection search ({converged}/100 converged) and {recovered}/10 recoveries",
        ok,
    )
