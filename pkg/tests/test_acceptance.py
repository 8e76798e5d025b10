"""Acceptance criteria, one test each; every test records a PASS/FAIL line.

Run ``python tests/test_acceptance.py`` for the lines alone, or use pytest,
which prints them in the terminal summary.
"""

import time
from math import factorial

import pytest

from brauerkit.algebra import (
    AlgebraElement,
    element,
    ideal_membership,
    ideal_span,
    presentation_check,
    presentation_relations,
    reduce_mod_p,
    sparse_vector,
)
from brauerkit.cellular import check_rad_eq_ideal, lambda0_set, multiplicity_report
from brauerkit.diagram import generator_e
from brauerkit.exactalg import GF, DeltaPoly, subspace_equal
from brauerkit.relations import (
    KernelCatalog,
    kernel_element,
    deficiency_element,
    kernel_generator,
    check_nested_arc_expansion,
    check_nested_arc_coefficients,
    check_arc_action_on_kernel_element,
    check_nested_arc_step,
    check_nested_arc_last_step,
    check_alt_sum_recursion,
    check_arc_sandwich,
    check_deficiency_rewriting,
    deficiency_pairs,
    quasi_idempotent_constant,
    times_kernel_element,
)
from brauerkit.tensorrep import check_fft_commute, kernel_nu, rank_nu

RESULTS: dict[int, str] = {}


def record(num: int, title: str, ok: bool, detail: str, seconds: float, limit: float) -> None:
    within = seconds < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"criterion {num:2d} {status}  {title}: {detail} [{seconds:.2f}s, limit {limit:g}s]"
    RESULTS[num] = line
    print(line)
    assert ok, line
    assert within, line


def arcs(r, ring, upto):
    return [element(generator_e(j, j + 1, r), ring) for j in range(1, upto + 1)]


def test_c01_presentation():
    t = time.perf_counter()
    ok = all(presentation_check(r) for r in range(2, 7))
    record(1, "presentation relations with symbolic delta", ok, "r = 2..6", time.perf_counter() - t, 1)


def test_c02_fft_commutes():
    t = time.perf_counter()
    cells = [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)]
    ok = all(check_fft_commute(n, r) for n, r in cells)
    record(2, "A o tau == nu on every diagram", ok, f"(n,r) in {cells}", time.perf_counter() - t, 30)


def test_c03_annihilation():
    t = time.perf_counter()
    ok = True
    count = 0
    for n in range(1, 6):
        r = n + 1
        for i in range((n + 1) // 2 + 1):
            E = kernel_element(i, n, r)
            for ej in arcs(r, E.ring, n):
                ok &= ej * E == 0 and E * ej == 0
                count += 1
    record(3, "e_j E_i = E_i e_j = 0", ok, f"{count} (i, j, n) cases, n = 1..5", time.perf_counter() - t, 10)


def test_c04_quasi_idempotent():
    t = time.perf_counter()
    ok = True
    headline = []
    for n in range(1, 6):
        top = (n + 1) // 2
        for i in range(top + 1):
            E = kernel_element(i, n, n + 1)
            c = quasi_idempotent_constant(i, n)
            sq = times_kernel_element(E, i, n)
            ok &= sq == E.scale(c)
            if n <= 4:
                ok &= E * E == sq
            if i == top:
                headline.append(c)
    assert headline == [factorial((n + 1) // 2) * factorial(n + 1 - (n + 1) // 2) for n in range(1, 6)]
    record(4, "E_i^2 = i!(n+1-i)! E_i", ok, f"n = 1..5, E^2 constants {headline}", time.perf_counter() - t, 10)


def _kernel_cell(n, r, p=None):
    E = kernel_generator(n, r)
    if p is None:
        ring = E.ring
    else:
        ring = GF(p, n)
        E = reduce_mod_p(E, p)
    ideal = ideal_span([E])
    ker = kernel_nu(n, r, ring)
    return subspace_equal(ideal, ker), ker.dim


def test_c05_kernel_generated_by_E():
    t = time.perf_counter()
    dims = {}
    ok = True
    worst = 0.0
    for n, r in [(2, 3), (2, 4), (3, 4), (3, 5)]:
        t1 = time.perf_counter()
        eq, dim = _kernel_cell(n, r)
        worst = max(worst, time.perf_counter() - t1)
        ok &= eq
        dims[(n, r)] = dim
    ok &= dims[(2, 3)] == 5 and dims[(2, 4)] == 70
    record(5, "<E> == ker(nu)", ok, f"kernel dims {dims}", worst, 600)


def test_c06_isomorphism_range():
    t = time.perf_counter()
    cells = [(3, 2), (3, 3), (4, 3), (4, 4)]
    ranks = {c: rank_nu(*c) for c in cells}
    ok = all(ranks[(n, r)] == factorial(2 * r) // (2 ** r * factorial(r)) for n, r in cells)
    record(6, "rank nu = (2r-1)!!", ok, f"ranks {ranks}", time.perf_counter() - t, 60)


def test_c07_arc_identities():
    t = time.perf_counter()
    ok = True
    count = 0
    for m in range(2, 9):
        ok &= check_alt_sum_recursion(m)
        count += 1
    for s in range(3, 9):
        for i in range(1, s - 1):
            ok &= check_arc_sandwich(i, s)
            count += 1
    for s in range(2, 9):
        for i in range(1, s // 2 + 1):
            ok &= check_nested_arc_coefficients(i, s)
            ok &= check_nested_arc_last_step(i, s)
            count += 2
            for j in range(i):
                ok &= check_nested_arc_step(i, s, j)
                count += 1
            for k in range(i + 1):
                ok &= check_nested_arc_expansion(i, s, k)
                count += 1
    for n in range(1, 8):
        for i in range(1, (n + 1) // 2 + 1):
            for k in range(i + 1):
                ok &= check_arc_action_on_kernel_element(i, n, k)
                count += 1
    record(7, "arc/alternating-sum identities over Q[d]", ok, f"{count} instances, s <= 8", time.perf_counter() - t, 60)


def test_c08_generalized_elements():
    t = time.perf_counter()
    ok = True
    pairs = 0
    for n in range(1, 7):
        for p in deficiency_pairs(n, 7):
            r = p.i + p.j
            if r < 2:
                continue
            ok &= check_deficiency_rewriting(p, r)
            E = deficiency_element(p, r)
            ok &= all(el * E == 0 for el in arcs(r, E.ring, r - 1))
            pairs += 1
    chain = 0
    for n in (2, 3):
        for r in (n + 1, n + 2):
            cat = KernelCatalog(n, r)
            for i in range(1, cat.top_index + 1):
                ok &= ideal_membership(cat.E_i(i - 1), cat.E_i(i))
                chain += 1
            span = ideal_span([cat.E])
            for p in cat.pairs():
                ok &= span.contains(sparse_vector(cat.E_ij(p.i, p.j)))
                ok &= span.contains(sparse_vector(cat.E_ij_star(p.i, p.j)))
                chain += 2
    record(8, "generalized kernel elements", ok, f"{pairs} pairs (i+j <= 7), {chain} ideal memberships (n = 2, 3)",
           time.perf_counter() - t, 300)


def test_c09_cellular():
    t = time.perf_counter()
    ok = True
    sums = {}
    for n, r in [(2, 4), (2, 5), (3, 5)]:
        for lam in lambda0_set(n, r):
            ok &= check_rad_eq_ideal(lam, n, r)
        rep = multiplicity_report(n, r)
        sums[(n, r)] = (rep.checksum, rank_nu(n, r))
        ok &= rep.checksum == sums[(n, r)][1]
    ok &= sums[(2, 4)][0] == 35
    record(9, "Rad = B E W on column-restricted labels; multiplicity checksum", ok,
           f"(checksum, rank) {sums}", time.perf_counter() - t, 600)


def test_c10_positive_characteristic():
    t = time.perf_counter()
    ok = True
    dims = {}
    for n, r, p in [(2, 3, 7), (2, 4, 7), (3, 4, 11), (3, 5, 11)]:
        eq_p, dim_p = _kernel_cell(n, r, p)
        eq_q, dim_q = _kernel_cell(n, r)
        ok &= eq_p and eq_q == eq_p and dim_p == dim_q
        dims[(n, r, p)] = dim_p
    record(10, "<E> == ker(nu) over F_p", ok, f"kernel dims {dims}", time.perf_counter() - t, 600)


def test_c11_negative_controls():
    t = time.perf_counter()
    rels = presentation_relations(3)
    name, lhs, rhs = rels[1]
    perturbed = rels[:1] + [(name, lhs, rhs.scale(DeltaPoly.gen() + 1))] + rels[2:]
    bad_rejected = not presentation_check(3, perturbed)
    E = kernel_generator(2, 3)
    unit_outside = not ideal_membership(AlgebraElement.one(3, E.ring), E)
    record(11, "negative controls", bad_rejected and unit_outside,
           f"perturbed relation rejected={bad_rejected}, 1 outside <E>={unit_outside}", time.perf_counter() - t, 1)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
