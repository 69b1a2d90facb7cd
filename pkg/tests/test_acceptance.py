"""End-to-end acceptance suite.

Each test covers one numbered acceptance criterion and prints a single
pass/fail line to the terminal, bypassing pytest's capture.
"""

import json
import time
from fractions import Fraction
from math import gcd

import pytest

from lensurf import construction as cs, fundamentality as fu, haken, qcoords
from lensurf.arithmetic import (
    bredon_wood_crosscap,
    check_formulae,
    continued_fraction,
    crosscap_b_terms,
    lens_sequence,
)
from lensurf.cli import main
from lensurf.haken import vertex_link_vector
from lensurf.qcoords import q_basis, t_vector
from lensurf.triangulation import (
    HORIZONTAL_EDGE,
    POLE_VERTEX,
    VERTICAL_EDGE,
    LensParams,
    build_triangulation,
)


def report(capsys, number, label, ok):
    with capsys.disabled():
        print("criterion %2d (%s): %s" % (number, label, "pass" if ok else "FAIL"))
    assert ok, "criterion %d failed" % number


def test_criterion_01_family_theorem_end_to_end(capsys):
    started = time.monotonic()
    expected_params = {2: (8, 3), 3: (30, 11), 4: (112, 41), 5: (418, 153), 6: (1560, 571)}
    ok = True
    for n in range(2, 7):
        seq, params = cs.family_params(n)
        ok = ok and (params.p, params.q) == expected_params[n]
        rep = cs.construct_surface(n, strict=False)
        checks = cs.theorem_checks(rep, n)
        ok = ok and all(checks.values())
        ok = ok and rep.euler == 2 - n
        ok = ok and rep.weights[VERTICAL_EDGE] == 1
        ok = ok and rep.weights[HORIZONTAL_EDGE] == 1
        ok = ok and all(count == n - 2 for count in rep.sheets.values())
    elapsed = time.monotonic() - started
    ok = ok and elapsed < 30
    report(capsys, 1, "family theorem n=2..6, %.1fs" % elapsed, ok)


def test_criterion_02_klein_bottle_euler(capsys):
    tri = build_triangulation(LensParams(8, 3))
    h1 = qcoords.reconstruct_tdisks(tri, cs.compressed_vectors(2)[-1])
    euler = haken.euler_characteristic(tri, h1)
    ok = euler == 0 == 2 - 4 + 2
    report(capsys, 2, "Klein bottle Euler characteristic", ok)


def test_criterion_03_brute_force_fundamentality(capsys):
    started = time.monotonic()
    tri = build_triangulation(LensParams(8, 3))
    h1 = qcoords.reconstruct_tdisks(tri, cs.compressed_vectors(2)[-1])
    positive = fu.minimality_oracle(tri, h1)
    link = vertex_link_vector(tri, POLE_VERTEX)
    negative = fu.minimality_oracle(tri, link + link)
    ok = positive.status == fu.FUNDAMENTAL
    ok = ok and negative.status == fu.DECOMPOSABLE
    ok = ok and fu.verify_haken_witness(tri, link + link, negative.witness)
    elapsed = time.monotonic() - started
    ok = ok and elapsed < 300
    report(capsys, 3, "brute-force oracle, %.1fs" % elapsed, ok)


def test_criterion_04_quad_oracle_evidence(capsys):
    params = LensParams(8, 3)
    tri = build_triangulation(params)
    v0 = fu.q_minimality_oracle(params, cs.h0(params), triangulation=tri)
    v1 = fu.q_minimality_oracle(params, cs.compressed_vectors(2)[-1], triangulation=tri)
    ok = v0.status == fu.DECOMPOSABLE
    ok = ok and v0.witness.entries == t_vector(params, 1).entries
    ok = ok and v1.status in (fu.FUNDAMENTAL, fu.DECOMPOSABLE, fu.INCONCLUSIVE)
    ok = ok and v1.status == fu.FUNDAMENTAL
    report(capsys, 4, "quad-coordinate oracle", ok)


def test_criterion_05_crosscap_numbers(capsys):
    ok = True
    for n in range(1, 11):
        seq = lens_sequence(2, n)
        p, q = seq.p(n), seq.q(n)
        cf = continued_fraction(p, q)
        expected_cf = tuple(2 if i % 2 == 0 else 1 for i in range(2 * n - 1))
        expected_b = [2 if i % 2 == 0 else 0 for i in range(2 * n - 1)]
        ok = ok and cf.terms == expected_cf
        ok = ok and crosscap_b_terms(cf) == expected_b
        ok = ok and bredon_wood_crosscap(p, q) == n
    report(capsys, 5, "crosscap numbers n=1..10", ok)


def test_criterion_06_recursion_identities(capsys):
    ok = True
    for kappa in range(1, 6):
        rep = check_formulae(kappa, 15)
        ok = ok and rep["ok"]
    report(capsys, 6, "recursion identities kappa=1..5", ok)


def test_criterion_07_triangulation_sweep(capsys):
    ok = True
    for p in range(2, 61):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            tri = build_triangulation(LensParams(p, q))
            vertices = len(tri.vertex_classes)
            edges = len(tri.edge_classes)
            faces = 2 * p
            ok = ok and vertices == 2
            ok = ok and edges == p + 2
            ok = ok and vertices - edges + faces - p == 0
            ok = ok and tri.edge_degree(VERTICAL_EDGE) == p
            ok = ok and tri.edge_degree(HORIZONTAL_EDGE) == p
    report(capsys, 7, "triangulation sweep p<=60", ok)


def test_criterion_08_basis_properties(capsys):
    ok = True
    for p, q in [(8, 3), (12, 5), (14, 3), (30, 11), (40, 17)]:
        params = LensParams(p, q)
        tri = build_triangulation(params)
        s, t = q_basis(params)
        ok = ok and all(qcoords.is_admissible(tri, v) for v in s + t)
        ok = ok and qcoords.rank_exact([v.entries for v in s + t]) == 2 * p
        if p % 2 == 0 and q >= 3:
            a, b = qcoords.solve_in_basis(params, cs.h0(params))
            ok = ok and all(x == 0 for x in a)
            ok = ok and all(
                x == (Fraction(1, 2) if i % 2 == 1 else 0)
                for i, x in enumerate(b, start=1)
            )
    report(capsys, 8, "quad basis admissible, rank 2p", ok)


def test_criterion_09_placement_checks(capsys):
    ok = True
    for n in (2, 3, 4, 5):
        rep = cs.verify_placements(n)
        ok = ok and rep.ok
    report(capsys, 9, "placement checks n=2..5", ok)


def test_criterion_10_property_suite(capsys):
    ok = True
    params = LensParams(8, 3)
    tri = build_triangulation(params)

    # Linearity of edge weights and Euler characteristic.
    link = vertex_link_vector(tri, POLE_VERTEX)
    h1 = qcoords.reconstruct_tdisks(tri, cs.compressed_vectors(2)[-1])
    both = link + h1
    ok = ok and haken.euler_characteristic(tri, both) == (
        haken.euler_characteristic(tri, link) + haken.euler_characteristic(tri, h1)
    )
    wa = haken.all_edge_weights(tri, link)
    wb = haken.all_edge_weights(tri, h1)
    ok = ok and haken.all_edge_weights(tri, both) == {
        name: wa[name] + wb[name] for name in wa
    }

    # Reconstruction round-trip and per-vertex-class minimality.
    for qv in [cs.h0(params), t_vector(params, 2)]:
        hv = qcoords.reconstruct_tdisks(tri, qv)
        ok = ok and hv.quad_part() == qv.entries
        ok = ok and haken.satisfies_matching(tri, hv)
        for corners in tri.vertex_classes.values():
            ok = ok and min(hv.count(tet, slot) for tet, slot in corners) == 0

    # Determinism of oracle verdicts.
    a = fu.minimality_oracle(tri, h1)
    b = fu.minimality_oracle(tri, h1)
    ok = ok and (a.status, a.nodes_explored) == (b.status, b.nodes_explored)
    qa = fu.q_minimality_oracle(params, cs.h0(params), triangulation=tri)
    qb = fu.q_minimality_oracle(params, cs.h0(params), triangulation=tri)
    ok = ok and (qa.status, qa.nodes_explored) == (qb.status, qb.nodes_explored)

    # Intermediate compressed vectors stay non-negative for n <= 6.
    for n in range(2, 7):
        for qv in cs.compressed_vectors(n):
            ok = ok and qv.is_nonnegative()

    report(capsys, 10, "property suite", ok)


def test_cli_end_to_end_smoke(capsys):
    status = main(["verify-theorem", "--n-range", "2..4"])
    out = capsys.readouterr().out
    assert status == 0
    assert json.loads(out)["ok"] is True
