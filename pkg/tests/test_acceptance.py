"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed
even without ``-s``).
"""
import random
import time
from fractions import Fraction as F
from math import factorial

import pytest

from conftest import random_sequence
from divstab import catalog
from divstab.closed_forms import (
    blowup_ci_sequence,
    eta_blowup_ci,
    eta_curve_blowup_3fold,
    eta_negsection_blowup,
    eta_rho_one,
    negsection_blowup_sequence,
)
from divstab.exact import dot
from divstab.modelseq import df_from_eta, eta_intersection, eta_volume, validate_sequence
from divstab.polytope import HalfSpace, affine_image, barycenter, halfspace_slice
from divstab.toric import (
    okounkov_barycenter_verdict,
    pseudoeffective_threshold,
    toric_eta,
    transform_fan,
)
from divstab.weights import default_step, df_from_weights, eta_from_weights, weight_series


@pytest.fixture
def gate(capsys):
    """Run ``check`` under a time budget and print one line for the criterion."""

    def run(number, title, budget, check):
        t0 = time.perf_counter()
        failure = None
        try:
            check()
        except AssertionError as exc:
            failure = str(exc) or "assertion failed"
        elapsed = time.perf_counter() - t0
        if failure is None and elapsed >= budget:
            failure = f"took {elapsed:.2f} s, budget {budget} s"
        status = "PASS" if failure is None else "FAIL"
        with capsys.disabled():
            print(f"\ncriterion {number} {status}: {title} ({elapsed:.2f} s){'' if failure is None else ' - ' + failure}")
        assert failure is None, failure

    return run


def test_criterion_1_curve_blowups(gate):
    expected = {
        "mm2-15": F(7, 6), "mm2-19": F(2), "mm2-22": F(17, 6),
        "mm2-26-v5": F(0), "mm2-26-q": F(239, 48), "mm2-29": F(4, 3),
    }
    params = {k: catalog.load_entry(k).parse().astuple() for k in expected}

    def check():
        for key, value in expected.items():
            got = eta_curve_blowup_3fold(*params[key])
            assert got == value, f"{key}: {got} != {value}"

    gate(1, "rho=2 curve-blowup values 7/6, 2, 17/6, 0, 239/48, 4/3", 1.0, check)


def test_criterion_2_thresholds(gate):
    bl1 = catalog.load_entry("bl1-p2").parse()
    bl2 = catalog.load_entry("bl2-p2").parse()

    def check():
        assert pseudoeffective_threshold(bl1, bl1.ray_index((1, 1))) == 2
        assert pseudoeffective_threshold(bl2, bl2.ray_index((1, 0))) == 3

    gate(2, "tau(E) = 2 on Bl1 P2, tau(E0) = 3 on Bl2 P2", 1.0, check)


def test_criterion_3_okounkov_body(gate):
    def check():
        body = catalog.load_entry("w6-flag").parse()
        rep = okounkov_barycenter_verdict(body)
        assert rep.barycenter == (F(5, 6), F(7, 6), F(7, 6)), rep.barycenter
        assert rep.b1 == F(5, 6) and rep.b1 < 1

    gate(3, "Okounkov body barycenter (5/6, 7/6, 7/6)", 1.0, check)


def test_criterion_4_toric_sign_identity(gate):
    def check():
        fans = [e.parse() for e in catalog.entries("fan")]
        assert len(fans) >= 9
        for X in fans:
            P = X.polytope
            b = barycenter(P)
            for i, v in enumerate(X.rays):
                eta = toric_eta(X, i)
                pairing = dot(b, v)
                assert eta == -factorial(X.dim) * P.volume * pairing, (X.name, i)
                assert (eta > 0) - (eta < 0) == (-pairing > 0) - (-pairing < 0)

    gate(4, "toric eta = -n! vol(P) <b_P, v> with matching sign on every catalog ray", 2.0, check)


def test_criterion_5_engine_agreement(gate):
    def check():
        rng = random.Random(2024)
        valid = 0
        while valid < 100:
            seq = random_sequence(rng, rng.choice((2, 3)))
            if not validate_sequence(seq).ok:
                continue
            valid += 1
            assert eta_intersection(seq) == eta_volume(seq)
        for name in ("p2", "bl1-p2", "bl2-p2", "p1xp1"):
            X = catalog.load_entry(name).parse()
            for ray in range(len(X.rays)):
                k0 = default_step(X, ray, 1)
                series = weight_series(X, ray, 1, kmax=10 * k0)
                assert max(series.ks) <= 10 * k0
                assert eta_from_weights(series) == toric_eta(X, ray), (name, ray)

    gate(5, "eta_intersection = eta_volume on 100 sequences; weights = toric on 4 surfaces", 30.0, check)


def test_criterion_6_df_pipeline(gate):
    def check():
        p2 = catalog.load_entry("p2").parse()
        s = weight_series(p2, 0, 1)
        assert df_from_weights(s, 2, 9) == 0
        assert df_from_eta(eta_from_weights(s), 2, 1, 9) == 0
        bl1 = catalog.load_entry("bl1-p2").parse()
        s = weight_series(bl1, bl1.ray_index((1, 1)), 1)
        assert df_from_weights(s, 2, 8) == F(-4, 3)
        assert df_from_eta(eta_from_weights(s), 2, 1, 8) == F(-4, 3)

    gate(6, "DF from weight coefficients equals DF from eta (P2: 0, Bl1 P2: -4/3)", 10.0, check)


def test_criterion_7_closed_forms(gate):
    def check():
        assert eta_rho_one(3, 4, 64) == 0
        zero = neg = 0
        for n in (3, 4):
            for r in range(2, 8):
                for s in range(1, r):
                    for d in range(s + 1, min(2 * s, r + s - 1) + 1):
                        res = eta_negsection_blowup(n, 2, r, s, d)
                        if d == 2 * s:
                            assert res.value == 0
                            zero += 1
                        else:
                            assert res.value < 0
                            neg += 1
                        seq = negsection_blowup_sequence(n, 2, r, s, d)
                        assert res.value == eta_intersection(seq) == eta_volume(seq)
        assert zero and neg
        sampled = 0
        for n in (3, 4, 5):
            for r in range(3, 9):
                for d1 in range(1, r):
                    for d2 in range(d1 + 1, r):
                        eta = eta_blowup_ci(n, 1, r, d1, d2)
                        if d2 >= 2 * d1:
                            assert eta < 0
                            sampled += 1
                        seq = blowup_ci_sequence(n, 1, r, d1, d2)
                        assert eta == eta_intersection(seq) == eta_volume(seq)
        assert sampled

    gate(7, "closed forms: signs and exact match with two-segment sequences", 5.0, check)


def test_criterion_8_invariants(gate):
    def check():
        fans = {e.id: e.parse() for e in catalog.entries("fan")}
        # slicing additivity
        for X in fans.values():
            P = X.polytope
            for v in X.rays:
                h = HalfSpace(v, F(-1, 2))
                a, b = halfspace_slice(P, h), halfspace_slice(P, h.complement())
                assert a.volume + b.volume == P.volume
                assert tuple(x + y for x, y in zip(a.moment_vector, b.moment_vector)) == P.moment_vector
        # unimodular invariance
        T2, T3 = [[2, 1], [1, 1]], [[1, 0, 1], [0, 1, 2], [0, 0, 1]]
        for X in fans.values():
            if X.dim == 1:
                continue
            Y = transform_fan(X, T2 if X.dim == 2 else T3)
            assert Y.polytope.volume == X.polytope.volume
            assert [toric_eta(Y, i) for i in range(len(Y.rays))] == [toric_eta(X, i) for i in range(len(X.rays))]
        # triangulation consistency: a translate pulls from a different apex
        for X in fans.values():
            P = X.polytope
            n = X.dim
            ident = [[int(i == j) for j in range(n)] for i in range(n)]
            Q = affine_image(P, ident, [F(1, 3)] * n)
            assert Q.volume == P.volume
            assert barycenter(Q) == tuple(c + F(1, 3) for c in barycenter(P))
            assert sum(P.simplex_volume(s) for s in P.triangulation) == P.volume
        # eta <= 0 forces tau > 1; splitting a segment changes nothing
        rng = random.Random(99)
        seen = 0
        while seen < 60:
            seq = random_sequence(rng, rng.choice((2, 3)))
            if not validate_sequence(seq).ok:
                continue
            seen += 1
            eta = eta_intersection(seq)
            if eta <= 0:
                assert seq.tau > 1
            s = seq.segments[0]
            split = seq.split(0, (s.tau_lo + s.tau_hi) / 2)
            assert eta_intersection(split) == eta == eta_volume(split)

    gate(8, "slicing, unimodular, triangulation, eta <= 0 => tau > 1, splitting invariance", 30.0, check)
