"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line
in the terminal summary."""

import json
import random
import subprocess
import sys
import time

from knotcert.braid import burau_alexander, make_braid, parse_braid, seifert_matrix_from_braid
from knotcert.curves import CylindricalCurve, check_lk_scaling, self_pushoff
from knotcert.errors import MissingGenerator, NotAKnot
from knotcert.exactalg import Definiteness, IntMatrix, det, direct_sum, inertia, is_definite
from knotcert.invariants import (Reason, Sign, Verdict, alexander, certify_definite,
                                 symmetrize)
from knotcert.laurent import T, alexander_raw
from knotcert.periodic import check_theorem, make_periodic_model
from knotcert.records import bundled_text, load_records

from conftest import ACCEPTANCE
from oracles import descartes_inertia, random_symmetric, random_unimodular

TREFOIL = IntMatrix([[-1, 1], [0, -1]])
FIGURE_EIGHT = IntMatrix([[1, 1], [0, -1]])

# every Seifert matrix the gate touches, for criterion 8
TOUCHED = []


def record(number, title, ok, detail):
    ACCEPTANCE[number] = (bool(ok), title, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})")
    assert ok, detail


def test_criterion_1_trefoil():
    v = seifert_matrix_from_braid(parse_braid("1 1 1"))
    TOUCHED.append(v.v)
    c = certify_definite(v)
    got = (c.sigma, alexander(v), c.width, c.surface_genus, c.verdict)
    want = (-2, T - 1 + T.reciprocal(), 2, 1, Verdict.DEFINITE)
    record(1, "trefoil end-to-end", got == want,
           f"sigma={c.sigma} delta={alexander(v)} width={c.width} genus={c.surface_genus} {c.verdict.value}")


def test_criterion_2_figure_eight():
    v = seifert_matrix_from_braid(parse_braid("1 -2 1 -2"))
    TOUCHED.append(v.v)
    c = certify_definite(v)
    ok = (c.sigma, c.width, c.verdict, c.reason) == \
        (0, 2, Verdict.NOT_DEFINITE, Reason.WIDTH_SIGMA_MISMATCH)
    record(2, "figure-eight end-to-end", ok,
           f"sigma={c.sigma} width={c.width} {c.verdict.value} via {c.reason.value}")


def test_criterion_3_periodic_suite():
    quotients = {"unknot": IntMatrix([]), "trefoil": TREFOIL,
                 "trefoil#trefoil": direct_sum([TREFOIL, TREFOIL])}
    failures = []
    runs = 0
    for name, v in quotients.items():
        for p in (2, 3, 5):
            m = make_periodic_model(v, p, name=name)
            TOUCHED.extend([m.quotient.v, m.cover.v])
            r = check_theorem(m)
            runs += 1
            if r.cover.verdict is Verdict.DEFINITE and r.cover.sigma:
                assert r.cover.sign is r.quotient.sign is Sign.NEGATIVE
            failures += [f"{name} p={p} {f}" for f in r.failures]
    record(3, "periodic cover/quotient suite", not failures,
           f"{runs} models x 4 checks, failures: {failures or 'none'}")


def test_criterion_4_lifted_linking():
    pairs = []
    for line in bundled_text("curves.jsonl").splitlines():
        obj = json.loads(line)
        a = CylindricalCurve.from_json(obj["a"])
        b = self_pushoff(a) if obj.get("self") else CylindricalCurve.from_json(obj["b"])
        pairs.append((obj["name"], a, b))
    assert {"split coaxial circles", "hopf axis circle and meridian",
            "hopf pair off the axis (w=0)"} <= {name for name, _, _ in pairs}
    start = time.perf_counter()
    bad = []
    for name, a, b in pairs:
        for p in (2, 3):
            r = check_lk_scaling(a, b, p)
            if not r.passed:
                bad.append(f"{name} p={p}: {r.lifted} != {r.expected}")
    elapsed = time.perf_counter() - start
    record(4, "lifted linking scales by p", not bad and elapsed < 60,
           f"{len(pairs)} pairs x p in (2,3), {elapsed:.2f}s, mismatches: {bad or 'none'}")


def test_criterion_5_signature_oracle():
    rng = random.Random(2024)
    mismatches = 0
    for _ in range(500):
        s = random_symmetric(rng, rng.randint(1, 8))
        if inertia(s).astuple() != descartes_inertia(s):
            mismatches += 1
    record(5, "inertia vs sign-variation oracle", mismatches == 0,
           f"500 matrices, {mismatches} mismatches")


def _random_knot_braid(rng):
    while True:
        s = rng.randint(2, 4)
        letters = [rng.choice((1, -1)) * rng.randint(1, s - 1) for _ in range(rng.randint(1, 10))]
        try:
            return make_braid(letters, s)
        except (MissingGenerator, NotAKnot):
            continue


def test_criterion_6_alexander_invariants():
    rng = random.Random(606)
    problems = []
    extremes = 0
    for _ in range(20):
        b = _random_knot_braid(rng)
        v = seifert_matrix_from_braid(b)
        TOUCHED.append(v.v)
        d = alexander(v)
        if d != burau_alexander(b):
            problems.append(f"{b}: burau disagrees")
        if d(1) != 1 or not d.is_symmetric():
            problems.append(f"{b}: not normalized")
        dv = det(v.v)
        if dv != 0:
            extremes += 1
            raw = alexander_raw(v.v)
            if not abs(raw.leading()) == abs(raw.trailing()) == abs(dv):
                problems.append(f"{b}: extreme coefficients")
    record(6, "Alexander polynomial from braids", not problems,
           f"20 braids, {extremes} with det V != 0, problems: {problems or 'none'}")


def test_criterion_7_congruence_invariance():
    rng = random.Random(707)
    changed = []
    for name, v in (("trefoil", TREFOIL), ("figure-eight", FIGURE_EIGHT)):
        base = certify_definite(v)
        for _ in range(100):
            u = random_unimodular(rng, 2)
            w = u.T @ v @ u
            TOUCHED.append(w)
            c = certify_definite(w)
            if (c.verdict, c.sigma, c.width) != (base.verdict, base.sigma, base.width):
                changed.append(name)
    record(7, "certificates invariant under basis change", not changed,
           f"200 congruences, {len(changed)} changed")


def test_criterion_9_determinism(tmp_path):
    outs = []
    for k in range(2):
        out = tmp_path / f"run{k}.jsonl"
        proc = subprocess.run([sys.executable, "-m", "knotcert.cli", "census", "--out", str(out)],
                              capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        outs.append(out.read_bytes())
    for _, rec in load_records(bundled_text("starter.jsonl")):
        TOUCHED.append(rec.surface().v)
    record(9, "census runs are byte-identical", outs[0] == outs[1] and outs[0],
           f"{len(outs[0])} bytes per run")


def test_criterion_8_definite_form_iff_definite_verdict():
    # runs last so the matrices from every other criterion are collected
    rng = random.Random(808)
    extra = [direct_sum([TREFOIL, IntMatrix([[0, 1], [0, 0]])])]
    for _ in range(50):
        u = random_unimodular(rng, 4)
        blocks = [rng.choice([TREFOIL, FIGURE_EIGHT, TREFOIL.T.scale(-1)]) for _ in range(2)]
        extra.append(u.T @ direct_sum(blocks) @ u)
    pool = TOUCHED + extra
    bad = 0
    for m in pool:
        form = is_definite(symmetrize(m)) in (Definiteness.POSITIVE, Definiteness.NEGATIVE)
        if form != (certify_definite(m).verdict is Verdict.DEFINITE):
            bad += 1
    record(8, "definite form iff Definite verdict", bad == 0,
           f"{len(pool)} matrices, {bad} disagreements")
