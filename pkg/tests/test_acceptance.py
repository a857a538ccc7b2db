"""Exit criteria, one test each; every test prints a PASS/FAIL line."""

import subprocess
import sys
import time

import pytest

from dsrefine import (
    FieldSpec,
    proposition_refine,
    subspace_intersect,
    subspace_sum,
    theorem_refine,
    verify_certificate,
)
from dsrefine import io
from dsrefine.core import is_independent
from dsrefine.gen import GenSpec, SplitMix64, planted_instance, random_chain, random_genspec, random_instance
from dsrefine.oracle import elements, enumerate_subspaces, oracle_theorem_check, parity_obstruction_check, sumset

from test_io_cli import WORKED_DOC


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'}: {detail}")
        return ok

    return emit


def _direct_sum(parts, whole):
    return is_independent(parts) and subspace_sum(*parts) == whole


def test_1_theorem_realization(report):
    start = time.perf_counter()
    tallies = {}
    for p in (2, 3, 101):
        field = FieldSpec.prime(p)
        ok = 0
        for seed in range(1000):
            inst = random_instance(random_genspec(SplitMix64(seed), field, max_n=24, max_summands=8, max_distinguished=4))
            ok += verify_certificate(inst, theorem_refine(inst))
        tallies[p] = ok
    elapsed = time.perf_counter() - start
    passed = all(v == 1000 for v in tallies.values()) and elapsed < 30.0
    report(1, passed, f"verified {tallies} of 1000 per field in {elapsed:.1f}s (limit 30s)")
    assert all(v == 1000 for v in tallies.values())
    assert elapsed < 30.0


def test_2_oracle_equivalence(report):
    start = time.perf_counter()
    field = FieldSpec.prime(2)
    ok = 0
    for seed in range(200):
        inst = random_instance(random_genspec(SplitMix64(seed), field, max_n=4))
        assert inst.n <= 4
        ok += oracle_theorem_check(inst)
    elapsed = time.perf_counter() - start
    report(2, ok == 200 and elapsed < 60.0, f"{ok}/200 confirmed by exhaustive search in {elapsed:.1f}s (limit 60s)")
    assert ok == 200
    assert elapsed < 60.0


def test_3_subspace_arithmetic_oracle(report):
    field = FieldSpec.prime(2)
    cat = enumerate_subspaces(field, 3).subspaces
    assert len(cat) == 16
    bad_sum = bad_int = bad_law = 0
    for u in cat:
        for w in cat:
            s, i = subspace_sum(u, w), subspace_intersect(u, w)
            bad_sum += elements(s) != sumset(elements(u), elements(w), p=2, n=3)
            bad_int += elements(i) != elements(u) & elements(w)
            bad_law += s.dim + i.dim != u.dim + w.dim
    ok = bad_sum == bad_int == bad_law == 0
    report(3, ok, f"256 pairs; sum mismatches {bad_sum}, intersection mismatches {bad_int}, dimension-law failures {bad_law}")
    assert ok


def test_4_proposition_suite(report):
    fields = (FieldSpec.prime(2), FieldSpec.prime(3))
    ok = 0
    for trial in range(500):
        rng = SplitMix64(trial)
        field = fields[trial % 2]
        a, x, b, v = random_chain(rng, field, rng.between(1, 8))
        xb, xav = proposition_refine(a, x, b, v)
        ax = subspace_sum(a, x)
        vax = subspace_intersect(v, ax)
        eq3 = _direct_sum([a, xb], b) and xb == subspace_intersect(x, b)
        eq4 = _direct_sum([xb, xav], x) and xav == subspace_intersect(x, subspace_sum(a, v))
        eq5 = _direct_sum([b, vax], ax)
        eq8 = xav == subspace_intersect(subspace_sum(a, vax), x)
        ok += eq3 and eq4 and eq5 and eq8
    report(4, ok == 500, f"{ok}/500 chains satisfy the split, complement, intermediate and shrinking identities")
    assert ok == 500


WORKED_CERTIFICATE = """\
{
  "field": {
    "kind": "prime",
    "p": 2
  },
  "n": 4,
  "J0": ["D1"],
  "I0": ["C1"],
  "Y_basis": [
    [0, 1, 0, 0]
  ],
  "complement_basis": [],
  "report": [
    {
      "name": "B' = B (+) sum(D_J0) is direct",
      "pass": true
    },
    {
      "name": "A <= B'",
      "pass": true
    },
    {
      "name": "X = sum(C_I0) is direct",
      "pass": true
    },
    {
      "name": "B' <= A (+) X",
      "pass": true
    },
    {
      "name": "B' = A (+) (X n B')",
      "pass": true
    },
    {
      "name": "(A (+) X) = B' (+) (V n (A (+) X))",
      "pass": true
    },
    {
      "name": "(A (+) X) = A (+) (X n B') (+) (V n (A (+) X))",
      "pass": true
    },
    {
      "name": "X = (X n B') (+) ((A (+) (V n (A (+) X))) n X)",
      "pass": true
    },
    {
      "name": "(X n (A (+) V)) = ((A (+) (V n (A (+) X))) n X)",
      "pass": true
    },
    {
      "name": "X = (X n B') (+) (X n (A (+) V))",
      "pass": true
    },
    {
      "name": "complement = X n (A (+) sum(D_j, j not in J0))",
      "pass": true
    },
    {
      "name": "A (+) Y = B (+) sum(D_J0)",
      "pass": true
    },
    {
      "name": "Y (+) complement = X",
      "pass": true
    }
  ]
}
"""


def test_5_worked_example(report):
    inst = io.parse_instance(WORKED_DOC)
    cert = theorem_refine(inst)
    text = io.dumps(io.certificate_to_json(inst, cert))
    fields_ok = (
        cert.J0 == ("D1",)
        and cert.I0 == ("C1",)
        and cert.Y.basis == ((0, 1, 0, 0),)
        and cert.Y_complement.basis == ()
    )
    ok = fields_ok and text == WORKED_CERTIFICATE
    report(5, ok, f"J0={list(cert.J0)} I0={list(cert.I0)} Y={[list(r) for r in cert.Y.basis]} complement={list(cert.Y_complement.basis)}; byte-exact={text == WORKED_CERTIFICATE}")
    assert fields_ok
    assert text == WORKED_CERTIFICATE


def test_6_locality(report):
    details = []
    all_ok = True
    for field in (FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.prime(101)):
        for seed in range(5):
            spec = GenSpec(seed, field, 2 + 50, (2,) + (1,) * 50, (2,) + (1,) * 50)
            inst = planted_instance(spec, 1, 1)
            assert len(inst.side1.summands) == len(inst.side2.summands) == 51
            trace = []
            cert = theorem_refine(inst, trace)
            side1_reads = {entry[2] for entry in trace if entry[0] == "summand" and entry[1] == "side1"}
            bound = inst.side1.distinguished_space.dim + sum(inst.side1.space(l).dim for l in cert.I0)
            largest = max(entry[1] for entry in trace if entry[0] == "formed")
            ok = (
                len(cert.J0) <= 1
                and len(cert.I0) <= 1
                and side1_reads <= {"A", *cert.I0}
                and largest <= bound
                and verify_certificate(inst, cert)
            )
            all_ok &= ok
            details.append(f"{field}/{seed}: |J0|={len(cert.J0)} |I0|={len(cert.I0)} side1 reads={sorted(side1_reads)}")
    report(6, all_ok, "; ".join(details[:3]) + f" ... ({len(details)} instances)")
    assert all_ok


def test_7_parity_obstruction(report):
    quantified = not any(1 + 2 * s == 2 + 2 * t for s in range(11) for t in range(11))
    quantified &= not any(3 + 2 * s == 4 + 2 * t for s in range(11) for t in range(11))
    ok = parity_obstruction_check(1, 2, 2, 10) and parity_obstruction_check(3, 4, 2, 10) and quantified
    report(7, ok, "(1,2,2,10) and (3,4,2,10) admit no balancing s,t <= 10")
    assert ok


def _run(*args):
    return subprocess.run([sys.executable, "-m", "dsrefine", *args], check=True, capture_output=True).stdout


def test_8_determinism(report, tmp_path):
    gen_args = ["gen", "--seed", "2024", "--field", "3", "--dim", "12",
                "--blocks1", "3,4,5", "--blocks2", "2,2,2,6"]
    first, second = _run(*gen_args), _run(*gen_args)
    path = tmp_path / "inst.json"
    path.write_bytes(first)
    cert1, cert2 = _run("refine", str(path)), _run("refine", str(path))
    planted = ["gen", "--seed", "5", "--field", "Q", "--dim", "6", "--blocks1", "2,1,1,1,1",
               "--blocks2", "2,1,1,1,1", "--planted", "1,1"]
    p1, p2 = _run(*planted), _run(*planted)
    ok = first == second and cert1 == cert2 and p1 == p2
    report(8, ok, f"gen {len(first)} bytes identical={first == second}; refine {len(cert1)} bytes identical={cert1 == cert2}")
    assert ok
