"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; every tolerance is pinned here explicitly.
"""

import json
import time

import numpy as np

from hsbasis.bases import (
    MatrixBasis,
    gellmann_basis,
    random_basis,
    random_unitary,
    standard_basis,
    validate_basis,
    weyl_basis,
)
from hsbasis.cli import main as cli_main
from hsbasis.fileio import save_basis
from hsbasis.identities import IdentityId, run_catalogue
from hsbasis.linalg import (
    hs_inner,
    partial_trace,
    partial_transpose,
    reshuffle,
    tensor,
)
from hsbasis.maps import (
    Superoperator,
    apply_via_choi,
    choi_state,
    concurrence_squared,
    partial_transpose_map,
    reshuffle_map,
    state_inversion,
    state_inversion_two,
    state_inversion_y,
    superop_from_action,
    trace_map,
    transpose_map,
)
from hsbasis.operators import bell_expansion, bell_projector, bell_state, swap_expansion, swap_operator

import oracles

BUILTINS = [standard_basis, gellmann_basis, weyl_basis]

PAULI = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def _report(number: int, name: str, failures: list):
    status = "PASS" if not failures else "FAIL"
    print(f"[criterion {number}] {status}: {name}")
    assert not failures, failures[:5]


def test_criterion_1_basis_validity():
    failures = []
    start = time.perf_counter()
    for d in (2, 3, 4, 5, 6):
        for builder in BUILTINS:
            report = validate_basis(builder(d))
            residual = report.checks[0].residual
            if residual > 1e-10 * d * d:
                failures.append(f"{builder.__name__}({d}): Gram residual {residual:.3e}")
    elapsed = time.perf_counter() - start
    if elapsed >= 5.0:
        failures.append(f"runtime {elapsed:.2f}s exceeds 5s")
    _report(1, "basis orthogonality for d in 2..6, all built-in bases", failures)


def test_criterion_2_pauli_recovery():
    failures = []
    gm = gellmann_basis(2)
    for flat, sigma in enumerate(PAULI):
        if not np.array_equal(gm.elements[flat], sigma):
            failures.append(f"gellmann element {flat} differs from the Pauli matrix")
    wb = weyl_basis(2)
    pairing = [((0, 0), PAULI[0]), ((0, 1), PAULI[1]), ((1, 0), PAULI[3]), ((1, 1), PAULI[2])]
    for (j, k), sigma in pairing:
        overlap = abs(hs_inner(sigma, wb.element(j, k))) / 2.0
        if abs(overlap - 1.0) > 1e-12:
            failures.append(f"weyl ({j},{k}) overlap {overlap!r} with its Pauli partner")
    _report(2, "Pauli matrices recovered at d=2 (Gell-Mann exact, Weyl up to phase)", failures)


def test_criterion_3_swap_and_bell_expansions():
    failures = []
    start = time.perf_counter()
    for d in (2, 3, 4, 5):
        tol = 1e-10 * d * d
        swap = swap_operator(d)
        bell = bell_projector(d)
        bases = [builder(d) for builder in BUILTINS]
        rng = np.random.default_rng(d)
        bases += [random_basis(d, rng) for _ in range(20)]
        for i, basis in enumerate(bases):
            r_swap = float(np.linalg.norm(swap_expansion(basis) - swap))
            r_bell = float(np.linalg.norm(bell_expansion(basis) - bell))
            if r_swap > tol:
                failures.append(f"d={d} basis#{i}: SWAP residual {r_swap:.3e}")
            if r_bell > tol:
                failures.append(f"d={d} basis#{i}: Bell residual {r_bell:.3e}")
    elapsed = time.perf_counter() - start
    if elapsed >= 30.0:
        failures.append(f"runtime {elapsed:.2f}s exceeds 30s")
    _report(3, "SWAP/Bell expansions for built-in and 20 random bases, d in 2..5", failures)


def test_criterion_4_full_identity_catalogue():
    failures = []
    four_factor = [
        IdentityId.IDENTITY_4OP_TENSOR,
        IdentityId.FOUROPS_1,
        IdentityId.FOUROPS_2,
        IdentityId.FOUROPS_3,
        IdentityId.BELLBELL_TENSOR,
        IdentityId.SWAPBELL_TENSOR,
        IdentityId.TR1_BELLBELL,
        IdentityId.TR12_BELLBELL,
    ]
    for d in (2, 3, 4):
        rng = np.random.default_rng(100 + d)
        bases = [builder(d) for builder in BUILTINS]
        bases += [random_basis(d, rng) for _ in range(5)]
        for i, basis in enumerate(bases):
            report = run_catalogue(basis, seed=17)
            if len(report) != 17:
                failures.append(f"catalogue has {len(report)} entries, expected 17")
            for check in report.failures:
                failures.append(f"d={d} basis#{i}: {check.id} residual {check.residual:.3e}")
    start = time.perf_counter()
    run_catalogue(weyl_basis(4), ids=four_factor, seed=17)
    elapsed = time.perf_counter() - start
    if elapsed >= 60.0:
        failures.append(f"four-factor runtime {elapsed:.2f}s exceeds 60s at d=4")
    _report(4, "all 17 catalogue identities for d in 2..4 on built-in and random bases", failures)


def test_criterion_5_map_oracles():
    failures = []
    for d in (2, 3, 4, 5):
        tol = 1e-10 * d * d
        rng = np.random.default_rng(200 + d)
        bases = [builder(d) for builder in BUILTINS] + [random_basis(d, rng)]
        for trial in range(20):
            basis = bases[trial % len(bases)]
            a = oracles.random_matrix(d, rng)
            b2 = oracles.random_matrix(d * d, rng)
            checks = [
                ("trace", trace_map(a, basis), np.trace(a) * np.eye(d)),
                ("transpose", transpose_map(a, basis), a.T),
                ("pt", partial_transpose_map(b2, 2, basis), partial_transpose(b2, 2, d)),
                ("reshuffle", reshuffle_map(b2, basis), reshuffle(b2, d)),
            ]
            for name, got, expected in checks:
                residual = float(np.linalg.norm(got - expected))
                if residual > tol:
                    failures.append(f"d={d} trial {trial} {name}: residual {residual:.3e}")
    _report(5, "trace/transpose/pt/reshuffle expansions vs raw index oracles", failures)


def test_criterion_6_choi_round_trip():
    failures = []
    for d in (2, 3, 4):
        rng = np.random.default_rng(300 + d)
        bases = [builder(d) for builder in BUILTINS] + [random_basis(d, rng)]
        for trial in range(10):
            basis = bases[trial % len(bases)]
            superop = Superoperator(d, oracles.random_matrix(d * d, rng))
            choi = choi_state(superop, basis)
            a = oracles.random_matrix(d, rng)
            residual = float(np.linalg.norm(apply_via_choi(choi, a) - superop.apply(a)))
            if residual > 1e-9 * d * d:
                failures.append(f"d={d} trial {trial}: round-trip residual {residual:.3e}")
        for basis in bases:
            identity_choi = choi_state(superop_from_action(lambda g: g, basis), basis)
            residual = float(np.linalg.norm(identity_choi.matrix - bell_projector(d)))
            if residual > 1e-12 * d * d:
                failures.append(f"d={d} {basis.kind}: Choi(Id) residual {residual:.3e}")
    _report(6, "Choi state round-trips and Choi of the identity map", failures)


def test_criterion_7_state_inversion():
    failures = []
    for d in (2, 3, 4):
        tol = 1e-10 * d * d
        rng = np.random.default_rng(400 + d)
        a = oracles.random_hermitian(d, rng)
        analytic = np.trace(a) * np.eye(d) - a
        for basis in [builder(d) for builder in BUILTINS] + [random_basis(d, rng)]:
            residual = float(np.linalg.norm(state_inversion(a, basis) - analytic))
            if residual > tol:
                failures.append(f"d={d} {basis.kind}: expansion residual {residual:.3e}")
        r_y = float(np.linalg.norm(state_inversion_y(a) - analytic))
        if r_y > tol:
            failures.append(f"d={d}: single-party y-form residual {r_y:.3e}")
        b2 = oracles.random_hermitian(d * d, rng)
        four_term = (
            np.trace(b2) * np.eye(d * d)
            - tensor(partial_trace(b2, 2, d), np.eye(d))
            - tensor(np.eye(d), partial_trace(b2, 1, d))
            + b2
        )
        r_two = float(np.linalg.norm(state_inversion_two(b2) - four_term))
        if r_two > tol:
            failures.append(f"d={d}: two-party y-form residual {r_two:.3e}")
    _report(7, "state inversion: basis expansion, y-forms, and analytic forms agree", failures)


def test_criterion_8_concurrence():
    failures = []
    rng = np.random.default_rng(500)
    for d in (2, 3, 4, 5, 6):
        for _ in range(10):
            psi = np.kron(oracles.random_state(d, rng), oracles.random_state(d, rng))
            value = concurrence_squared(psi)
            if abs(value) > 1e-10:
                failures.append(f"d={d}: product state gave {value:.3e}")
        value = concurrence_squared(bell_state(d))
        expected = 2.0 * (1.0 - 1.0 / d)
        if abs(value - expected) > 1e-10:
            failures.append(f"d={d}: Bell state gave {value!r}, expected {expected!r}")
    for trial in range(20):
        d = 2 + trial % 4
        psi = oracles.random_state(d * d, rng)
        base = concurrence_squared(psi)
        rotated = tensor(random_unitary(d, rng), random_unitary(d, rng)) @ psi
        if abs(concurrence_squared(rotated) - base) > 1e-9:
            failures.append(f"trial {trial} d={d}: local-unitary invariance broken")
    _report(8, "concurrence on product states, Bell states, and local unitaries", failures)


def test_criterion_9_cli_contract(tmp_path, capsys):
    failures = []
    # byte-identical machine reports for the same configuration
    args = ["verify", "--dim", "3", "--basis", "weyl", "--seed", "23", "--report", "machine"]
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    code_pass1 = cli_main(args + ["--out", str(out1)])
    code_pass2 = cli_main(args + ["--out", str(out2)])
    if out1.read_bytes() != out2.read_bytes():
        failures.append("machine reports differ between identical runs")
    if code_pass1 != 0 or code_pass2 != 0:
        failures.append(f"passing run exited {code_pass1}/{code_pass2}, expected 0")
    # a seeded failure: denormalized basis file must exit 1
    bad = MatrixBasis(2, 1.5 * np.array(gellmann_basis(2).elements))
    bad_path = tmp_path / "badbasis.json"
    save_basis(bad, bad_path)
    code_fail = cli_main(["verify", "--basis", f"file:{bad_path}", "--report", "machine",
                          "--out", str(tmp_path / "rf.json")])
    if code_fail != 1:
        failures.append(f"failing run exited {code_fail}, expected 1")
    doc = json.loads((tmp_path / "rf.json").read_text())
    if not any(r["verdict"] == "fail" for r in doc["results"]):
        failures.append("failing run reported no failed identities")
    # a malformed file must exit 2
    malformed = tmp_path / "malformed.json"
    malformed.write_text(json.dumps({"rows": 2, "cols": 2, "entries": [[0.0, 0.0]]}))
    code_bad = cli_main(["decompose", "--dim", "2", "--basis", "gellmann",
                         "--input", str(malformed), "--out", str(tmp_path / "x.json")])
    capsys.readouterr()
    if code_bad != 2:
        failures.append(f"malformed input exited {code_bad}, expected 2")
    _report(9, "CLI determinism and 0/1/2 exit-code contract", failures)
