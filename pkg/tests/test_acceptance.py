"""Acceptance suite: one test per criterion, each at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one
`ACCEPTANCE <criterion>: PASS/FAIL` line per criterion.
"""

import numpy as np

from switchcap.bounds import (
    binary_entropy,
    lb_qs,
    lb_qs_diagonal,
    threshold_p0,
    threshold_p1,
    ub_classical,
    ub_qs,
)
from switchcap.channels import (
    BELL_DENSITY,
    I2,
    X,
    Z,
    bit_flip,
    choi_matrix,
    phase_flip,
)
from switchcap.cli import main as cli_main
from switchcap.linalg import (
    kron,
    partial_trace,
    validate_density_matrix,
    von_neumann_entropy,
)
from switchcap.oracle import GridSpec, random_density, verify_all
from switchcap.qswitch import (
    PROJ_MINUS,
    PROJ_PLUS,
    Branch,
    branch_choi,
    heralded_branches,
    switch_kraus,
    switch_output,
)

GRID21 = np.linspace(0.0, 1.0, 21)
GRID101 = np.linspace(0.0, 1.0, 101)


def _criterion(name, ok, detail=""):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"{name}: {detail}"


def test_point_values():
    tol = 1e-12
    devs = [
        abs(lb_qs(0.5, 0.5) - 0.25),
        abs(ub_qs(0.5, 0.5) - 0.5),
        abs(ub_classical(0.5, 0.5) - 0.0),
    ]
    # the q/2 (resp. p/2) equality holds while the entropy term of the lower
    # bound is clamped, i.e. up to ~0.868 on the other axis; beyond that the
    # lower bound exceeds it (lb_qs(1/2, 1) = 1), so equality is sampled in
    # the clamped regime and the inequality on the full range
    for x in np.arange(0.0, 0.851, 0.05):
        devs.append(abs(lb_qs(0.5, x) - x / 2))
        devs.append(abs(lb_qs(x, 0.5) - x / 2))
    for x in GRID21:
        devs.append(abs(ub_qs(0.5, x) - (1.0 - binary_entropy(x) / 2)))
        devs.append(abs(ub_qs(x, 0.5) - x))
        devs.append(max(0.0, x / 2 - lb_qs(0.5, x)))
        devs.append(max(0.0, x / 2 - lb_qs(x, 0.5)))
    worst = max(devs)
    _criterion("point-values", worst <= tol, f"max deviation {worst:.3e}")


def test_thresholds():
    t0, t1 = threshold_p0(), threshold_p1()
    ok = (
        abs(t0.value - 0.128) <= 1e-3
        and abs(t1.value - 0.3161) <= 1e-3
        and t0.residual <= 1e-10
        and t1.residual <= 1e-10
    )
    _criterion(
        "thresholds",
        ok,
        f"p0={t0.value!r} (resid {t0.residual:.2e}), p1={t1.value!r} (resid {t1.residual:.2e})",
    )


def test_oracle_equivalence():
    report = verify_all(GridSpec(21), tol=1e-10, seed=42)
    dev = {c.name: c.max_deviation for c in report.checks}
    stated = {
        "kraus-sum-vs-closed-form": 1e-12,        # (a)
        "minus-choi-vs-bell": 1e-12,              # (b)
        "plus-choi-vs-branch-choi": 1e-12,        # (b)
        "lemma-form-vs-kraus-form": 1e-12,        # (b)
        "plus-spectrum": 1e-10,                   # (c)
        "coherent-info": 1e-10,                   # (d)
        "relative-entropy-bound": 1e-10,          # (e)
        "separable-state-constructions": 1e-12,   # (f)
    }
    failures = {k: dev[k] for k, tol in stated.items() if dev[k] > tol}
    _criterion("oracle-equivalence", not failures, f"over tolerance: {failures}")


def test_herald_probability_input_independence():
    rng = np.random.default_rng(99)
    proj = kron(I2, PROJ_MINUS)
    worst = 0.0
    for p in GRID21:
        for q in GRID21:
            for _ in range(10):
                out = switch_output(p, q, random_density(rng), PROJ_PLUS)
                herald = float(np.trace(proj @ out).real)
                worst = max(worst, abs(herald - p * q))
    _criterion("herald-probability", worst <= 1e-12, f"max deviation {worst:.3e}")


def test_figure_surfaces(tmp_path, capsys):
    quantities = ("ub-classical", "lb-qs", "ub-qs", "gain", "uncertainty")
    surfaces = {}
    for name in quantities:
        out = tmp_path / f"{name}.csv"
        code = cli_main(
            ["surface", "--quantity", name, "--resolution", "101",
             "--out", str(out), "--no-plot"]
        )
        assert code == 0
        rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
        surfaces[name] = {
            (float(p), float(q)): float(v) for p, q, v in rows
        }
    capsys.readouterr()

    ok = all(len(s) == 101 * 101 for s in surfaces.values())
    ok = ok and all(surfaces["ub-classical"][(0.5, q)] == 0.0 for q in GRID101)
    ok = ok and surfaces["lb-qs"][(0.5, 0.5)] == 0.25
    ok = ok and surfaces["gain"][(0.5, 1.0)] == 1.0
    ok = ok and surfaces["uncertainty"][(0.5, 0.0)] == 1.0
    for name, surface in surfaces.items():
        values = np.array(list(surface.values()))
        ok = ok and values.min() >= -1.0 and values.max() <= 1.0
        if name in ("ub-classical", "lb-qs", "ub-qs"):
            # bound surfaces proper; gain/uncertainty are differences
            ok = ok and values.min() >= 0.0
    _criterion("figure-surfaces", ok)


def test_diagonal_slice():
    axis = np.linspace(0.0, 1.0, 1001)
    worst = max(abs(lb_qs_diagonal(p) - lb_qs(p, p)) for p in axis)
    # strict advantage on [0.32, 1); at p = 1 both sides equal 1 exactly
    # (deterministic flips are noiseless), matching the non-strict
    # inequality 1 - H2(p) <= p^2 at the endpoint
    beats_classical = all(
        lb_qs(p, p) > ub_classical(p, p) for p in axis if 0.32 <= p < 1.0
    ) and lb_qs(1.0, 1.0) >= ub_classical(1.0, 1.0)
    _criterion(
        "diagonal-slice",
        worst <= 1e-12 and beats_classical,
        f"max piecewise deviation {worst:.3e}, advantage holds: {beats_classical}",
    )


def test_property_suites():
    rng = np.random.default_rng(101)
    ok, detail = True, ""

    for p in GRID21:
        for q in GRID21:
            acc = sum(w.conj().T @ w for w in switch_kraus(p, q))
            if float(np.max(np.abs(acc - np.eye(4)))) > 1e-12:
                ok, detail = False, f"switch completeness at ({p},{q})"
            if bit_flip(p).completeness_defect() > 1e-12 or \
               phase_flip(q).completeness_defect() > 1e-12:
                ok, detail = False, f"flip completeness at ({p},{q})"

    for p in GRID21[::2]:
        for q in GRID21[::2]:
            try:
                validate_density_matrix(choi_matrix(bit_flip(p)))
                validate_density_matrix(choi_matrix(phase_flip(q)))
                validate_density_matrix(branch_choi(p, q, Branch.MINUS))
                if p * q < 1.0:
                    plus = branch_choi(p, q, Branch.PLUS)
                    validate_density_matrix(plus)
                    marginal = partial_trace(plus, [2, 2], [1])
                    if float(np.max(np.abs(marginal - I2 / 2))) > 1e-12:
                        ok, detail = False, f"plus marginal at ({p},{q})"
            except ValueError as exc:
                ok, detail = False, f"invalid Choi state at ({p},{q}): {exc}"

    gates = [X, Z, (X + Z) / np.sqrt(2)]
    for _ in range(20):
        rho = random_density(rng)
        u = I2
        for k in rng.integers(0, 3, size=5):
            u = u @ gates[k]
        if abs(von_neumann_entropy(u @ rho @ u.conj().T) - von_neumann_entropy(rho)) > 1e-10:
            ok, detail = False, "entropy unitary invariance"

    for p in GRID101:
        for q in GRID101:
            if lb_qs(p, q) > ub_qs(p, q) + 1e-12:
                ok, detail = False, f"bound ordering at ({p},{q})"
    for p in GRID21:
        for q in GRID21:
            if abs(lb_qs(p, q) - lb_qs(q, p)) > 1e-12 or \
               abs(ub_classical(p, q) - ub_classical(q, p)) > 1e-12:
                ok, detail = False, f"symmetry at ({p},{q})"

    minus, _ = heralded_branches(0.4, 0.7)
    if minus.channel.completeness_defect() > 1e-12:
        ok, detail = False, "minus branch completeness"

    _criterion("property-suites", ok, detail)


def test_acceptance_summary():
    # reproducing the exact switched capacity is out of reach by construction
    # (only its bounds have closed forms); nothing to assert beyond the
    # criteria above, but keep the statement visible in the run log
    print("ACCEPTANCE note: exact switched capacity has no closed form; "
          "criteria cover bounds, ingredients and oracle equivalence")
    assert BELL_DENSITY.shape == (4, 4)
