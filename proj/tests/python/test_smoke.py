"""Smoke tests for the eqosim python module.

Runs standalone (no pytest): each check raises AssertionError on failure and
the script prints one line per check.
"""

import json
import math
import os
import tempfile

import numpy as np

import eqosim as eq


def check(name, fn):
    fn()
    print(f"[ok] {name}")


def expm_identity():
    a = np.zeros((4, 4), dtype=complex)
    m = eq.expm(a)
    assert np.array_equal(m, np.eye(4, dtype=complex))
    assert eq.one_norm(np.array([[1.0, -2.0], [3.0j, 0.0]], dtype=complex)) == 4.0


def transfer_invariants():
    layout = eq.ModeLayout(3)
    h = eq.HamiltonianSpec()
    h.epsilon = 1e8
    h.detunings = [2e8, 0.0, -3e8]
    h.couplings = [4e7, 6e7, 2e7]
    m = eq.transfer(eq.assemble_R(h, layout, 1.0), 2e-9)
    d = eq.invariant_defects(m)
    assert d.symplectic <= eq.FRESH_TOL
    assert d.conjugation <= eq.FRESH_TOL
    s = eq.symplectic_form(layout)
    defect = np.abs(m.data @ s @ m.data.T - s).max()
    assert defect <= eq.FRESH_TOL


def squeezing_variance():
    layout = eq.ModeLayout(0)
    h = eq.HamiltonianSpec()
    h.epsilon = 1e8
    m = eq.transfer(eq.assemble_R(h, layout, 1.0), 1e-8)
    var = eq.quadrature_variance(m, eq.InitialMoments.vacuum(layout), eq.Quadrature.X)
    assert abs(var - math.exp(-2.0)) < 1e-9


def reference_survival():
    p = eq.LorentzianExactParams(1e6, 4e6, 2.5e-6, 1e9)
    assert eq.lorentzian_exact_survival(p, 0.0) == 1.0
    lam = eq.markov_decay_rate(1e-7, 5.6419e6)
    assert abs(lam / 2.0e7 - 1.0) < 5e-4
    series = eq.lindblad_evolve(2e7, eq.FockState.number_state(1), [0.0, 5e-8, 1e-7])
    assert abs(series.values[2] - math.exp(-2e7 * 1e-7)) < 1e-6


def scenario_roundtrip_and_run():
    names = eq.preset_names()
    assert len(names) == 4 and all(eq.is_preset(n) for n in names)
    text = eq.serialize_scenario(eq.preset("fig2b"))
    assert eq.serialize_scenario(eq.parse_scenario(text)) == text

    s = eq.Scenario()
    s.name = "smoke"
    s.mode = eq.RunMode.Single
    s.observable = eq.Observable.Survival
    s.spectrum = eq.FlatSpectrum(2e7)
    s.grid = eq.GridSpec(9.7e8, 2e7, 4)
    s.omega = 1e9
    s.time_grid = eq.TimeGrid(4e-8, 5)
    series = eq.run_scenario(s)
    assert len(series) == 1
    assert series[0].times[0] == 0.0 and series[0].values[0] == 1.0
    assert len(series[0].times) == 6
    meta = json.loads(series[0].metadata)
    assert meta["name"] == "smoke"

    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "smoke.csv")
        eq.emit(series, eq.OutputFormat.Csv, path)
        with open(path, "r", encoding="utf-8") as f:
            lines = f.read().splitlines()
        assert lines[0] == "t_seconds,dimensionless_time,value,series_label"
        assert len(lines) == 7

    report = eq.check_scenario(s)
    assert report.ok
    assert "check: PASS" in eq.format_check_report(report, True)


def main():
    check("expm identity and one_norm", expm_identity)
    check("transfer invariants", transfer_invariants)
    check("squeezing variance e^-2", squeezing_variance)
    check("reference survival and markov rate", reference_survival)
    check("scenario roundtrip, run, emit, check", scenario_roundtrip_and_run)
    print("smoke: PASS")


if __name__ == "__main__":
    main()
