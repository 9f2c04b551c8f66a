"""
Acceptance sweeps over the standard group list and random lattice automorphisms
"""

import pytest

from reidemeister.cli.main import EXIT_OK, main
from reidemeister.cli.sweeps import (
    build_standard_group,
    run_sweeps,
    standard_group_names,
    sweep_group,
    sweep_lattices,
)
from reidemeister.shared.errors import InputError


def test_standard_group_list():
    names = standard_group_names()
    assert "cyclic(30)" in names and "dihedral(12)" in names
    assert "quaternion8" in names and "symmetric(4)" in names
    assert "cyclic(8) x cyclic(8)" in names
    assert all(build_standard_group(n).order <= 12 for n in standard_group_names(quick=True))


def test_unknown_standard_group():
    with pytest.raises(InputError):
        build_standard_group("alternating(5)")


def test_sweep_single_group():
    result = sweep_group("dihedral(4)")
    assert result.passed
    assert result.automorphisms == 8
    assert result.semidirect_checked == 8


def test_sweep_lattices_small():
    result = sweep_lattices(samples=5)
    assert result.matrices == 5
    assert result.passed


def test_quick_sweep():
    summary = run_sweeps(quick=True)
    assert summary.passed
    assert summary.pairs > 50


def test_quick_sweep_command(capsys):
    assert main(["sweep", "--quick", "--no-lattice"]) == EXIT_OK
    assert capsys.readouterr().out.rstrip().endswith("pass")


@pytest.mark.slow
def test_full_sweep():
    summary = run_sweeps(workers=2)
    assert summary.passed
    assert summary.pairs >= 500
    assert summary.lattice.matrices == 50
