"""
End-to-end runs of the reidemeister command line against the fixture files
"""

import json

import pytest

from reidemeister.cli.commands import COMMANDS
from reidemeister.cli.main import EXIT_INPUT, EXIT_OK, EXIT_VERDICT, main
from reidemeister.shared.errors import CharacterTableError


@pytest.fixture
def groups(fixtures_dir):
    return fixtures_dir / "groups"


@pytest.fixture
def auts(fixtures_dir):
    return fixtures_dir / "automorphisms"


@pytest.fixture
def matrices(fixtures_dir):
    return fixtures_dir / "matrices"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------------
# twisted
# ----------------------------------------------------------------------------

def test_twisted_classes_of_inversion(capsys, groups, auts):
    code, out, _ = run(capsys, "twisted", groups / "c4.json", auts / "inversion_c4.json")
    assert code == EXIT_OK
    assert "R = 2; classes: [0,2],[1,3]" in out


def test_twisted_decide(capsys, groups, auts):
    code, out, _ = run(capsys, "twisted", groups / "c4.json", auts / "inversion_c4.json", "--decide", "0", "2")
    assert code == EXIT_OK
    assert "0 ~ 2: equivalent; witness g=1" in out

    _, out, _ = run(capsys, "twisted", groups / "c4.json", auts / "inversion_c4.json", "--decide", "0", "1")
    assert "0 ~ 1: inequivalent" in out


def test_twisted_exhaustive_agrees(capsys, groups, auts):
    _, fast, _ = run(capsys, "twisted", groups / "s3.json", auts / "identity.json")
    _, slow, _ = run(capsys, "twisted", groups / "s3.json", auts / "identity.json", "--exhaustive")
    assert fast == slow
    assert fast.startswith("R = 3;")


def test_malformed_table_exits_with_input_error(capsys, groups, auts):
    code, out, err = run(capsys, "twisted", groups / "bad_row.json", auts / "identity.json")
    assert code == EXIT_INPUT
    assert out == ""
    assert "row 3 is not a permutation" in err


@pytest.mark.parametrize("name", ["broken.json", "unknown_field.json", "missing.json"])
def test_unreadable_group_files(capsys, groups, auts, name):
    code, _, err = run(capsys, "twisted", groups / name, auts / "identity.json")
    assert code == EXIT_INPUT
    assert err.startswith("error: ")


def test_invalid_automorphism(capsys, groups, auts):
    code, _, err = run(capsys, "twisted", groups / "c4.json", auts / "doubling_c4.json")
    assert code == EXIT_INPUT
    assert "doubling_c4.json" in err


def test_element_out_of_range(capsys, groups, auts):
    code, _, _ = run(capsys, "twisted", groups / "c4.json", auts / "identity.json", "--decide", "0", "9")
    assert code == EXIT_INPUT


# ----------------------------------------------------------------------------
# tbft / autlist / lemma-check
# ----------------------------------------------------------------------------

def test_tbft_all_automorphisms_of_s3(capsys, groups):
    code, out, _ = run(capsys, "tbft", groups / "s3.json", "--all-automorphisms")
    assert code == EXIT_OK
    assert "6/6 pass (prime 7" in out


def test_tbft_defaults_to_identity(capsys, groups):
    code, out, _ = run(capsys, "tbft", groups / "d4.json")
    assert code == EXIT_OK
    assert "1/1 pass" in out


def test_tbft_rejects_inadmissible_prime(capsys, groups):
    code, _, err = run(capsys, "tbft", groups / "c3.json", "--prime", "5")
    assert code == EXIT_INPUT
    assert "5" in err


def test_tbft_report_records_prime_and_seed(capsys, groups, auts):
    code, out, _ = run(capsys, "--json", "tbft", groups / "c4.json", auts / "inversion_c4.json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["command"] == "tbft"
    assert report["prime"] == 5
    assert isinstance(report["seed"], int)
    assert report["results"][0]["R"] == report["results"][0]["S_f"] == 2


def test_autlist(capsys, groups):
    code, out, _ = run(capsys, "autlist", groups / "c4.json")
    assert code == EXIT_OK
    assert "|Aut(G)| = 2" in out

    _, out, _ = run(capsys, "autlist", groups / "c2xc2.json")
    assert "|Aut(G)| = 6" in out


def test_autlist_cap(capsys, groups):
    code, _, err = run(capsys, "autlist", groups / "s3.json", "--cap", "2")
    assert code == EXIT_INPUT
    assert err.startswith("error: ")


def test_lemma_check(capsys, groups, auts):
    code, out, _ = run(capsys, "lemma-check", groups / "c4.json", auts / "inversion_c4.json")
    assert code == EXIT_OK
    assert "twisted classes: 2; coset classes: 2" in out
    assert out.rstrip().endswith("pass")


def test_lemma_check_on_semidirect_input(capsys, groups, auts):
    code, out, _ = run(capsys, "lemma-check", groups / "c3_semidirect_c2.json", auts / "identity.json", "--m", "2")
    assert code == EXIT_OK
    assert "twisted classes: 3; coset classes: 3" in out


# ----------------------------------------------------------------------------
# zeta / congruence
# ----------------------------------------------------------------------------

def test_zeta_torus(capsys, matrices):
    code, out, _ = run(capsys, "zeta", "--lefschetz", matrices / "torus_homology.json")
    assert code == EXIT_OK
    assert "closed form: (1 - 3z + z^2)/(1 - z)^2" in out
    assert "expansion matches closed form to order 30" in out


def test_zeta_floer(capsys):
    code, out, _ = run(capsys, "zeta", "--floer", "2", "1,3", "--order", "10")
    assert code == EXIT_OK
    assert "closed form: (1 - z)^-1 (1 - z^2)^-1" in out
    assert "series: 1 + z + 2*z^2 + 2*z^3" in out


def test_zeta_order_limit(capsys, matrices):
    code, _, _ = run(capsys, "zeta", "--lefschetz", matrices / "torus_homology.json", "--order", "1000")
    assert code == EXIT_INPUT


def test_zeta_reidemeister_series(capsys, matrices):
    code, out, _ = run(capsys, "zeta", "--reidemeister", matrices / "cat_map.json", "--order", "12")
    assert code == EXIT_OK
    assert "growth rate ~ " in out


def test_zeta_reidemeister_order_zero(capsys, matrices):
    code, out, _ = run(capsys, "zeta", "--reidemeister", matrices / "cat_map.json", "--order", "0")
    assert code == EXIT_OK
    assert "growth rate: unavailable" in out
    assert "series: 1 + O(z^1)" in out

    _, out, _ = run(capsys, "--json", "zeta", "--reidemeister", matrices / "cat_map.json", "--order", "0")
    report = json.loads(out)
    assert report["results"]["series"] == ["1"]
    assert report["results"]["growth"] is None


def test_zeta_reidemeister_with_infinite_terms(capsys, matrices):
    code, _, _ = run(capsys, "zeta", "--reidemeister", matrices / "minus_one.json", "--order", "6")
    assert code == EXIT_INPUT


def test_congruence_cat_map(capsys, matrices):
    code, out, _ = run(capsys, "congruence", matrices / "cat_map.json", "--max-n", "4")
    assert code == EXIT_OK
    assert out.rstrip().endswith("pass")


def test_congruence_reports_skipped_terms(capsys, matrices):
    code, out, _ = run(capsys, "congruence", matrices / "minus_one.json", "--max-n", "4")
    assert code == EXIT_OK
    assert "pass; skipped n = 2, 4 (infinite terms)" in out


def test_congruence_finite_group(capsys, groups, auts):
    code, out, _ = run(capsys, "congruence", "--group", groups / "d4.json",
                       "--automorphism", auts / "identity.json")
    assert code == EXIT_OK
    assert "pass" in out


def test_congruence_lefschetz(capsys, matrices):
    code, _, _ = run(capsys, "congruence", "--lefschetz", matrices / "torus_homology.json")
    assert code == EXIT_OK


def test_congruence_needs_a_source(capsys):
    code, _, err = run(capsys, "congruence")
    assert code == EXIT_INPUT
    assert "congruence needs" in err


def test_congruence_max_n_limit(capsys, groups, auts):
    code, _, _ = run(capsys, "congruence", "--group", groups / "c4.json",
                     "--automorphism", auts / "identity.json", "--max-n", "13")
    assert code == EXIT_INPUT


# ----------------------------------------------------------------------------
# separate
# ----------------------------------------------------------------------------

def test_separate_inequivalent(capsys, matrices):
    code, out, _ = run(capsys, "separate", matrices / "minus_one.json", "0", "1")
    assert code == EXIT_OK
    assert "inequivalent; separated mod k=2" in out


def test_separate_equivalent(capsys, matrices):
    code, out, _ = run(capsys, "separate", matrices / "minus_one.json", "0", "4")
    assert code == EXIT_OK
    assert "equivalent; witness g=2" in out


def test_separate_negative_vectors(capsys, matrices):
    code, out, _ = run(capsys, "separate", matrices / "minus_one.json", "--", "-1", "3")
    assert code == EXIT_OK
    assert "equivalent; witness g=2" in out


def test_rp_certificate_not_applicable(capsys, matrices):
    code, out, _ = run(capsys, "separate", matrices / "identity2.json", "--rp")
    assert code == EXIT_OK
    assert "R(phi) = inf; RP certificate not applicable" in out


def test_rp_certificate_verified(capsys, matrices):
    code, out, _ = run(capsys, "separate", matrices / "minus_one.json", "--rp")
    assert code == EXIT_OK
    assert "R(phi) = 2; RP certificate verified mod k=2" in out


def test_separate_rejects_singular_matrix(capsys, matrices):
    code, _, err = run(capsys, "separate", matrices / "singular.json", "0,0", "1,0")
    assert code == EXIT_INPUT
    assert err.startswith("error: ")


def test_separate_needs_pair_or_rp(capsys, matrices):
    code, _, _ = run(capsys, "separate", matrices / "minus_one.json")
    assert code == EXIT_INPUT


# ----------------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------------

def test_json_reports_are_byte_identical(capsys, groups, auts):
    argv = ["--json", "twisted", groups / "s3.json", auts / "identity.json", "--decide", "1", "2"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    report = json.loads(first)
    assert report["command"] == "twisted"
    assert report["inputs"]["group"]["content"] == {"kind": "symmetric", "n": 3}
    assert report["results"]["reidemeister_number"] == 3


def test_logs_stay_off_stdout(capsys, groups, auts):
    _, out, _ = run(capsys, "--log-level", "DEBUG", "--json", "twisted", groups / "c4.json", auts / "identity.json")
    assert json.loads(out)["results"]["reidemeister_number"] == 4


def test_character_table_failure_is_a_verification_failure(capsys, monkeypatch, groups):
    def failing(args):
        raise CharacterTableError("eigenspace of dimension 2 did not split")

    monkeypatch.setitem(COMMANDS, "tbft", failing)
    code, out, err = run(capsys, "tbft", groups / "s3.json")
    assert code == EXIT_VERDICT
    assert out == ""
    assert err.startswith("verification failed: ")
