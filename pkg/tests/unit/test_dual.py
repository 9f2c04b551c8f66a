import numpy as np
import pytest

from reidemeister.cli.loaders import load_group
from reidemeister.dual.characters import (
    admissible_prime,
    central_characters,
    class_data,
    is_admissible_prime,
    select_prime,
    table_seed,
)
from reidemeister.dual.tbft import cycle_type, dual_permutation, fixed_dual_count, verify_tbft
from reidemeister.groups.automorphisms import enumerate_automorphisms, identity_automorphism
from reidemeister.groups.finite_group import cyclic, dihedral, direct_product, symmetric
from reidemeister.groups.twisted import class_permutation, reidemeister_number_finite
from reidemeister.shared.config.paths import QUATERNION8_FILE
from reidemeister.shared.errors import PrimeSelectionError, SizeCapError


def test_abelian_structure_constants(c4):
    cd = class_data(c4)
    assert cd.class_count == 4
    assert cd.class_sizes == (1, 1, 1, 1)
    a = cd.structure_constants
    for i in range(4):
        for j in range(4):
            for k in range(4):
                assert a[i, j, k] == int((i + j) % 4 == k)


def test_s3_class_data(s3):
    cd = class_data(s3)
    assert sorted(cd.class_sizes) == [1, 2, 3]
    # each class of S3 is closed under inversion
    assert cd.inverse_class == tuple(range(3))


def test_class_data_cap():
    with pytest.raises(SizeCapError):
        class_data(symmetric(4), cap=10)


@pytest.mark.parametrize("G, expected", [
    (cyclic(1), 2),
    (cyclic(3), 7),
    (symmetric(3), 7),
    (cyclic(4), 5),
    (dihedral(5), 11),
])
def test_smallest_admissible_prime(G, expected):
    assert admissible_prime(G) == expected
    assert is_admissible_prime(G, expected)


def test_prime_override_must_be_admissible(c3):
    assert select_prime(c3, 13) == 13
    with pytest.raises(PrimeSelectionError):
        select_prime(c3, 5)
    with pytest.raises(PrimeSelectionError):
        select_prime(c3, 9)


def test_cyclic_three_rows_mod_seven(c3):
    table = central_characters(c3, prime=7)
    assert table.prime == 7
    assert table.rows == ((1, 1, 1), (1, 2, 4), (1, 4, 2))


def test_number_of_rows_is_class_number():
    for G in (symmetric(3), symmetric(4), dihedral(6), direct_product(cyclic(2), cyclic(4))):
        table = central_characters(G)
        assert len(table.rows) == class_data(G).class_count
        assert all(row[0] == 1 for row in table.rows)


def test_table_is_deterministic(s3):
    first = central_characters(s3)
    second = central_characters(symmetric(3))
    assert first.rows == second.rows
    assert first.seed == table_seed(s3)


def test_different_primes_give_same_row_count(s3):
    assert len(central_characters(s3, prime=7).rows) == len(central_characters(s3, prime=13).rows) == 3


def test_fixed_points_inversion(c3, inversion_c3, c4, inversion_c4):
    assert fixed_dual_count(c3, inversion_c3, central_characters(c3)) == 1
    assert fixed_dual_count(c4, inversion_c4, central_characters(c4)) == 2


def test_dual_permutation_cycle_type(c4, inversion_c4):
    perm = dual_permutation(c4, inversion_c4, central_characters(c4))
    assert cycle_type(perm) == [1, 1, 2]
    assert cycle_type(np.array([1, 2, 0, 3])) == [1, 3]


def test_tbft_examples(c3, inversion_c3, c4, inversion_c4):
    report = verify_tbft(c4, inversion_c4)
    assert report.passed
    assert report.reidemeister_number == report.fixed_dual_points == 2
    assert report.invariant_classes_agree

    report = verify_tbft(c3, inversion_c3)
    assert (report.reidemeister_number, report.fixed_dual_points) == (1, 1)

    trivial = cyclic(1)
    report = verify_tbft(trivial, identity_automorphism(trivial))
    assert report.passed and report.reidemeister_number == 1


def test_tbft_all_automorphisms_of_s3(s3):
    table = central_characters(s3)
    reports = [verify_tbft(s3, phi, table=table) for phi in enumerate_automorphisms(s3)]
    assert len(reports) == 6
    assert all(r.passed and r.reidemeister_number == 3 == r.fixed_dual_points for r in reports)


def test_tbft_report_serializes_with_short_names(c4, inversion_c4):
    record = verify_tbft(c4, inversion_c4).model_dump(by_alias=True)
    assert record["R"] == 2 and record["S_f"] == 2
    assert record["verdict"] == "pass"
    assert record["prime"] == 5


def test_quaternion_group():
    Q8 = load_group(QUATERNION8_FILE)
    assert Q8.order == 8 and not Q8.is_abelian()
    table = central_characters(Q8)
    assert len(table.rows) == 5
    for phi in enumerate_automorphisms(Q8):
        assert verify_tbft(Q8, phi, table=table).passed


def test_tbft_over_small_groups():
    for G in (dihedral(4), dihedral(5), direct_product(cyclic(2), cyclic(2)), cyclic(12)):
        table = central_characters(G)
        for phi in enumerate_automorphisms(G):
            report = verify_tbft(G, phi, table=table)
            assert report.passed, (G.label, phi.label)
            assert report.invariant_classes_agree


DUAL_GROUPS = [symmetric(4), dihedral(6), direct_product(cyclic(2), symmetric(3))]


@pytest.mark.parametrize("G", DUAL_GROUPS, ids=lambda G: G.label)
def test_fixed_dual_count_does_not_depend_on_prime(G):
    first = admissible_prime(G)
    second = admissible_prime(G, after=first)
    tables = [central_characters(G, prime=p) for p in (first, second)]
    nontrivial = [phi for phi in enumerate_automorphisms(G) if not phi.is_identity()]
    assert nontrivial
    for phi in nontrivial:
        counts = {fixed_dual_count(G, phi, table) for table in tables}
        assert counts == {reidemeister_number_finite(G, phi)}


@pytest.mark.parametrize("G", DUAL_GROUPS, ids=lambda G: G.label)
def test_dual_and_class_permutations_share_cycle_type(G):
    table = central_characters(G)
    partition = table.class_data.partition
    for phi in enumerate_automorphisms(G):
        for k in range(1, phi.order() + 1):
            power = phi.power(k)
            tau = dual_permutation(G, power, table)
            sigma = class_permutation(G, power, partition)
            assert cycle_type(tau) == cycle_type(sigma)
