import numpy as np
import pytest

from reidemeister.groups.finite_group import (
    CyclicSpec,
    ProductSpec,
    TableSpec,
    build_group,
    cyclic,
    dihedral,
    direct_product,
    direct_product_of_cyclics,
    from_permutations,
    from_table,
    symmetric,
)
from reidemeister.shared.errors import InputError, InvalidGroupError, SizeCapError


def test_trivial_group():
    G = cyclic(1)
    assert G.order == 1
    assert G.table.tolist() == [[0]]
    assert G.exponent() == 1


def test_cyclic_table_is_addition_mod_n():
    G = cyclic(6)
    for a in range(6):
        for b in range(6):
            assert G.mul(a, b) == (a + b) % 6
    assert G.inv(2) == 4
    assert G.is_abelian()


def test_dihedral_has_n_plus_one_involutions():
    G = dihedral(4)
    orders = G.element_orders()
    assert G.order == 8
    assert not G.is_abelian()
    # four reflections plus the half turn
    assert int(np.count_nonzero(orders == 2)) == 5
    G.validate()


def test_symmetric_groups():
    S3 = symmetric(3)
    S4 = symmetric(4)
    assert S3.order == 6 and S4.order == 24
    assert not S3.is_abelian()
    assert S4.exponent() == 12
    S4.validate()


def test_symmetric_degree_is_capped():
    with pytest.raises(InputError):
        symmetric(7)


def test_tables_are_read_only():
    G = cyclic(5)
    with pytest.raises(ValueError):
        G.table[0, 0] = 3


def test_from_table_rejects_non_permutation_row():
    table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 3, 1, 0]]
    with pytest.raises(InvalidGroupError, match="row 3 is not a permutation"):
        from_table(table)


def test_from_table_rejects_non_associative_latin_square():
    # a loop of order 5 that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(InvalidGroupError, match="not associative"):
        from_table(table)


def test_from_table_needs_identity_at_zero():
    with pytest.raises(InvalidGroupError, match="identity"):
        from_table([[1, 0], [0, 1]])


def test_from_permutations_closure():
    G = from_permutations(4, [(1, 2, 3, 0)])
    assert G.order == 4
    assert G.is_abelian()
    assert G.name_of(0) == "()"


def test_from_permutations_cap():
    with pytest.raises(SizeCapError):
        from_permutations(5, [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], cap=50)


def test_direct_product_indexing():
    G = direct_product(cyclic(2), cyclic(3))
    assert G.order == 6
    # (1, 2)·(1, 2) = (0, 1)
    assert G.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1
    assert G.is_abelian()


def test_direct_product_of_cyclics_mixed_radix():
    G = direct_product_of_cyclics([3, 3])
    assert G.order == 9
    assert G.mul(1, 3) == 4
    assert direct_product_of_cyclics([]).order == 1


def test_build_group_from_specs():
    G = build_group(ProductSpec(CyclicSpec(2), TableSpec(((0, 1), (1, 0)))))
    assert G.order == 4
    assert G.exponent() == 2


def test_check_index():
    G = cyclic(3)
    assert G.check_index(2) == 2
    with pytest.raises(InputError):
        G.check_index(3)
