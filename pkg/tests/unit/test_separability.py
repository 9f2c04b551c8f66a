import numpy as np
import pytest

from reidemeister.groups.automorphisms import enumerate_automorphisms, identity_automorphism
from reidemeister.groups.finite_group import cyclic, dihedral, symmetric
from reidemeister.groups.twisted import twisted_classes
from reidemeister.lattice.matrices import IntMatrix, random_unimodular
from reidemeister.lattice.reidemeister import lattice_reidemeister, lattice_twisted_decide
from reidemeister.separability.decide import FiniteInstance, LatticeInstance, twisted_dehn_decide
from reidemeister.separability.quotients import (
    check_class_representatives,
    reduced_quotient,
    rp_certificate,
    vector_index,
    verify_rp_certificate,
    lattice_separation_search,
)
from reidemeister.separability.semidirect import verify_semidirect_bijection
from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import InputError, NotAutomorphismError, UnsupportedInstanceError, VerificationError


# ----------------------------------------------------------------------------
# Semidirect bijection
# ----------------------------------------------------------------------------

def test_bijection_c3_inversion(c3, inversion_c3):
    report = verify_semidirect_bijection(c3, inversion_c3, 2)
    assert report.passed
    assert report.twisted_class_count == report.coset_class_count == 1
    assert report.product_order == 6


def test_bijection_c4_inversion(c4, inversion_c4):
    report = verify_semidirect_bijection(c4, inversion_c4, 2)
    assert report.passed
    assert report.twisted_class_count == report.coset_class_count == 2
    assert report.twisted_partition == report.coset_partition == [[0, 2], [1, 3]]


def test_bijection_defaults_to_automorphism_order(c4, inversion_c4):
    assert verify_semidirect_bijection(c4, inversion_c4).m == 2


def test_bijection_identity_with_trivial_factor(s3):
    report = verify_semidirect_bijection(s3, identity_automorphism(s3), 1)
    assert report.passed and report.coset_class_count == 3


def test_bijection_multiple_of_order(c4, inversion_c4):
    assert verify_semidirect_bijection(c4, inversion_c4, 4).passed


def test_bijection_over_small_groups():
    for G in (symmetric(3), dihedral(4), cyclic(7)):
        for phi in enumerate_automorphisms(G):
            assert verify_semidirect_bijection(G, phi).passed


# ----------------------------------------------------------------------------
# Finite quotients of Z^n
# ----------------------------------------------------------------------------

def test_reduced_quotient_indices(cat_map):
    K, phi_k = reduced_quotient(cat_map, 3)
    assert K.order == 9
    v = [1, 2]
    image = [(2 * 1 + 1 * 2) % 3, (1 * 1 + 1 * 2) % 3]
    assert phi_k(vector_index(v, 3)) == vector_index(image, 3)


@pytest.mark.parametrize("rows, k", [
    ([[-1, 0], [0, -1]], 4),
    ([[0, -1], [1, 0]], 2),
])
def test_quotient_mod_det_has_det_many_classes(rows, k):
    M = IntMatrix.from_rows(rows)
    assert abs(M.one_minus().det()) == k
    K, phi_k = reduced_quotient(M, k)
    assert twisted_classes(K, phi_k).class_count == k


def test_separation_minus_one(minus_one):
    result = lattice_separation_search(minus_one, [0], [1])
    assert result.status == "separated"
    assert result.witness.modulus == 2
    assert result.witness.verification == "finite-orbit"


def test_separation_not_applicable_for_equivalent_pair(minus_one):
    result = lattice_separation_search(minus_one, [0], [4])
    assert result.status == "not-applicable"
    assert result.equivalence_witness == [2]


def test_separation_identity_matrix():
    M = IntMatrix.identity(2)
    result = lattice_separation_search(M, [0, 0], [0, 6], k_max=10)
    assert result.status == "separated"
    assert result.witness.modulus == 4


def test_separation_respects_bound():
    M = IntMatrix.identity(1)
    result = lattice_separation_search(M, [0], [2 * 3 * 4 * 5], k_max=5)
    assert result.status == "not-found"
    assert result.searched_up_to == 5


def test_separation_uses_smith_criterion_beyond_cap():
    M = IntMatrix.identity(3)
    result = lattice_separation_search(M, [0, 0, 0], [0, 0, 2 * 3 * 4 * 5 * 6 * 7 * 8 * 9 * 10], k_max=20)
    assert result.status == "separated"
    assert result.witness.modulus == 11
    assert result.witness.verification == "smith-mod-k"


def test_separation_random_matrices(rng):
    for _ in range(15):
        M = random_unimodular(2, rng, bound=4)
        x = [int(v) for v in rng.integers(-4, 5, size=2)]
        y = [int(v) for v in rng.integers(-4, 5, size=2)]
        result = lattice_separation_search(M, x, y)
        if lattice_twisted_decide(M, x, y).equivalent:
            assert result.status == "not-applicable"
        elif lattice_reidemeister(M) != float("inf"):
            assert result.status == "separated"


def test_separation_rejects_non_unimodular():
    with pytest.raises(NotAutomorphismError):
        lattice_separation_search(IntMatrix.from_rows([[2]]), [0], [1])


# ----------------------------------------------------------------------------
# RP certificates
# ----------------------------------------------------------------------------

def test_rp_certificate_minus_one(minus_one):
    cert = rp_certificate(minus_one)
    assert cert.status == "certified"
    assert cert.modulus == 2
    assert cert.reidemeister_number == "2"
    assert len(cert.class_representatives) == 2
    assert verify_rp_certificate(minus_one, cert)


def test_rp_certificate_identity_not_applicable():
    cert = rp_certificate(IntMatrix.identity(2))
    assert cert.status == "infinite"
    assert cert.reidemeister_number == "inf"
    assert verify_rp_certificate(IntMatrix.identity(2), cert)


def test_rp_certificate_random_matrices(rng):
    checked = 0
    for _ in range(40):
        M = random_unimodular(int(rng.integers(2, 4)), rng, bound=4)
        cert = rp_certificate(M)
        assert verify_rp_certificate(M, cert)
        if cert.status == "certified":
            checked += 1
            assert cert.modulus == lattice_reidemeister(M)
    assert checked > 0


def test_tampered_certificate_fails(minus_one):
    cert = rp_certificate(minus_one)
    forged = cert.model_copy(update={"class_representatives": [[0], [2]]})
    with pytest.raises(VerificationError):
        verify_rp_certificate(minus_one, forged)
    wrong_modulus = cert.model_copy(update={"modulus": 3})
    with pytest.raises(InputError):
        verify_rp_certificate(minus_one, wrong_modulus)


# ----------------------------------------------------------------------------
# Decision entry point
# ----------------------------------------------------------------------------

def test_dehn_finite(c4, inversion_c4):
    decision = twisted_dehn_decide(FiniteInstance(c4, inversion_c4, 0, 2))
    assert decision.kind == "finite"
    assert decision.equivalent and decision.witness == 1


def test_dehn_lattice(minus_one):
    equivalent = twisted_dehn_decide(LatticeInstance(minus_one, [0], [4]))
    assert equivalent.equivalent and equivalent.witness == [2]
    separated = twisted_dehn_decide(LatticeInstance(minus_one, [0], [1]))
    assert not separated.equivalent
    assert separated.separation.modulus == 2
    bare = twisted_dehn_decide(LatticeInstance(minus_one, [0], [1], separate=False))
    assert bare.separation is None


def test_dehn_rejects_unknown_instance():
    with pytest.raises(UnsupportedInstanceError):
        twisted_dehn_decide(np.zeros(2))


def test_class_representatives_check_uses_quotient_orbits(minus_one):
    assert check_class_representatives(minus_one, [[0], [1]], 2) == "finite-orbit"
    with pytest.raises(VerificationError):
        check_class_representatives(minus_one, [[0], [2]], 2)
    with pytest.raises(VerificationError):
        check_class_representatives(minus_one, [[0]], 2)


def test_class_representatives_check_pairwise(monkeypatch):
    # -I on Z^2: (I - M) = 2I, four classes indexed by parity
    M = IntMatrix.from_rows([[-1, 0], [0, -1]])
    monkeypatch.setattr(settings, "finite_verification_cap", 1)
    assert check_class_representatives(M, [[0, 0], [1, 0], [0, 1], [1, 1]], 4) == "smith-mod-k"
    with pytest.raises(VerificationError):
        check_class_representatives(M, [[0, 0], [1, 0], [0, 1], [2, 0]], 4)


def test_certificate_transcript_names_class_check(minus_one):
    cert = rp_certificate(minus_one)
    assert cert.transcript[-1].endswith("(finite-orbit)")
