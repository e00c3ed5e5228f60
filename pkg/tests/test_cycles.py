import json
import random
from fractions import Fraction

import pytest

from heegnerlab.cycles import (
    cubic_heegner_index,
    embed_k3_lattice,
    gm_heegner_index,
    gm_labelling_gram,
    gm_residue_vector,
    hilb_square_route,
    hk_heegner_index,
    moment_matrix,
)
from heegnerlab.intlinalg import bareiss_determinant, fraction_determinant
from heegnerlab.lattices import DualVector, build_named_lattice, dual_basis


def test_cubic_index_examples():
    idx = cubic_heegner_index(12)
    assert (idx.n, idx.gamma, idx.lattice_tag) == (Fraction(2), "gamma0", "Lambda_C")
    idx = cubic_heegner_index(14)
    assert (idx.n, idx.gamma) == (Fraction(7, 3), "gamma1")
    with pytest.raises(ValueError, match="mod 6"):
        cubic_heegner_index(7)
    with pytest.raises(ValueError, match="positive"):
        cubic_heegner_index(0)


def test_cubic_indices_live_in_third_integers():
    for d in range(2, 301):
        if d % 6 in (0, 2):
            idx = cubic_heegner_index(d)
            assert (idx.n * 3).denominator == 1


def test_gm_labelling_grams():
    (k8,) = gm_labelling_gram(8)
    assert k8 == ((2, 0, 0), (0, 2, 0), (0, 0, 2))
    (k12,) = gm_labelling_gram(12)
    assert k12 == ((2, 0, 1), (0, 2, 1), (1, 1, 4))
    kp, kpp = gm_labelling_gram(10)
    assert kp == ((2, 0, 1), (0, 2, 0), (1, 0, 3))
    assert kpp == ((2, 0, 0), (0, 2, 1), (0, 1, 3))
    with pytest.raises(ValueError, match="mod 8"):
        gm_labelling_gram(6)


def test_gm_labelling_discriminants():
    for d in range(8, 400):
        if d % 8 in (0, 2, 4):
            for gram in gm_labelling_gram(d):
                assert bareiss_determinant(gram) == d


def test_gm_residue_vectors_examples():
    (w16,) = gm_residue_vector(16)
    assert w16.residue_vector == (0, 0, 1)
    assert w16.checks["half_norm"] == 2
    (w12,) = gm_residue_vector(12)
    assert w12.residue_vector == (Fraction(-1, 2), Fraction(-1, 2), 1)
    assert w12.checks["half_norm"] == Fraction(3, 2)
    wp, wpp = gm_residue_vector(10)
    assert wp.residue_vector == (Fraction(-1, 2), 0, 1)
    assert wp.checks["half_norm"] == Fraction(5, 4)
    assert wpp.residue_vector == (0, Fraction(-1, 2), 1)


def test_gm_residue_identities_sweep():
    for d in range(8, 1001):
        if d % 8 not in (0, 2, 4):
            continue
        witnesses = gm_residue_vector(d)
        for w in witnesses:
            assert w.checks["<v,h1>"] == 0
            assert w.checks["<v,h2>"] == 0
            assert w.checks["half_norm"] == Fraction(d, 8)
        if d % 8 == 2:
            diff = tuple(a - b for a, b in zip(witnesses[0].residue_vector, witnesses[1].residue_vector))
            assert diff == (Fraction(-1, 2), Fraction(1, 2), 0)
            assert any(x.denominator != 1 for x in diff)


def test_gm_heegner_indices():
    (i16,) = gm_heegner_index(16)
    assert (i16.n, i16.gamma) == (Fraction(2), "0")
    pair = gm_heegner_index(10)
    assert [(i.n, i.gamma) for i in pair] == [(Fraction(5, 4), "e*"), (Fraction(5, 4), "f*")]
    (i12,) = gm_heegner_index(12)
    assert (i12.n, i12.gamma) == (Fraction(3, 2), "e*+f*")
    for d in range(8, 500):
        if d % 8 in (0, 2, 4):
            for idx in gm_heegner_index(d):
                assert (idx.n * 4).denominator == 1


def test_hk_index_families():
    fam = hk_heegner_index(1, 1, 8)
    assert fam.index == 1 and fam.disc == 4 and fam.norm_vv == 2
    fam = hk_heegner_index(3, 2, 6)
    assert fam.index == 1 and fam.disc == 3 and fam.norm_vv == 2
    assert fam.gamma == "all"
    with pytest.raises(ValueError, match="3 \\(mod 4\\)"):
        hk_heegner_index(2, 2, 8)
    with pytest.raises(ValueError, match="delta"):
        hk_heegner_index(1, 3, 8)
    with pytest.raises(ValueError, match="even"):
        hk_heegner_index(1, 1, 7)


def test_hilbert_square_routes():
    r = hilb_square_route(10, 5)
    assert (r.m, r.heegner_index, r.target) == (2, Fraction(9, 20), (10, 1))
    r = hilb_square_route(7, 2)
    assert (r.m, r.heegner_index) == (2, Fraction(3, 4))
    r = hilb_square_route(5, 4)
    assert (r.m, r.heegner_index) == (0, Fraction(1, 4))
    with pytest.raises(ValueError, match="square"):
        hilb_square_route(6, 3)
    with pytest.raises(ValueError, match="negative"):
        hilb_square_route(2, 5)


def test_moment_matrix_basics():
    e8 = build_named_lattice("E8")
    basis = [DualVector(e8, tuple(Fraction(int(i == j)) for j in range(8))) for i in range(8)]
    full = moment_matrix(basis)
    assert full.rank == 8
    assert full.det == Fraction(1, 256)
    assert full.is_positive_semidefinite
    single = moment_matrix([basis[0]])
    assert single.entries == ((Fraction(1),),)
    empty = moment_matrix([])
    assert empty.size == 0 and empty.rank == 0 and empty.det == 1
    sub = full.principal_submatrix([0, 2, 5])
    assert sub.entries == tuple(
        tuple(full.entries[i][j] for j in (0, 2, 5)) for i in (0, 2, 5)
    )


def test_moment_matrix_mixed_lattices_rejected():
    e8 = build_named_lattice("E8")
    a2 = build_named_lattice("A2")
    v1 = DualVector(e8, tuple(Fraction(int(j == 0)) for j in range(8)))
    v2 = DualVector(a2, (Fraction(1), Fraction(0)))
    with pytest.raises(ValueError, match="single ambient"):
        moment_matrix([v1, v2])


def test_moment_of_norm_2n_vector():
    e8 = build_named_lattice("E8")
    for v in dual_basis(e8)[:2]:
        mm = moment_matrix([v])
        assert mm.entries[0][0] == v.norm() / 2


def test_embed_examples():
    w2 = embed_k3_lattice(2)
    assert w2.det_lhs == Fraction(1, 64) == w2.det_rhs
    assert abs(bareiss_determinant(w2.complement_gram)) == 2
    w14 = embed_k3_lattice(14)
    assert w14.det_lhs == Fraction(7, 64)
    assert w14.det_check_passed
    with pytest.raises(ValueError, match="even"):
        embed_k3_lattice(3)
    with pytest.raises(ValueError, match="positive"):
        embed_k3_lattice(-2)


def test_embed_witness_properties_sweep():
    sharp = build_named_lattice("Lambda_sharp")
    for d in range(2, 41, 2):
        wit = embed_k3_lattice(d)
        assert wit.image_primitive
        assert len(wit.complement_basis) == 7
        assert wit.moment.rank == 7
        assert wit.moment.is_positive_semidefinite
        assert wit.det_lhs == Fraction(d, 128)
        for img in wit.image_basis:
            for comp in wit.complement_basis:
                assert sharp.pairing(img, comp) == 0


def test_embed_det_is_basis_independent():
    rng = random.Random(99)
    wit = embed_k3_lattice(26)
    basis = [list(b) for b in wit.complement_basis]
    for _ in range(10):
        i, j = rng.randrange(7), rng.randrange(7)
        if i != j:
            c = rng.choice((-1, 1))
            basis[i] = [x + c * y for x, y in zip(basis[i], basis[j])]
    sharp = build_named_lattice("Lambda_sharp")
    t = [[Fraction(sharp.pairing(bi, bj), 2) for bj in basis] for bi in basis]
    assert fraction_determinant(t) == wit.det_lhs


def test_embed_witness_serialization():
    doc = embed_k3_lattice(14).to_jsonable()
    blob = json.dumps(doc)
    assert json.loads(blob)["det_check"] == {"lhs": "7/64", "rhs": "7/64", "pass": True}
    assert len(doc["image_basis"]) == 21
    assert len(doc["complement_gram"]) == 7
    assert doc["moment"]["rank"] == 7


def test_index_serialization():
    idx = cubic_heegner_index(14)
    assert idx.to_jsonable() == {"n": "7/3", "gamma": "gamma1", "lattice": "Lambda_C"}
    fam = hk_heegner_index(3, 2, 6)
    doc = fam.to_jsonable()
    assert doc["n"] == "1" and doc["lattice"] == "Lambda_HK_prim(3,2)"


def test_moment_subtuple_is_principal_submatrix():
    e8 = build_named_lattice("E8")
    vectors = dual_basis(e8)
    full = moment_matrix(vectors)
    picks = [0, 2, 5]
    sub = moment_matrix([vectors[i] for i in picks])
    assert sub.entries == full.principal_submatrix(picks).entries
    assert sub.rank == full.principal_submatrix(picks).rank


def test_gm_residue_class_consistency():
    for d in range(8, 500):
        if d % 8 not in (0, 2, 4):
            continue
        for idx in gm_heegner_index(d):
            assert (8 * idx.n) % 8 == d % 8


def test_embed_is_isometric_on_the_image():
    sharp = build_named_lattice("Lambda_sharp")
    for d in (2, 14, 26):
        wit = embed_k3_lattice(d)
        source = build_named_lattice("Lambda_d", d)
        pairings = tuple(
            tuple(int(sharp.pairing(bi, bj)) for bj in wit.image_basis)
            for bi in wit.image_basis
        )
        assert pairings == source.gram
