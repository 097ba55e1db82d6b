import numpy as np
import pytest

from helpers import random_c3_gate, random_clifford_dense
from semiclifford import gf2
from semiclifford.circuits import embed_gate
from semiclifford.classify import (
    classify,
    is_generalized_semi_clifford,
    is_semi_clifford,
)
from semiclifford.pauli import PhasedPauli, pauli_to_dense


def test_cliffords_are_semi_clifford(rng):
    for n in (1, 2):
        for _ in range(5):
            u = random_clifford_dense(n, rng)
            ok, wit = is_semi_clifford(u)
            assert ok
            assert wit.domain.basis.shape == (n, 2 * n)


def test_t_gate_fixes_z_lagrangian():
    ok, wit = is_semi_clifford(embed_gate("T", (0,), 1))
    assert ok
    assert wit.domain.basis.tolist() == [[1, 0]]
    assert wit.image.basis.tolist() == [[1, 0]]


def test_ccz_semi_clifford():
    ok, wit = is_semi_clifford(embed_gate("CCZ", (0, 1, 2), 3))
    assert ok
    # the diagonal gate fixes the z-Lagrangian
    z = np.concatenate([gf2.ident(3), gf2.zeros(3, 3)], axis=1)
    assert np.array_equal(wit.domain.basis, z)


def test_semi_witness_is_valid(rng):
    u = random_c3_gate(2, rng)
    ok, wit = is_semi_clifford(u)
    assert ok
    # re-verify: every domain basis vector conjugates to a Pauli on the image
    from semiclifford.dense import is_pauli

    udag = u.conj().T
    image_rows = []
    for b in wit.domain.basis:
        img = is_pauli(u @ pauli_to_dense(PhasedPauli(0, 0, b)) @ udag)
        assert img is not None
        image_rows.append(img.a)
    red, piv = gf2.rref(np.array(image_rows, dtype=np.uint8))
    assert np.array_equal(red[: len(piv)], wit.image.basis)


def test_monomial_matrices_are_gsc(rng):
    p = pauli_to_dense(PhasedPauli(0, 0, [1, 0, 0, 1]))
    ok, wit = is_generalized_semi_clifford(p)
    assert ok
    phases = np.exp(1j * rng.uniform(0, 2 * np.pi, size=4))
    ok, wit = is_generalized_semi_clifford(np.diag(phases))
    assert ok
    z = np.concatenate([gf2.ident(2), gf2.zeros(2, 2)], axis=1)
    assert np.array_equal(wit.domain.basis, z)
    assert np.array_equal(wit.image.basis, z)


def test_semi_clifford_gates_are_gsc(rng):
    for _ in range(5):
        u = random_c3_gate(2, rng)
        semi, _ = is_semi_clifford(u)
        gsc, _ = is_generalized_semi_clifford(u)
        assert not semi or gsc


def test_classify_reports():
    rep = classify(embed_gate("H", (0,), 1))
    assert (rep.level, rep.semi_clifford, rep.generalized_semi_clifford) == (2, True, True)
    rep = classify(embed_gate("T", (0,), 1))
    assert (rep.level, rep.semi_clifford, rep.generalized_semi_clifford) == (3, True, True)
    rep = classify(embed_gate("SWAP", (0, 1), 2))
    assert (rep.level, rep.semi_clifford, rep.generalized_semi_clifford) == (2, True, True)


def test_classify_search_space_sizes():
    assert [len(gf2.enumerate_lagrangians(n)) for n in (1, 2, 3)] == [3, 15, 135]


def test_span_check_on_witness_n1():
    # direct span-equality verification runs inside the gsc search
    for name in ("H", "S", "T"):
        ok, wit = is_generalized_semi_clifford(embed_gate(name, (0,), 1))
        assert ok


def test_search_cap():
    with pytest.raises(ValueError):
        is_semi_clifford(np.eye(16, dtype=complex))
    with pytest.raises(ValueError):
        is_generalized_semi_clifford(np.eye(16, dtype=complex))
