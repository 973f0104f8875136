from fractions import Fraction

import pytest

from spinsphere import (
    ExactMatrix,
    GroupId,
    casimir_matrix,
    casimir_scalar,
    ekj_projectors,
    epsilon_matrix,
    gamma_matrices,
    lagrange_projectors,
    parse_weight,
    run_oracle,
    so_action,
    spinor_form_components,
    symbol_nontrivial,
    y_matrix,
)
from spinsphere.errors import AnnihilationFailure, CapExceeded, OutOfRange


def anticommutator(a, b):
    return a @ b + b @ a


def test_clifford_relations_n2():
    rep = gamma_matrices(2)
    assert rep.dim_s == 2
    minus_two = ExactMatrix.identity(2).scale(-2)
    for i, ei in enumerate(rep.gammas):
        for j, ej in enumerate(rep.gammas):
            expected = minus_two if i == j else ExactMatrix.zeros(2, 2)
            assert anticommutator(ei, ej) == expected


def test_volume_element_scalar_n3():
    rep = gamma_matrices(3)
    vol = rep.gammas[0] @ rep.gammas[1] @ rep.gammas[2]
    # e_1 e_2 e_3 acts as a scalar on the irreducible spinor space
    for i in range(rep.dim_s):
        for j in range(rep.dim_s):
            if i != j:
                assert vol.entry(i, j).is_zero()
    assert len({vol.entry(i, i) for i in range(rep.dim_s)}) == 1


def test_chirality_n4():
    rep = gamma_matrices(4)
    chi = rep.chirality
    assert chi @ chi == ExactMatrix.identity(rep.dim_s)
    assert chi.trace().is_zero()
    # sorted to diag(+1, +1, -1, -1)
    assert [str(chi.entry(i, i)) for i in range(4)] == ["1", "1", "-1", "-1"]
    for e in rep.gammas:
        assert (chi @ e + e @ chi).is_zero()


def test_gamma_cap():
    with pytest.raises(CapExceeded):
        gamma_matrices(12, cap=10)
    with pytest.raises(OutOfRange):
        gamma_matrices(1)


def test_casimir_on_spinors_n3():
    rep = gamma_matrices(3)
    cas = casimir_matrix(rep, 0)
    c = casimir_scalar(parse_weight(GroupId(3), "1/2"))
    assert c == Fraction(3, 4)
    assert cas == ExactMatrix.identity(rep.dim_s).scale(c)


def test_so_bracket_n4_vector_forms():
    # [L_01, L_12] acts as -L_02 in our convention (e_a -> e_b, e_b -> -e_a)
    rep = gamma_matrices(4)
    gens = so_action(rep, 1)
    import itertools

    pairs = list(itertools.combinations(range(4), 2))
    L01 = gens[pairs.index((0, 1))]
    L12 = gens[pairs.index((1, 2))]
    L02 = gens[pairs.index((0, 2))]
    assert L01 @ L12 - L12 @ L01 == L02.scale(-1)


def test_y_equivariance_n4():
    rep = gamma_matrices(4)
    y = y_matrix(rep, 1)
    for Ld, Ls in zip(so_action(rep, 0), so_action(rep, 1)):
        assert Ld @ y == y @ Ls


def test_y_single_contraction_n2():
    # on 1-forms over R^2 the contraction has one term per coordinate:
    # Y(e_i tensor s) = -e_i . s, so column block i of Y is -e_i
    rep = gamma_matrices(2)
    y = y_matrix(rep, 1)
    assert (y.rows, y.cols) == (2, 4)
    for i, e in enumerate(rep.gammas):
        for r in range(2):
            for c in range(2):
                assert y.entry(r, 2 * i + c) == e.entry(r, c) * Fraction(-1)


def test_projector_ranks_examples():
    assert [r for _, _, r in ekj_projectors(gamma_matrices(3), 1)] == [2, 4]
    assert [r for _, _, r in ekj_projectors(gamma_matrices(4), 1)] == [4, 12]
    assert [r for _, _, r in ekj_projectors(gamma_matrices(5), 2)] == [4, 16, 20]


def test_projector_rank_dual_route():
    # trace rank (after idempotency) agrees with elimination rank
    for n in (3, 4):
        rep = gamma_matrices(n)
        for kf in range(n + 1):
            for _, p, r in ekj_projectors(rep, kf):
                assert p.rank() == r


def test_y_vanishes_on_top_component():
    for n, kf in [(3, 1), (4, 2), (5, 2)]:
        rep = gamma_matrices(n)
        y = y_matrix(rep, kf)
        top = ekj_projectors(rep, kf)[-1]
        assert top[0] == kf
        assert (y @ top[1]).is_zero()


def test_y_iso_rank():
    # Y restricted to E^{2,0} maps onto the full E^{1,0} component
    rep = gamma_matrices(5)
    y = y_matrix(rep, 2)
    p = dict((j, pr) for j, pr, _ in ekj_projectors(rep, 2))[0]
    dims = dict((j, d) for j, _, d in spinor_form_components(GroupId(5), 1))
    assert (y @ p).rank() == dims[0]


def test_symbol_nontrivial_examples():
    assert symbol_nontrivial(gamma_matrices(4), 0) is True
    assert symbol_nontrivial(gamma_matrices(5), 1) is True
    with pytest.raises(OutOfRange):
        symbol_nontrivial(gamma_matrices(4), 2)


def test_symbol_trivial_negative_control():
    # the composition through a non-matching ladder index vanishes:
    # P_{3,3} (eps(e_i) x I) P_{2,0} = 0 for every coordinate i
    rep = gamma_matrices(5)
    p_src = dict((j, p) for j, p, _ in ekj_projectors(rep, 2))[0]
    p_dst = ekj_projectors(rep, 3)[-1][1]
    for i in range(5):
        assert (p_dst @ epsilon_matrix(rep, 2, i) @ p_src).is_zero()


def test_lagrange_on_casimir_n3():
    rep = gamma_matrices(3)
    cas = casimir_matrix(rep, 1)
    g = GroupId(3)
    eigs = [
        casimir_scalar(parse_weight(g, "1/2")),
        casimir_scalar(parse_weight(g, "3/2")),
    ]
    p0, p1 = lagrange_projectors(cas, eigs)
    assert p0.rank() == 2 and p1.rank() == 4
    assert p0 + p1 == ExactMatrix.identity(6)
    with pytest.raises(AnnihilationFailure):
        lagrange_projectors(cas, [eigs[0], eigs[1] + 1])


def test_oracle_small():
    results = run_oracle(cap=4)
    bad = [r for r in results if not r["ok"]]
    assert bad == []
    assert len(results) > 20
