import random

import pytest
from hypothesis import given, strategies as st

from betti_forge.combinatorics import is_o_sequence
from betti_forge.decompose import check_integrality, greedy_decompose, recompose
from betti_forge.diagrams import BettiTable
from betti_forge.errors import BettiForgeError, NotOrderIdealError
from betti_forge.ferrers import (
    alpha_sequence,
    ferrers_from_o_sequence,
    ferrers_identity,
    from_cells,
    ideal_betti,
    ideal_decomposition,
    pair_count_identity,
    quotient_betti,
    quotient_decomposition,
    quotient_summands,
)
from betti_forge.sampling import random_ferrers
from oracles import ferrers_generators, monomial_ideal_betti, quotient_from_ideal

GRID = [(1, 1), (1, 2), (2, 1), (2, 2)]


def terms(d):
    return [(c, s.degrees) for c, s in d.terms]


def test_from_cells_examples(cubical_stacking):
    assert len(cubical_stacking) == 6
    assert len(from_cells(1, [(1,), (2,), (3,)])) == 3
    with pytest.raises(NotOrderIdealError) as err:
        from_cells(2, [(1, 2)])
    assert err.value.witness == (1, 2)
    assert err.value.missing == (1, 1)


@pytest.mark.parametrize("cells", [[(1, 1, 0)], [(1, 1)], [(1, 1, 1, 1)]])
def test_from_cells_rejects_malformed(cells):
    with pytest.raises(BettiForgeError):
        from_cells(3, cells)


def test_alpha_sequence(cubical_stacking):
    assert alpha_sequence(cubical_stacking) == (1, 3, 2)
    assert alpha_sequence(from_cells(4, [(1, 1, 1, 1)])) == (1,)
    assert alpha_sequence(from_cells(1, [(1,), (2,), (3,)])) == (1, 1, 1)


def test_ideal_betti(cubical_stacking):
    assert ideal_betti(cubical_stacking) == BettiTable({(0, 3): 6, (1, 4): 7, (2, 5): 2})
    assert ideal_betti(from_cells(3, [(1, 1, 1)])) == BettiTable({(0, 3): 1})
    assert ideal_betti(from_cells(2, GRID)) == BettiTable({(0, 2): 4, (1, 3): 4, (2, 4): 1})


def test_ideal_decomposition(cubical_stacking):
    assert terms(ideal_decomposition(cubical_stacking)) == [(4, (3, 4, 5)), (3, (3, 4)), (1, (3,))]
    assert terms(ideal_decomposition(from_cells(3, [(1, 1, 1)]))) == [(1, (3,))]
    assert terms(ideal_decomposition(from_cells(2, GRID))) == [(2, (2, 3, 4)), (2, (2, 3)), (1, (2,))]


def test_quotient_betti(cubical_stacking):
    t = quotient_betti(cubical_stacking)
    assert t == BettiTable({(0, 0): 1, (1, 3): 6, (2, 4): 7, (3, 5): 2})
    assert t.euler_sum() == 0
    assert quotient_betti(from_cells(4, [(1, 1, 1, 1)])) == BettiTable({(0, 0): 1, (1, 4): 1})


# columns printed for the three projections of the cubical stacking
SUMMAND_TABLE = {
    (1, (1, 1)): (2, 1), (1, (1, 2)): (1, 1), (1, (1, 3)): (1, 2), (1, (2, 1)): (1, 1), (1, (2, 2)): (1, 2),
    (2, (1, 1)): (2, 1), (2, (1, 2)): (2, 2), (2, (1, 3)): (1, 2), (2, (2, 1)): (1, 1),
    (3, (1, 1)): (3, 2), (3, (1, 2)): (2, 2), (3, (2, 1)): (1, 1),
}


def test_quotient_summands_all_columns(cubical_stacking):
    got = {(q.axis, q.S): (q.n_S, q.k_S) for q in quotient_summands(cubical_stacking)}
    assert got == SUMMAND_TABLE


def test_quotient_decomposition(cubical_stacking):
    assert terms(quotient_decomposition(cubical_stacking)) == [(20, (0, 3, 4, 5)), (8, (0, 3, 4))]


def test_quotient_decomposition_grid_against_greedy():
    F = from_cells(2, GRID)
    assert quotient_decomposition(F) == greedy_decompose(quotient_betti(F))
    assert recompose(quotient_decomposition(F)) == quotient_betti(F)


def test_quotient_decomposition_single_cell():
    # both projections contribute n_S = 1, k_S = 0, merged into 2 * pi(0,2)
    F = from_cells(2, [(1, 1)])
    assert terms(quotient_decomposition(F)) == [(2, (0, 2))]
    assert greedy_decompose(quotient_betti(F)) == quotient_decomposition(F)


def test_d1_rejected_for_quotient_formulas():
    F = from_cells(1, [(1,), (2,)])
    for fn in (quotient_summands, quotient_decomposition, ferrers_identity):
        with pytest.raises(BettiForgeError):
            fn(F)


def test_ferrers_identity(cubical_stacking):
    assert ferrers_identity(cubical_stacking) == 3
    assert ferrers_identity(from_cells(2, [(1, 1)])) == 2


def test_from_o_sequence_examples():
    assert from_cells(3, [(1, 1, 1)]) == ferrers_from_o_sequence((1,), 3)
    F = ferrers_from_o_sequence((1, 3, 2), 3)
    assert alpha_sequence(F) == (1, 3, 2)
    assert ideal_betti(F) == BettiTable({(0, 3): 6, (1, 4): 7, (2, 5): 2})
    G = ferrers_from_o_sequence((1, 2, 3), 2)
    assert len(G) == 6 and alpha_sequence(G) == (1, 2, 3)


@pytest.mark.parametrize("seed", range(12))
def test_betti_numbers_against_koszul_homology(seed):
    """Closed forms against Betti numbers computed from scratch."""
    rng = random.Random(seed)
    d = rng.choice([2, 3])
    F = random_ferrers(rng, d, max_coord=3, max_cells=12)
    while sum(max(c[p] for c in F.cells) for p in range(d)) > 8:
        F = random_ferrers(rng, d, max_coord=3, max_cells=12)
    ideal = monomial_ideal_betti(ferrers_generators(d, F.cells))
    assert ideal_betti(F) == ideal
    assert quotient_betti(F) == quotient_from_ideal(ideal)


def test_cubical_stacking_against_koszul_homology(cubical_stacking):
    ideal = monomial_ideal_betti(ferrers_generators(3, cubical_stacking.cells))
    assert ideal == ideal_betti(cubical_stacking)


hypergraphs = st.builds(
    lambda rnd, d: random_ferrers(rnd, d),
    st.randoms(use_true_random=False),
    st.sampled_from([2, 3, 4]),
)


@given(hypergraphs)
def test_closed_forms_match_greedy(F):
    assert greedy_decompose(ideal_betti(F)) == ideal_decomposition(F)
    assert greedy_decompose(quotient_betti(F)) == quotient_decomposition(F)
    assert check_integrality(quotient_decomposition(F))


@given(hypergraphs)
def test_identities(F):
    assert ferrers_identity(F) == F.d
    assert quotient_betti(F).euler_sum() == 0
    projdim = max(i for i, _ in quotient_betti(F))
    for i in range(1, projdim + 1):
        lhs, rhs = pair_count_identity(F, i)
        assert lhs == rhs


@given(hypergraphs)
def test_alpha_is_o_sequence_and_round_trips(F):
    alpha = alpha_sequence(F)
    assert is_o_sequence(alpha)
    assert len(alpha) < 2 or alpha[1] <= F.d
    assert alpha_sequence(ferrers_from_o_sequence(alpha, F.d)) == alpha
