from __future__ import annotations

import itertools

import pytest

from tensorcat.diagrams import Partition, standard_tableau_count
from tensorcat.errors import DegreeCapExceeded
from tensorcat.grothendieck import (
    Decomposition,
    F_GEN,
    Q_GEN,
    SimpleIndex,
    V_DUAL,
    V_LOWER,
    V_NAT,
    V_STAR_DUAL,
    W_GEN,
    W_STAR,
    decompose_j,
    decompose_word,
    generator_word,
    layers_of_i,
    simple,
    socle_of,
    sym_f,
    sym_q,
    tensor_simple,
)
from tensorcat.oracle import rational_dimension, reconstruct_tensor_word, stable_mixed_tensor
from tensorcat.poset import QuadIndex, leq

P = Partition


def quads_with_sum_at_most(bound: int) -> list[QuadIndex]:
    out = []
    for total in range(bound + 1):
        for split in itertools.product(range(total + 1), repeat=4):
            if sum(split) == total:
                out.append(QuadIndex(*split))
    return out


def test_tensor_simple_examples():
    assert tensor_simple(simple(), V_DUAL) == Decomposition(
        {simple(mu=[1]): 1, simple(lam=[1]): 1}
    )
    assert tensor_simple(simple(mu=[1], nu=[1]), V_NAT) == Decomposition(
        {
            simple(mu=[1], nu=[2]): 1,
            simple(mu=[1], nu=[1, 1]): 1,
            simple(nu=[1]): 1,
        }
    )
    s = simple(lam=[2], mu=[1], pi=[1])
    assert tensor_simple(s, sym_f(0)) == Decomposition({s: 1})


def test_tensor_simple_box_moves():
    s = simple(mu=[2], nu=[1])
    lower = tensor_simple(s, V_LOWER)
    assert lower == Decomposition(
        {
            simple(mu=[3], nu=[1]): 1,
            simple(mu=[2, 1], nu=[1]): 1,
            simple(mu=[2]): 1,
        }
    )
    assert tensor_simple(s, W_STAR) == Decomposition({simple(lam=[1], mu=[2], nu=[1]): 1})
    assert tensor_simple(s, W_GEN) == Decomposition({simple(mu=[2], nu=[1], pi=[1]): 1})


def test_q_is_unit_plus_f():
    for s in (simple(), simple(lam=[1]), simple(mu=[1], nu=[1])):
        expected = Decomposition({s: 1}) + tensor_simple(s, F_GEN)
        assert tensor_simple(s, Q_GEN) == expected


def test_sym_q_is_truncated_sum_of_f_powers():
    s = simple(pi=[1])
    total = Decomposition()
    for j in range(3):
        total = total + tensor_simple(s, sym_f(j))
    assert tensor_simple(s, sym_q(2)) == total


def test_decompose_j_examples():
    assert decompose_j(QuadIndex(0, 0, 0, 0)) == Decomposition({simple(): 1})
    assert decompose_j(QuadIndex(1, 0, 0, 0)) == Decomposition({simple(lam=[1]): 1})
    assert decompose_j(QuadIndex(0, 1, 1, 0)) == Decomposition(
        {
            simple(mu=[1], nu=[1]): 1,
            simple(): 1,
            simple(lam=[1], nu=[1]): 1,
            simple(mu=[1], pi=[1]): 1,
            simple(lam=[1], pi=[1]): 1,
        }
    )


def test_order_independence_of_generator_orderings():
    for q in quads_with_sum_at_most(4):
        reference = decompose_j(q)
        word = generator_word(q)
        seen = set()
        for ordering in set(itertools.permutations(word)):
            if ordering in seen:
                continue
            seen.add(ordering)
            assert decompose_word(ordering) == reference, (q, ordering)


def test_matches_oracle_reconstruction():
    for q in quads_with_sum_at_most(4):
        assert dict(decompose_j(q).terms) == reconstruct_tensor_word(*q)


def test_stable_dimension_check():
    for q in quads_with_sum_at_most(4):
        l, m, n, p = q
        nv = max(1, 2 * (m + n))
        for c in (1, 2, 3):
            for d in (1, 2, 3):
                expected = d**l * (nv + d) ** m * (nv + c) ** n * c**p
                total = 0
                for idx, mult in decompose_j(q).items():
                    total += (
                        mult
                        * _gl(idx.lam, d)
                        * rational_dimension(idx.mu, idx.nu, nv)
                        * _gl(idx.pi, c)
                    )
                assert total == expected, (q, c, d)


def _gl(p: Partition, n: int) -> int:
    from tensorcat.diagrams import gl_dimension

    return gl_dimension(p, n)


def test_defect_grading_of_factors():
    for q in quads_with_sum_at_most(4):
        dec = decompose_j(q)
        for idx, _ in dec.items():
            assert leq(idx.quad, q), (idx, q)
        socle = socle_of(q)
        expected = Decomposition({idx: mult for idx, mult in dec.terms.items() if idx.quad == q})
        assert socle == expected


def test_socle_examples_and_multiplicities():
    assert socle_of(QuadIndex(0, 1, 1, 0)) == Decomposition({simple(mu=[1], nu=[1]): 1})
    assert socle_of(QuadIndex(1, 0, 0, 1)) == Decomposition({simple(lam=[1], pi=[1]): 1})
    for q in quads_with_sum_at_most(4):
        for idx, mult in socle_of(q).items():
            expected = (
                standard_tableau_count(idx.lam)
                * standard_tableau_count(idx.mu)
                * standard_tableau_count(idx.nu)
                * standard_tableau_count(idx.pi)
            )
            assert mult == expected, idx


def test_thin_marginal_matches_stable_characters():
    for m in range(4):
        for n in range(4 - m):
            dec = decompose_j(QuadIndex(0, m, n, 0))
            thin = {
                (idx.mu, idx.nu): mult
                for idx, mult in dec.terms.items()
                if not idx.lam and not idx.pi
            }
            assert thin == stable_mixed_tensor(m, n)


def test_layers_of_i():
    layers = layers_of_i(2)
    assert layers[0] == Decomposition({simple(): 1})
    assert layers[1] == Decomposition({simple(lam=[1], pi=[1]): 1})
    assert layers[2] == Decomposition(
        {simple(lam=[2], pi=[2]): 1, simple(lam=[1, 1], pi=[1, 1]): 1}
    )


def test_degree_cap_refusal():
    with pytest.raises(DegreeCapExceeded):
        decompose_j(QuadIndex(4, 4, 4, 4))
    with pytest.raises(DegreeCapExceeded):
        tensor_simple(simple(lam=[6, 6]), V_DUAL)


def test_decomposition_container():
    d = Decomposition({simple(lam=[1]): 2})
    assert d.multiplicity(simple(lam=[1])) == 2
    assert d.multiplicity(simple()) == 0
    assert (d + d).multiplicity(simple(lam=[1])) == 4
    with pytest.raises(ValueError):
        Decomposition({simple(): -1})


def test_simple_index_helpers():
    s = simple(lam=[2], mu=[1], nu=[1, 1], pi=[])
    assert s.degree == 5
    assert s.quad == QuadIndex(2, 1, 2, 0)
    assert not s.is_thick()
    assert simple(lam=[3], pi=[1]).is_thick()
