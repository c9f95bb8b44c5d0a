"""Cartan data construction, label grammar and chain detection."""

import itertools

import pytest

from weylchar.cartan import (
    LabelError,
    NotTypeA,
    cartan_from_label,
    order_from_table,
    shipped_degrees,
    type_a_chains,
)
from weylchar.roots import positive_roots

DESK_LABELS = [
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "G2", "F4",
    "A1xA1", "A2xA1", "B2xA1",
]


def test_a2_matrix():
    assert cartan_from_label("A2").cartan == ((2, -1), (-1, 2))


def test_a1xa1_block_diagonal():
    assert cartan_from_label("A1xA1").cartan == ((2, 0), (0, 2))


def test_g2_convention():
    # fixed convention: A[1][2] = -1, A[2][1] = -3; validated by the root
    # count below
    assert cartan_from_label("G2").cartan == ((2, -1), (-3, 2))


def test_g2_has_six_positive_roots():
    assert len(positive_roots(cartan_from_label("G2"))) == 6


def test_b_vs_c_transposed():
    b3 = cartan_from_label("B3").cartan
    c3 = cartan_from_label("C3").cartan
    assert b3[1][2] == -2 and b3[2][1] == -1
    assert c3[1][2] == -1 and c3[2][1] == -2
    assert all(b3[i][j] == c3[j][i] for i in range(3) for j in range(3))


def test_case_insensitive_and_canonical_label():
    assert cartan_from_label("b3xa2") == cartan_from_label("B3xA2")
    assert cartan_from_label("b3xa2").label == "B3xA2"


def test_reparse_roundtrip():
    for label in DESK_LABELS:
        datum = cartan_from_label(label)
        assert cartan_from_label(datum.label) == datum


@pytest.mark.parametrize(
    "bad", ["", "H3", "A0", "B1", "D3", "E5", "E9", "F5", "G3", "A", "2A", "A2x", "Q4"]
)
def test_bad_labels(bad):
    with pytest.raises(LabelError):
        cartan_from_label(bad)


def test_validate_invariants_all_desk_types():
    for label in DESK_LABELS + ["E6", "E7", "E8"]:
        datum = cartan_from_label(label)
        datum.validate()
        for i in range(datum.rank):
            assert datum.cartan[i][i] == 2
            for j in range(datum.rank):
                if i != j:
                    assert datum.cartan[i][j] <= 0
                    assert datum.cartan[i][j] * datum.cartan[j][i] in (0, 1, 2, 3)


def test_chains_a3_singletons():
    chains = type_a_chains(cartan_from_label("A3"), {1, 3}).chains
    assert chains == ((1,), (3,))


def test_chains_b2_rejected():
    with pytest.raises(NotTypeA):
        type_a_chains(cartan_from_label("B2"), {1, 2})


def test_chains_d4_outer_nodes():
    chains = type_a_chains(cartan_from_label("D4"), {1, 3, 4}).chains
    assert chains == ((1,), (3,), (4,))


def test_chains_d4_branch_rejected():
    with pytest.raises(NotTypeA):
        type_a_chains(cartan_from_label("D4"), {1, 2, 3, 4})


def test_chains_f4_double_bond_rejected():
    with pytest.raises(NotTypeA):
        type_a_chains(cartan_from_label("F4"), {2, 3})


def test_chain_orientation_from_lowest_endpoint():
    chains = type_a_chains(cartan_from_label("A4"), {4, 3, 2}).chains
    assert chains == ((2, 3, 4),)


def test_chains_node_out_of_range():
    with pytest.raises(ValueError):
        type_a_chains(cartan_from_label("A2"), {0, 1})


@pytest.mark.parametrize("label", ["A5", "B3", "D4", "F4", "G2", "A2xA1", "A1xA1"])
def test_chains_against_brute_force(label):
    # succeeds iff the induced subdiagram has only order-3 bonds and no
    # branch node; checked over every subset from the raw bond table
    datum = cartan_from_label(label)
    nodes = range(1, datum.rank + 1)
    for size in range(datum.rank + 1):
        for subset in itertools.combinations(nodes, size):
            orders = [
                datum.coxeter[i - 1][j - 1]
                for i, j in itertools.combinations(subset, 2)
            ]
            degree = {
                i: sum(1 for j in subset if j != i and datum.coxeter[i - 1][j - 1] >= 3)
                for i in subset
            }
            expect_ok = all(m <= 3 for m in orders) and all(
                d <= 2 for d in degree.values()
            )
            if not expect_ok:
                with pytest.raises(NotTypeA):
                    type_a_chains(datum, subset)
                continue
            decomposition = type_a_chains(datum, subset)
            flattened = sorted(decomposition.nodes())
            assert flattened == sorted(subset)
            for chain in decomposition.chains:
                for a, b in zip(chain, chain[1:]):
                    assert datum.bond_order(a, b) == 3


def test_shipped_degrees_and_order():
    assert shipped_degrees(cartan_from_label("A3")) == (2, 3, 4)
    assert shipped_degrees(cartan_from_label("D4")) == (2, 4, 4, 6)
    assert shipped_degrees(cartan_from_label("A2xA1")) == (2, 2, 3)
    assert order_from_table(cartan_from_label("B3")) == 48
    assert order_from_table(cartan_from_label("E8")) == 696729600
