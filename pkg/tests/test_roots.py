"""Root system generation, ordering and the integral pairing."""

import pytest

from weylchar.cartan import CartanDatum, cartan_from_label
from weylchar.roots import (
    NonFiniteType,
    pairing,
    positive_roots,
    simple_root,
)
from weylchar.weyl import weyl_group

ROOT_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10, "A5": 15,
    "B2": 4, "B3": 9, "B4": 16, "C3": 9, "D4": 12,
    "G2": 6, "F4": 24, "A2xA1": 4, "A1xA1": 2,
}


@pytest.mark.parametrize("label,count", sorted(ROOT_COUNTS.items()))
def test_root_counts(label, count):
    assert len(positive_roots(cartan_from_label(label))) == count


def test_a2_roots():
    roots = {rv.root for rv in positive_roots(cartan_from_label("A2"))}
    assert roots == {(1, 0), (0, 1), (1, 1)}


def test_b2_roots_and_coroots():
    # with A[1][2] = -2 the long positive root is alpha1 + 2*alpha2 and the
    # short root alpha1 + alpha2 has coroot 2*coroot1 + coroot2
    table = {rv.root: rv.coroot for rv in positive_roots(cartan_from_label("B2"))}
    assert table == {(1, 0): (1, 0), (0, 1): (0, 1), (1, 1): (2, 1), (1, 2): (1, 1)}


def test_ordering_by_height_then_lex():
    for label in ("A3", "B3", "G2", "F4"):
        roots = positive_roots(cartan_from_label(label))
        keys = [(rv.height, rv.root) for rv in roots]
        assert keys == sorted(keys)


@pytest.mark.parametrize("label", sorted(ROOT_COUNTS))
def test_self_pairing_is_two(label):
    datum = cartan_from_label(label)
    for rv in positive_roots(datum):
        assert pairing(datum, rv, rv) == 2


def test_pairing_reads_cartan_entries():
    a2 = cartan_from_label("A2")
    assert pairing(a2, simple_root(a2, 1), simple_root(a2, 2)) == -1
    b2 = cartan_from_label("B2")
    # asymmetric by construction; values follow the fixed B2 matrix
    assert pairing(b2, simple_root(b2, 1), simple_root(b2, 2)) == -2
    assert pairing(b2, simple_root(b2, 2), simple_root(b2, 1)) == -1


def test_pairing_dimension_mismatch():
    a2 = cartan_from_label("A2")
    a3 = cartan_from_label("A3")
    with pytest.raises(ValueError):
        pairing(a2, simple_root(a3, 1), simple_root(a3, 2))


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "B3", "G2", "A1xA1"])
def test_simple_reflection_permutes_other_positives(label):
    datum = cartan_from_label(label)
    group = weyl_group(datum)
    for i in range(1, datum.rank + 1):
        s = group.simple_reflection(i)
        alpha_i = simple_root(datum, i)
        for alpha in positive_roots(datum):
            image = group.apply(s, alpha)
            if alpha == alpha_i:
                assert image == alpha.negated()
            else:
                assert image.is_positive()


@pytest.mark.parametrize("label", ["A2", "A3", "B3", "C3", "G2", "D4", "F4"])
def test_pairing_invariance_under_simple_reflections(label):
    datum = cartan_from_label(label)
    group = weyl_group(datum)
    roots = positive_roots(datum)
    for i in range(1, datum.rank + 1):
        s = group.simple_reflection(i)
        for alpha in roots:
            for beta in roots:
                assert pairing(datum, alpha, beta) == pairing(
                    datum, group.apply(s, alpha), group.apply(s, beta)
                )


def test_nonfinite_closure_rejected():
    # affine three-cycle: passes the local matrix checks but the root
    # closure never terminates
    affine = CartanDatum(
        label="affine-test",
        rank=3,
        cartan=((2, -1, -1), (-1, 2, -1), (-1, -1, 2)),
        coxeter=((0, 3, 3), (3, 0, 3), (3, 3, 0)),
    )
    with pytest.raises(NonFiniteType):
        positive_roots(affine)
