import pytest

from orbisectors import admissible
from orbisectors.admissible import AdmissibleDatum, InvalidDatum, InvalidGenus, parse_datum


def test_parse_both_notations():
    assert parse_datum("(0,8;1,0,0,3,0,0,0)", 3) == AdmissibleDatum(3, 0, 8, (1, 0, 0, 3, 0, 0, 0))
    assert parse_datum("(12;10100001000)", 3) == AdmissibleDatum(3, 0, 12, (1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0))
    assert parse_datum("(2;8)", 3).d == (8,)
    assert parse_datum("(1,4;0,2,0)", 3).g_prime == 1
    with pytest.raises(InvalidDatum):
        parse_datum("(3;1,2,3)", 3)
    with pytest.raises(InvalidDatum):
        parse_datum("nonsense", 3)


def test_labels():
    A = parse_datum("(14;1000011000000)", 3)
    assert A.table_label() == "(14;1000011000000)"
    assert A.label() == "(0,14;1,0,0,0,0,1,1,0,0,0,0,0,0)"
    assert parse_datum(A.label(), 3) == A
    assert AdmissibleDatum.from_json(A.to_json()) == A


def test_hyperelliptic_datum():
    A = AdmissibleDatum(3, 0, 2, (8,))
    assert admissible.riemann_hurwitz_holds(A)
    assert admissible.structural_equation_holds(A)
    assert admissible.sector_dimension(A) == 5
    assert admissible.involution(A) == A


def test_structural_equation_rejects():
    # Riemann-Hurwitz holds but 1*1 + 2*3 is not divisible by 3
    A = AdmissibleDatum(3, 0, 3, (1, 3))
    assert not admissible.structural_equation_holds(A)
    assert not admissible.is_admissible(A)


def test_genus_below_two_rejected():
    with pytest.raises(InvalidGenus):
        admissible.enumerate_admissible(1)


@pytest.mark.parametrize("g,total,twisted,rational", [(2, 17, 17, 16), (3, 63, 47, 43), (4, 88, 72, 65)])
def test_census(g, total, twisted, rational):
    data = admissible.enumerate_admissible(g)
    sectors = admissible.twisted_sectors(g)
    assert len(data) == total
    assert len(sectors) == twisted
    assert sum(A.g_prime == 0 for A in sectors) == rational


def test_positive_genus_base_at_genus_three():
    pos = {A.label() for A in admissible.twisted_sectors(3) if A.g_prime > 0}
    assert pos == {"(1,2;4)", "(1,3;1,1)", "(1,4;0,2,0)", "(2,2;0)"}


def test_genus_two_contains_hyperelliptic_and_elliptic_double_cover():
    labels = {A.label() for A in admissible.twisted_sectors(2)}
    assert "(0,2;6)" in labels
    assert "(1,2;2)" in labels


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_enumeration_invariants(g):
    data = admissible.enumerate_admissible(g)
    assert data == sorted(set(data))
    for A in data:
        assert admissible.is_admissible(A)
        assert admissible.involution(admissible.involution(A)) == A
    assert max(A.N for A in admissible.twisted_sectors(g)) == 4 * g + 2
    assert max(A.N for A in data) <= admissible.order_bound(g)


def test_disconnected_rational_data_are_not_sectors():
    A = AdmissibleDatum(3, 0, 4, (0, 6, 0))
    assert admissible.is_admissible(A)
    assert admissible.connectedness_k(A) == 2
    assert not admissible.is_twisted_sector(A)


def test_shape_of_positive_genus_datum_with_k_above_one():
    A = parse_datum("(1,4;0,2,0)", 3)
    shape = admissible.sector_shape(A)
    assert shape.k == 2
    assert shape.connected
    assert shape.components == ("order_k", "order_1:excluded")


def test_young_subgroup():
    A = parse_datum("(4;2,3,0)", 3)
    assert admissible.young_order(A) == 2 * 6
    assert sum(size for _, size in admissible.young_classes(A)) == 12
    assert admissible.z_lambda((2, 1, 1)) == 4
    assert len(list(admissible.partitions(6))) == 11
