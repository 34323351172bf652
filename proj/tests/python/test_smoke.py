import pytest

try:
    import coxalt as m
except ImportError:
    import _coxalt as m

B3 = "n=3\nm 0 1 4\nm 1 2 3\n"
I2_8 = "n=2\nm 0 1 8\n"


def test_classify():
    nc = m.classify(B3)
    assert nc["evenly_laced"] and nc["leaf"] and nc["even_leaf"]
    assert nc["neighbor"] == 1
    assert not m.classify("n=3\nm 0 1 3\nm 1 2 3\n")["evenly_laced"]


def test_parse_errors():
    with pytest.raises(Exception):
        m.classify("n=3\nm 0 9 3\n")


def test_derive_prime():
    derived = m.derive_prime(B3)
    assert "m 0 2 3" in derived and "m 1 2 3" in derived


def test_group_counts():
    g = m.Group(B3)
    assert g.order == 48
    assert g.alt_order == 24
    assert g.num_reflections == 9
    assert max(g.ell_r_values()) == 6


def test_poincare():
    g = m.Group(B3)
    assert g.poincare_plus() == "1 + 3*q + 5*q^2 + 6*q^3 + 5*q^4 + 3*q^5 + q^6"
    assert g.poincare_quotient() == g.poincare_plus()
    assert m.Group(I2_8).poincare_plus() == "1 + 2*q + 2*q^2 + 2*q^3 + q^4"


def test_closed_forms():
    assert m.closed_type_a_plus(4) == "1 + 3*q + 4*q^2 + 4*q^3"
    assert m.q_factorial(3) == "1 + 2*q + 2*q^2 + q^3"
    assert m.affine_series("affine-C", 2, 4).startswith("1 + ")


def test_table_and_exports():
    g = m.Group(B3)
    table = g.table_tsv()
    assert table.splitlines()[0].startswith("ell\t")
    assert len(table.splitlines()) == 25
    assert "style=dotted" in g.poset_dot("left-strong")
    assert g.homology_ranks() == [0, 7]


def test_verify():
    results = m.verify(B3)
    assert results and all(v == "pass" for v in results.values())
    skipped = m.verify("n=2\nm 0 1 7\n")
    assert any(v.startswith("skip") for v in skipped.values())
    assert not any(v.startswith("fail") for v in skipped.values())
