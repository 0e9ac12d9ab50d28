"""Smoke tests for the Python bindings."""

import pytest

import hullforge as hf


def test_field_arithmetic():
    f = hf.Field.get(2, 2)
    assert f.q == 4
    assert f.modulus == [1, 1, 1]
    assert f.mul(2, 2) == 3  # w * w = w + 1
    assert f.add(2, 1) == 3
    assert f.conj(2) == 3
    assert f.generator() == 2
    f5 = hf.Field.get(5)
    assert f5.div(2, 3) == 4
    assert f5.sqrt(4) == 2
    assert f5.sqrt(2) is None


def test_field_errors():
    f = hf.Field.get(3)
    with pytest.raises(hf.HullforgeError):
        f.inv(0)
    with pytest.raises(hf.HullforgeError):
        hf.Field.get_with_modulus(2, 2, [1, 0, 1])  # reducible


def test_linear_code_basics():
    f = hf.Field.get(2)
    c = hf.LinearCode.from_rows(f, [[1, 1]])
    assert (c.n, c.k) == (2, 1)
    assert c.hull_dim() == 1
    assert c.predicate(hf.Predicate.self_dual)
    assert c.distance() == 2
    assert c.weight_distribution() == [1, 0, 1]
    assert c.dual() == c
    assert hf.macwilliams_selfdual_check(c.weight_distribution(), 2)


def test_grs_with_hull_and_eaqec():
    f = hf.Field.get(2, 3)
    code, witness = hf.grs_with_hull(f, list(range(1, 8)), 3, 2)
    assert code.hull_dim() == 2
    assert code.distance() == 5  # MDS [7, 3, 5]
    assert len(witness) == 7

    a, b = hf.css_from_code(code)
    assert b == hf.family_params("cor72", 7, 3, 2, 3)
    assert hf.classify(b) == "MDS"
    assert hf.singleton_k_max(b) == b.k


def test_bch_and_constacyclic():
    f = hf.Field.get(2)
    g = hf.bch_generator(f, 7, 2)
    code = hf.constacyclic_code(f, g, 1, 7)
    assert (code.n, code.k) == (7, 4)
    assert code.distance() == 3
    dual_gen = hf.constacyclic_dual_generator(f, g, 1, 7)
    assert hf.constacyclic_code(f, dual_gen, 1, 7) == code.dual()
    assert hf.cyclotomic_coset(2, 7, 1) == {1, 2, 4}


def test_max_hull_search():
    f = hf.Field.get(2, 2)
    c = hf.LinearCode.from_rows(f, [[1, 1, 0, 0], [0, 0, 1, 1]])
    best_h, witness, exhaustive, tried = hf.max_hull_exhaustive(c)
    assert best_h == 2
    assert exhaustive
    assert c.scale(witness).hull_dim() == 2
    assert hf.schur_lower_bound(c, c) == 2
    r1 = hf.max_hull_randomized(c, trials=10, seed=3)
    r2 = hf.max_hull_randomized(c, trials=10, seed=3)
    assert r1 == r2


def test_table_emit():
    out = hf.table_emit([(6, 3, 4, 2)], True)
    assert out == "[[6, 3-h, 4, 3-h]]_2\tsingleton=3-h\n"


def test_code_file_round_trip():
    text = "2 1 2 1\nmodulus 0 1\n1 1\n"
    c = hf.parse_code_file(text)
    assert hf.serialize_code_file(c) == text
    with pytest.raises(hf.ParseError):
        hf.parse_code_file("not a code file")
