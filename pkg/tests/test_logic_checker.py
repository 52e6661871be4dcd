import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exppell.algebra import Poly, parse_poly
from exppell.errors import BudgetExceeded
from exppell.logic import (
    Add,
    And,
    Bounds,
    Eq,
    Exists,
    Mul,
    Or,
    Var,
    build_const_def,
    build_phi,
    build_val,
    compile_system,
    eval_formula,
    holds_with,
    parse_dio,
    substitute,
    witness_search,
)
from exppell.logic.checker import box_key, box_polys, int_poly_sqrt
from exppell.logic.compiler import pell_atom
from exppell.logic.dio import extend_solution, normalize_dio
from exppell.logic.formula import ONE, ZERO, Z, exists_all, numeral

P = parse_poly


def test_box_order():
    assert [str(p) for p in box_polys(1, 1)] == [
        "0", "1", "-1", "z", "z + 1", "z - 1", "-z", "-z + 1", "-z - 1"]
    box = list(box_polys(2, 2))
    assert len(box) == 5**3
    assert [box_key(p) for p in box] == sorted(box_key(p) for p in box)


def test_int_poly_sqrt():
    assert int_poly_sqrt(P("4*z^2 + 4*z + 1")) == P("2*z + 1")
    assert int_poly_sqrt(P("z^2 + 1")) is None
    assert int_poly_sqrt(P("-1")) is None
    assert int_poly_sqrt(P("z^3")) is None
    assert int_poly_sqrt(Poly()) == Poly()


def test_closed_atoms():
    assert eval_formula(Eq(Mul(Z, Z), Mul(Z, Z)))
    assert not eval_formula(Eq(Z, ONE))
    assert eval_formula(Or(Eq(Z, ONE), Eq(ONE, ONE)))


def test_phi_examples():
    phi = build_phi("T")
    assert eval_formula(phi, {"T": 2}, Bounds(2, 3))
    assert eval_formula(phi, {"T": "z"}, Bounds(2, 3))
    assert eval_formula(phi, {"T": "z^2"}, Bounds(3, 5))
    assert not eval_formula(phi, {"T": "1/2"}, Bounds(3, 5))
    # the value at 1 decides membership, the box decides what is found
    assert not eval_formula(phi, {"T": 3}, Bounds(2, 3))
    assert eval_formula(phi, {"T": 3}, Bounds(3, 5))


def test_phi_witness_is_the_pell_pair():
    sentence = substitute(build_phi("T"), {"T": numeral(2)})
    w = witness_search(sentence, Bounds(2, 3))
    assert w.values == {"h": P("2*z^2 - 1"), "g": P("2*z")}
    assert w.auxiliary == {"u": P("-2")}
    assert holds_with(sentence, {**w.values, **w.auxiliary})

    sentence = substitute(build_phi("T"), {"T": Mul(Z, Z)})
    w = witness_search(sentence, Bounds(3, 5))
    assert (w.values["g"], w.auxiliary["u"]) == (P("1"), P("z + 1"))


@pytest.mark.parametrize("a,b,expected", [(2, 2, True), ("z", 1, True), (2, 3, False), ("z^2", "2*z - 1", True)])
def test_val_examples(a, b, expected):
    assert eval_formula(build_val("a", "b"), {"a": a, "b": b}, Bounds(2, 3)) is expected


def test_val_transitivity():
    values = [0, 1, 2, -1, "z", "z^2", "2*z - 1", "z - 1", "3 - z", "z^2 - z"]
    val = build_val("a", "b")
    holds = {(a, b): eval_formula(val, {"a": a, "b": b}, Bounds(2, 3)) for a in values for b in values}
    for a, b, c in itertools.product(values, repeat=3):
        if holds[a, b] and holds[b, c]:
            assert holds[a, c]


@pytest.mark.parametrize("v,expected", [(0, True), (1, True), (-1, True), (3, False), ("z", False)])
def test_const_def(v, expected):
    # 3 is a constant, but 8 has no fifth root in Z[z]: a gap of the test structure
    assert eval_formula(build_const_def("v"), {"v": v}, Bounds(2, 3)) is expected


def test_witness_search_examples():
    w = witness_search(compile_system(parse_dio("X*X=4")).sentence, Bounds(4, 10))
    assert w.values["X"] == P("2") and w.at_one()["X"] == 2
    assert witness_search(compile_system(parse_dio("X*X=4")).sentence, Bounds(2, 3)) is None
    assert witness_search(compile_system(parse_dio("2*X=1")).sentence, Bounds(2, 5)) is None
    w = witness_search(compile_system(parse_dio("X=0")).sentence, Bounds(0, 1))
    assert w.values["X"] == Poly()


def test_witnesses_reevaluate():
    for text in ["X+Y=3; X*Y=2", "X - Y = 1; X*Y = 2", "X*X = Y; Y = 4"]:
        c = compile_system(parse_dio(text))
        w = witness_search(c.sentence, Bounds(4, 10))
        assert holds_with(c.sentence, {**w.values, **w.auxiliary})
        assert c.system.holds({v: w.at_one()[v] for v in c.system.variables})


def test_first_witness_in_order():
    x, y = Var("x"), Var("y")
    f = Exists("x", Exists("y", Eq(Add(x, y), Z)))
    w = witness_search(f, Bounds(1, 1))
    assert w.values == {"x": Poly(), "y": P("z")}
    f = Exists("x", Eq(Mul(x, x), Add(numeral(4), ZERO)))
    assert witness_search(f, Bounds(0, 3)).values == {"x": P("2")}


def test_budget():
    x, y, u = Var("x"), Var("y"), Var("u")
    # z^3 + 1 has an irreducible quadratic factor, so no linear x, y, u work; the values at 1 do not rule it out
    f = exists_all(["x", "y", "u"], Eq(Mul(Mul(x, y), u), Add(Mul(Mul(Z, Z), Z), ONE)))
    with pytest.raises(BudgetExceeded):
        witness_search(f, Bounds(1, 1, budget=20))
    assert witness_search(f, Bounds(1, 1)) is None
    assert witness_search(f, Bounds(2, 1)) is not None


def test_free_variables_are_required():
    with pytest.raises(ValueError):
        eval_formula(build_phi("T"), {}, Bounds(1, 1))
    with pytest.raises(ValueError):
        witness_search(build_phi("T"), Bounds(1, 1))


# -- agreement with naive enumeration ---------------------------------------------------------

leaves = st.sampled_from([ZERO, ONE, Z, Var("x"), Var("y")])
small_terms = st.recursive(leaves, lambda t: st.one_of(st.builds(Add, t, t), st.builds(Mul, t, t)), max_leaves=5)
atoms_ = st.one_of(st.builds(Eq, small_terms, small_terms), st.just(pell_atom(Var("x"), Var("y"))))
matrices = st.lists(atoms_, min_size=1, max_size=3)


def naive(atoms, degree, height):
    box = list(box_polys(degree, height))
    for xv, yv in itertools.product(box, repeat=2):
        if holds_with(And(atoms[0], atoms[0]) if len(atoms) == 1 else _conj(atoms), {"x": xv, "y": yv}):
            return True
    return False


def _conj(atoms):
    out = atoms[-1]
    for a in reversed(atoms[:-1]):
        out = And(a, out)
    return out


@settings(max_examples=120)
@given(matrices)
def test_agrees_with_naive_enumeration(atoms):
    sentence = exists_all(["x", "y"], _conj(atoms))
    w = witness_search(sentence, Bounds(1, 1))
    assert (w is not None) == naive(atoms, 1, 1)
    if w is not None:
        assert holds_with(sentence, {**w.values, **w.auxiliary})


@settings(max_examples=25)
@given(st.lists(st.integers(-2, 2), min_size=3, max_size=3), st.integers(-4, 4))
def test_bounded_semantics_of_compiled_sentences(coeffs, rhs):
    # at d=4, H=10 every slot must take a value in [-4, 4]; witnesses exist exactly then
    a, b, c = coeffs
    text = f"({a})*X^2 + ({b})*X + ({c}) = {rhs}"
    sysm = parse_dio(text)
    cs = normalize_dio(sysm)
    expected = any(
        all(abs(v) <= 4 for v in extend_solution(cs, {"X": x}).values()) and sysm.holds({"X": x})
        for x in range(-4, 5)
    )
    w = witness_search(compile_system(sysm).sentence, Bounds(4, 10))
    assert (w is not None) == expected
