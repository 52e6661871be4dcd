import pytest
from hypothesis import given
from hypothesis import strategies as st

from exppell.errors import ParseError
from exppell.logic.formula import (
    ONE,
    ZERO,
    Z,
    Add,
    And,
    Eq,
    Exists,
    Mul,
    NameSupply,
    Or,
    Var,
    conj,
    free_vars,
    numeral,
    parse_sexpr,
    quantifier_count,
    substitute,
    to_sexpr,
)

names = st.sampled_from(["x", "y", "h", "g1"])

terms = st.recursive(
    st.one_of(st.just(ZERO), st.just(ONE), st.just(Z), names.map(Var)),
    lambda inner: st.one_of(st.builds(Add, inner, inner), st.builds(Mul, inner, inner)),
    max_leaves=8,
)

formulas = st.recursive(
    st.builds(Eq, terms, terms),
    lambda inner: st.one_of(st.builds(And, inner, inner), st.builds(Or, inner, inner),
                            st.builds(Exists, names, inner)),
    max_leaves=6,
)


def value(t) -> int:
    """Integer value of a closed term without z."""
    if t == ZERO:
        return 0
    if t == ONE:
        return 1
    if isinstance(t, Add):
        return value(t.left) + value(t.right)
    return value(t.left) * value(t.right)


def size(t) -> int:
    return 1 + size(t.left) + size(t.right) if isinstance(t, (Add, Mul)) else 1


@given(formulas)
def test_sexpr_round_trip(f):
    assert parse_sexpr(to_sexpr(f)) == f


@given(terms)
def test_term_round_trip(t):
    assert parse_sexpr(to_sexpr(t)) == t


def test_sexpr_text():
    f = Exists("h", And(Eq(Add(Mul(Var("h"), Var("h")), Var("y")), Var("x")), Eq(Z, ONE)))
    assert to_sexpr(f) == "(exists h (and (= (+ (* h h) y) x) (= z 1)))"
    assert parse_sexpr("  (or (= 0 0)\n (= z x))") == Or(Eq(ZERO, ZERO), Eq(Z, Var("x")))


@pytest.mark.parametrize("text,pos", [
    ("(= 0", 4),
    ("(exists z (= 0 0))", 8),
    ("(+ (= 0 0) 1)", 1),
    ("(and 0 1)", 1),
    ("(foo 0 1)", 1),
    ("(= 0 0) x", 8),
    ("(= 0 0))", 7),
    ("(= 2 0)", 3),
])
def test_sexpr_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_sexpr(text)
    assert info.value.position == pos


def test_variable_names_are_checked():
    with pytest.raises(ValueError):
        Var("z")
    with pytest.raises(ValueError):
        Var("1x")
    with pytest.raises(ValueError):
        Exists("z", Eq(ZERO, ZERO))


@pytest.mark.parametrize("c", [0, 1, 2, 3, 4, 5, 7, 8, 25, 100, 1023, 1024, 10**6])
def test_numerals(c):
    t = numeral(c)
    assert value(t) == c
    assert size(t) <= 6 * max(1, c.bit_length()) + 1


def test_negative_numeral_rejected():
    with pytest.raises(ValueError):
        numeral(-1)


def test_free_vars_and_substitution():
    f = Exists("u", Eq(Add(Var("T"), Var("u")), Add(Var("g"), Mul(Z, Var("u")))))
    assert free_vars(f) == {"T", "g"}
    g = substitute(f, {"T": numeral(2)})
    assert free_vars(g) == {"g"}
    # substituting a term that mentions the bound variable renames the binder
    h = substitute(f, {"T": Var("u")})
    assert isinstance(h, Exists) and h.var != "u"
    assert free_vars(h) == {"u", "g"}
    # bound occurrences are untouched
    assert substitute(f, {"u": ONE}) == f


def test_helpers():
    a, b, c = Eq(ZERO, ZERO), Eq(ONE, ONE), Eq(Z, Z)
    assert conj([a, b, c]) == And(a, And(b, c))
    with pytest.raises(ValueError):
        conj([])
    assert quantifier_count(Exists("x", And(Exists("y", a), b))) == 2
    names = NameSupply(["h", "h1"])
    assert [names.fresh("h"), names.fresh("h"), names.fresh("g")] == ["h2", "h3", "g"]
    assert Var("x") + 2 == Add(Var("x"), numeral(2))
    assert str(Var("x") * Z) == "(* x z)"
