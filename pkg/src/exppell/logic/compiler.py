"""Formula builders and the compiler from Diophantine systems to L_z sentences.

R'_Z is the set of f for which f - g is divisible by (z - 1) for some
second coordinate g of a solution of the Pell equation h^2 - (z^2 - 1) g^2 = 1.
Over Z[z] those g are exactly the y_n, and y_n(1) = n, so membership says
"f(1) is an integer" and theta(f) = f(1) maps R'_Z onto Z. Subtraction never
appears: A - B = C is written B + C = A.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dio import AddEq, ConstEq, Constraint, DioSystem, MulEq, VarEq, constraint_variables, normalize_dio
from .formula import (
    ONE,
    Z,
    Add,
    And,
    Eq,
    Exists,
    Formula,
    Mul,
    NameSupply,
    Term,
    Var,
    as_term,
    conj,
    exists_all,
    numeral,
    term_vars,
)


def _supply(supply: NameSupply | None, *terms: Term) -> NameSupply:
    if supply is not None:
        for t in terms:
            supply.taken |= term_vars(t)
        return supply
    taken: set[str] = set()
    for t in terms:
        taken |= term_vars(t)
    return NameSupply(taken)


def pell_atom(h: Term, g: Term) -> Formula:
    """h^2 - (z^2 - 1) g^2 = 1, written h*h + g*g = 1 + z*z*g*g."""
    gg = Mul(g, g)
    return Eq(Add(Mul(h, h), gg), Add(ONE, Mul(Mul(Z, Z), gg)))


def divisible_atom(a: Term, b: Term, q: Term) -> Formula:
    """a - b = (z - 1) q, written a + q = b + z*q."""
    return Eq(Add(a, q), Add(b, Mul(Z, q)))


def build_phi(T, supply: NameSupply | None = None) -> Formula:
    """Membership of T in R'_Z: exists h, g with the Pell equation and exists u with T - g = (z - 1) u."""
    T = as_term(T)
    names = _supply(supply, T)
    h, g, u = (Var(names.fresh(b)) for b in ("h", "g", "u"))
    return Exists(h.name, Exists(g.name, And(pell_atom(h, g), Exists(u.name, divisible_atom(T, g, u)))))


def build_val(f, g, supply: NameSupply | None = None) -> Formula:
    """f, g in R'_Z and f(1) = g(1), the latter as exists d with f - g = (z - 1) d."""
    f, g = as_term(f), as_term(g)
    names = _supply(supply, f, g)
    phi_f = build_phi(f, names)
    phi_g = build_phi(g, names)
    d = names.fresh("d")
    return conj([phi_f, phi_g, Exists(d, divisible_atom(f, g, Var(d)))])


def build_const_def(v, supply: NameSupply | None = None) -> Formula:
    """exists f with v^2 = f^5 + 1; over a ring whose constants are C this cuts out the constants."""
    v = as_term(v)
    names = _supply(supply, v)
    f = Var(names.fresh("f"))
    f5 = Mul(Mul(Mul(Mul(f, f), f), f), f)
    return Exists(f.name, Eq(Mul(v, v), Add(f5, ONE)))


def translate(c: Constraint, supply: NameSupply) -> Formula:
    if isinstance(c, ConstEq):
        return build_val(Var(c.v), numeral(c.c), supply)
    if isinstance(c, AddEq):
        return build_val(Add(Var(c.a), Var(c.b)), Var(c.v), supply)
    if isinstance(c, MulEq):
        return build_val(Mul(Var(c.a), Var(c.b)), Var(c.v), supply)
    if isinstance(c, VarEq):
        return build_val(Var(c.v), Var(c.w), supply)
    raise TypeError(f"not a constraint: {c!r}")


@dataclass(frozen=True)
class Compiled:
    """A compiled sentence together with the bookkeeping needed to read witnesses."""

    sentence: Formula
    system: DioSystem
    constraints: tuple[Constraint, ...]
    slots: tuple[str, ...]  # the outer existential block: originals, then fresh

    def __str__(self) -> str:
        return str(self.sentence)


def compile_system(sysm: DioSystem) -> Compiled:
    constraints = normalize_dio(sysm)
    slots = constraint_variables(sysm, constraints)
    supply = NameSupply(slots)
    parts = [build_phi(Var(v), supply) for v in slots]
    parts += [translate(c, supply) for c in constraints]
    sentence = exists_all(slots, conj(parts))
    return Compiled(sentence, sysm, tuple(constraints), tuple(slots))


def compile_interpretation(sysm: DioSystem) -> Formula:
    """The L_z sentence that holds over Z[z] (and the larger rings) iff sysm has a Z-solution."""
    return compile_system(sysm).sentence


def check_unique_binders(f: Formula) -> bool:
    """Whether every quantifier binds a distinct name."""
    seen: list[str] = []

    def walk(n):
        if isinstance(n, Exists):
            seen.append(n.var)
            walk(n.body)
        elif hasattr(n, "left") and isinstance(n, Formula):
            walk(n.left)
            walk(n.right)

    walk(f)
    return len(seen) == len(set(seen))
