"""Positive-existential formulas over {0, 1, z, +, *, =}, the compiler from
Diophantine systems and a bounded model checker over Z[z]."""

from .checker import Bounds, Witness, eval_formula, holds_with, witness_search
from .compiler import (
    Compiled,
    build_const_def,
    build_phi,
    build_val,
    compile_interpretation,
    compile_system,
)
from .dio import DioSystem, normalize_dio, parse_dio
from .formula import (
    Add,
    And,
    Eq,
    Exists,
    Formula,
    Mul,
    One,
    Or,
    Term,
    Var,
    Zero,
    ZVar,
    numeral,
    parse_sexpr,
    substitute,
    to_sexpr,
)

__all__ = [
    "Add", "And", "Bounds", "Compiled", "DioSystem", "Eq", "Exists", "Formula", "Mul",
    "One", "Or", "Term", "Var", "Witness", "ZVar", "Zero", "build_const_def", "build_phi",
    "build_val", "compile_interpretation", "compile_system", "eval_formula", "holds_with",
    "normalize_dio", "numeral", "parse_dio", "parse_sexpr", "substitute", "to_sexpr",
    "witness_search",
]
