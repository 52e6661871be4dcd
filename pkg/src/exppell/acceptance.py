"""The acceptance criteria as runnable checks.

Each criterion returns a Result; it passes only if every check succeeds and
the wall time stays under its limit. All randomness is seeded, so runs are
deterministic for a fixed Config.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

import numpy as np

from .algebra import ExpPoly, ExtElem, GRat, Poly
from .algebra.poly import PELL_D
from .config import Config
from .deps import apply_relation, descent_trace, int_basis_modconst, qdep_modconst, strip_const
from .logic import Bounds, build_phi, compile_system, holds_with, parse_dio, witness_search
from .logic.dio import first_integer_solution
from .pell import pell_compose, pell_pair, pell_recognize, pell_verify, signed
from .surface import bc_constant, check_growth_lemma, circle_stats, w_function

SEED = 20240601


@dataclass(frozen=True)
class Result:
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<28} {self.seconds:7.2f}s / {self.limit:g}s  {self.detail}"


class _Checks:
    def __init__(self):
        self.failures: list[str] = []
        self.count = 0

    def expect(self, cond: bool, what: str) -> None:
        self.count += 1
        if not cond:
            self.failures.append(what)

    def summary(self) -> str:
        if not self.failures:
            return f"{self.count} checks"
        return f"{len(self.failures)}/{self.count} failed: " + "; ".join(self.failures[:3])


def _timed(name: str, limit: float, body: Callable[[_Checks], str | None]) -> Result:
    checks = _Checks()
    t0 = time.perf_counter()
    try:
        extra = body(checks)
    except Exception as e:  # a crash is a failure, reported rather than raised
        checks.failures.append(f"{type(e).__name__}: {e}")
        extra = None
    dt = time.perf_counter() - t0
    detail = checks.summary() + (f"; {extra}" if extra else "")
    if dt >= limit:
        detail += f"; over the {limit:g}s limit"
    return Result(name, not checks.failures and dt < limit, detail, dt, limit)


# -- 1. Pell ---------------------------------------------------------------------


def criterion_pell(config: Config | None = None) -> Result:
    def body(c: _Checks):
        for n in range(-50, 51):
            s = pell_pair(n)
            c.expect(pell_verify(s.x, s.y), f"norm of index {n}")
            c.expect(s.y(1) == n and s.x(1) == 1, f"values at 1 for index {n}")
            if n:
                c.expect(s.x.degree == abs(n), f"deg x_{n}")
            c.expect(pell_recognize(s.x, s.y) == (1, n), f"recognize index {n}")
        rng = random.Random(SEED)
        for _ in range(200):
            a, b = rng.randint(-20, 20), rng.randint(-20, 20)
            sa, sb = rng.choice((1, -1)), rng.choice((1, -1))
            prod = pell_compose(signed(pell_pair(a), sa), signed(pell_pair(b), sb))
            c.expect(pell_recognize(prod.x, prod.y) == (sa * sb, a + b), f"group law {a}+{b}")

    return _timed("pell suite", 5.0, body)


# -- 2. norm and conjugation ---------------------------------------------------------


def _random_exppoly(rng: random.Random) -> ExpPoly:
    def small_poly(deg):
        return Poly.from_list([rng.randint(-3, 3) for _ in range(deg + 1)])

    out = ExpPoly.from_poly(small_poly(rng.randint(0, 2)))
    if rng.random() < 0.5:
        q = Poly.from_list([0] + [rng.randint(-2, 2) for _ in range(rng.randint(1, 2))])
        out = out + ExpPoly.exp(q, small_poly(rng.randint(0, 1)))
    return out


def random_ext(rng: random.Random) -> ExtElem:
    return ExtElem(_random_exppoly(rng), _random_exppoly(rng))


def criterion_norm(config: Config | None = None) -> Result:
    def body(c: _Checks):
        u = ExtElem.fundamental_unit()
        for n in range(-20, 21):
            c.expect((u**n).norm() == ExpPoly.from_poly(1), f"Nr((z+w)^{n})")
        rng = random.Random(SEED + 1)
        for k in range(100):
            a, b = random_ext(rng), random_ext(rng)
            c.expect((a * b).norm() == a.norm() * b.norm(), f"multiplicativity #{k}")
            c.expect((a * b).conj() == a.conj() * b.conj(), f"conj of product #{k}")
            c.expect((a + b).conj() == a.conj() + b.conj(), f"conj of sum #{k}")
            c.expect(a.conj().conj() == a, f"conj involution #{k}")
            c.expect(a * a.conj() == ExtElem(a.norm(), 0), f"a * conj(a) #{k}")

    return _timed("norm/kernel suite", 5.0, body)


# -- 3. growth constants ---------------------------------------------------------------


def criterion_growth(config: Config | None = None) -> Result:
    config = config or Config()

    def body(c: _Checks):
        C = bc_constant(2, 75, 147)
        c.expect(abs(C - 5.0) <= 4 * np.finfo(float).eps * 5.0, f"C_2(75,147) = {C!r}")
        for rho in (1, 2, 10, 74):
            M = circle_stats(w_function, 0, rho, config.samples).M
            c.expect(abs(M - math.sqrt(rho * rho + 1)) <= config.tolerance, f"M(w,{rho}) = {M}")
        for h in ("0", "1", "z", "z^2", "z^3"):
            for r in (74, 100, 200):
                rep = check_growth_lemma(Poly.parse(h), r, config.samples)
                c.expect(rep.holds, f"growth lemma h={h} r={r}: {rep.left} > {rep.right}")

    return _timed("growth constants", 30.0, body)


# -- 4. dependence oracle ------------------------------------------------------------------


def _stripped_vector(p: Poly, degree: int) -> list[int]:
    out = []
    for k in range(1, degree + 1):
        c = p.coeff(k)
        out += [int(c.re), int(c.im)]
    return out


def brute_force_relations(bs: list[Poly], bound: int, degree: int = 4) -> list[tuple[int, ...]]:
    """Every nonzero integer vector in [-bound, bound]^k with sum(lam * b) constant."""
    k = len(bs)
    M = np.array([_stripped_vector(b, degree) for b in bs], dtype=np.int64)
    lams = np.array(list(product(range(-bound, bound + 1), repeat=k)), dtype=np.int64)
    lams = lams[np.any(lams != 0, axis=1)]
    hits = lams[np.all(lams @ M == 0, axis=1)]
    return [tuple(int(x) for x in row) for row in hits]


def _rank(vectors: list) -> int:
    if not vectors:
        return 0
    m = [[Fraction(x) for x in v] for v in vectors]
    rank, cols = 0, len(m[0])
    for col in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def planted_instance(rng: random.Random) -> list[Poly]:
    """Up to five Z[i]-polynomials of degree <= 4, some of them small combinations of others."""

    def rand_poly():
        return Poly({k: GRat(rng.randint(-9, 9), rng.randint(-9, 9)) for k in range(rng.randint(0, 4) + 1)})

    k = rng.randint(1, 5)
    base = rng.randint(1, k)
    bs = [rand_poly() for _ in range(base)]
    while len(bs) < k:
        combo = Poly.const(rng.randint(-5, 5))
        for b in bs[:base]:
            combo = combo + b * rng.randint(-2, 2)
        bs.append(combo)
    rng.shuffle(bs)
    return bs


def criterion_deps(config: Config | None = None) -> Result:
    def body(c: _Checks):
        rng = random.Random(SEED + 2)
        for t in range(100):
            bs = planted_instance(rng)
            basis = qdep_modconst(bs)
            for lam in basis:
                c.expect(apply_relation(lam, bs).degree <= 0, f"instance {t}: basis vector is no relation")
            oracle = brute_force_relations(bs, 2)
            c.expect(_rank(oracle) == len(basis), f"instance {t}: rank {_rank(oracle)} vs {len(basis)}")
            c.expect(_rank(list(basis) + oracle) == len(basis), f"instance {t}: oracle outside span")
            cert = int_basis_modconst(bs)
            c.expect(cert.verify() and len(cert.basis) == len(bs) - len(basis),
                     f"instance {t}: integer basis certificate")
            chain = descent_trace(bs)
            sizes = [len(bs)] + [len(x.basis) for x in chain]
            c.expect(all(a > b for a, b in zip(sizes, sizes[1:])), f"instance {t}: descent sizes {sizes}")
            c.expect(all(x.verify() for x in chain), f"instance {t}: descent certificate")
            final = chain[-1].basis if chain else tuple(strip_const(b) for b in bs)
            c.expect(not qdep_modconst(list(final)), f"instance {t}: descent end not independent")

    return _timed("dependence oracle", 10.0, body)


# -- 5. reduction round trip -------------------------------------------------------


@dataclass(frozen=True)
class GoldenCase:
    text: str
    degree: int
    height: int
    expect_witness: bool
    integer_solvable: bool
    note: str = ""


# Witness slots for a value n need the Pell pair of index |n| in the box; at
# degree 4 and height 10 that means every intermediate value lies in [-4, 4].
GOLDEN = (
    GoldenCase("X*X = 4", 4, 10, True, True),
    GoldenCase("X+Y=3; X*Y=2", 4, 10, True, True),
    GoldenCase("X^2 + Y^2 = 25", 4, 10, False, True, "needs the value 25, outside the box"),
    GoldenCase("2*X = 1", 4, 10, False, False, "parity"),
    GoldenCase("X^2 = 2", 4, 10, False, False, "2 is not a square"),
    GoldenCase("X = 0", 0, 1, True, True),
    GoldenCase("X + 1 = 0", 4, 10, True, True),
    GoldenCase("X*Y = 3; X + Y = 4", 4, 10, True, True),
    GoldenCase("X - Y = 1; X*Y = 2", 4, 10, True, True),
    GoldenCase("X^2 + 1 = 0", 4, 10, False, False, "squares are nonnegative"),
    GoldenCase("X^2 = Y; Y = 4", 4, 10, True, True),
    GoldenCase("3*X = 2", 4, 10, False, False, "3 does not divide 2"),
    GoldenCase("X*X = 2*Y + 1; Y = 0", 4, 10, True, True),
    GoldenCase("X^3 = 8", 4, 10, False, True, "needs the value 8, outside the box"),
)


def run_golden_case(case: GoldenCase, budget: int = 1_000_000) -> tuple[bool, str]:
    sysm = parse_dio(case.text)
    compiled = compile_system(sysm)
    w = witness_search(compiled.sentence, Bounds(case.degree, case.height, budget))
    oracle = first_integer_solution(sysm, 100)
    problems = []
    if (w is not None) != case.expect_witness:
        problems.append(f"witness {'found' if w else 'missing'}")
    if (oracle is not None) != case.integer_solvable:
        problems.append("integer oracle disagrees")
    if w is not None:
        values = w.at_one()
        if not sysm.holds({v: values[v] for v in sysm.variables}):
            problems.append(f"slots at 1 {values} do not solve the system")
        if not holds_with(compiled.sentence, {**w.values, **w.auxiliary}):
            problems.append("witness does not re-evaluate")
    summary = "ok" if not problems else ", ".join(problems)
    return not problems, summary


def criterion_reduction(config: Config | None = None) -> Result:
    config = config or Config()

    def body(c: _Checks):
        for case in GOLDEN:
            ok, why = run_golden_case(case, config.budget)
            c.expect(ok, f"{case.text!r}: {why}")
        return f"{len(GOLDEN)} systems"

    return _timed("reduction round trip", 60.0, body)


# -- 6. explicit membership witnesses ------------------------------------------------------


def membership_witness(n: int) -> dict[str, Poly]:
    """h = x_n, g = y_n and u = (n - y_n) / (z - 1) for T = n."""
    s = pell_pair(n)
    u = (Poly.const(n) - s.y).exact_div(Poly.from_list([-1, 1]))
    return {"T": Poly.const(n), "h": s.x, "g": s.y, "u": u}


def criterion_explicit(config: Config | None = None) -> Result:
    def body(c: _Checks):
        phi = build_phi("T")
        for n in (0, 1, -1, 2, -2, 3):
            values = membership_witness(n)
            c.expect(values["u"].is_integer(), f"u for {n} not integral")
            c.expect(values["h"] ** 2 - PELL_D * values["g"] ** 2 == 1, f"Pell pair for {n}")
            c.expect(holds_with(phi, values), f"phi(T) at T={n}")

    return _timed("explicit witnesses", 2.0, body)


CRITERIA = (
    criterion_pell,
    criterion_norm,
    criterion_growth,
    criterion_deps,
    criterion_reduction,
    criterion_explicit,
)


def run_all(config: Config | None = None) -> list[Result]:
    return [crit(config) for crit in CRITERIA]
