"""Bounded model checking of positive-existential sentences over Z[z].

Existential witnesses range over integer polynomials of degree <= d with
coefficients in [-H, H]. A True answer is sound; False only means that no
witness exists inside the box.

The search is exhaustive but avoids blind enumeration where it can:

* every atom is kept as a residual polynomial in the still-unbound
  variables and is checked as soon as it becomes closed;
* an atom linear in its only unbound variable fixes that variable by exact
  division; a quadratic one offers at most two roots;
* an atom of the shape a^2 - (z^2 - 1) b^2 = 1 only admits the box's Pell
  pairs (+-x_n, y_n), which are all of its solutions in Z[z];
* variables that share no atom are solved independently;
* before enumerating a variable, the residual system is mapped to Z by
  p -> p(1) (a ring homomorphism) and the resulting integer constraint
  problem decides which values at 1 are still possible.

Variables are enumerated in quantifier order; candidates come in box order:
the zero polynomial, then degree-major, and within a degree lexicographic
from the leading coefficient down with coefficients ordered 0, 1, -1, 2, -2, ...
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, Iterator, Mapping

from ..algebra import PELL_D, Poly
from ..algebra.poly import ONE_POLY, ZERO_POLY, Z as Z_POLY
from ..errors import BudgetExceeded
from ..pell import pell_pairs_in_box
from .formula import Add, And, Eq, Exists, Formula, Mul, NameSupply, One, Or, Var, Zero, ZVar, free_vars
from .mpoly import MPoly

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class Bounds:
    degree: int
    height: int
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.degree < 0 or self.height < 0 or self.budget < 1:
            raise ValueError("bounds must be nonnegative and the budget positive")

    def contains(self, p: Poly) -> bool:
        return p.is_integer() and (not p or p.degree <= self.degree) and p.height() <= self.height


@dataclass(frozen=True)
class Witness:
    """Values for the outermost existential block, plus every inner binder."""

    values: dict[str, Poly]
    auxiliary: dict[str, Poly] = field(default_factory=dict)
    degree: int = 0
    height: int = 0

    def at_one(self) -> dict[str, int]:
        return {k: int(p(1).re) for k, p in self.values.items()}

    def to_json(self) -> dict:
        return {k: str(p) for k, p in self.values.items()}


def coefficient_order(height: int) -> list[int]:
    return [0] + [s * n for n in range(1, height + 1) for s in (1, -1)]


def box_key(p: Poly) -> tuple:
    """Sort key realising the box order."""
    if not p:
        return (-1,)
    return (p.degree,) + tuple((abs(int(c.re)), int(c.re) < 0) for c in reversed(p.dense()))


def _at_one(c) -> int:
    return c if isinstance(c, int) else int(c(1).re)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, str):
        return Poly.parse(x)
    return Poly.const(x)


# -- flattening ---------------------------------------------------------------


@dataclass
class _Branch:
    variables: list[str]  # internal names in quantifier order
    atoms: list[MPoly]
    origin: dict[str, str]  # internal name -> name in the formula
    dead: bool = False


def _term(t, env: Mapping[str, object]) -> MPoly:
    if isinstance(t, Zero):
        return MPoly()
    if isinstance(t, One):
        return MPoly.const(ONE_POLY)
    if isinstance(t, ZVar):
        return MPoly.const(Z_POLY)
    if isinstance(t, Var):
        bound = env[t.name]
        return MPoly.var(bound) if isinstance(bound, str) else MPoly.const(bound)
    if isinstance(t, Add):
        return _term(t.left, env) + _term(t.right, env)
    if isinstance(t, Mul):
        return _term(t.left, env) * _term(t.right, env)
    raise TypeError(f"not a term: {t!r}")


def _flatten(f: Formula, env: dict, supply: NameSupply) -> list[_Branch]:
    if isinstance(f, Eq):
        atom = _term(f.left, env) - _term(f.right, env)
        if atom.is_constant():
            return [_Branch([], [], {}, dead=bool(atom))]
        return [_Branch([], [atom], {})]
    if isinstance(f, And):
        out = []
        for a in _flatten(f.left, env, supply):
            for b in _flatten(f.right, env, supply):
                out.append(_Branch(a.variables + b.variables, a.atoms + b.atoms,
                                   {**a.origin, **b.origin}, a.dead or b.dead))
        return out
    if isinstance(f, Or):
        return _flatten(f.left, env, supply) + _flatten(f.right, env, supply)
    if isinstance(f, Exists):
        internal = supply.fresh(f.var)
        out = _flatten(f.body, {**env, f.var: internal}, supply)
        for b in out:
            b.variables.insert(0, internal)
            b.origin[internal] = f.var
        return out
    raise TypeError(f"not a formula: {f!r}")


def _outer_block(f: Formula) -> list[str]:
    names = []
    while isinstance(f, Exists):
        names.append(f.var)
        f = f.body
    return names


# -- the abstract problem over Z -----------------------------------------------


class _AbstractCSP:
    """Integer constraints sum(c * prod v^e) = 0 over finite domains.

    Propagation is interval based; independent groups of variables are solved separately,
    and every search node is charged to tick.
    """

    def __init__(self, atoms: list[MPoly], domains: dict[str, list[int]], tick=lambda: None):
        self.atoms = []
        for a in atoms:
            if a:
                self.atoms.append((sorted(a.variables()), a.compiled()))
        self.domains = domains
        self.tick = tick
        self.constrained = sorted({v for vs, _ in self.atoms for v in vs})
        # union-find over variables sharing an atom
        parent = {v: v for v in self.constrained}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for vs, _ in self.atoms:
            for w in vs[1:]:
                parent[find(w)] = find(vs[0])
        self.group = {v: find(v) for v in self.constrained}

    @staticmethod
    def _eval(terms, vals) -> int:
        acc = 0
        for m, c in terms:
            t = c
            for v, e in m:
                t *= vals[v] ** e
            acc += t
        return acc

    @staticmethod
    def _range(terms, box) -> tuple[int, int]:
        """Bounds of the atom over a box of (lo, hi) intervals."""
        lo_sum = hi_sum = 0
        for m, c in terms:
            lo = hi = c
            for v, e in m:
                a, b = box[v]
                if e % 2 == 0 and a < 0 < b:
                    pa, pb = 0, max(a ** e, b ** e)
                else:
                    pa, pb = sorted((a ** e, b ** e))
                cands = (lo * pa, lo * pb, hi * pa, hi * pb)
                lo, hi = min(cands), max(cands)
            lo_sum += lo
            hi_sum += hi
        return lo_sum, hi_sum

    def satisfiable(self, fixed: Mapping[str, int] | None = None) -> bool:
        doms = {v: self.domains[v] for v in self.constrained}
        touched = set()
        for v, x in (fixed or {}).items():
            if v in doms:
                if x not in doms[v]:
                    return False
                doms[v] = [x]
                touched.add(self.group[v])
        if fixed:
            # groups not containing a fixed variable are unchanged, so only those are rechecked
            if not self._propagate(doms):
                return False
            return all(self._search(doms, g) for g in sorted(touched))
        if not self._propagate(doms):
            return False
        return all(self._search(doms, g) for g in sorted(set(self.group.values())))

    def _propagate(self, doms: dict[str, list[int]]) -> bool:
        changed = True
        while changed:
            changed = False
            for vs, terms in self.atoms:
                open_ = [v for v in vs if len(doms[v]) != 1]
                if not open_:
                    if self._eval(terms, {v: doms[v][0] for v in vs}):
                        return False
                    continue
                if len(open_) == 1:
                    u = open_[0]
                    vals = {v: doms[v][0] for v in vs if v != u}
                    keep = []
                    for x in doms[u]:
                        vals[u] = x
                        if not self._eval(terms, vals):
                            keep.append(x)
                else:
                    box = {v: (doms[v][0], doms[v][-1]) for v in vs}
                    lo, hi = self._range(terms, box)
                    if lo > 0 or hi < 0:
                        return False
                    for u in open_:
                        keep = []
                        for x in doms[u]:
                            box[u] = (x, x)
                            lo, hi = self._range(terms, box)
                            if lo <= 0 <= hi:
                                keep.append(x)
                        box[u] = (keep[0], keep[-1]) if keep else box[u]
                        if len(keep) < len(doms[u]):
                            break
                    else:
                        continue
                if not keep:
                    return False
                if len(keep) < len(doms[u]):
                    doms[u] = keep
                    changed = True
        return True

    def _search(self, doms: dict[str, list[int]], group: str) -> bool:
        self.tick()
        if not self._propagate(doms):
            return False
        open_ = [v for v in self.constrained if self.group[v] == group and len(doms[v]) > 1]
        if not open_:
            return True
        v = min(open_, key=lambda x: len(doms[x]))
        for x in doms[v]:
            trial = dict(doms)
            trial[v] = [x]
            if self._search(trial, group):
                return True
        return False


# -- concrete search --------------------------------------------------------------


class _Search:
    def __init__(self, bounds: Bounds):
        self.bounds = bounds
        self.d, self.H = bounds.degree, bounds.height
        self.radius = (self.d + 1) * self.H
        self.spent = 0
        pairs = [(x, y) for x, y, _ in pell_pairs_in_box(self.d, self.H)]
        self.pell = sorted(pairs, key=lambda xy: (box_key(xy[0]), box_key(xy[1])))
        self.pell_h_values = sorted({int(x(1).re) for x, _ in self.pell})
        self.pell_g_values = sorted({int(y(1).re) for _, y in self.pell})
        self._pell_cache: dict[MPoly, tuple[str, str] | None] = {}

    def tick(self) -> None:
        self.spent += 1
        if self.spent > self.bounds.budget:
            raise BudgetExceeded(self.bounds.budget)

    # residual bookkeeping

    @staticmethod
    def _apply(atoms: list[MPoly], assignment: Mapping[str, Poly]) -> list[MPoly] | None:
        out = []
        for a in atoms:
            vs = a.variables()
            for v, p in assignment.items():
                if v in vs:
                    a = a.substitute(v, p)
            if a.is_constant():
                if a:
                    return None
            else:
                out.append(a)
        return out

    @staticmethod
    def _components(atoms: list[MPoly], variables: list[str]) -> list[tuple[list[str], list[MPoly]]]:
        parent = {v: v for v in variables}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a in atoms:
            vs = sorted(a.variables())
            for v in vs[1:]:
                ra, rb = find(vs[0]), find(v)
                if ra != rb:
                    parent[rb] = ra
        groups: dict[str, tuple[list[str], list[MPoly]]] = {}
        for v in variables:
            groups.setdefault(find(v), ([], []))[0].append(v)
        for a in atoms:
            groups[find(next(iter(a.variables())))][1].append(a)
        return list(groups.values())

    def solve(self, atoms: list[MPoly], variables: list[str]) -> dict[str, Poly] | None:
        result: dict[str, Poly] = {}
        for vs, group in self._components(atoms, variables):
            sub = self._solve_component(group, vs)
            if sub is None:
                return None
            result.update(sub)
        return result

    def _solve_component(self, atoms: list[MPoly], variables: list[str]) -> dict[str, Poly] | None:
        if not atoms:
            return {v: ZERO_POLY for v in variables}
        for assignment in self._choose(atoms, variables):
            self.tick()
            rest_atoms = self._apply(atoms, assignment)
            if rest_atoms is None:
                continue
            rest = [v for v in variables if v not in assignment]
            sub = self.solve(rest_atoms, rest)
            if sub is not None:
                return {**assignment, **sub}
        return None

    # candidate generation

    def _choose(self, atoms: list[MPoly], variables: list[str]) -> Iterable[dict[str, Poly]]:
        quadratic = None
        for a in atoms:
            vs = a.variables()
            if len(vs) != 1:
                continue
            (v,) = vs
            deg = a.degree_in(v)
            if deg == 1:
                cs = {k: _as_poly(c) for k, c in a.univariate(v).items()}
                root = self._linear_root(cs.get(0, ZERO_POLY), cs[1])
                return [] if root is None else [{v: root}]
            if deg == 2 and quadratic is None:
                quadratic = (v, a)
        if quadratic is not None:
            v, a = quadratic
            cs = {k: _as_poly(c) for k, c in a.univariate(v).items()}
            return [{v: r} for r in self._quadratic_roots(cs)]
        first = variables[0]
        for a in atoms:
            roles = self._pell_roles(a)
            if roles is not None and first in roles:
                h, g = roles
                return ({h: x, g: y} for x, y in self.pell)
        return self._enumerate(first, atoms, variables)

    def _admissible(self, p: Poly) -> Poly | None:
        return p if self.bounds.contains(p) else None

    def _linear_root(self, b: Poly, a: Poly) -> Poly | None:
        # a*v + b = 0
        if a.is_constant():
            return self._admissible(-b / a.constant_term)
        q, r = (-b).divmod(a)
        return None if r else self._admissible(q)

    def _quadratic_roots(self, cs: dict[int, Poly]) -> list[Poly]:
        a, b, c = cs[2], cs.get(1, ZERO_POLY), cs.get(0, ZERO_POLY)
        s = int_poly_sqrt(b * b - a * c * 4)
        if s is None:
            return []
        roots = set()
        for num in (-b + s, -b - s):
            q, r = num.divmod(a * 2)
            if not r and self.bounds.contains(q):
                roots.add(q)
        return sorted(roots, key=box_key)

    def _pell_roles(self, atom: MPoly) -> tuple[str, str] | None:
        if atom in self._pell_cache:
            return self._pell_cache[atom]
        roles = None
        vs = sorted(atom.variables())
        if len(vs) == 2 and len(atom.terms) <= 4 and atom.total_degree() == 2:
            for h, g in (vs, vs[::-1]):
                target = MPoly.var(h) * MPoly.var(h) - MPoly.var(g) * MPoly.var(g) * PELL_D - ONE_POLY
                target = target.map_coeffs(lambda c: c if isinstance(c, Poly) else Poly.const(c))
                if atom == target or atom == -target:
                    roles = (h, g)
                    break
        self._pell_cache[atom] = roles
        return roles

    def _abstract(self, atoms: list[MPoly], variables: list[str]) -> _AbstractCSP:
        span = list(range(-self.radius, self.radius + 1))
        domains = {v: span for v in variables}
        for a in atoms:
            roles = self._pell_roles(a)
            if roles is not None:
                h, g = roles
                domains[h] = [x for x in domains[h] if x in self.pell_h_values]
                domains[g] = [x for x in domains[g] if x in self.pell_g_values]
        at_one = [a.map_coeffs(_at_one) for a in atoms]
        return _AbstractCSP(at_one, domains, self.tick)

    def _enumerate(self, v: str, atoms: list[MPoly], variables: list[str]) -> Iterator[dict[str, Poly]]:
        csp = self._abstract(atoms, variables)
        if not csp.satisfiable():
            return
        cache: dict[int, bool] = {}

        def ok(x: int) -> bool:
            if x not in cache:
                cache[x] = csp.satisfiable({v: x})
            return cache[x]

        for c in coefficient_order(self.H):
            if ok(c):
                yield {v: Poly.const(c)}
        if self.d == 0:
            return
        allowed = [x for x in range(-self.radius, self.radius + 1) if ok(x)]
        if not allowed:
            return
        for deg in range(1, self.d + 1):
            for p in self._box_degree(deg, allowed):
                yield {v: p}

    def _box_degree(self, deg: int, allowed: list[int] | None) -> Iterator[Poly]:
        """Box polynomials of exact degree deg whose value at 1 lies in allowed (sorted)."""
        H = self.H
        order = coefficient_order(H)
        coeffs = [0] * (deg + 1)

        def reachable(s: int, slack: int) -> bool:
            if allowed is None:
                return True
            i = bisect_left(allowed, s - slack)
            return i < len(allowed) and allowed[i] <= s + slack

        def rec(k: int, partial: int) -> Iterator[Poly]:
            for c in order[1:] if k == deg else order:
                s = partial + c
                if not reachable(s, k * H):
                    continue
                coeffs[k] = c
                if k == 0:
                    yield Poly.from_list(coeffs)
                else:
                    yield from rec(k - 1, s)

        yield from rec(deg, 0)


def box_polys(degree: int, height: int) -> Iterator[Poly]:
    """Every polynomial of the box, in box order."""
    search = _Search(Bounds(degree, height))
    yield ZERO_POLY
    for c in coefficient_order(height)[1:]:
        yield Poly.const(c)
    for deg in range(1, degree + 1):
        yield from search._box_degree(deg, None)


def int_poly_sqrt(p: Poly) -> Poly | None:
    """The square root with positive leading coefficient of p in Z[z], if any."""
    if not p:
        return ZERO_POLY
    if not p.is_integer() or p.degree % 2:
        return None
    lead = int(p.leading.re)
    if lead < 0:
        return None
    r = isqrt(lead)
    if r * r != lead:
        return None
    m = p.degree // 2
    s = {m: r}
    for k in range(m - 1, -1, -1):
        cur = Poly(s)
        c = int((p - cur * cur).coeff(m + k).re)
        if c % (2 * r):
            return None
        s[k] = c // (2 * r)
    root = Poly(s)
    return root if root * root == p else None


# -- public API ------------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    found: bool
    assignment: dict[str, Poly]
    origin: dict[str, str]
    candidates: int


def _run(f: Formula, assignment: Mapping[str, object], bounds: Bounds) -> SearchResult:
    free = free_vars(f)
    missing = free - set(assignment)
    if missing:
        raise ValueError(f"unassigned free variables: {sorted(missing)}")
    env = {k: _as_poly(v) for k, v in assignment.items()}
    supply = NameSupply(env)
    search = _Search(bounds)
    for branch in _flatten(f, env, supply):
        if branch.dead:
            continue
        result = search.solve(branch.atoms, branch.variables)
        if result is not None:
            return SearchResult(True, result, branch.origin, search.spent)
    return SearchResult(False, {}, {}, search.spent)


def eval_formula(f: Formula, assignment: Mapping[str, object] | None = None,
                 bounds: Bounds | None = None) -> bool:
    """Truth of f over Z[z] with existentials searched inside the bounds."""
    return _run(f, assignment or {}, bounds or Bounds(2, 3)).found


def witness_search(f: Formula, bounds: Bounds) -> Witness | None:
    if free_vars(f):
        raise ValueError(f"not a sentence; free variables {sorted(free_vars(f))}")
    res = _run(f, {}, bounds)
    if not res.found:
        return None
    outer = _outer_block(f)
    values, aux = {}, {}
    for internal, p in res.assignment.items():
        name = res.origin[internal]
        if name in outer and internal == name:
            values[name] = p
        else:
            aux[internal] = p
    values = {n: values[n] for n in outer if n in values}
    return Witness(values, aux, bounds.degree, bounds.height)


def holds_with(f: Formula, values: Mapping[str, object]) -> bool:
    """Evaluate the matrix of f exactly, taking every variable (bound or free) from values.

    Quantifiers are read as binding the named value; binders must be distinct.
    """
    env = {k: _as_poly(v) for k, v in values.items()}

    def ev(g: Formula) -> bool:
        if isinstance(g, Eq):
            return not (_term(g.left, env) - _term(g.right, env))
        if isinstance(g, And):
            return ev(g.left) and ev(g.right)
        if isinstance(g, Or):
            return ev(g.left) or ev(g.right)
        if isinstance(g, Exists):
            return ev(g.body)
        raise TypeError(f"not a formula: {g!r}")

    return ev(f)
