"""Q-linear dependence modulo constants among polynomials in Q(i)[z].

A list b_1..b_n is dependent modulo constants when some nonzero rational
vector lam makes sum(lam_k * b_k) a constant. Constants are discarded by
``strip_const``; what remains is a rational matrix whose rows are the
(degree >= 1, real/imaginary part) coordinates, lowest degree first, and
whose columns are the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .algebra import GRat, Poly

Vector = tuple[Fraction, ...]


def strip_const(p: Poly) -> Poly:
    return p.strip_const()


def _coordinates(bs: Sequence[Poly]) -> list[tuple[int, int]]:
    keys = set()
    for b in bs:
        for k, c in b.terms():
            if k == 0:
                continue
            if c.re:
                keys.add((k, 0))
            if c.im:
                keys.add((k, 1))
    return sorted(keys)


def _vector(p: Poly, coords: list[tuple[int, int]]) -> list[Fraction]:
    return [Fraction(p.coeff(k)[part]) for k, part in coords]


def coefficient_matrix(bs: Sequence[Poly]) -> tuple[list[list[Fraction]], list[tuple[int, int]]]:
    """Rows are coordinates, columns are the inputs."""
    coords = _coordinates(bs)
    cols = [_vector(b, coords) for b in bs]
    rows = [[cols[j][i] for j in range(len(bs))] for i in range(len(coords))]
    return rows, coords


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        m[r] = [v / piv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def primitive(v: Sequence[Fraction]) -> Vector:
    """Scale to coprime integers with the first nonzero entry positive."""
    den = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    first = next(x for x in ints if x)
    if first < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def qdep_modconst(bs: Sequence[Poly]) -> list[Vector]:
    """Basis of the rational relations sum(lam_k * b_k) = constant."""
    n = len(bs)
    if n == 0:
        return []
    rows, _ = coefficient_matrix([strip_const(b) for b in bs])
    reduced, pivots = _rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(primitive(v))
    return basis


def apply_relation(lam: Sequence[Fraction], bs: Sequence[Poly]) -> Poly:
    acc = Poly()
    for coef, b in zip(lam, bs):
        if coef:
            acc = acc + b * coef
    return acc


def axlw_independent(bs: Sequence[Poly]) -> bool:
    """Linear independence over Q modulo constants.

    By the Ax-Lindemann-Weierstrass theorem this is exactly the condition for
    exp(b_1), ..., exp(b_n) to be algebraically independent; only the linear
    algebra is computed here.
    """
    return not qdep_modconst(bs)


# -- integer bases ------------------------------------------------------------


def hermite_rows(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Row-style Hermite normal form of an integer matrix.

    Columns are pivoted left to right; within a column the row with the
    smallest nonzero absolute value (earliest row on ties) becomes the pivot.
    Pivots are positive and entries above a pivot are reduced into [0, pivot).
    Returns the nonzero rows and their pivot columns.
    """
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        while True:
            live = [i for i in range(r, len(m)) if m[i][c] != 0]
            if not live:
                break
            p = min(live, key=lambda i: (abs(m[i][c]), i))
            done = True
            for i in live:
                if i == p:
                    continue
                q = m[i][c] // m[p][c]
                m[i] = [a - q * b for a, b in zip(m[i], m[p])]
                if m[i][c] != 0:
                    done = False
            if done:
                break
        if not any(m[i][c] for i in range(r, len(m))):
            continue
        p = next(i for i in range(r, len(m)) if m[i][c] != 0)
        m[r], m[p] = m[p], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


@dataclass(frozen=True)
class DepCertificate:
    """Each input satisfies b_k = constants[k] + sum_j coords[k][j] * basis[j]."""

    inputs: tuple[Poly, ...]
    relations: tuple[Vector, ...]
    basis: tuple[Poly, ...]
    coords: tuple[tuple[int, ...], ...]
    constants: tuple[GRat, ...]
    eliminated: int | None = field(default=None)

    def reconstruct(self, k: int) -> Poly:
        acc = Poly.const(self.constants[k])
        for a, p in zip(self.coords[k], self.basis):
            if a:
                acc = acc + p * a
        return acc

    def verify(self) -> bool:
        if any(self.reconstruct(k) != b for k, b in enumerate(self.inputs)):
            return False
        if any(apply_relation(lam, self.inputs).degree > 0 for lam in self.relations):
            return False
        return True

    def to_json(self) -> dict:
        out = {
            "inputs": [str(b) for b in self.inputs],
            "relations": [[str(x) for x in lam] for lam in self.relations],
            "basis": [str(p) for p in self.basis],
            "coords": [list(row) for row in self.coords],
            "constants": [str(c) for c in self.constants],
        }
        if self.eliminated is not None:
            out["eliminated"] = self.eliminated
        return out


def int_basis_modconst(bs: Sequence[Poly]) -> DepCertificate:
    """A Z-basis of the lattice spanned by the inputs modulo constants."""
    bs = tuple(bs)
    relations = tuple(qdep_modconst(bs))
    constants = tuple(b.constant_term for b in bs)
    stripped = [strip_const(b) for b in bs]
    coords_idx = _coordinates(stripped)
    vecs = [_vector(b, coords_idx) for b in stripped]
    den = lcm(1, *(x.denominator for v in vecs for x in v))
    ints = [[int(x * den) for x in v] for v in vecs]
    hnf, pivots = hermite_rows(ints) if coords_idx else ([], [])
    basis = tuple(_poly_from_vector([Fraction(a, den) for a in row], coords_idx) for row in hnf)
    coords = []
    for v in ints:
        resid = list(v)
        alpha = []
        for row, p in zip(hnf, pivots):
            a, rem = divmod(resid[p], row[p])
            if rem:
                raise ArithmeticError("input outside the lattice; HNF is inconsistent")
            alpha.append(a)
            if a:
                resid = [x - a * y for x, y in zip(resid, row)]
        if any(resid):
            raise ArithmeticError("HNF basis does not reconstruct an input")
        coords.append(tuple(alpha))
    return DepCertificate(bs, relations, basis, tuple(coords), constants)


def _poly_from_vector(v: Sequence[Fraction], coords: list[tuple[int, int]]) -> Poly:
    c: dict[int, GRat] = {}
    for x, (k, part) in zip(v, coords):
        if x:
            g = GRat(x, 0) if part == 0 else GRat(0, x)
            c[k] = c.get(k, GRat()) + g
    return Poly(c)


def descent_trace(bs: Sequence[Poly]) -> list[DepCertificate]:
    """Eliminate one generator per step until the set is independent modulo constants.

    Each step takes the first relation lam, the last index N with lam_N != 0,
    writes b_N = c + sum_k (p_k / q) b_k with a common denominator q, and
    continues with the generators P_k = (b_k - const) / q, k != N, so that
    b_k = q * P_k and b_N = c + sum_k p_k * P_k with integer p_k.
    """
    chain: list[DepCertificate] = []
    current = tuple(bs)
    while True:
        relations = qdep_modconst(current)
        if not relations:
            return chain
        lam = relations[0]
        N = max(k for k, x in enumerate(lam) if x)
        keep = [k for k in range(len(current)) if k != N]
        ratios = [-lam[k] / lam[N] for k in keep]
        q = lcm(1, *(r.denominator for r in ratios))
        new = tuple(strip_const(current[k]) * Fraction(1, q) for k in keep)
        coords = []
        for k in range(len(current)):
            if k == N:
                coords.append(tuple(int(r * q) for r in ratios))
            else:
                row = [0] * len(keep)
                row[keep.index(k)] = q
                coords.append(tuple(row))
        cert = DepCertificate(
            current,
            tuple(relations),
            new,
            tuple(coords),
            tuple(b.constant_term for b in current),
            eliminated=N,
        )
        chain.append(cert)
        current = new
