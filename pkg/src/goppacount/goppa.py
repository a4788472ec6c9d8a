"""Irreducible binary Goppa codes with support GF(2^n) and their parity extensions."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from . import _upoly
from .errors import CapacityError
from .gf2 import FieldCtx, embedding, field_new
from .pgl import enumerate_pgl
from .polyring import Poly, is_irreducible, poly_xgcd

DEFAULT_WEIGHT_CAP = 24


class GoppaSpecError(ValueError):
    pass


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code; word bit i is coordinate i."""

    length: int
    basis: tuple[int, ...]

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("length must be positive")
        if any(w >> self.length for w in self.basis):
            raise ValueError("basis word longer than the code")
        if gf2_rank(list(self.basis)) != len(self.basis):
            raise ValueError("basis rows are dependent")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, word: int) -> bool:
        return gf2_rank(list(self.basis) + [word]) == self.dimension


def gf2_rank(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of {c : <row, c> = 0 for all rows}, rows given as column bitmasks."""
    reduced: list[tuple[int, int]] = []  # (pivot column, row), fully reduced
    for row in rows:
        for col, prow in reduced:
            if row >> col & 1:
                row ^= prow
        if not row:
            continue
        col = (row & -row).bit_length() - 1
        reduced = [(c, pr ^ row if pr >> col & 1 else pr) for c, pr in reduced]
        reduced.append((col, row))
    pivot_cols = {c for c, _ in reduced}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        word = 1 << free
        for col, prow in reduced:
            if prow >> free & 1:
                word |= 1 << col
        basis.append(word)
    return basis


@dataclass(frozen=True)
class GoppaSpec:
    n: int
    r: int
    g: Poly
    alpha: int  # element of GF(2^(n r))
    support: tuple[int, ...]  # elements of GF(2^n)

    def __post_init__(self):
        if self.g.degree != self.r or not self.g.is_monic():
            raise GoppaSpecError("g must be monic of degree r")
        if len(set(self.support)) != len(self.support):
            raise GoppaSpecError("support has repeated elements")
        big = extension_field(self.n, self.r)
        emb = embedding(self.g.ctx, big)
        if _upoly.evaluate(big, [emb(c) for c in self.g.coeffs], self.alpha):
            raise GoppaSpecError("alpha is not a root of g")


def extension_field(n: int, r: int) -> FieldCtx:
    return field_new(n * r)


def roots_in_extension(g: Poly) -> list[int]:
    """All roots of an irreducible g over GF(q) inside GF(q^r), ascending."""
    ctx = g.ctx
    r = g.degree
    big = extension_field(ctx.m, r)
    emb = embedding(ctx, big)
    rho = _upoly.split_root(big, [emb(c) for c in g.coeffs])
    roots = {rho}
    y = big.frobenius(rho, ctx.m)
    while y != rho:
        roots.add(y)
        y = big.frobenius(y, ctx.m)
    if len(roots) != r:
        raise GoppaSpecError(f"{g.text} is not irreducible of degree {r}")
    return sorted(roots)


def minimal_polynomial(ctx: FieldCtx, r: int, beta: int) -> Poly:
    big = extension_field(ctx.m, r)
    emb = embedding(ctx, big)
    orbit = [beta]
    y = big.frobenius(beta, ctx.m)
    while y != beta:
        orbit.append(y)
        y = big.frobenius(y, ctx.m)
    mp = [1]
    for root in orbit:
        mp = _upoly.mul(big, mp, [root, 1])
    coeffs = [emb.preimage(c) for c in mp]
    if any(c is None for c in coeffs):
        raise GoppaSpecError("minimal polynomial left GF(q)")
    return Poly(ctx, tuple(coeffs))


def goppa_spec(g: Poly, alpha: int | None = None, support: tuple[int, ...] | None = None) -> GoppaSpec:
    """Spec with the least root of g unless one is given, support in canonical order."""
    if not is_irreducible(g):
        raise GoppaSpecError(f"{g.text} is not irreducible")
    ctx = g.ctx
    if alpha is None:
        alpha = roots_in_extension(g)[0]
    return GoppaSpec(ctx.m, g.degree, g, alpha, support or tuple(range(ctx.order)))


def parity_rows(alpha: int, n: int, r: int, support: tuple[int, ...]) -> list[int]:
    """The n r binary rows of H(alpha); entry i of row j is bit j of 1/(alpha - L_i)."""
    big = extension_field(n, r)
    emb = embedding(field_new(n), big)
    cols = [big.inv(alpha ^ emb(a)) for a in support]
    rows = []
    for j in range(n * r):
        row = 0
        for i, c in enumerate(cols):
            if c >> j & 1:
                row |= 1 << i
        rows.append(row)
    return rows


def code_from_root(alpha: int, n: int, r: int, support: tuple[int, ...] | None = None) -> BinaryCode:
    support = support or tuple(range(2**n))
    return BinaryCode(len(support), tuple(nullspace(parity_rows(alpha, n, r, support), len(support))))


def build_goppa(spec: GoppaSpec) -> BinaryCode:
    return code_from_root(spec.alpha, spec.n, spec.r, spec.support)


def syndrome(spec: GoppaSpec, word: int) -> Poly:
    """sum_i c_i / (x - L_i) reduced mod g, computed over GF(q)[x]."""
    ctx = spec.g.ctx
    acc = Poly(ctx, ())
    for i, a in enumerate(spec.support):
        if word >> i & 1:
            h, s, _ = poly_xgcd(Poly(ctx, (a, 1)), spec.g)
            if h.degree != 0:
                raise GoppaSpecError("g vanishes on the support")
            acc = acc + s
    return acc % spec.g


def extend(code: BinaryCode) -> BinaryCode:
    n = code.length
    return BinaryCode(n + 1, tuple(w | (w.bit_count() & 1) << n for w in code.basis))


def weight_enumerator(code: BinaryCode, cap: int = DEFAULT_WEIGHT_CAP) -> list[tuple[int, int]]:
    """Weight histogram of every codeword, walked in Gray-code order."""
    k = code.dimension
    if k > cap:
        raise CapacityError("code dimension for weight enumeration", k, cap)
    hist = Counter({0: 1})
    word = 0
    basis = code.basis
    for i in range(1, 1 << k):
        word ^= basis[(i & -i).bit_length() - 1]
        hist[word.bit_count()] += 1
    return sorted(hist.items())


def minimum_distance(enumerator: list[tuple[int, int]]) -> int | None:
    nonzero = [w for w, c in enumerator if w and c]
    return min(nonzero) if nonzero else None


def random_root(ctx: FieldCtx, r: int, rng: random.Random) -> int:
    """A uniformly random element of GF(q^r) whose degree over GF(q) is r."""
    big = extension_field(ctx.m, r)
    while True:
        a = rng.randrange(2, big.order)
        y = big.frobenius(a, ctx.m)
        k = 1
        while y != a:
            y = big.frobenius(y, ctx.m)
            k += 1
        if k == r:
            return a


def transport(alpha: int, n: int, r: int, A, i: int) -> int:
    """(a alpha^(2^i) + b) / (c alpha^(2^i) + d) inside GF(2^(n r))."""
    big = extension_field(n, r)
    emb = embedding(A.ctx, big)
    return A.apply_point(big.frobenius(alpha, i), field=big, emb=emb)


def equivalence_invariant_check(n: int, r: int, trials: int, seed: int, cap: int = DEFAULT_WEIGHT_CAP) -> dict:
    """Extended codes of alpha and of a random semilinear image of alpha share a weight enumerator."""
    ctx = field_new(n)
    rng = random.Random(seed)
    group = list(enumerate_pgl(ctx))
    rows = []
    for _ in range(trials):
        alpha = random_root(ctx, r, rng)
        A = rng.choice(group)
        i = rng.randrange(n * r)
        beta = transport(alpha, n, r, A, i)
        wa = weight_enumerator(extend(code_from_root(alpha, n, r)), cap)
        wb = weight_enumerator(extend(code_from_root(beta, n, r)), cap)
        rows.append(
            {
                "alpha": alpha,
                "matrix": A.text,
                "frobenius": i,
                "beta": beta,
                "equal": wa == wb,
                "weights": wa,
            }
        )
    return {"n": n, "r": r, "trials": rows, "all_equal": all(t["equal"] for t in rows)}


def permutation_invariance_check(spec: GoppaSpec, seed: int, cap: int = DEFAULT_WEIGHT_CAP) -> bool:
    rng = random.Random(seed)
    perm = list(spec.support)
    rng.shuffle(perm)
    base = weight_enumerator(build_goppa(spec), cap)
    other = weight_enumerator(code_from_root(spec.alpha, spec.n, spec.r, tuple(perm)), cap)
    return base == other


def goppa_report(spec: GoppaSpec, extended: bool, weights: bool, cap: int = DEFAULT_WEIGHT_CAP) -> dict:
    code = build_goppa(spec)
    if extended:
        code = extend(code)
    out = {
        "n": spec.n,
        "r": spec.r,
        "g": spec.g.text,
        "alpha": spec.alpha,
        "extended": extended,
        "length": code.length,
        "dimension": code.dimension,
    }
    if weights:
        enum = weight_enumerator(code, cap)
        out["weights"] = [[w, c] for w, c in enum]
        out["minimum_distance"] = minimum_distance(enum)
        # informational only; never asserted
        out["classical_distance_bound"] = 2 * spec.r + 1
    return out


__all__ = [
    "BinaryCode",
    "GoppaSpec",
    "GoppaSpecError",
    "build_goppa",
    "code_from_root",
    "equivalence_invariant_check",
    "extend",
    "goppa_report",
    "goppa_spec",
    "minimal_polynomial",
    "minimum_distance",
    "nullspace",
    "parity_rows",
    "permutation_invariance_check",
    "roots_in_extension",
    "syndrome",
    "transport",
    "weight_enumerator",
]
