"""PGL(2, q) and its semilinear extension acting on polynomials over GF(q).

A :class:`ProjMat` is stored in canonical form: the first nonzero entry of
(a, b, c, d) is 1, which picks one representative per scalar class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import _upoly
from .errors import StructuralLawError
from .gf2 import FieldCtx, embedding, field_new
from .polyring import Poly, frobenius_on_poly


class SingularMatrixError(ValueError):
    pass


def _canonical(ctx: FieldCtx, a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    lead = a or b or c or d
    if lead == 1:
        return a, b, c, d
    s = ctx.inv(lead)
    m = ctx.mul
    return m(a, s), m(b, s), m(c, s), m(d, s)


@dataclass(frozen=True)
class ProjMat:
    ctx: FieldCtx
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        ctx = self.ctx
        if ctx.mul(self.a, self.d) == ctx.mul(self.b, self.c):
            raise SingularMatrixError(f"singular matrix {self.text}")
        a, b, c, d = _canonical(ctx, self.a, self.b, self.c, self.d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "ProjMat":
        return cls(ctx, 1, 0, 0, 1)

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str) -> "ProjMat":
        a, b, c, d = (int(t, 0) for t in text.split(";"))
        return cls(ctx, a, b, c, d)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    @property
    def text(self) -> str:
        return f"{self.a};{self.b};{self.c};{self.d}"

    @property
    def key(self) -> int:
        n = self.ctx.m
        return (((self.a << n | self.b) << n | self.c) << n) | self.d

    def det(self) -> int:
        return self.ctx.mul(self.a, self.d) ^ self.ctx.mul(self.b, self.c)

    def __mul__(self, other: "ProjMat") -> "ProjMat":
        return mat_mul(self, other)

    def __pow__(self, e: int) -> "ProjMat":
        if e < 0:
            return mat_inv(self) ** (-e)
        out = ProjMat.identity(self.ctx)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def inv(self) -> "ProjMat":
        return mat_inv(self)

    def transpose(self) -> "ProjMat":
        return ProjMat(self.ctx, self.a, self.c, self.b, self.d)

    def frobenius(self, i: int) -> "ProjMat":
        f = self.ctx.frobenius
        return ProjMat(self.ctx, f(self.a, i), f(self.b, i), f(self.c, i), f(self.d, i))

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def order(self) -> int:
        """Order in PGL by repeated multiplication (at most q + 1 steps)."""
        k = 1
        m = self
        while not m.is_identity():
            m = m * self
            k += 1
            if k > self.ctx.order + 1:
                raise StructuralLawError(f"{self.text} has no order <= q+1")
        return k

    def apply_point(self, x: int, field: FieldCtx | None = None, emb=None) -> int | None:
        """Fractional linear map x -> (a x + b)/(c x + d); None encodes infinity."""
        ctx = field or self.ctx
        e = emb or (lambda v: v)
        num = ctx.mul(e(self.a), x) ^ e(self.b)
        den = ctx.mul(e(self.c), x) ^ e(self.d)
        if not den:
            return None
        return ctx.div(num, den)


def mat_mul(A: ProjMat, B: ProjMat) -> ProjMat:
    if A.ctx != B.ctx:
        raise ValueError("matrices over different fields")
    m = A.ctx.mul
    return ProjMat(
        A.ctx,
        m(A.a, B.a) ^ m(A.b, B.c),
        m(A.a, B.b) ^ m(A.b, B.d),
        m(A.c, B.a) ^ m(A.d, B.c),
        m(A.c, B.b) ^ m(A.d, B.d),
    )


def mat_inv(A: ProjMat) -> ProjMat:
    # The adjugate is an inverse up to the scalar det; signs vanish in char 2.
    return ProjMat(A.ctx, A.d, A.b, A.c, A.a)


@dataclass(frozen=True)
class SemiLinear:
    """A PGL element composed with a Frobenius power: x -> A(sigma^frob x).

    ``period`` is the order of the Frobenius on the ambient field GF(q^r),
    that is r*n; exponents are kept in [0, period).
    """

    mat: ProjMat
    frob: int
    period: int

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        object.__setattr__(self, "frob", self.frob % self.period)

    @classmethod
    def identity(cls, ctx: FieldCtx, period: int) -> "SemiLinear":
        return cls(ProjMat.identity(ctx), 0, period)

    def __mul__(self, other: "SemiLinear") -> "SemiLinear":
        if self.period != other.period:
            raise ValueError("semilinear maps with different periods")
        return SemiLinear(self.mat * other.mat.frobenius(self.frob), self.frob + other.frob, self.period)


# ---------------------------------------------------------------------------
# Actions on polynomials


def _binomial_powers(ctx: FieldCtx, lin: list[int], r: int) -> list[list[int]]:
    out = [[1]]
    for _ in range(r):
        out.append(_upoly.mul(ctx, out[-1], lin))
    return out


def _substitute(f: Poly, num: list[int], den: list[int], r: int) -> Poly:
    """monic(sum_i f_i num^i den^(r-i))."""
    ctx = f.ctx
    if f.degree != r:
        raise ValueError(f"expected a degree-{r} polynomial, got degree {f.degree}")
    np_ = _binomial_powers(ctx, num, r)
    dp = _binomial_powers(ctx, den, r)
    acc: list[int] = []
    for i, c in enumerate(f.coeffs):
        if c:
            acc = _upoly.add(acc, _upoly.scale(ctx, _upoly.mul(ctx, np_[i], dp[r - i]), c))
    if len(acc) - 1 != r:
        raise StructuralLawError(f"image of {f.text} dropped to degree {len(acc) - 1}")
    return Poly(ctx, tuple(_upoly.monic(ctx, acc)))


def act(A: ProjMat, f: Poly, r: int) -> Poly:
    """The polynomial whose roots are A(rho) = (a rho + b)/(c rho + d)."""
    return _substitute(f, [A.b, A.d], [A.a, A.c], r)


def act_circ(A: ProjMat, f: Poly, r: int) -> Poly:
    """monic((b x + d)^r f((a x + c)/(b x + d)))."""
    return _substitute(f, [A.c, A.a], [A.d, A.b], r)


def act_semilinear(g: SemiLinear, f: Poly, r: int) -> Poly:
    return act(g.mat, frobenius_on_poly(f, g.frob), r)


# ---------------------------------------------------------------------------
# Enumeration


def enumerate_pgl(ctx: FieldCtx) -> Iterator[ProjMat]:
    """Every canonical element once, ordered by (a, b, c, d)."""
    q = ctx.order
    m = ctx.mul
    for c in range(1, q):
        for d in range(q):
            yield ProjMat(ctx, 0, 1, c, d)
    for b in range(q):
        for c in range(q):
            bc = m(b, c)
            for d in range(q):
                if d != bc:
                    yield ProjMat(ctx, 1, b, c, d)


def pgl_order(q: int) -> int:
    return q * (q * q - 1)


def standard_generators(ctx: FieldCtx) -> list[ProjMat]:
    g = ctx.primitive_element()
    return [ProjMat(ctx, 1, 1, 0, 1), ProjMat(ctx, g, 0, 0, 1), ProjMat(ctx, 0, 1, 1, 0)]


def closure(gens: list[ProjMat]) -> set[ProjMat]:
    """Subgroup generated by ``gens`` (breadth-first)."""
    ctx = gens[0].ctx
    seen = {ProjMat.identity(ctx)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def binary_six(ctx: FieldCtx) -> dict[str, ProjMat]:
    """The six elements of PGL(2, 2) inside PGL(2, q)."""
    return {
        "A1": ProjMat(ctx, 1, 0, 0, 1),
        "A2": ProjMat(ctx, 0, 1, 1, 0),
        "A3": ProjMat(ctx, 1, 1, 0, 1),
        "A4": ProjMat(ctx, 1, 0, 1, 1),
        "A5": ProjMat(ctx, 1, 1, 1, 0),
        "A6": ProjMat(ctx, 0, 1, 1, 1),
    }


# ---------------------------------------------------------------------------
# Conjugacy classes


@dataclass(frozen=True)
class ConjClass:
    family: str  # identity | parabolic | diagonal | elliptic
    representative: ProjMat
    size: int
    order_in_pgl: int
    parameter: int | None = None  # a for diagonal, i for elliptic


def diagonal_parameters(ctx: FieldCtx) -> list[int]:
    """One of each inverse pair {a, 1/a} in GF(q)* minus 1, the smaller int."""
    return [a for a in range(2, ctx.order) if a < ctx.inv(a)]


@lru_cache(maxsize=None)
def conjugacy_classes(ctx: FieldCtx) -> tuple[ConjClass, ...]:
    q = ctx.order
    n = ctx.m
    classes = [
        ConjClass("identity", ProjMat.identity(ctx), 1, 1),
        ConjClass("parabolic", ProjMat(ctx, 1, 1, 0, 1), q * q - 1, 2),
    ]
    for a in diagonal_parameters(ctx):
        classes.append(
            ConjClass("diagonal", ProjMat(ctx, 1, 0, 0, a), q * (q + 1), ctx.element_order(a), a)
        )

    big = field_new(2 * n)
    emb = embedding(ctx, big)
    xi = big.primitive_element()
    step = big.pow(xi, q - 1)  # gamma_1
    step_ratio = big.pow(step, q - 1)  # gamma_1^(q-1)
    gamma = 1
    ratio = 1
    for i in range(1, q // 2 + 1):
        gamma = big.mul(gamma, step)
        ratio = big.mul(ratio, step_ratio)
        gq = big.frobenius(gamma, n)
        c = emb.preimage(big.mul(gamma, gq))
        d = emb.preimage(gamma ^ gq)
        if c is None or d is None:
            raise StructuralLawError(f"norm or trace of gamma_{i} is not in GF({q})")
        order = big.element_order(ratio, multiple=q + 1)
        classes.append(ConjClass("elliptic", ProjMat(ctx, 0, 1, c, d), q * (q - 1), order, i))
    return tuple(classes)


def conjugacy_table_rows(ctx: FieldCtx) -> list[dict]:
    return [
        {
            "family": cl.family,
            "representative": cl.representative.text,
            "size": cl.size,
            "order": cl.order_in_pgl,
        }
        for cl in conjugacy_classes(ctx)
    ]


def conjugates(A: ProjMat, group: list[ProjMat] | None = None) -> set[ProjMat]:
    """The conjugacy class of A by brute force over the whole group."""
    group = group if group is not None else list(enumerate_pgl(A.ctx))
    return {P * A * P.inv() for P in group}
