"""Exact symmetric-function arithmetic in the Schur basis.

Expressions are finite integer combinations of Schur functions keyed by
integer partitions.  The outer product and skew use the
Littlewood-Richardson rule; the inner (symmetric-group) product and
plethysm route through the power-sum basis with exact rational
coefficients, converting back via character tables computed by the
Murnaghan-Nakayama recursion.  Everything is exact; no floats appear.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial

# Hard caps keep the memoized tables small: nothing in this package needs
# symmetric-group data beyond S_14.
KRONECKER_WEIGHT_LIMIT = 12
PLETHYSM_WEIGHT_LIMIT = 14
SERIES_WEIGHT_LIMIT = 12


def as_partition(parts):
    """Normalize ``parts`` to a tuple of weakly decreasing positive ints.

    Trailing zeros are stripped; anything else invalid raises ValueError.
    """
    t = tuple(int(p) for p in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    if any(p <= 0 for p in t):
        raise ValueError(f"partition parts must be positive: {parts!r}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
    return t


@lru_cache(maxsize=None)
def partitions(n, max_len=None, max_part=None):
    """All partitions of ``n`` as tuples, first part bounded by ``max_part``
    and length by ``max_len``; descending lexicographic order."""
    if n < 0:
        return ()
    cap = n if max_part is None else min(n, max_part)
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(prefix)
            return
        if max_len is not None and len(prefix) >= max_len:
            return
        for first in range(min(remaining, largest), 0, -1):
            rec(remaining - first, first, prefix + (first,))

    rec(n, cap, ())
    return tuple(out)


def zclass(rho):
    """Centralizer order of the conjugacy class with cycle type ``rho``."""
    z = 1
    mult = {}
    for k in rho:
        mult[k] = mult.get(k, 0) + 1
    for k, m in mult.items():
        z *= k ** m * factorial(m)
    return z


def _border_strips(lam, k):
    """Removable border strips of size ``k`` from ``lam``.

    Yields (smaller partition, strip height) via first-column hook lengths.
    """
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    present = set(beta)
    for b in beta:
        nb = b - k
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((c for c in beta if c != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        mu = tuple(newbeta[j] - (n - 1 - j) for j in range(n))
        mu = tuple(x for x in mu if x > 0)
        yield mu, height


@lru_cache(maxsize=None)
def character(lam, rho):
    """Symmetric-group character value on cycle type ``rho`` (Murnaghan-Nakayama)."""
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    total = 0
    for mu, height in _border_strips(lam, k):
        total += (-1) ** height * character(mu, rest)
    return total


class SchurExpr:
    """Finite integer linear combination of Schur functions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for lam, c in items:
                lam = as_partition(lam)
                if c != int(c):
                    raise ValueError(f"non-integer coefficient {c!r}")
                data[lam] = data.get(lam, 0) + int(c)
        self.terms = {k: v for k, v in data.items() if v}

    @classmethod
    def schur(cls, parts):
        e = cls()
        e.terms = {as_partition(parts): 1}
        return e

    @classmethod
    def zero(cls):
        return cls()

    def coefficient(self, parts):
        return self.terms.get(as_partition(parts), 0)

    def weights(self):
        return sorted({sum(lam) for lam in self.terms})

    def weight_part(self, n):
        e = SchurExpr()
        e.terms = {lam: c for lam, c in self.terms.items() if sum(lam) == n}
        return e

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SchurExpr) and self.terms == other.terms

    def __add__(self, other):
        e = SchurExpr()
        e.terms = dict(self.terms)
        for lam, c in other.terms.items():
            v = e.terms.get(lam, 0) + c
            if v:
                e.terms[lam] = v
            else:
                e.terms.pop(lam, None)
        return e

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        if scalar != int(scalar):
            raise ValueError("only integer scalars are supported")
        e = SchurExpr()
        if int(scalar):
            e.terms = {lam: int(scalar) * c for lam, c in self.terms.items()}
        return e

    def __mul__(self, other):
        if isinstance(other, SchurExpr):
            return outer(self, other)
        return self.__rmul__(other)

    def __repr__(self):
        return format_expr(self)


def S(*parts):
    """Shorthand constructor: ``S(2, 1)`` is the Schur function {2,1}."""
    return SchurExpr.schur(parts)


# ---------------------------------------------------------------------------
# Littlewood-Richardson product and skew

def _strip_chains(lam, mu):
    """Grow ``lam`` by horizontal strips of sizes ``mu`` subject to the
    ballot (lattice-word) condition; returns {result shape: multiplicity}."""
    # state: current shape and the per-row cell counts of the previous strip
    # (None for the first strip, which is unconstrained by the ballot rule)
    states = {(lam, None): 1}
    for size in mu:
        nxt = {}
        for (shape, prev), mult in states.items():
            rows = len(shape) + 1
            shp = shape + (0,) * (rows - len(shape))
            prv = None if prev is None else prev + (0,) * (rows - len(prev))

            def place(j, remaining, adds, cum, prev_cum):
                # ballot: cells of this letter in rows <= j never exceed
                # cells of the previous letter in rows <= j-1
                if j == rows:
                    if remaining == 0:
                        new_shape = tuple(s + a for s, a in zip(shp, adds))
                        new_shape = tuple(x for x in new_shape if x > 0)
                        key = (new_shape, tuple(adds))
                        nxt[key] = nxt.get(key, 0) + mult
                    return
                cap = remaining if j == 0 else min(remaining, shp[j - 1] - shp[j])
                if prv is not None:
                    cap = min(cap, prev_cum - cum)
                for a in range(cap, -1, -1):
                    place(j + 1, remaining - a, adds + [a], cum + a,
                          prev_cum + (prv[j] if prv is not None else 0))

            place(0, size, [], 0, 0)
        states = nxt
    results = {}
    for (shape, _), mult in states.items():
        results[shape] = results.get(shape, 0) + mult
    return results


@lru_cache(maxsize=None)
def _lr_product(lam, mu):
    """Expansion of s_lam * s_mu as a tuple of (nu, coefficient)."""
    if sum(lam) > sum(mu):  # fewer strips to place
        lam, mu = mu, lam
    return tuple(sorted(_strip_chains(mu, lam).items()))


def outer(a, b):
    """Pointwise (Littlewood-Richardson) product of two expressions."""
    out = SchurExpr()
    acc = out.terms
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            c = ca * cb
            for nu, k in _lr_product(lam, mu):
                v = acc.get(nu, 0) + c * k
                if v:
                    acc[nu] = v
                else:
                    acc.pop(nu, None)
    return out


def skew(a, b):
    """Skew {lam}/{mu} extended bilinearly: sum of C^lam_{mu,nu} {nu}."""
    out = SchurExpr()
    acc = out.terms
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            n = sum(lam) - sum(mu)
            if n < 0:
                continue
            c = ca * cb
            for nu in partitions(n):
                k = dict(_lr_product(mu, nu)).get(lam, 0)
                if not k:
                    continue
                v = acc.get(nu, 0) + c * k
                if v:
                    acc[nu] = v
                else:
                    acc.pop(nu, None)
    return out


# ---------------------------------------------------------------------------
# Power-sum plumbing (exact rationals)

@lru_cache(maxsize=None)
def _schur_term_to_p(lam):
    """p-expansion of a single Schur function: {rho: chi^lam_rho / z_rho}."""
    n = sum(lam)
    out = {}
    for rho in partitions(n):
        chi = character(lam, rho)
        if chi:
            out[rho] = Fraction(chi, zclass(rho))
    return out


def _expr_to_p(expr):
    acc = {}
    for lam, c in expr.terms.items():
        for rho, q in _schur_term_to_p(lam).items():
            v = acc.get(rho, 0) + c * q
            if v:
                acc[rho] = v
            else:
                acc.pop(rho, None)
    return acc


def _p_mul(p1, p2):
    acc = {}
    for r1, c1 in p1.items():
        for r2, c2 in p2.items():
            key = tuple(sorted(r1 + r2, reverse=True))
            v = acc.get(key, 0) + c1 * c2
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
    return acc


def _p_scale_parts(p, k):
    """Substitute p_m -> p_{km}; coefficients are untouched."""
    return {tuple(k * x for x in rho): c for rho, c in p.items()}


def _p_to_schur(p):
    by_weight = {}
    for rho, c in p.items():
        by_weight.setdefault(sum(rho), {})[rho] = c
    out = SchurExpr()
    for n, block in by_weight.items():
        for lam in partitions(n):
            coeff = sum((c * character(lam, rho) for rho, c in block.items()),
                        Fraction(0))
            if coeff:
                if coeff.denominator != 1:
                    raise ArithmeticError(
                        f"non-integral Schur coefficient {coeff} at {lam}")
                out.terms[lam] = out.terms.get(lam, 0) + int(coeff)
    out.terms = {k: v for k, v in out.terms.items() if v}
    return out


# ---------------------------------------------------------------------------
# Inner product, plethysm, series

def kronecker(a, b):
    """Inner product: reduction of tensor products of symmetric-group
    representations.  Terms of unequal weight annihilate."""
    for e in (a, b):
        for lam in e.terms:
            if sum(lam) > KRONECKER_WEIGHT_LIMIT:
                raise ValueError(
                    f"inner product supported up to weight {KRONECKER_WEIGHT_LIMIT}")
    out = SchurExpr()
    weights = set(a.weights()) & set(b.weights())
    for n in weights:
        pa = _expr_to_p(a.weight_part(n))
        pb = _expr_to_p(b.weight_part(n))
        prod = {}
        for rho, ca in pa.items():
            cb = pb.get(rho)
            if cb:
                prod[rho] = ca * cb * zclass(rho)
        out = out + _p_to_schur(prod)
    return out


def plethysm(a, b):
    """Plethysm (composition) s_lam[b], extended linearly in ``a``.

    plethysm(S(n), x) is the {n}-symmetrized power of x; the classical
    product notation x (x) {n} corresponds to plethysm(S(n), x).
    """
    if b.terms:
        wmax = max(sum(lam) for lam in b.terms)
    else:
        wmax = 0
    bp = _expr_to_p(b)
    acc = {}
    for lam, c in a.terms.items():
        if sum(lam) * wmax > PLETHYSM_WEIGHT_LIMIT:
            raise ValueError(
                f"plethysm supported up to output weight {PLETHYSM_WEIGHT_LIMIT}")
        for rho, q in _schur_term_to_p(lam).items():
            prod = {(): Fraction(1)}
            for k in rho:
                prod = _p_mul(prod, _p_scale_parts(bp, k))
            cq = c * q
            for key, v in prod.items():
                w = acc.get(key, 0) + cq * v
                if w:
                    acc[key] = w
                else:
                    acc.pop(key, None)
    return _p_to_schur(acc)


def product_power_plethysm(a, b, n):
    """Symmetrized n-th power of a two-factor product character.

    Returns [(sigma, plethysm(S(sigma), a), plethysm(S(sigma), b))] over
    sigma of weight n; the symmetrized power of the product is the sum of
    the pairwise products of the two columns.
    """
    if n > 6:
        raise ValueError("product power supported up to n = 6")
    out = []
    for sigma in partitions(n):
        ssig = SchurExpr.schur(sigma)
        out.append((sigma, plethysm(ssig, a), plethysm(ssig, b)))
    return out


def sun_modify(a, N):
    """Restrict to SU(N) characters: drop terms longer than N and strip
    full columns of length N, merging coefficients."""
    if N not in (2, 3):
        raise ValueError("only SU(2) and SU(3) are supported")
    out = SchurExpr()
    acc = out.terms
    for lam, c in a.terms.items():
        if len(lam) > N:
            continue
        if len(lam) == N:
            m = lam[-1]
            lam = tuple(x - m for x in lam if x - m > 0)
        v = acc.get(lam, 0) + c
        if v:
            acc[lam] = v
        else:
            acc.pop(lam, None)
    return out


def plethysm_series(k, max_weight):
    """Truncated series of all symmetrized powers of the one-row Schur
    function {k}: sum over n of plethysm(S(n), S(k)) up to max_weight."""
    if max_weight > SERIES_WEIGHT_LIMIT:
        raise ValueError(f"series supported up to weight {SERIES_WEIGHT_LIMIT}")
    total = SchurExpr.schur(())
    n = 1
    while k * n <= max_weight:
        total = total + plethysm(SchurExpr.schur((n,)), SchurExpr.schur((k,)))
        n += 1
    return total


# ---------------------------------------------------------------------------
# Text form: "3{4,2} + {2,2,1}"; the printer and parser round-trip exactly.

_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+)?\s*\{\s*([0-9,\s]*)\}")


def format_expr(expr):
    if not expr.terms:
        return "0"
    keys = sorted(expr.terms, key=lambda lam: (sum(lam), [-x for x in lam]))
    pieces = []
    for i, lam in enumerate(keys):
        c = expr.terms[lam]
        body = "{" + (",".join(str(x) for x in lam) or "0") + "}"
        mag = abs(c)
        term = body if mag == 1 else f"{mag}{body}"
        if i == 0:
            pieces.append(term if c > 0 else "-" + term)
        else:
            pieces.append((" + " if c > 0 else " - ") + term)
    return "".join(pieces)


def parse_expr(text):
    text = text.strip()
    if text == "0":
        return SchurExpr.zero()
    pos = 0
    out = SchurExpr()
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse expression at: {text[pos:]!r}")
        sign, mag, body = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing sign before term at: {text[pos:]!r}")
        coeff = int(mag) if mag else 1
        if sign == "-":
            coeff = -coeff
        flat = [int(x) for x in body.replace(" ", "").split(",") if x]
        lam = () if flat == [0] or not flat else tuple(flat)
        out = out + coeff * SchurExpr.schur(lam)
        pos = m.end()
        first = False
    return out
