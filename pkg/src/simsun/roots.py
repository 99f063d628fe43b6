"""Exact real-root certification and interlacing checks.

Univariate polynomials are handled as dense lists of Fractions (ascending
degree).  Root counts come from Sturm sequences evaluated at exact rational
endpoints; root isolation bisects until each interval holds one root.
Weak inequalities in the interlacing definitions are honored through exact
gcd detection of common roots, never numeric closeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly

Dense = list[Fraction]


def dense(p: Poly | list) -> Dense:
    coeffs = p.x_coeffs() if isinstance(p, Poly) else list(p)
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Dense) -> int:
    return len(p) - 1


def evaluate(p: Dense, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


def derivative(p: Dense) -> Dense:
    return [i * c for i, c in enumerate(p)][1:]


def _rem(a: Dense, b: Dense) -> Dense:
    a = a[:]
    db, lb = degree(b), b[-1]
    while degree(a) >= db:
        factor = a[-1] / lb
        shift = degree(a) - db
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(a: Dense, b: Dense) -> Dense:
    a, b = a[:], b[:]
    while b:
        a, b = b, _rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def squarefree(p: Dense) -> Dense:
    g = poly_gcd(p, derivative(p))
    if degree(g) <= 0:
        return p
    # exact division p / g
    q: Dense = []
    r = p[:]
    dg, lg = degree(g), g[-1]
    while degree(r) >= dg:
        factor = r[-1] / lg
        shift = degree(r) - dg
        q.append(factor)
        for i, c in enumerate(g):
            r[i + shift] -= factor * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    assert not r, "squarefree division left a remainder"
    return list(reversed(q))


def sturm_chain(p: Dense) -> list[Dense]:
    chain = [p, derivative(p)]
    while chain[-1]:
        nxt = [-c for c in _rem(chain[-2], chain[-1])]
        if not nxt:
            break
        chain.append(nxt)
    return [c for c in chain if c]


def sign_changes(chain: list[Dense], t: Fraction) -> int:
    signs = []
    for p in chain:
        v = evaluate(p, t)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: list[Dense], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    return sign_changes(chain, lo) - sign_changes(chain, hi)


def cauchy_bound(p: Dense) -> Fraction:
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p) / lead


@dataclass
class Root:
    """One isolated real root: the half-open rational interval (lo, hi]."""

    lo: Fraction
    hi: Fraction

    def bisect(self, chain: list[Dense]) -> None:
        mid = (self.lo + self.hi) / 2
        if count_roots(chain, self.lo, mid):
            self.hi = mid
        else:
            self.lo = mid


@dataclass
class Isolation:
    poly: Dense
    chain: list[Dense]
    roots: list[Root]
    all_simple: bool


def isolate_roots(p: Dense) -> Isolation:
    """Isolating intervals for the distinct real roots, sorted increasingly."""
    if not p:
        raise ValueError("zero polynomial")
    sf = squarefree(p)
    simple = len(sf) == len(p)
    chain = sturm_chain(sf)
    if degree(sf) == 0:
        return Isolation(sf, chain, [], simple)
    bound = cauchy_bound(sf)
    pending = [Root(-bound, bound)]
    done: list[Root] = []
    while pending:
        iv = pending.pop()
        c = count_roots(chain, iv.lo, iv.hi)
        if c == 0:
            continue
        if c == 1:
            done.append(iv)
            continue
        mid = (iv.lo + iv.hi) / 2
        pending.append(Root(iv.lo, mid))
        pending.append(Root(mid, iv.hi))
    done.sort(key=lambda r: r.lo)
    return Isolation(sf, chain, done, simple)


@dataclass
class RzCertificate:
    real_rooted: bool
    all_nonpositive: bool
    all_simple: bool
    isolation: Isolation


def certify_rz(p: Poly | list) -> RzCertificate:
    """Certify real-rootedness, nonpositivity and simplicity of the zeros."""
    d = dense(p)
    if not d:
        raise ValueError("zero polynomial")
    iso = isolate_roots(d)
    real_rooted = len(iso.roots) == degree(iso.poly)
    nonpositive = True
    if degree(iso.poly) >= 1:
        bound = cauchy_bound(iso.poly)
        nonpositive = count_roots(iso.chain, Fraction(0), bound) == 0
    return RzCertificate(real_rooted, nonpositive, iso.all_simple, iso)


def _compare(a: Root, ca: list[Dense], b: Root, cb: list[Dense], g: list[Dense] | None) -> int:
    """-1, 0, 1 ordering of two isolated roots; 0 only via a proven common root."""
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if g and lo < hi and count_roots(g, lo, hi) == 1:
            return 0
        a.bisect(ca)
        b.bisect(cb)


RELATIONS = ("interlace", "alternate-left", "precede")


@dataclass
class RelationReport:
    relation: str
    holds: bool
    detail: str = ""


def check_relation(p: Poly | list, q: Poly | list, relation: str) -> RelationReport:
    """Certify a root-ordering relation between two real-rooted polynomials.

    ``interlace``       deg q = deg p + 1 and q's roots bracket p's
    ``alternate-left``  equal degrees and p's roots weakly precede q's
    ``precede``         whichever of the two the degrees select
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    dp, dq = dense(p), dense(q)
    if not dp or not dq:
        raise ValueError("zero polynomial")
    # stated convention: any constant precedes any polynomial of degree <= 1
    if relation == "precede" and degree(dp) == 0 and degree(dq) <= 1:
        return RelationReport(relation, True, "constant convention")
    if relation == "precede":
        if degree(dq) == degree(dp) + 1:
            relation_eff = "interlace"
        elif degree(dq) == degree(dp):
            relation_eff = "alternate-left"
        else:
            return RelationReport(relation, False, "degree mismatch")
    else:
        relation_eff = relation
        if relation == "interlace" and degree(dq) != degree(dp) + 1:
            raise ValueError("interlace requires deg q = deg p + 1")
        if relation == "alternate-left" and degree(dq) != degree(dp):
            raise ValueError("alternate-left requires equal degrees")
    for d in (dp, dq):
        cert = certify_rz(d)
        if not cert.real_rooted:
            return RelationReport(relation, False, "not real-rooted")
    ip, iq = isolate_roots(dp), isolate_roots(dq)
    g = poly_gcd(ip.poly, iq.poly)
    gchain = sturm_chain(g) if degree(g) >= 1 else None

    def le(a: Root, b: Root) -> bool:
        return _compare(a, ip.chain, b, iq.chain, gchain) <= 0

    def ge(a: Root, b: Root) -> bool:
        return _compare(a, ip.chain, b, iq.chain, gchain) >= 0

    xs, ts = ip.roots, iq.roots
    if relation_eff == "interlace":
        # t_1 <= x_1 <= t_2 <= ... <= x_m <= t_{m+1}
        for i, x in enumerate(xs):
            if not (ge(x, ts[i]) and le(x, ts[i + 1])):
                return RelationReport(relation, False, f"order fails at root {i + 1}")
    else:
        # x_1 <= t_1 <= x_2 <= ... <= x_m <= t_m
        for i, x in enumerate(xs):
            if not le(x, ts[i]):
                return RelationReport(relation, False, f"order fails at root {i + 1}")
            if i + 1 < len(xs) and not ge(xs[i + 1], ts[i]):
                return RelationReport(relation, False, f"order fails at root {i + 1}")
    return RelationReport(relation, True)
