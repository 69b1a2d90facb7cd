"""Integer recursions for the lens-space family, continued fractions, and
the minimal crosscap number of a lens space with even p.

The family is parameterized by a natural number kappa:

    p_0 = 0, q_0 = 1,
    p_k = (kappa + 1) p_{k-1} + kappa q_{k-1},
    q_k = p_{k-1} + q_{k-1}.

The surface construction uses kappa = 2, where (p_1, q_1) = (2, 1),
(p_2, q_2) = (8, 3), (p_3, q_3) = (30, 11), ...  All arithmetic is exact
and unbounded.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidFraction, OddP, OutOfRange


@dataclass(frozen=True)
class KappaSequence:
    kappa: int
    terms: tuple  # ((p_0, q_0), ..., (p_n, q_n))

    def p(self, k):
        return self.terms[k][0]

    def q(self, k):
        return self.terms[k][1]

    def to_json_dict(self):
        return {"kappa": self.kappa, "terms": [list(t) for t in self.terms]}


def lens_sequence(kappa, n):
    """Terms 0..n of the kappa-recursion."""
    if kappa < 1:
        raise OutOfRange("kappa must be a positive integer")
    if n < 0:
        raise OutOfRange("n must be non-negative")
    terms = [(0, 1)]
    for _ in range(n):
        p, q = terms[-1]
        terms.append(((kappa + 1) * p + kappa * q, p + q))
    return KappaSequence(kappa, tuple(terms))


def check_formulae(kappa, n):
    """Exhaustively verify the six closed-form identities of the
    kappa-recursion for all index combinations available up to n.

    Returns a dict formula id -> {"ok", "checked", "failures"} where each
    failure carries the indices and both sides of the identity.
    """
    if n < 1:
        raise OutOfRange("n must be at least 1")
    seq = lens_sequence(kappa, n)
    p, q = seq.p, seq.q

    def qsum(upper):
        return sum(q(j) for j in range(1, upper + 1))  # empty sum is 0

    report = {}

    def record(fid, instances):
        failures = [inst for inst in instances if inst["lhs"] != inst["rhs"]]
        report[fid] = {"ok": not failures, "checked": len(instances), "failures": failures}

    record(1, [
        {"n": k, "lhs": p(k), "rhs": kappa * q(k) + p(k - 1)}
        for k in range(1, n + 1)
    ])
    record(2, [
        {"l": l, "lhs": kappa * qsum(l), "rhs": p(l)}
        for l in range(1, n + 1)
    ])
    record(3, [
        {"l": l, "n": m,
         "lhs": -qsum(l - 1) * p(m) + q(l) * q(m),
         "rhs": -qsum(l - 2) * p(m - 1) + q(l - 1) * q(m - 1)}
        for l in range(2, n + 1)
        for m in range(1, n + 1)
    ])
    record(4, [
        {"m": m, "n": k,
         "lhs": (-qsum(m - 1) * p(k) + q(m) * q(k), (q(m) * q(k)) % p(k) if p(k) else None),
         "rhs": (q(k - (m - 1)), q(k - (m - 1)) % p(k) if p(k) else None)}
        for k in range(1, n + 1)
        for m in range(1, min(k + 1, n) + 1)
    ])
    record(5, [
        {"n": k, "lhs": (kappa + 1) * q(k) - p(k), "rhs": q(k - 1)}
        for k in range(1, n + 1)
    ])
    record(6, [
        {"n": k, "lhs": (2 * kappa + 1) * q(k) - 2 * p(k), "rhs": -p(k - 1) + q(k - 1)}
        for k in range(1, n + 1)
    ])
    report["ok"] = all(report[fid]["ok"] for fid in range(1, 7))
    return report


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple

    def __post_init__(self):
        t = self.terms
        if not t:
            raise InvalidFraction("empty continued fraction")
        if t[0] < 0 or any(a <= 0 for a in t[1:]):
            raise InvalidFraction("terms must satisfy a_0 >= 0, a_i > 0")
        if len(t) > 1 and t[-1] <= 1:
            raise InvalidFraction("last term must exceed 1")

    def evaluate(self):
        value = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            value = a + 1 / value
        return value


def continued_fraction(p, q):
    """The unique expansion of p/q with positive terms and last term > 1
    (degenerate case [p] when q = 1)."""
    if not (p > q >= 1):
        raise InvalidFraction("need p > q >= 1, got p=%d q=%d" % (p, q))
    if gcd(p, q) != 1:
        raise InvalidFraction("p and q must be coprime")
    terms = []
    a, b = p, q
    while b:
        terms.append(a // b)
        a, b = b, a % b
    # The Euclidean expansion of a reduced fraction with p > q >= 1 ends
    # with a term >= 2 whenever it has more than one term.
    return ContinuedFraction(tuple(terms))


def crosscap_b_terms(cf):
    """The b-sequence of the crosscap formula for a continued fraction."""
    b = []
    for i, a in enumerate(cf.terms):
        if i == 0:
            b.append(a)
        elif b[i - 1] != cf.terms[i - 1] or sum(b) % 2 == 1:
            b.append(a)
        else:
            b.append(0)
    return b


def bredon_wood_crosscap(p, q):
    """Minimal crosscap number among closed non-orientable surfaces in the
    (p, q)-lens space; defined here for p even only."""
    if p % 2 != 0:
        raise OddP("crosscap formula implemented for even p only")
    cf = continued_fraction(p, q)
    b = crosscap_b_terms(cf)
    total = sum(b)
    if total % 2 != 0:
        raise InvalidFraction("b-sequence sum is odd; formula out of scope")
    return total // 2
