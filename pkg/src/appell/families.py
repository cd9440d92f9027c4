"""Bernoulli and Apostol-Euler families, their convolution identities, and checks.

Closed forms are expressed through associated sequences and forward
differences of monomials. The reference side of every identity check is
built independently: classical polynomial values come from the power series
oracle, and multinomial sums are enumerated composition by composition.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import series as ts
from .appell import (
    AppellSeq,
    appell_convolve,
    appell_inverse,
    associated_sequence,
    difference_sum,
    evaluate,
    forward_difference_transform,
    from_associated,
)
from .numeric import (
    RationalLike,
    as_rational,
    binom_general,
    compositions,
    falling_factorial,
    format_rational,
    harmonic,
    multinomial,
)
from .rng import LinearGenerator
from .seqgroup import (
    EgfSequence,
    binomial_convolve,
    group_inverse,
    identity_element,
    inverse_stirling_transform,
    stirling_transform,
)
from .stirling import stirling_first, stirling_second

# ---------------------------------------------------------------- sequences


def bernoulli_associated(t: RationalLike, order: int) -> EgfSequence:
    """Associated sequence b(t) of the Bernoulli polynomials of order t."""
    t = as_rational(t)
    out = []
    for n in range(order + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            weight = binom_general(t, k) * binom_general(n - t, n - k)
            if weight:
                acc += weight * stirling_first(k + n, k) / math.comb(k + n, n)
        out.append(acc)
    return EgfSequence(out)


def daehee_number(m: int, n: int) -> Fraction:
    """s(m+n, m) / C(m+n, n)."""
    if m < 1:
        raise ValueError("Daehee numbers need order m >= 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(stirling_first(m + n, m), math.comb(m + n, n))


def bernoulli_order2_associated(order: int) -> EgfSequence:
    """b_n(2) = (-1)^n n! 2 H_{n+1} / (n+2)."""
    return EgfSequence(
        (-1) ** n * math.factorial(n) * 2 * harmonic(n + 1) / (n + 2)
        for n in range(order + 1)
    )


def euler_associated(t: RationalLike, beta: RationalLike, order: int) -> EgfSequence:
    """a_n(t) = (-t)_n beta^n."""
    t, beta = as_rational(t), as_rational(beta)
    return EgfSequence(falling_factorial(-t, n) * beta**n for n in range(order + 1))


def mixed_weights(m: int, r: int, beta: RationalLike, order: int) -> list[Fraction]:
    """Forward-difference weights v_0..v_order of B(m;.) x E(r, beta;.)."""
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    beta = as_rational(beta)
    out = []
    for k in range(order + 1):
        acc = Fraction(0)
        for j in range(k + 1):
            i = m + k - j
            acc += binom_general(-r, j) * beta**j * Fraction(
                stirling_first(i, m), math.factorial(i)
            )
        out.append(math.factorial(m) * acc)
    return out


# -------------------------------------------------------------- polynomials


def bernoulli_sequence(t: RationalLike, order: int) -> AppellSeq:
    return from_associated(bernoulli_associated(t, order))


def apostol_euler_sequence(t: RationalLike, beta: RationalLike, order: int) -> AppellSeq:
    return from_associated(euler_associated(t, beta, order))


def bernoulli_polynomial(t: RationalLike, n: int, x: RationalLike) -> Fraction:
    """B_n(t; x) = sum_k (b_k(t)/k!) Delta^k I_n(x)."""
    b = bernoulli_associated(t, n)
    return difference_sum([b[k] / math.factorial(k) for k in range(n + 1)], n, x)


def apostol_euler_polynomial(
    t: RationalLike, beta: RationalLike, n: int, x: RationalLike
) -> Fraction:
    """E_n(t, beta; x) = sum_k C(-t, k) beta^k Delta^k I_n(x)."""
    a = euler_associated(t, beta, n)
    return difference_sum([a[k] / math.factorial(k) for k in range(n + 1)], n, x)


# ---------------------------------------------------------- series oracles


def bernoulli_generating_series(t: RationalLike, order: int) -> ts.TruncatedSeries:
    """(z/(e^z - 1))^t up to z^order."""
    quotient = ts.ts_divide_by_z(ts.exp_minus_one(order + 1))
    return ts.ts_pow(quotient, -as_rational(t))


def apostol_euler_generating_series(
    t: RationalLike, beta: RationalLike, order: int
) -> ts.TruncatedSeries:
    """(1 + beta (e^z - 1))^(-t) up to z^order."""
    base = ts.constant(1, order) + ts.exp_minus_one(order) * as_rational(beta)
    return ts.ts_pow(base, -as_rational(t))


def oracle_values(generating: ts.TruncatedSeries, x: RationalLike) -> list[Fraction]:
    """n! [z^n] of generating(z) e^{xz}: the values A_n(x) of the Appell family."""
    prod = ts.ts_mul(generating, ts.exponential(x, generating.order))
    return [c * math.factorial(n) for n, c in enumerate(prod.coeffs)]


def classical_bernoulli_oracle(order: int) -> AppellSeq:
    return AppellSeq(ts.egf_to_sequence(bernoulli_generating_series(1, order)))


def apostol_euler_oracle(beta: RationalLike, order: int, t: RationalLike = 1) -> AppellSeq:
    return AppellSeq(ts.egf_to_sequence(apostol_euler_generating_series(t, beta, order)))


def multinomial_convolution_bruteforce(
    families: Sequence[AppellSeq], points: Sequence[RationalLike], n: int
) -> Fraction:
    """sum over j_1+...+j_m = n of n!/(j_1!...j_m!) prod_i A^(i)_{j_i}(x_i)."""
    if len(families) != len(points):
        raise ValueError("need one point per family")
    if not families:
        raise ValueError("need at least one family")
    points = [as_rational(x) for x in points]
    # tables[i][j] = A^(i)_j(x_i)
    tables = [[evaluate(A, j, x) for j in range(n + 1)] for A, x in zip(families, points)]
    total = Fraction(0)
    for parts in compositions(n, len(families)):
        term = Fraction(multinomial(n, parts))
        for table, j in zip(tables, parts):
            term *= table[j]
            if not term:
                break
        total += term
    return total


# ------------------------------------------------------------- verification

IDENTITIES = (
    "norlund-paper",
    "norlund-corrected",
    "bernoulli-higher",
    "bernoulli-harmonic",
    "euler-higher",
    "mixed",
    "group-laws",
    "stirling-inversion",
    "multiplier-laws",
)


@dataclass
class IdentityReport:
    identity: str
    parameters: dict
    max_degree: int
    trials: int
    seed: int
    checked: int = 0
    first_failure: tuple | None = None  # (n, lhs, rhs, note)

    @property
    def status(self) -> str:
        return "pass" if self.first_failure is None else "fail"

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def record(self, n: int, lhs, rhs, note: str = "") -> bool:
        self.checked += 1
        if lhs != rhs and self.first_failure is None:
            self.first_failure = (n, lhs, rhs, note)
        return lhs == rhs

    def summary(self) -> str:
        line = f"{self.identity}: {self.status} ({self.checked} checks, degree <= {self.max_degree})"
        if self.first_failure is not None:
            n, lhs, rhs, note = self.first_failure
            line += f"; first failure n={n}: lhs={_fmt(lhs)} rhs={_fmt(rhs)}"
            if note:
                line += f" [{note}]"
        return line


def _fmt(value) -> str:
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, (EgfSequence, AppellSeq)):
        terms = value.values_at_zero if isinstance(value, AppellSeq) else value
        return "[" + ", ".join(format_rational(t) for t in terms) + "]"
    return str(value)


def _points(rng: LinearGenerator, count: int) -> list[Fraction]:
    return [rng.rational() for _ in range(count)]


def _check_norlund(report, params, rng, sign):
    B = classical_bernoulli_oracle(report.max_degree)
    for n in range(1, report.max_degree + 1):
        for _ in range(report.trials):
            x, y = _points(rng, 2)
            lhs = multinomial_convolution_bruteforce([B, B], [x, y], n)
            s = x + y
            rhs = sign * n * (s - 1) * evaluate(B, n - 1, s) - (n - 1) * evaluate(B, n, s)
            if not report.record(n, lhs, rhs, f"x={format_rational(x)}, y={format_rational(y)}"):
                return


def _check_bernoulli_higher(report, params, rng):
    m = params["m"]
    B = classical_bernoulli_oracle(report.max_degree)
    weights = [
        Fraction(stirling_first(m + k, m), math.factorial(k) * math.comb(m + k, m))
        for k in range(report.max_degree + 1)
    ]
    middle = bernoulli_generating_series(m, report.max_degree)
    for n in range(report.max_degree + 1):
        for _ in range(report.trials):
            xs = _points(rng, m)
            x = sum(xs, Fraction(0))
            lhs = multinomial_convolution_bruteforce([B] * m, xs, n)
            mid = oracle_values(middle, x)[n]
            rhs = difference_sum(weights, n, x)
            note = "points=" + ",".join(format_rational(p) for p in xs)
            if not report.record(n, lhs, mid, note + " (series form)"):
                return
            if not report.record(n, lhs, rhs, note):
                return
        # all-zero points reduce to sum_k s(m+k,m) S(n,k) / C(m+k,m)
        lhs0 = multinomial_convolution_bruteforce([B] * m, [0] * m, n)
        rhs0 = sum(
            (Fraction(stirling_first(m + k, m) * stirling_second(n, k), math.comb(m + k, m))
             for k in range(n + 1)),
            Fraction(0),
        )
        if not report.record(n, lhs0, rhs0, "all points zero"):
            return


def _check_bernoulli_harmonic(report, params, rng):
    B = classical_bernoulli_oracle(report.max_degree)
    weights = [
        2 * Fraction((-1) ** k) * harmonic(k + 1) / (k + 2)
        for k in range(report.max_degree + 1)
    ]
    daehee = [
        daehee_number(2, k) / math.factorial(k) for k in range(report.max_degree + 1)
    ]
    for n in range(report.max_degree + 1):
        for _ in range(report.trials):
            x1, x2 = _points(rng, 2)
            x = x1 + x2
            lhs = multinomial_convolution_bruteforce([B, B], [x1, x2], n)
            note = f"points={format_rational(x1)},{format_rational(x2)}"
            if not report.record(n, lhs, difference_sum(daehee, n, x), note + " (Stirling form)"):
                return
            if not report.record(n, lhs, difference_sum(weights, n, x), note):
                return


def _check_euler_higher(report, params, rng):
    m, beta = params["m"], params["beta"]
    E = apostol_euler_oracle(beta, report.max_degree)
    weights = [binom_general(-m, k) * beta**k for k in range(report.max_degree + 1)]
    middle = apostol_euler_generating_series(m, beta, report.max_degree)
    for n in range(report.max_degree + 1):
        for _ in range(report.trials):
            xs = _points(rng, m)
            x = sum(xs, Fraction(0))
            lhs = multinomial_convolution_bruteforce([E] * m, xs, n)
            note = "points=" + ",".join(format_rational(p) for p in xs)
            if not report.record(n, lhs, oracle_values(middle, x)[n], note + " (series form)"):
                return
            if not report.record(n, lhs, difference_sum(weights, n, x), note):
                return


def _check_mixed(report, params, rng):
    m, r, beta = params["m"], params["r"], params["beta"]
    B = classical_bernoulli_oracle(report.max_degree)
    E = apostol_euler_oracle(beta, report.max_degree)
    weights = mixed_weights(m, r, beta, report.max_degree)
    # v_k = (a(r) x b(m))_k / k!
    conv = binomial_convolve(
        euler_associated(r, beta, report.max_degree),
        bernoulli_associated(m, report.max_degree),
    )
    for k in range(report.max_degree + 1):
        if not report.record(k, weights[k], conv[k] / math.factorial(k), "weight consistency"):
            return
    for n in range(report.max_degree + 1):
        for _ in range(report.trials):
            xs = _points(rng, m + r)
            x = sum(xs, Fraction(0))
            lhs = multinomial_convolution_bruteforce([B] * m + [E] * r, xs, n)
            note = "points=" + ",".join(format_rational(p) for p in xs)
            if not report.record(n, lhs, difference_sum(weights, n, x), note):
                return


def _record_seq(report, lhs: EgfSequence, rhs: EgfSequence, note: str) -> bool:
    i = lhs.first_mismatch(rhs)
    report.checked += 1
    if i is None:
        return True
    if report.first_failure is None:
        report.first_failure = (i, lhs[i], rhs[i], note)
    return False


def _check_group_laws(report, params, rng):
    order = report.max_degree
    e = identity_element(order)
    for _ in range(report.trials):
        u, v, w = (rng.sequence(order) for _ in range(3))
        checks = [
            (u * v, v * u, "commutativity"),
            ((u * v) * w, u * (v * w), "associativity"),
            (u * e, u, "identity"),
            (u * group_inverse(u), e, "inverse"),
            (group_inverse(group_inverse(u)), u, "double inverse"),
            (
                ts.egf_to_sequence(ts.ts_mul(ts.sequence_to_egf(u), ts.sequence_to_egf(v))),
                u * v,
                "generating-function homomorphism",
            ),
            (
                ts.egf_to_sequence(ts.ts_div(ts.constant(1, order), ts.sequence_to_egf(u))),
                group_inverse(u),
                "inverse via series reciprocal",
            ),
        ]
        for lhs, rhs, note in checks:
            if not _record_seq(report, lhs, rhs, note):
                return


def _check_stirling_inversion(report, params, rng):
    order = report.max_degree
    shift = ts.exp_minus_one(order)
    for _ in range(report.trials):
        u = rng.sequence(order)
        v = stirling_transform(u)
        checks = [
            (inverse_stirling_transform(v), u, "inverse after forward"),
            (stirling_transform(inverse_stirling_transform(u)), u, "forward after inverse"),
            (
                ts.egf_to_sequence(ts.ts_compose(ts.sequence_to_egf(u), shift)),
                v,
                "composition with e^z - 1",
            ),
        ]
        for lhs, rhs, note in checks:
            if not _record_seq(report, lhs, rhs, note):
                return


def _check_multiplier_laws(report, params, rng):
    order = report.max_degree
    L = forward_difference_transform
    for _ in range(report.trials):
        A, C = AppellSeq(rng.sequence(order)), AppellSeq(rng.sequence(order))
        u, v = rng.sequence(order), rng.sequence(order)
        AC = appell_convolve(A, C)
        target = L(u * v, AC)
        checks = [
            (L(u, L(v, AC)), target, "L_u L_v (A x C)"),
            (L(v, L(u, AC)), target, "L_v L_u (A x C)"),
            (appell_convolve(L(u, A), L(v, C)), target, "L_u A x L_v C"),
            (appell_convolve(L(v, A), L(u, C)), target, "L_v A x L_u C"),
            (L(u, AC), appell_convolve(A, L(u, C)), "multiplier, right"),
            (L(u, AC), appell_convolve(L(u, A), C), "multiplier, left"),
            (L(group_inverse(u), L(u, A)), A, "inverse transform"),
            (L(u, A, method="direct"), L(u, A), "dual route"),
            (associated_sequence(L(u, A)), associated_sequence(A) * u, "associated of L_u A"),
            (
                associated_sequence(AC),
                associated_sequence(A) * associated_sequence(C),
                "associated of A x C",
            ),
            (
                associated_sequence(appell_inverse(A)),
                group_inverse(associated_sequence(A)),
                "associated of inverse",
            ),
            (from_associated(associated_sequence(A)), A, "associated round trip"),
        ]
        for lhs, rhs, note in checks:
            if isinstance(lhs, AppellSeq):
                lhs, rhs = lhs.values_at_zero, rhs.values_at_zero
            if not _record_seq(report, lhs, rhs, note):
                return


_CHECKS: dict[str, Callable] = {
    "norlund-paper": lambda rep, p, rng: _check_norlund(rep, p, rng, -1),
    "norlund-corrected": lambda rep, p, rng: _check_norlund(rep, p, rng, 1),
    "bernoulli-higher": _check_bernoulli_higher,
    "bernoulli-harmonic": _check_bernoulli_harmonic,
    "euler-higher": _check_euler_higher,
    "mixed": _check_mixed,
    "group-laws": _check_group_laws,
    "stirling-inversion": _check_stirling_inversion,
    "multiplier-laws": _check_multiplier_laws,
}

_DEFAULTS: dict[str, dict] = {
    "bernoulli-higher": {"m": 2},
    "euler-higher": {"m": 2, "beta": Fraction(1, 2)},
    "mixed": {"m": 1, "r": 1, "beta": Fraction(1, 2)},
}


def identity_parameters(name: str, params: dict | None = None) -> dict:
    """Merge user parameters with the identity's defaults, keeping only used keys."""
    if name not in _CHECKS:
        raise ValueError(f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}")
    defaults = _DEFAULTS.get(name, {})
    merged = dict(defaults)
    for key, value in (params or {}).items():
        if key in defaults and value is not None:
            merged[key] = as_rational(value) if key == "beta" else int(value)
    for key in ("m", "r"):
        if key in merged and merged[key] < 1:
            raise ValueError(f"{key} must be positive")
    return merged


def verify_identity(
    name: str,
    params: dict | None = None,
    max_degree: int = 10,
    trials: int = 20,
    seed: int = 0,
) -> IdentityReport:
    """Check a named identity exactly over degrees 0..max_degree.

    Test points are drawn from a :class:`LinearGenerator` seeded with
    ``seed``, so the report is reproducible.
    """
    merged = identity_parameters(name, params)
    if max_degree < 0 or trials < 0:
        raise ValueError("max_degree and trials must be nonnegative")
    report = IdentityReport(name, merged, max_degree, trials, seed)
    _CHECKS[name](report, merged, LinearGenerator(seed))
    return report


__all__ = [
    "IDENTITIES",
    "IdentityReport",
    "apostol_euler_generating_series",
    "apostol_euler_oracle",
    "apostol_euler_polynomial",
    "apostol_euler_sequence",
    "bernoulli_associated",
    "bernoulli_generating_series",
    "bernoulli_order2_associated",
    "bernoulli_polynomial",
    "bernoulli_sequence",
    "classical_bernoulli_oracle",
    "daehee_number",
    "euler_associated",
    "identity_parameters",
    "mixed_weights",
    "multinomial_convolution_bruteforce",
    "oracle_values",
    "verify_identity",
]
