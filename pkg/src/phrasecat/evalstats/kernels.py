"""Statistical test kernels: chi-square, Mann-Whitney U, Welch t.

Self-contained double-precision implementations built on the classic
special-function algorithms (incomplete gamma by series/continued
fraction, incomplete beta by modified Lentz). The test suite checks
them against independent numerical-integration and brute-force
permutation oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import groupby
from typing import Sequence

_EPS = 1e-16
_FPMIN = 1e-300
_MAX_ITER = 500

# Exact Mann-Whitney permutation distributions stay cheap up to this
# many pairwise comparisons; beyond it the tie-corrected normal
# approximation takes over.
MWU_EXACT_LIMIT = 400


@dataclass(frozen=True)
class TestResult:
    """Outcome of one statistical test.

    ``variant`` names the computation path actually used (e.g. the
    Mann-Whitney exact permutation distribution vs. its normal
    approximation) so reports can state where each p-value came from.
    """

    method: str
    statistic: float
    p: float
    n: "tuple[int, ...]"
    variant: "str | None" = None


# ---------------------------------------------------------------------------
# Special functions
# ---------------------------------------------------------------------------

def norm_sf(x: float) -> float:
    """Upper tail of the standard normal distribution."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def _lower_gamma_series(s: float, x: float) -> float:
    """Regularized lower incomplete gamma P(s, x) for x < s + 1."""
    term = 1.0 / s
    total = term
    n = 0
    while n < _MAX_ITER:
        n += 1
        term *= x / (s + n)
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(s * math.log(x) - x - math.lgamma(s))

def _upper_gamma_cf(s: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(s, x) for x >= s + 1."""
    b = x + 1.0 - s
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER + 1):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + s * math.log(x) - math.lgamma(s)) * h


def chi2_sf(x: float, df: int) -> float:
    """Upper-tail probability of the chi-square distribution."""
    if x < 0:
        raise ValueError("x must be >= 0")
    if df < 1:
        raise ValueError("df must be >= 1")
    if x == 0:
        return 1.0
    s = df / 2.0
    half_x = x / 2.0
    if half_x < s + 1.0:
        return min(1.0, max(0.0, 1.0 - _lower_gamma_series(s, half_x)))
    return min(1.0, max(0.0, _upper_gamma_cf(s, half_x)))


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta function (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h


def _betainc_reg(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b)."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    bt = math.exp(
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log(1.0 - x)
    )
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


def _student_t_two_sided_p(t: float, df: float) -> float:
    if math.isinf(t):
        return 0.0
    return _betainc_reg(df / 2.0, 0.5, df / (df + t * t))


# ---------------------------------------------------------------------------
# Chi-square tests
# ---------------------------------------------------------------------------

def chi2_gof(correct: int, n: int, p0: float) -> TestResult:
    """Goodness of fit of an observed success count against probability p0."""
    if n <= 0:
        raise ValueError("n must be > 0")
    if not 0 <= correct <= n:
        raise ValueError("correct must be in 0..n")
    if not 0.0 < p0 < 1.0:
        raise ValueError("p0 must be strictly between 0 and 1")
    expected_hit = n * p0
    expected_miss = n * (1.0 - p0)
    statistic = (correct - expected_hit) ** 2 / expected_hit + (
        (n - correct) - expected_miss
    ) ** 2 / expected_miss
    return TestResult(
        method="chi2_gof",
        statistic=statistic,
        p=chi2_sf(statistic, 1),
        n=(n,),
    )


def chi2_2x2(table: "Sequence[Sequence[int]]", continuity: bool = False) -> TestResult:
    """Pearson chi-square independence test on a 2x2 table (1 df).

    No continuity correction by default; ``continuity`` switches to the
    Yates-corrected statistic.
    """
    (a, b), (c, d) = table
    for v in (a, b, c, d):
        if v < 0:
            raise ValueError("cell counts must be >= 0")
    row1, row2 = a + b, c + d
    col1, col2 = a + c, b + d
    if min(row1, row2, col1, col2) == 0:
        raise ValueError("all marginals must be > 0")
    n = row1 + row2
    delta = abs(a * d - b * c)
    if continuity:
        delta = max(delta - n / 2.0, 0.0)
    statistic = n * delta * delta / (row1 * row2 * col1 * col2)
    return TestResult(
        method="chi2_2x2",
        statistic=statistic,
        p=chi2_sf(statistic, 1),
        n=(row1, row2),
        variant="yates" if continuity else "pearson",
    )


# ---------------------------------------------------------------------------
# Mann-Whitney U
# ---------------------------------------------------------------------------

def _doubled_midranks(pooled: "list[float]") -> "list[int]":
    """2x the midrank of each pooled value, as exact integers."""
    order = sorted(range(len(pooled)), key=pooled.__getitem__)
    doubled = [0] * len(pooled)
    pos = 0
    for _, group in groupby(order, key=pooled.__getitem__):
        indices = list(group)
        first_rank = pos + 1
        last_rank = pos + len(indices)
        for idx in indices:
            doubled[idx] = first_rank + last_rank
        pos = last_rank
    return doubled


def _doubled_u_statistic(a: "list[float]", b: "list[float]") -> int:
    """2*U for sample a, where U counts pairs a > b with half-credit ties."""
    n1 = len(a)
    doubled = _doubled_midranks(list(a) + list(b))
    doubled_r1 = sum(doubled[:n1])
    return doubled_r1 - n1 * (n1 + 1)


def _exact_mwu_p(a: "list[float]", b: "list[float]", doubled_u: int) -> float:
    """Two-sided p from the exact permutation distribution of U (handles ties)."""
    n1, n2 = len(a), len(b)
    pooled = sorted(list(a) + list(b))
    group_sizes = [len(list(g)) for _, g in groupby(pooled)]

    # dp[chosen][2U] = number of ways to assign `chosen` of the processed
    # values to sample a while accumulating 2U; ties contribute k*(m-k).
    dp: dict[int, dict[int, int]] = {0: {0: 1}}
    processed = 0
    for m in group_sizes:
        new_dp: dict[int, dict[int, int]] = {}
        for chosen, by_u in dp.items():
            unchosen_before = processed - chosen
            for k in range(0, min(m, n1 - chosen) + 1):
                ways_factor = math.comb(m, k)
                bump = 2 * k * unchosen_before + k * (m - k)
                slot = new_dp.setdefault(chosen + k, {})
                for two_u, ways in by_u.items():
                    slot[two_u + bump] = slot.get(two_u + bump, 0) + ways * ways_factor
        dp = new_dp
        processed += m

    distribution = dp[n1]
    center = n1 * n2
    target = abs(doubled_u - center)
    extreme = sum(ways for two_u, ways in distribution.items() if abs(two_u - center) >= target)
    return extreme / math.comb(n1 + n2, n1)


def mann_whitney_u(
    a: "Sequence[float]", b: "Sequence[float]", method: str = "auto"
) -> TestResult:
    """Two-sided Mann-Whitney U test with midrank tie handling.

    Small problems (|a|*|b| <= 400) get the exact permutation p-value;
    larger ones the normal approximation with tie-corrected variance
    and continuity correction. ``variant`` records which path ran.
    ``method`` forces a path ("exact"/"approx") for validation work.
    """
    if method not in ("auto", "exact", "approx"):
        raise ValueError(f"unknown method {method!r}")
    a = list(a)
    b = list(b)
    if not a or not b:
        raise ValueError("both samples must be nonempty")
    n1, n2 = len(a), len(b)
    doubled_u = _doubled_u_statistic(a, b)
    u = doubled_u / 2.0

    use_exact = n1 * n2 <= MWU_EXACT_LIMIT if method == "auto" else method == "exact"
    if use_exact:
        p = _exact_mwu_p(a, b, doubled_u)
        return TestResult("mann_whitney_u", u, p, (n1, n2), variant="exact")

    n = n1 + n2
    doubled = _doubled_midranks(a + b)
    tie_sizes = [len(list(g)) for _, g in groupby(sorted(doubled))]
    tie_correction = 1.0 - sum(t**3 - t for t in tie_sizes) / (n**3 - n)
    variance = tie_correction * n1 * n2 * (n + 1) / 12.0
    if variance == 0.0:
        return TestResult("mann_whitney_u", u, 1.0, (n1, n2), variant="normal_approx")
    z = max(abs(u - n1 * n2 / 2.0) - 0.5, 0.0) / math.sqrt(variance)
    p = min(1.0, 2.0 * norm_sf(z))
    return TestResult("mann_whitney_u", u, p, (n1, n2), variant="normal_approx")


# ---------------------------------------------------------------------------
# Welch t
# ---------------------------------------------------------------------------

def t_test(a: "Sequence[float]", b: "Sequence[float]") -> TestResult:
    """Welch two-sample t-test (two-sided, Welch-Satterthwaite df)."""
    a = list(a)
    b = list(b)
    if len(a) < 2 or len(b) < 2:
        raise ValueError("both samples need at least two values")
    n1, n2 = len(a), len(b)
    mean_a = sum(a) / n1
    mean_b = sum(b) / n2
    var_a = sum((x - mean_a) ** 2 for x in a) / (n1 - 1)
    var_b = sum((x - mean_b) ** 2 for x in b) / (n2 - 1)

    if var_a == 0.0 and var_b == 0.0:
        if mean_a == mean_b:
            return TestResult("t_test", 0.0, 1.0, (n1, n2), variant="degenerate")
        statistic = math.inf if mean_a > mean_b else -math.inf
        return TestResult("t_test", statistic, 0.0, (n1, n2), variant="degenerate")

    se_sq = var_a / n1 + var_b / n2
    statistic = (mean_a - mean_b) / math.sqrt(se_sq)
    df = se_sq**2 / (
        (var_a / n1) ** 2 / (n1 - 1) + (var_b / n2) ** 2 / (n2 - 1)
    )
    p = _student_t_two_sided_p(statistic, df)
    return TestResult("t_test", statistic, p, (n1, n2), variant="welch")
