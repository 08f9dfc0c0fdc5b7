"""Unit tests for the exact overlap first moments."""

import math
from collections import Counter
from collections.abc import Iterator
from itertools import combinations

import pytest

from localfactor.domain.errors.domain_errors import InvalidDegreeError, OverlapConstraintError
from localfactor.domain.policies.overlap_constraint_policy import OverlapConstraintPolicy
from localfactor.domain.services.overlap_moments import (
    log_binomial,
    log_expected_overlap_er,
    log_expected_overlap_reg,
    log_expected_overlap_reg_total,
)
from localfactor.domain.value_objects.overlap_query import OverlapQuery


def er_enumeration(n: int, d: float, m: int, k: int) -> float:
    """Sum over ordered set pairs of P(both independent) in G(n, d/n)."""
    q = 1.0 - d / n
    total = 0.0
    for first in combinations(range(n), m):
        for second in combinations(range(n), m):
            if len(set(first) & set(second)) != k:
                continue
            pairs = set(combinations(first, 2)) | set(combinations(second, 2))
            total += q ** len(pairs)
    return total


def perfect_matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    head, rest = points[0], points[1:]
    for i, partner in enumerate(rest):
        for tail in perfect_matchings(rest[:i] + rest[i + 1 :]):
            yield [(head, partner), *tail]


def reg_enumeration(n: int, d: int, m: int, k: int) -> tuple[Counter, int]:
    """
    Over every perfect matching of the nd replicas, count ordered pairs of
    independent m-sets meeting in k vertices, keyed by the number of replica
    pairs joining their private parts. Returns (counts by l, number of matchings).
    """
    by_l: Counter = Counter()
    matchings = 0
    subsets = list(combinations(range(n), m))
    for matching in perfect_matchings(list(range(n * d))):
        matchings += 1
        edges = [(a // d, b // d) for a, b in matching]
        independent = [s for s in subsets if not any(u in s and v in s for u, v in edges)]
        for first in independent:
            for second in independent:
                shared = set(first) & set(second)
                if len(shared) != k:
                    continue
                only_first = set(first) - shared
                only_second = set(second) - shared
                cross = sum(
                    1 for u, v in edges if {u, v} & only_first and {u, v} & only_second
                )
                by_l[cross] += 1
    return by_l, matchings


class TestLogBinomial:
    """Test cases for log_binomial."""

    def test_matches_math_comb(self):
        """Test agreement with exact binomials."""
        assert log_binomial(30, 12) == pytest.approx(math.log(math.comb(30, 12)), rel=1e-12)

    def test_outside_range_is_minus_infinity(self):
        """Test C(n, k) = 0 outside 0 <= k <= n."""
        assert log_binomial(3, 4) == -math.inf


class TestErdosRenyiMoment:
    """Test cases for log_expected_overlap_er."""

    def test_known_value(self):
        """Test n=4, d=1, m=2, k=1 gives 24 pairs times (3/4)^2 = 13.5."""
        value = log_expected_overlap_er(OverlapQuery(n=4, d=1, m=2, k=1)).log_value

        assert value == pytest.approx(math.log(13.5), abs=1e-12)
        assert value == pytest.approx(2.60269, abs=1e-5)

    @pytest.mark.parametrize("n,d", [(4, 1), (6, 2)])
    def test_matches_enumeration(self, n, d):
        """Test every (m, k) against brute force over all set pairs."""
        for m in range(n + 1):
            for k in range(max(0, 2 * m - n), m + 1):
                expected = er_enumeration(n, d, m, k)
                value = log_expected_overlap_er(OverlapQuery(n=n, d=d, m=m, k=k)).log_value
                assert value == pytest.approx(math.log(expected), abs=1e-9)

    def test_identical_sets(self):
        """Test k = m collapses to log C(n, m) + C(m, 2) log(1 - d/n)."""
        n, d, m = 50, 3.5, 7
        value = log_expected_overlap_er(OverlapQuery(n=n, d=d, m=m, k=m)).log_value

        assert value == pytest.approx(
            math.log(math.comb(n, m)) + math.comb(m, 2) * math.log(1 - d / n), rel=1e-12
        )

    def test_degree_must_be_below_n(self):
        """Test d >= n is rejected."""
        with pytest.raises(InvalidDegreeError):
            log_expected_overlap_er(OverlapQuery(n=4, d=4, m=1, k=0))


class TestRegularMoment:
    """Test cases for log_expected_overlap_reg and its sum over l."""

    @pytest.mark.parametrize("n,d", [(4, 1), (4, 2), (4, 3), (6, 1)])
    def test_matches_matching_enumeration(self, n, d):
        """Test every feasible (m, k, l) against all perfect matchings of the replicas."""
        for m in range(n + 1):
            for k in range(max(0, 2 * m - n), m + 1):
                by_l, matchings = reg_enumeration(n, d, m, k)
                base = OverlapQuery(n=n, d=d, m=m, k=k)
                feasible = OverlapConstraintPolicy.feasible_l_range(base)
                assert set(by_l) <= set(feasible)
                for l in feasible:  # noqa: E741
                    expected = by_l[l] / matchings
                    value = log_expected_overlap_reg(base.with_l(l)).value
                    assert value == pytest.approx(expected, rel=1e-9, abs=1e-12)

                total = log_expected_overlap_reg_total(n, d, m, k).value
                assert total == pytest.approx(sum(by_l.values()) / matchings, rel=1e-9, abs=1e-12)

    def test_total_dominates_terms(self):
        """Test the log-sum-exp is at least every individual l term."""
        total = log_expected_overlap_reg_total(40, 3, 10, 4).log_value
        base = OverlapQuery(n=40, d=3, m=10, k=4)

        for l in OverlapConstraintPolicy.feasible_l_range(base):  # noqa: E741
            assert total >= log_expected_overlap_reg(base.with_l(l)).log_value

    def test_identical_sets_single_term(self):
        """Test m = k leaves only l = 0."""
        base = OverlapQuery(n=20, d=3, m=4, k=4)

        assert list(OverlapConstraintPolicy.feasible_l_range(base)) == [0]
        assert log_expected_overlap_reg_total(20, 3, 4, 4).log_value == pytest.approx(
            log_expected_overlap_reg(base.with_l(0)).log_value
        )

    def test_l_out_of_range(self):
        """Test l above d(m - k) raises an l-range error."""
        with pytest.raises(OverlapConstraintError, match="l-range"):
            log_expected_overlap_reg(OverlapQuery(n=6, d=3, m=2, k=1, l=4))

    def test_parity(self):
        """Test odd nd raises a parity error."""
        with pytest.raises(OverlapConstraintError, match="parity"):
            log_expected_overlap_reg_total(5, 3, 2, 1)
