"""Monte Carlo estimate value objects."""

import math
from dataclasses import dataclass, field

from localfactor.domain.errors.domain_errors import InvalidProbabilityError
from localfactor.domain.value_objects.rule_descriptor import RuleDescriptor


def binomial_std_error(estimate: float, trials: int) -> float:
    """sqrt(q(1-q)/trials)."""
    return math.sqrt(max(estimate * (1.0 - estimate), 0.0) / trials)


@dataclass(frozen=True)
class DensityEstimate:
    """Root-acceptance probability estimate on the canonical tree."""

    alpha_hat: float
    trials: int
    std_error: float

    def __post_init__(self) -> None:
        """Validate estimate."""
        if self.trials < 1:
            raise ValueError("An estimate needs at least one trial")
        if not 0.0 <= self.alpha_hat <= 1.0:
            raise InvalidProbabilityError(f"alpha_hat must lie in [0, 1], got {self.alpha_hat}")

    @classmethod
    def from_counts(cls, accepted: int, trials: int) -> "DensityEstimate":
        """Build from a success count."""
        alpha = accepted / trials
        return cls(alpha_hat=alpha, trials=trials, std_error=binomial_std_error(alpha, trials))


@dataclass(frozen=True)
class GammaEstimate:
    """Estimate of gamma(p), the probability both coupled decorations accept the root."""

    p: float
    gamma_hat: float
    std_error: float
    trials: int

    @classmethod
    def from_counts(cls, p: float, both: int, trials: int) -> "GammaEstimate":
        """Build from a joint-acceptance count."""
        gamma = both / trials
        return cls(p=p, gamma_hat=gamma, std_error=binomial_std_error(gamma, trials), trials=trials)


CURVE_CSV_COLUMNS = ("p", "gamma_hat", "std_error", "trials", "rule", "d", "r", "seed")


@dataclass(frozen=True)
class GammaCurve:
    """gamma(p) over a p grid, estimated with common random numbers."""

    grid: tuple[float, ...]
    gamma_hat: tuple[float, ...]
    std_errors: tuple[float, ...]
    trials: int
    rule: RuleDescriptor
    d: int
    seed: int

    def __post_init__(self) -> None:
        """Validate curve."""
        if not (len(self.grid) == len(self.gamma_hat) == len(self.std_errors)):
            raise ValueError("Grid, estimates and errors must align")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("Grid must be strictly increasing")
        if any(not 0.0 <= g <= 1.0 for g in self.gamma_hat):
            raise ValueError("Estimates must lie in [0, 1]")

    @property
    def lipschitz_constant(self) -> float:
        """d^(r+1)."""
        return float(self.d) ** (self.rule.radius + 1)

    def lipschitz_violations(self) -> list[tuple[int, int]]:
        """Adjacent index pairs with |dgamma| > d^(r+1) dp + 6 max std_error."""
        slack = 6.0 * max(self.std_errors, default=0.0)
        bad = []
        for i in range(len(self.grid) - 1):
            dp = self.grid[i + 1] - self.grid[i]
            dg = abs(self.gamma_hat[i + 1] - self.gamma_hat[i])
            if dg > self.lipschitz_constant * dp + slack:
                bad.append((i, i + 1))
        return bad

    def at(self, p: float) -> GammaEstimate:
        """Estimate at a grid point."""
        i = self.grid.index(p)
        return GammaEstimate(
            p=p, gamma_hat=self.gamma_hat[i], std_error=self.std_errors[i], trials=self.trials
        )

    def to_csv_rows(self) -> list[dict[str, object]]:
        """Rows keyed by CURVE_CSV_COLUMNS."""
        return [
            {
                "p": p,
                "gamma_hat": g,
                "std_error": se,
                "trials": self.trials,
                "rule": self.rule.format(),
                "d": self.d,
                "r": self.rule.radius,
                "seed": self.seed,
            }
            for p, g, se in zip(self.grid, self.gamma_hat, self.std_errors)
        ]


@dataclass(frozen=True)
class BisectionResult:
    """Outcome of the search for p with gamma(p) close to a target."""

    p: float
    gamma_hat: float
    std_error: float
    iterations: int
    anomalies: tuple[float, ...] = field(default=())
