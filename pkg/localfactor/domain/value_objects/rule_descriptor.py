"""Rule descriptor value object."""

from dataclasses import dataclass, field
from enum import Enum

from localfactor.domain.errors.domain_errors import InvalidRuleError


class RuleFamily(str, Enum):
    """Built-in local rule families."""

    LOCAL_MIN = "local-min"
    MULTI_ROUND_GREEDY = "multi-round-greedy"
    CUSTOM_TABLE = "custom-table"


@dataclass(frozen=True)
class RuleDescriptor:
    """
    Text-serializable description of a local rule.

    Canonical form: `rule=<family>;r=<radius>;params=<k=v,...>`.
    Short CLI forms are also accepted: `local-min`,
    `multi-round-greedy:T=3`, `custom-table:deg3=0.5,default=1`.
    """

    family: RuleFamily
    radius: int
    params: tuple[tuple[str, str], ...] = field(default=())

    def __post_init__(self) -> None:
        """Validate family-specific parameters."""
        if self.radius < 0:
            raise InvalidRuleError(f"Radius cannot be negative, got {self.radius}")
        keys = [k for k, _ in self.params]
        if len(set(keys)) != len(keys):
            raise InvalidRuleError("Duplicate rule parameter")
        if self.family is RuleFamily.LOCAL_MIN:
            if self.params:
                raise InvalidRuleError("local-min takes no parameters")
            if self.radius != 1:
                raise InvalidRuleError("local-min has radius 1")
        elif self.family is RuleFamily.MULTI_ROUND_GREEDY:
            if keys != ["T"]:
                raise InvalidRuleError("multi-round-greedy takes exactly one parameter T")
            rounds = self.rounds
            if rounds < 1:
                raise InvalidRuleError(f"Round count must be at least 1, got {rounds}")
            if self.radius != rounds:
                raise InvalidRuleError("multi-round-greedy radius must equal T")
        else:
            if self.radius != 1:
                raise InvalidRuleError("custom-table has radius 1")
            self.thresholds()

    @property
    def rounds(self) -> int:
        """Round count T of a multi-round-greedy rule."""
        value = dict(self.params).get("T")
        if value is None:
            raise InvalidRuleError(f"{self.family.value} has no round count")
        try:
            return int(value)
        except ValueError:
            raise InvalidRuleError(f"Round count must be an integer, got {value!r}")

    def thresholds(self) -> tuple[dict[int, float], float]:
        """
        Per-degree acceptance thresholds of a custom-table rule.

        Returns:
            (degree -> threshold, default threshold)
        """
        table: dict[int, float] = {}
        default = 1.0
        for key, raw in self.params:
            try:
                tau = float(raw)
            except ValueError:
                raise InvalidRuleError(f"Threshold must be a number, got {raw!r}")
            if not 0.0 <= tau <= 1.0:
                raise InvalidRuleError(f"Threshold must lie in [0, 1], got {tau}")
            if key == "default":
                default = tau
            elif key.startswith("deg") and key[3:].isdigit():
                table[int(key[3:])] = tau
            else:
                raise InvalidRuleError(f"Unknown custom-table key {key!r}")
        return table, default

    @classmethod
    def local_min(cls) -> "RuleDescriptor":
        """The radius-1 local minimum rule."""
        return cls(family=RuleFamily.LOCAL_MIN, radius=1)

    @classmethod
    def multi_round_greedy(cls, rounds: int) -> "RuleDescriptor":
        """T-round greedy rule."""
        return cls(
            family=RuleFamily.MULTI_ROUND_GREEDY, radius=rounds, params=(("T", str(rounds)),)
        )

    @classmethod
    def parse(cls, text: str) -> "RuleDescriptor":
        """
        Parse either the canonical or the short form.

        Raises:
            InvalidRuleError: If the text is malformed
        """
        text = text.strip()
        if not text:
            raise InvalidRuleError("Empty rule descriptor")
        if text.startswith("rule="):
            return cls._parse_canonical(text)
        family_text, _, param_text = text.partition(":")
        family = cls._family(family_text)
        params = cls._parse_params(param_text)
        radius = 1
        if family is RuleFamily.MULTI_ROUND_GREEDY:
            rounds = dict(params).get("T")
            if rounds is None:
                raise InvalidRuleError("multi-round-greedy needs T, e.g. multi-round-greedy:T=3")
            try:
                radius = int(rounds)
            except ValueError:
                raise InvalidRuleError(f"Round count must be an integer, got {rounds!r}")
        return cls(family=family, radius=radius, params=params)

    @classmethod
    def _parse_canonical(cls, text: str) -> "RuleDescriptor":
        fields: dict[str, str] = {}
        for part in text.split(";"):
            key, sep, value = part.partition("=")
            if not sep:
                raise InvalidRuleError(f"Malformed descriptor field {part!r}")
            fields[key.strip()] = value.strip()
        if set(fields) - {"rule", "r", "params"} or "rule" not in fields or "r" not in fields:
            raise InvalidRuleError(f"Descriptor needs rule=, r= and optional params=: {text!r}")
        try:
            radius = int(fields["r"])
        except ValueError:
            raise InvalidRuleError(f"Radius must be an integer, got {fields['r']!r}")
        return cls(
            family=cls._family(fields["rule"]),
            radius=radius,
            params=cls._parse_params(fields.get("params", "")),
        )

    @staticmethod
    def _family(text: str) -> RuleFamily:
        try:
            return RuleFamily(text.strip())
        except ValueError:
            known = ", ".join(f.value for f in RuleFamily)
            raise InvalidRuleError(f"Unknown rule family {text!r} (known: {known})")

    @staticmethod
    def _parse_params(text: str) -> tuple[tuple[str, str], ...]:
        params = []
        for item in text.split(","):
            if not item.strip():
                continue
            key, sep, value = item.partition("=")
            if not sep or not key.strip():
                raise InvalidRuleError(f"Malformed rule parameter {item!r}")
            params.append((key.strip(), value.strip()))
        return tuple(params)

    def format(self) -> str:
        """Canonical text form."""
        params = ",".join(f"{k}={v}" for k, v in self.params)
        return f"rule={self.family.value};r={self.radius};params={params}"

    def __str__(self) -> str:
        """String representation."""
        return self.format()
