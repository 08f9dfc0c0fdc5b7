"""Edge-list header value object."""

import re
from dataclasses import dataclass

from localfactor.domain.errors.domain_errors import EdgeListFormatError
from localfactor.domain.value_objects.overlap_query import GraphModel

HEADER_PATTERN = re.compile(
    r"^# localfactor-graph v1 n=(?P<n>\d+) model=(?P<model>reg|er) d=(?P<d>[0-9.eE+-]+) "
    r"seed=(?P<seed>\d+) loops=(?P<loops>\d+) multi=(?P<multi>\d+)$"
)


@dataclass(frozen=True)
class EdgeListHeader:
    """First line of an edge-list file."""

    n: int
    model: GraphModel
    d: float
    seed: int
    loops: int = 0
    multi: int = 0

    def format(self) -> str:
        """Header line without the trailing newline."""
        d = int(self.d) if float(self.d).is_integer() else self.d
        return (
            f"# localfactor-graph v1 n={self.n} model={self.model.value} d={d} "
            f"seed={self.seed} loops={self.loops} multi={self.multi}"
        )

    @classmethod
    def parse(cls, line: str) -> "EdgeListHeader":
        """
        Parse a header line.

        Raises:
            EdgeListFormatError: If the line does not match the format
        """
        match = HEADER_PATTERN.match(line.rstrip("\n"))
        if match is None:
            raise EdgeListFormatError(f"line 1: malformed header {line.rstrip()!r}")
        try:
            d = float(match["d"])
        except ValueError:
            raise EdgeListFormatError(f"line 1: bad degree {match['d']!r}")
        return cls(
            n=int(match["n"]),
            model=GraphModel(match["model"]),
            d=d,
            seed=int(match["seed"]),
            loops=int(match["loops"]),
            multi=int(match["multi"]),
        )
