"""Philox-based random streams."""

import numpy as np

from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.ports.random_stream_port import RandomStreamPort

SEED_LIMIT = 2**64


class PhiloxStreamFactory(RandomStreamPort):
    """Counter-based generators keyed by (seed, *key) through a SeedSequence."""

    def stream(self, seed: int, *key: int) -> np.random.Generator:
        if not 0 <= seed < SEED_LIMIT:
            raise ValidationError(f"seed must lie in [0, 2^64), got {seed}")
        if any(k < 0 for k in key):
            raise ValidationError(f"stream key components must be nonnegative, got {key}")
        return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, *key])))
