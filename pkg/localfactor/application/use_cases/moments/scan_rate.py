"""Scan rate use case."""

import numpy as np

from localfactor.application.dto.moments_dto import RateScanDTO, RateScanRequest
from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.domain.services.window_solver import rate_scan


class ScanRateUseCase:
    """Rate along a zhat grid at set density s = (1 + beta) log d / d."""

    def __init__(self, experiment_log: ExperimentLogPort) -> None:
        self.experiment_log = experiment_log

    def execute(self, request: RateScanRequest) -> RateScanDTO:
        if request.d <= 1:
            raise ValidationError(f"rate scans need d > 1, got {request.d}")
        if not 0.0 < request.beta <= 1.0:
            raise ValidationError(f"beta must lie in (0, 1], got {request.beta}")
        if not request.zhat:
            raise ValidationError("the zhat grid cannot be empty")
        points = rate_scan(request.d, request.beta, request.model, np.asarray(request.zhat))
        self.experiment_log.log_event(
            "rate.scanned",
            {
                "model": request.model.value,
                "d": request.d,
                "beta": request.beta,
                "points": len(points),
                "negative": sum(1 for p in points if p.is_negative),
            },
        )
        return RateScanDTO(
            model=request.model,
            d=request.d,
            beta=request.beta,
            zhat=list(request.zhat),
            points=points,
        )
