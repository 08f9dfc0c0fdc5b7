"""Evaluate overlap moment use case."""

from localfactor.application.dto.moments_dto import MomentRequest, MomentTableDTO
from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.domain.services.overlap_moments import (
    log_expected_overlap_er,
    log_expected_overlap_reg,
    log_expected_overlap_reg_total,
)
from localfactor.domain.value_objects.overlap_query import (
    GraphModel,
    LogExpectation,
    OverlapQuery,
)


class EvaluateOverlapMomentUseCase:
    """log E|Overlap| for one k, or for every k compatible with n and m."""

    def __init__(self, experiment_log: ExperimentLogPort) -> None:
        self.experiment_log = experiment_log

    def execute(self, request: MomentRequest) -> MomentTableDTO:
        if request.m < 0 or request.m > request.n:
            raise ValidationError(f"m must lie in [0, n], got m={request.m}, n={request.n}")
        ks = (
            [request.k]
            if request.k is not None
            else list(range(max(0, 2 * request.m - request.n), request.m + 1))
        )
        rows = [self._evaluate(request, k) for k in ks]
        self.experiment_log.log_event(
            "moment.evaluated",
            {
                "model": request.model.value,
                "n": request.n,
                "d": request.d,
                "m": request.m,
                "k": request.k,
                "l": request.l,
                "rows": len(rows),
            },
        )
        return MomentTableDTO(model=request.model, rows=rows)

    @staticmethod
    def _evaluate(request: MomentRequest, k: int) -> LogExpectation:
        query = OverlapQuery(n=request.n, d=request.d, m=request.m, k=k, l=request.l)
        if request.model is GraphModel.ER:
            return log_expected_overlap_er(query)
        if request.l is not None:
            return log_expected_overlap_reg(query)
        if not float(request.d).is_integer():
            raise ValidationError(f"the regular model needs an integer d, got {request.d}")
        return log_expected_overlap_reg_total(request.n, int(request.d), request.m, k)
