"""Dependency injection container for the CLI."""

from pathlib import Path
from typing import Optional

from config.settings import Settings, settings as default_settings
from localfactor.application.ports.clock_port import ClockPort
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.application.ports.random_stream_port import RandomStreamPort
from localfactor.application.ports.result_sink_port import ResultSinkPort
from localfactor.application.ports.trial_executor_port import TrialExecutorPort
from localfactor.application.use_cases._monte_carlo import MonteCarloLimits
from localfactor.application.use_cases.coupling.estimate_gamma import EstimateGammaUseCase
from localfactor.application.use_cases.coupling.find_p_for_gamma import FindPForGammaUseCase
from localfactor.application.use_cases.coupling.gamma_sweep import GammaSweepUseCase
from localfactor.application.use_cases.coupling.overlap_experiment import OverlapExperimentUseCase
from localfactor.application.use_cases.graphs.generate_graph import GenerateGraphUseCase
from localfactor.application.use_cases.harness.clustering_demo import ClusteringDemoUseCase
from localfactor.application.use_cases.localalg.estimate_density import EstimateDensityUseCase
from localfactor.application.use_cases.localalg.measure_run import MeasureRunUseCase
from localfactor.application.use_cases.moments.evaluate_overlap_moment import (
    EvaluateOverlapMomentUseCase,
)
from localfactor.application.use_cases.moments.find_min_d import FindMinDUseCase
from localfactor.application.use_cases.moments.scan_rate import ScanRateUseCase
from localfactor.application.use_cases.moments.solve_window import SolveWindowUseCase
from localfactor.infrastructure.clock.system_clock import SystemClock
from localfactor.infrastructure.observability.experiment_logger import StructuredExperimentLogger
from localfactor.infrastructure.parallel.trial_executors import ThreadPoolTrialExecutor
from localfactor.infrastructure.random.philox_streams import PhiloxStreamFactory
from localfactor.infrastructure.storage.local_result_sink import LocalResultSink


class Container:
    """Dependency injection container."""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        threads: Optional[int] = None,
        output_dir: Optional[Path] = None,
        clock: Optional[ClockPort] = None,
    ) -> None:
        self.settings = settings or default_settings
        self.threads = threads or self.settings.resolved_threads()
        self.output_dir = Path(output_dir) if output_dir else self.settings.output_dir

        # Ports (singletons)
        self._clock: ClockPort = clock or SystemClock()
        self._streams: RandomStreamPort = PhiloxStreamFactory()
        self._executor: TrialExecutorPort = ThreadPoolTrialExecutor(self.threads)
        self._experiment_log: ExperimentLogPort = StructuredExperimentLogger(self._clock)
        self._sink: ResultSinkPort = LocalResultSink(self.output_dir)
        self._limits = MonteCarloLimits(
            trial_block_size=self.settings.trial_block_size,
            max_block_cells=self.settings.max_block_cells,
            max_tree_vertices=self.settings.max_tree_vertices,
        )

    def get_clock(self) -> ClockPort:
        """Get clock."""
        return self._clock

    def get_streams(self) -> RandomStreamPort:
        """Get random stream factory."""
        return self._streams

    def get_executor(self) -> TrialExecutorPort:
        """Get trial executor."""
        return self._executor

    def get_experiment_log(self) -> ExperimentLogPort:
        """Get experiment logger."""
        return self._experiment_log

    def get_result_sink(self) -> ResultSinkPort:
        """Get result sink."""
        return self._sink

    # Use cases
    def get_generate_graph_use_case(self) -> GenerateGraphUseCase:
        """Get GenerateGraphUseCase."""
        return GenerateGraphUseCase(streams=self._streams, experiment_log=self._experiment_log)

    def get_estimate_density_use_case(self) -> EstimateDensityUseCase:
        """Get EstimateDensityUseCase."""
        return EstimateDensityUseCase(
            streams=self._streams,
            executor=self._executor,
            experiment_log=self._experiment_log,
            limits=self._limits,
        )

    def get_measure_run_use_case(self) -> MeasureRunUseCase:
        """Get MeasureRunUseCase."""
        return MeasureRunUseCase(
            streams=self._streams,
            executor=self._executor,
            experiment_log=self._experiment_log,
        )

    def get_estimate_gamma_use_case(self) -> EstimateGammaUseCase:
        """Get EstimateGammaUseCase."""
        return EstimateGammaUseCase(
            streams=self._streams,
            executor=self._executor,
            experiment_log=self._experiment_log,
            limits=self._limits,
        )

    def get_gamma_sweep_use_case(self) -> GammaSweepUseCase:
        """Get GammaSweepUseCase."""
        return GammaSweepUseCase(
            streams=self._streams,
            executor=self._executor,
            experiment_log=self._experiment_log,
            limits=self._limits,
        )

    def get_find_p_for_gamma_use_case(self) -> FindPForGammaUseCase:
        """Get FindPForGammaUseCase."""
        return FindPForGammaUseCase(
            estimate_gamma=self.get_estimate_gamma_use_case(),
            experiment_log=self._experiment_log,
            max_iterations=self.settings.bisection_max_iterations,
        )

    def get_overlap_experiment_use_case(self) -> OverlapExperimentUseCase:
        """Get OverlapExperimentUseCase."""
        return OverlapExperimentUseCase(
            streams=self._streams,
            executor=self._executor,
            experiment_log=self._experiment_log,
        )

    def get_evaluate_overlap_moment_use_case(self) -> EvaluateOverlapMomentUseCase:
        """Get EvaluateOverlapMomentUseCase."""
        return EvaluateOverlapMomentUseCase(experiment_log=self._experiment_log)

    def get_scan_rate_use_case(self) -> ScanRateUseCase:
        """Get ScanRateUseCase."""
        return ScanRateUseCase(experiment_log=self._experiment_log)

    def get_solve_window_use_case(self, grid_points: Optional[int] = None) -> SolveWindowUseCase:
        """Get SolveWindowUseCase."""
        return SolveWindowUseCase(
            experiment_log=self._experiment_log,
            grid_points=grid_points or self.settings.zhat_grid_points,
            theory_tolerance=self.settings.theory_tolerance,
        )

    def get_find_min_d_use_case(self) -> FindMinDUseCase:
        """Get FindMinDUseCase."""
        return FindMinDUseCase(
            experiment_log=self._experiment_log,
            grid_points=self.settings.zhat_grid_points,
            theory_tolerance=self.settings.theory_tolerance,
            d_start=self.settings.window_d_start,
            d_ceiling=self.settings.window_d_ceiling,
        )

    def get_clustering_demo_use_case(self) -> ClusteringDemoUseCase:
        """Get ClusteringDemoUseCase."""
        return ClusteringDemoUseCase(
            estimate_density=self.get_estimate_density_use_case(),
            gamma_sweep=self.get_gamma_sweep_use_case(),
            overlap_experiment=self.get_overlap_experiment_use_case(),
            experiment_log=self._experiment_log,
            grid_points=self.settings.zhat_grid_points,
            theory_tolerance=self.settings.theory_tolerance,
        )
