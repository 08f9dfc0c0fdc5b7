"""Unit tests for Settings."""

from config.settings import Settings


class TestSettings:
    """Test cases for Settings."""

    def test_defaults(self, monkeypatch):
        """Test documented defaults."""
        monkeypatch.delenv("LOCALFACTOR_THREADS", raising=False)
        settings = Settings(_env_file=None)

        assert settings.zhat_grid_points == 2001
        assert settings.theory_tolerance == 1e-6
        assert settings.window_d_ceiling == 2**40
        assert settings.default_p_grid[0] == 0.0
        assert settings.default_p_grid[-1] == 1.0
        assert len(settings.default_p_grid) == 21

    def test_environment_overrides(self, monkeypatch):
        """Test LOCALFACTOR_ variables override defaults."""
        monkeypatch.setenv("LOCALFACTOR_THREADS", "3")
        monkeypatch.setenv("LOCALFACTOR_MAX_TREE_VERTICES", "1000")

        settings = Settings(_env_file=None)

        assert settings.threads == 3
        assert settings.resolved_threads() == 3
        assert settings.max_tree_vertices == 1000

    def test_comma_separated_grid(self, monkeypatch):
        """Test the p grid is read from a comma-separated variable."""
        monkeypatch.setenv("LOCALFACTOR_DEFAULT_P_GRID", "0,0.25, 1")

        assert Settings(_env_file=None).default_p_grid == [0.0, 0.25, 1.0]

    def test_threads_fall_back_to_cores(self, monkeypatch):
        """Test no thread setting resolves to at least one worker."""
        monkeypatch.delenv("LOCALFACTOR_THREADS", raising=False)

        assert Settings(_env_file=None).resolved_threads() >= 1
