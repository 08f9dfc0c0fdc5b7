"""Settings package for localfactor."""
