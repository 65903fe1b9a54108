"""Exact graded components of local cohomology of bigraded hypersurface rings."""

__version__ = "0.1.0"
