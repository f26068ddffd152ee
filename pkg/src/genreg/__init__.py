"""Generic regular decomposition of parametric zero-dimensional polynomial systems."""

__version__ = "0.1.0"
