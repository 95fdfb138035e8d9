"""Exact arithmetic and theorem checks for Jacobians of y^N = f(x) over finite fields."""

__version__ = "0.1.0"
