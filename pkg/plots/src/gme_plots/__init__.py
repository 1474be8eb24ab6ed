"""Figures from grover-gme output files."""
from .figures import CurveSeries, FigureSpec, InputError, ProfileSeries, build_figure, load_curve, load_profile, render

__all__ = [
    "CurveSeries",
    "FigureSpec",
    "InputError",
    "ProfileSeries",
    "build_figure",
    "load_curve",
    "load_profile",
    "render",
]
