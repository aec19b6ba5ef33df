"""Figure rendering for qlrc CSV output."""

from .render import FigureSpec, load_figure_data, render

__all__ = ["FigureSpec", "load_figure_data", "render"]
