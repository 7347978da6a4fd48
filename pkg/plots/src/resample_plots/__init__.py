"""Headless chart generation for causal-resample experiment outputs."""

from .charts import (
    ChartDataError,
    HistogramResult,
    PlotSpec,
    RenderResult,
    render,
    render_pvalue_hist,
)

__version__ = "0.1.0"
