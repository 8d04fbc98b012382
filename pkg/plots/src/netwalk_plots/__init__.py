from .figures import (
    FIGURE_KINDS,
    FigureSpec,
    SchemaError,
    knowledge_series,
    length_series,
    load_rows,
    nmi_series,
    render,
    scatter_points,
)

__all__ = [
    "FIGURE_KINDS",
    "FigureSpec",
    "SchemaError",
    "knowledge_series",
    "length_series",
    "load_rows",
    "nmi_series",
    "render",
    "scatter_points",
]
