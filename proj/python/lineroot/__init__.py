"""Roots of line graphs of multigraphs."""

from ._lineroot import (
    LineMode,
    MultiGraph,
    NotLineGraphError,
    RootResult,
    SimpleGraph,
    delta0_collapse,
    emit_root,
    find_delta0,
    format_multigraph,
    format_simple_graph,
    geq1_line_graph,
    is_delta0_free,
    is_generalized_line_graph,
    l1_line_graph,
    parse_multigraph,
    parse_root,
    parse_simple_graph,
    reconstruct_root,
    satisfies_glg_conditions,
    twin_classes,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
