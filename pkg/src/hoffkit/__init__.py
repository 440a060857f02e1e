"""Exact spectral and structural tools for Hoffman graphs."""

from .graphs import EdgeSignedGraph, GraphError, HoffmanGraph, PlainGraph, hoffman_graph
from .spectral import Relation, RationalSymmetricMatrix, b_matrix, classify_lambda_min, matrix

__all__ = ["EdgeSignedGraph", "GraphError", "HoffmanGraph", "PlainGraph", "hoffman_graph",
           "Relation", "RationalSymmetricMatrix", "b_matrix", "classify_lambda_min", "matrix"]
__version__ = "0.1.0"
