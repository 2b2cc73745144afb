"""Scikit-learn style estimators wrapping the decomposition functions.

Every estimator follows the fit/attributes convention: ``fit(X)`` takes a
graph, stores results in trailing-underscore attributes, and returns
``self``, so the classes compose with ``sklearn.base.clone``,
``get_params``/``set_params``, and pipelines. ``fit_predict`` mirrors the
clustering API and returns the per-entity decomposition values.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .baselines import (
    core_decompose,
    fractional_core_decompose,
    nucleus23_decompose,
)
from .butterflies import count_per_edge, count_per_vertex
from .hierarchy import build_hierarchy
from .projection import project_unweighted, project_weighted
from .tip import tip_decompose
from .validation import check_bipartite_graph, check_projected_graph
from .wing import wing_decompose

__all__ = [
    "ButterflyCounter",
    "TipDecomposition",
    "WingDecomposition",
    "BipartiteProjector",
    "CoreDecomposition",
    "FractionalCoreDecomposition",
    "TriangleNucleusDecomposition",
]


class ButterflyCounter(BaseEstimator):
    """Count butterfly participation per primary vertex or per edge.

    Parameters
    ----------
    mode : {"vertex", "edge"}
        Which entities to index the counts by.

    Attributes
    ----------
    counts_ : ndarray of int64
    total_ : int
        Number of distinct butterflies in the graph.
    """

    def __init__(self, mode: str = "vertex"):
        self.mode = mode

    def fit(self, X, y=None):
        check_bipartite_graph(X)
        if self.mode not in ("vertex", "edge"):
            raise ValueError(f"mode must be 'vertex' or 'edge', got {self.mode!r}")
        counter = count_per_vertex if self.mode == "vertex" else count_per_edge
        counts = counter(X)
        self.counts_ = np.asarray(counts.values, dtype=np.int64)
        self.total_ = counts.total
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).counts_


class TipDecomposition(BaseEstimator):
    """Tip numbers of the primary side via butterfly peeling.

    Parameters
    ----------
    with_hierarchy : bool
        Also build the forest of maximal k-tips into ``tree_``.

    Attributes
    ----------
    tip_numbers_ : ndarray of int64
    peel_order_ : ndarray of int64
    initial_counts_ : ndarray of int64
    result_ : TipResult
    tree_ : NucleusTree, only when ``with_hierarchy``.
    """

    def __init__(self, with_hierarchy: bool = False):
        self.with_hierarchy = with_hierarchy

    def fit(self, X, y=None):
        check_bipartite_graph(X)
        result = tip_decompose(X)
        self.result_ = result
        self.tip_numbers_ = np.asarray(result.tip_numbers, dtype=np.int64)
        self.peel_order_ = np.asarray(result.peel_order, dtype=np.int64)
        self.initial_counts_ = np.asarray(result.initial_counts, dtype=np.int64)
        if self.with_hierarchy:
            self.tree_ = build_hierarchy(X, result)
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).tip_numbers_


class WingDecomposition(BaseEstimator):
    """Wing numbers of the edge set via butterfly peeling.

    Attributes mirror :class:`TipDecomposition` with ``wing_numbers_``
    indexed by dense edge id.
    """

    def __init__(self, with_hierarchy: bool = False):
        self.with_hierarchy = with_hierarchy

    def fit(self, X, y=None):
        check_bipartite_graph(X)
        result = wing_decompose(X)
        self.result_ = result
        self.wing_numbers_ = np.asarray(result.wing_numbers, dtype=np.int64)
        self.peel_order_ = np.asarray(result.peel_order, dtype=np.int64)
        self.initial_counts_ = np.asarray(result.initial_counts, dtype=np.int64)
        if self.with_hierarchy:
            self.tree_ = build_hierarchy(X, result)
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).wing_numbers_


class BipartiteProjector(BaseEstimator, TransformerMixin):
    """Transformer from a bipartite graph to its one-mode projection."""

    def __init__(self, weighted: bool = False):
        self.weighted = weighted

    def fit(self, X, y=None):
        check_bipartite_graph(X)
        return self

    def transform(self, X):
        check_bipartite_graph(X)
        return project_weighted(X) if self.weighted else project_unweighted(X)


class CoreDecomposition(BaseEstimator):
    """Classic k-core numbers of an unweighted projection."""

    def fit(self, X, y=None):
        check_projected_graph(X, weighted=False)
        result = core_decompose(X)
        self.result_ = result
        self.core_numbers_ = np.asarray(result.core_numbers, dtype=np.int64)
        self.peel_order_ = np.asarray(result.peel_order, dtype=np.int64)
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).core_numbers_


class FractionalCoreDecomposition(BaseEstimator):
    """Fractional core values of a weighted projection."""

    def fit(self, X, y=None):
        check_projected_graph(X, weighted=True)
        result = fractional_core_decompose(X)
        self.result_ = result
        self.core_numbers_ = np.asarray(result.core_numbers, dtype=np.float64)
        self.peel_order_ = np.asarray(result.peel_order, dtype=np.int64)
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).core_numbers_


class TriangleNucleusDecomposition(BaseEstimator):
    """Triangle-peeling nucleus values per projected edge."""

    def fit(self, X, y=None):
        check_projected_graph(X, weighted=False)
        result = nucleus23_decompose(X)
        self.result_ = result
        self.nucleus_numbers_ = np.asarray(result.nucleus_numbers, dtype=np.int64)
        self.triangle_counts_ = np.asarray(result.triangle_counts, dtype=np.int64)
        self.edge_list_ = np.asarray(X.edge_list, dtype=np.int64)
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).nucleus_numbers_
