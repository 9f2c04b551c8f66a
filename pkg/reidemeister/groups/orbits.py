"""
Orbit partitions of finite actions given as lists of edges x -> y.

A vectorized union-find: every vertex carries a label naming a vertex of its
component; labels are lowered along edges and shortcut by pointer jumping until
stable. The fixed point labels each component by its smallest element, so the
result does not depend on the order in which edges are listed.
"""

from typing import Tuple

import numpy as np


def orbit_labels(size: int, sources: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Return, for each point, the smallest point of its orbit"""
    sources = np.asarray(sources, dtype=np.int64).ravel()
    targets = np.asarray(targets, dtype=np.int64).ravel()
    labels = np.arange(size, dtype=np.int64)
    while True:
        lowered = labels.copy()
        np.minimum.at(lowered, sources, labels[targets])
        np.minimum.at(lowered, targets, labels[sources])
        # pointer jumping keeps every label inside its component
        lowered = lowered[lowered]
        if np.array_equal(lowered, labels):
            return labels
        labels = lowered


def canonical_partition(labels: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Renumber orbit labels 0..r-1 in order of their smallest element.

    Returns (class_of, representatives) where representatives[i] is the smallest
    element of class i.
    """
    representatives = np.unique(labels)
    class_of = np.searchsorted(representatives, labels)
    return class_of, representatives
