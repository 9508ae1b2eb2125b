# -*- coding: utf-8 -*-
"""Mathematical helper functions shared by the engines."""
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


def mask_of(indices):
    """Bitmask with the given indices set."""
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def bits(mask):
    """Indices set in `mask`, ascending."""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def canonical_partition(labels):
    """Least-representative form of a block labelling.

    Parameters
    ----------
    labels : sequence
        Block label of each element; equal labels share a block.

    Returns
    -------
    : tuple of int
        For each element, the least index in its block.
    """
    first = {}
    return tuple(first.setdefault(label, index)
                 for index, label in enumerate(labels))


def partition_blocks(partition):
    """Blocks of a least-representative partition, in representative order."""
    blocks = {}
    for index, representative in enumerate(partition):
        blocks.setdefault(representative, []).append(index)
    return tuple(tuple(block) for block in blocks.values())


def set_partitions(size):
    """All partitions of ``range(size)`` in least-representative form.

    Enumerates restricted growth strings, so the partitions come out in a
    fixed order with the finest first."""
    if size == 0:
        yield ()
        return
    growth = [0] * size
    maxima = [0] * size

    def extend(position):
        if position == size:
            yield canonical_partition(growth)
            return
        for value in range(maxima[position - 1] + 2):
            growth[position] = value
            maxima[position] = max(maxima[position - 1], value)
            yield from extend(position + 1)

    partitions = list(extend(1))
    yield from sorted(partitions, key=lambda part: (-len(set(part)), part))


def components_partition(size, pairs):
    """Least-representative partition generated by `pairs`.

    Uses connected components of the undirected pair graph."""
    pairs = list(pairs)
    if not pairs:
        return tuple(range(size))
    rows, cols = zip(*pairs)
    graph = coo_matrix(
        (np.ones(len(rows), dtype=bool), (rows, cols)), shape=(size, size))
    _, labels = connected_components(graph, directed=False)
    return canonical_partition(labels)


def transitive_closure(relation):
    """Reflexive-transitive closure of a boolean matrix (Warshall)."""
    closure = np.array(relation, dtype=bool)
    np.fill_diagonal(closure, True)
    for middle in range(len(closure)):
        closure |= np.outer(closure[:, middle], closure[middle])
    return closure


class UnionFind:
    """Disjoint sets over ``range(size)`` with least representatives."""

    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        """Merge the sets of `x` and `y`; returns `True` if they differed."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True

    def partition(self):
        return tuple(self.find(x) for x in range(len(self.parent)))
