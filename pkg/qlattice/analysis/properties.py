# -*- coding: utf-8 -*-
"""Finite lattice property checks."""
import networkx as nx
import numpy as np

from ..types.lattice import LatticeProperties


def lattice_properties(lattice):
    """Semidistributivity, (co)atomisticity and boundedness of `lattice`."""
    dual = lattice.dual()
    return LatticeProperties(
        sd_meet=meet_semidistributive(lattice),
        sd_join=meet_semidistributive(dual),
        atomistic=atomistic(lattice),
        coatomistic=atomistic(dual),
        lower_bounded=lower_bounded(lattice),
        upper_bounded=lower_bounded(dual))


def meet_semidistributive(lattice):
    """``x∧y = x∧z`` implies ``x∧y = x∧(y∨z)``, over all triples."""
    meet, join = lattice.meet, lattice.join
    for x in range(lattice.size):
        row = meet[x]
        equal = row[:, np.newaxis] == row[np.newaxis, :]
        distributed = meet[x][join] == row[:, np.newaxis]
        if (equal & ~distributed).any():
            return False
    return True


def atomistic(lattice):
    """Every element is the join of the atoms below it."""
    atoms = lattice.atoms()
    return all(
        lattice.join_all(atom for atom in atoms if lattice.leq[atom, x]) == x
        for x in range(lattice.size))


def join_irreducibles(lattice):
    """Mapping of each join-irreducible to its unique lower cover."""
    return {x: lower[0] for x in range(lattice.size)
            for lower in [lattice.lower_covers(x)] if len(lower) == 1}


def dependency_graph(lattice):
    """Join-dependency relation on join-irreducibles.

    ``p D q`` for ``p != q`` iff some ``x`` has ``p <= q ∨ x`` but not
    ``p <= q_* ∨ x``, where ``q_*`` is the lower cover of ``q``."""
    irreducibles = join_irreducibles(lattice)
    leq, join = lattice.leq, lattice.join
    graph = nx.DiGraph()
    graph.add_nodes_from(irreducibles)
    for p in irreducibles:
        for q, lower in irreducibles.items():
            if p != q and (leq[p, join[q]] & ~leq[p, join[lower]]).any():
                graph.add_edge(p, q)
    return graph


def lower_bounded(lattice):
    """A finite lattice is lower bounded iff its D relation has no cycle."""
    return nx.is_directed_acyclic_graph(dependency_graph(lattice))


def is_isomorphic(first, second):
    """Order-isomorphism test via the Hasse diagrams."""
    if first.size != second.size:
        return False
    return nx.is_isomorphic(first.hasse_diagram(), second.hasse_diagram())
