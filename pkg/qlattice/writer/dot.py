# -*- coding: utf-8 -*-
import graphviz

from ..base import Property
from .base import Writer


class DotWriter(Writer):
    """Hasse diagram as a DOT digraph, bottom to top.

    Nodes are lattice indices labelled with the element labels; edges are
    the cover pairs."""
    name = Property(str, default='lattice', doc="Graph name")

    def digraph(self, lattice):
        graph = graphviz.Digraph(self.name, graph_attr={'rankdir': 'BT'},
                                 node_attr={'shape': 'plaintext'})
        for index, label in enumerate(lattice.labels):
            graph.node(str(index), label)
        graph.edges((str(lower), str(upper))
                    for lower, upper in lattice.covers())
        return graph

    def lines(self, lattice):
        return self.digraph(lattice).source.splitlines()
