# -*- coding: utf-8 -*-
"""qlattice: congruence lattices of semilattices with operators and their
representation as lattices of quasi-equational theories."""
__version__ = '0.1.0'
__license__ = 'MIT'
