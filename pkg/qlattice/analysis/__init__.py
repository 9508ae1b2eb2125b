# -*- coding: utf-8 -*-
from .properties import lattice_properties, is_isomorphic
from .constructions import co_lattice, adjoin_bottom, dual_leaf, chain
from .operators import (
    pseudoprop_check, cofinal_compact_check, star_filter_interval,
    check_star_condition, top_block)

__all__ = ['lattice_properties', 'is_isomorphic', 'co_lattice',
           'adjoin_bottom', 'dual_leaf', 'chain', 'pseudoprop_check',
           'cofinal_compact_check', 'star_filter_interval',
           'check_star_condition', 'top_block']
