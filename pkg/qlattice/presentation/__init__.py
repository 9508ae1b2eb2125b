# -*- coding: utf-8 -*-
from .emitter import (
    present_first, present_second, present_combined, present_dual_near_leaf,
    predicate_name)
from .reducer import reduce_to_one_variable, normalise
from .text import GRAMMAR, parse, parse_law, parse_laws, render

__all__ = ['present_first', 'present_second', 'present_combined',
           'present_dual_near_leaf', 'predicate_name',
           'reduce_to_one_variable', 'normalise', 'GRAMMAR', 'parse',
           'parse_law', 'parse_laws', 'render']
