# -*- coding: utf-8 -*-
from .model import satisfies, enumerate_models
from .free import free_structure, endomorphisms, named_endomorphisms
from .kcongruence import (
    k_congruences, k_closure, induced_operator, upsilon)
from .pipeline import (
    verify_combined, verify_second, verify_first, verify_lemma1,
    pseudo_lemma_check, verify_pseudo_lemma, verify_reduction,
    verify_star_filters, verify_pseudoprop)
from .suites import SUITES

__all__ = ['satisfies', 'enumerate_models', 'free_structure',
           'endomorphisms', 'named_endomorphisms', 'k_congruences',
           'k_closure', 'induced_operator', 'upsilon', 'verify_combined',
           'verify_second', 'verify_first', 'verify_lemma1',
           'pseudo_lemma_check', 'verify_pseudo_lemma', 'verify_reduction',
           'verify_star_filters', 'verify_pseudoprop', 'SUITES']
