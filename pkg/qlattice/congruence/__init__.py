# -*- coding: utf-8 -*-
from .partition import (
    principal_congruence, congruence_closure, join_congruences,
    congruence_lattice, all_congruences)
from .eon import (
    principal_eon, eon_closure, eon_lattice, all_eon_relations,
    con_eon_isomorphism, equational_elements, eon_membership, eon_rule_check)

__all__ = ['principal_congruence', 'congruence_closure', 'join_congruences',
           'congruence_lattice', 'all_congruences', 'principal_eon',
           'eon_closure', 'eon_lattice', 'all_eon_relations',
           'con_eon_isomorphism', 'equational_elements', 'eon_membership',
           'eon_rule_check']
