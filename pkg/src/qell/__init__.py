"""Exact rings over finite groups, power operations, and the
symmetric-group classification check."""

from .cyclo import CycloNum, rational_angle, root_of_unity
from .errors import (AxiomViolation, CapExceeded, NotCentralizing,
                     NotCharacter, NotRootOfUnity, NotSubgroup, ParseError,
                     QellError, WrongCycleType)
from .chars import (CharacterTable, ClassFunction, character_table, induce,
                    mn_character, partitions, restrict, trivial_character)
from .groupspec import parse_group
from .lambda_ring import (LambdaContext, LambdaElem, canonical_basis,
                          cyclic_presentation, induce_lambda, lambda_context,
                          pullback_lambda, restrict_lambda, transport)
from .laurent import LaurentPoly
from .perm import (ConjugacyData, FiniteGroup, GroupHom, Permutation,
                   ProductGroup, cyclic_group, dihedral_group,
                   symmetric_group, trivial_group, young_subgroup)
from .power import (AdamsBarResult, adams_bar, check_axioms, power_character,
                    power_component, power_total)
from .qell import (FiniteGSet, QEllElem, QEllRing, change_of_group,
                   coset_space, kunneth, qell_of_gset, qell_point,
                   restrict_hom, restrict_to_subgroup, transfer)
from .tate import q_prime, quotient_and_match, tate_structure, transfer_ideal
from .wreath import (CycleOrbitData, WreathElement, WreathGroup, beta_data,
                     cycle_product, wreath_irreducibles)

__version__ = "1.0.0"
