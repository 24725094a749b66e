"""centra: desk-scale verification of soluble-centraliser properties of
finite groups.

Permutation groups with stabiliser chains, exact GF(p^k) arithmetic,
modules over prime fields with derivation spaces and H^1, non-commuting
graphs, and the classification-table predicates, behind one CLI.
"""

from .ffield import FieldElement, FieldSpec
from .perms import Permutation
from .permgroup import CapExceeded, PermGroup
from .structure import (centraliser, centre, conjugacy_classes,
                        derived_series, is_p_central, is_pi_element,
                        is_soluble, quotient_action)
from .catalogue import (Presentation, build, deleted_perm_embedding,
                        shipped_presentation)
from .modrep import (GModule, affine_extension, all_stabilisers_soluble,
                     count_complements, deleted_submodule, derivation_space,
                     fixed_subspace, is_irreducible, permutation_module,
                     vector_stabiliser)
from .ncgraph import (NCGraph, build_ncgraph, domination_pair,
                      non_neighbour_core, two_generated_insoluble_witness)
from .properties import (PiSet, PropertyReport, central_lifting_check,
                         check_soluble_pi_centralisers,
                         classification_crosscheck, emit_report,
                         lifting_check, verify_witness)

__version__ = "0.1.0"
