"""Exact k-cevian families in an n-simplex and the generalized Ceva criterion."""
from .cevians import (Cevian, CevianFamily, InducedCevian, build_family, cevian_contains,
                      feet_from_point, induced_cevians, l_faces, lift_feet, restrict_to_face)
from .concurrence import (ConcurrenceReport, check_condition_2, check_condition_2_via_order,
                          check_proposition_tetrahedron, intersect_family, proposition_family,
                          verify_equivalence)
from .exact import (BaryPoint, Face, LinearSystem, SolutionSpace, feasible_nonnegative,
                    format_rational, parse_rational, restrict_point, solve_affine)
from .multipede import (Multipede, cycle_ratio_product, feet_closure_cardinality,
                        induce_multipede, precedes)

__version__ = "0.1.0"
