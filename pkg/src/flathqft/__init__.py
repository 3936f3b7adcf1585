"""Exact-arithmetic holonomy of flat surface field theories on finite
simplicial complexes."""

from .abelian import (CoeffElement, CoeffGroup, Cyclic, DirectSum, ExtClass,
                      Extension, FgAbGroup, FreeInt, GroupHom, RationalCircle,
                      ext_group, extension_from_class, hom_values, parse_group,
                      solve_division)
from .bridge import (CycleLift, DiagramReport, ExtensionTheory, MonFunctor,
                     enumerate_h2_classes, extension_from_functor,
                     functor_from_extension, iota, verify_theorem71)
from .complexes import (Chain, OrientedSimplex, Simplex, SimplicialComplex,
                        SimplicialMap, boundary, boundary_matrix, build_complex,
                        push_forward)
from .homology import (Cochain, HomologyGroup, UctSplit, coboundary, homology,
                       is_boundary_with_witness, is_coboundary, is_cocycle,
                       uct_split)
from .hqft import (CoboundaryIso, FiberElement, HolonomyCharacter, Hqft,
                   ObjectCircle, coboundary_iso, evaluate, fiber_tensor,
                   holonomy, holonomy_character, inverse, tau, tensor, trivial)
from .linalg import (IntMatrix, SmithDecomposition, determinant, kernel_basis,
                     smith_normal_form, solve_integer)
from .surfaces import (ClosedSurface, CobordismSurface, SurgerySite, XSurface,
                       close_up, constant_sphere, disjoint_union, glue,
                       identity_cylinder, local_surgery, puncture, reverse,
                       surface_from_cycle)

__version__ = "0.1.0"
