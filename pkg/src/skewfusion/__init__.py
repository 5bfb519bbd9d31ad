"""Exact-arithmetic construction and verification of fusion symmetrizers on
tensor powers: the fused projector E for a skew diagram, its Brauer-algebra
analogue F(M), and the Yangian / twisted-Yangian intertwiner checks."""

from .scalars import Rat, rat, rat_from_str, rat_to_str
from .poly import (BiPoly, PoleError, Polynomial, RationalFunction,
                   ratfun_arith)
from .diagrams import (BoundsReport, ColumnTableau, Partition, SkewDiagram,
                       column_tableau, conjugate, partitions_of,
                       skew_dimension_jt, skew_dimension_ssyt, skew_shapes,
                       validate_bounds)
from .tensor import (SizeGuardError, SparseOperator, SubspaceBasis,
                     TensorSpace, basis_from_vectors, compose, contract_pair,
                     contraction_op, image_basis, intersect_with_traceless,
                     permutation_op, rank, reversal_op, subspace_relate,
                     swap_op, traceless_subspace)
from .fusion import (DenominatorZeroError, FusionResult, LimitPoleError,
                     OperatorRatFun, PathPoleError, brauer_F_left,
                     brauer_F_limit, brauer_F_right, fusion_E,
                     young_symmetrizer_E)
from .yangian import (ActionMatrix, ModuleSpec, VerifyReport, f_mu,
                      site_action, tensor_action, twisted_generator_action,
                      verify_prop2, verify_prop4, verify_rtt,
                      verify_twisted_relations)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
