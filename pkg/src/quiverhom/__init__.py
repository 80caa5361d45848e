"""Homological certificates for finite-dimensional quiver algebras.

Exact linear algebra over Q and prime fields, quiver algebras with
relations via noncommutative Groebner bases, minimal projective
resolutions with tri-state dimension verdicts, Gorenstein criteria for
triangular matrix algebras, and corner-reduction reports for singularity
categories.
"""

__version__ = "0.1.0"

from .exactla import (GF, QQ, FieldMismatch, Mat, PrimeField, Rationals,
                      kernel_basis, rank, rref, solve)
from .algebras import (Algebra, BuildError, CornerData, Diagnostics,
                       Idempotent, Quiver, Relation, build_path_algebra,
                       check_algebra, corner, match_structure, opposite,
                       parse_relation, parse_word, verify_structure_match)
from .modules import (IsoVerdict, Module, ModuleError, ModuleMap, cokernel_of,
                      direct_sum, dual, hom_space, image_of, injective,
                      is_isomorphic, is_short_exact, kernel_of, projective,
                      projective_cover, random_module, regular, simple,
                      standard_module, strip_projectives, syzygy,
                      verify_iso_certificate, zero_module)
from .homology import (ConsistencyError, DimResult, GorensteinVerdict,
                       McmVerdict, Resolution, ext_dim, global_dimension,
                       gorenstein, inj_dim, is_injective_module, is_mcm,
                       is_regular, is_self_injective, proj_dim, resolve,
                       stable_hom_dim)
from .triangular import (Bimodule, PreconditionError, TriangularData,
                         TriangularGorensteinVerdict, build_triangular,
                         column_module, gdim_bounds, gorenstein_triangular,
                         hom_induced_module, multiplication_phi,
                         sequence_column, sequence_ideal, tensor_over_s,
                         zero_bimodule)
from .schur import (CheckItem, EquivalenceReport, IdempotentClass,
                    classify_idempotent, in_kernel, left_corner_module,
                    schur_apply, schur_apply_map, theorem21_report,
                    theorem41_report)
from . import fixtures
