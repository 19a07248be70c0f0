"""Exact-arithmetic certificates for nested compact Lie algebra triples.

The package builds matrix models of compact Lie algebras (classical
families, g2, f4, a spinor model of spin(9)), verifies their structure
exactly over the rationals (or over Q(sqrt 3) where a construction needs
it), and decides, by certificate or by exact witness, whether a nested
triple h < k < g passes the curvature-positivity conditions.

Entry points: the ``lietriples`` CLI, the catalog in
:mod:`lietriples.catalog`, and the pipeline in :mod:`lietriples.pipeline`.
"""

__version__ = "1.0.0"

from .algebras import (LieAlgebra, Subalgebra, build_classical, direct_sum,
                       diagonal_embed, slope_embed_u1, span_subalgebra,
                       stabilizer_subalgebra)
from .catalog import build_triple, catalog_list, get_entry, named_algebra
from .certificates import prop_certificate
from .composition import CompositionAlgebra, JordanAlgebraH3O, composition_algebra
from .derivations import derivation_algebra, f4, g2
from .linalg import Matrix, Subspace, nullspace_rows, orthocomplement, project, rref
from .pipeline import RunConfig, replay, run_check
from .reduction import cheeger_extend, common_ideal, reduce_triple
from .refuters import refute_for_A, universal_refuter
from .reports import CheckReport, verify_report
from .rng import RationalSampler
from .scalars import Sqrt3
from .triples import (NestedTriple, decompose_isotropy, dim_filters, is_fat,
                      is_strongly_fat, make_triple, search_fat,
                      transitivity_evidence, trivial_factor)

__all__ = [
    "LieAlgebra", "Subalgebra", "build_classical", "direct_sum",
    "diagonal_embed", "slope_embed_u1", "span_subalgebra",
    "stabilizer_subalgebra", "build_triple", "catalog_list", "get_entry",
    "named_algebra", "prop_certificate", "CompositionAlgebra",
    "JordanAlgebraH3O", "composition_algebra", "derivation_algebra", "f4",
    "g2", "Matrix", "Subspace", "nullspace_rows", "orthocomplement",
    "project", "rref", "RunConfig", "replay", "run_check", "cheeger_extend",
    "common_ideal", "reduce_triple", "refute_for_A", "universal_refuter",
    "CheckReport", "verify_report", "RationalSampler", "Sqrt3",
    "NestedTriple", "decompose_isotropy", "dim_filters", "is_fat",
    "is_strongly_fat", "make_triple", "search_fat", "transitivity_evidence",
    "trivial_factor",
]
