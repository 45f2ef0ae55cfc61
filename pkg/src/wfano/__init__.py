"""Exact census and classification of quasi-smooth hypersurfaces in
weighted projective spaces."""

from .core import (HypersurfaceFamily, NotWellFormed, WeightSystem,
                   canonicalize, cy_family, degree, fano_family,
                   is_well_formed, semigroup_member)
from .qsmooth import (QuasiSmoothReport, check_codim2, check_qs13,
                      check_qs13prime, check_vertex, is_quasi_smooth,
                      passes_quasi_smooth, target_set)
from .classify import (ClassifiedRecord, QuotientSingularity,
                       classify_family, classify_terminal,
                       detect_series_membership, enumerate_48_triples,
                       is_terminal_type, singularities, tiger_ke_flags)
from .search import (EXPONENT_BOUNDS, SearchCase, SeriesFamily, Singular,
                     NoSolution, assemble_series, exponent_bounds,
                     run_structured_search, solve_case)
from .brute import (FANO_BOX, brute_search, fano_box_search,
                    generic_box_search, naive_box_search, prune_order)
from .cy import cone_extend, cy_search

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
