"""Homotopy colimits of dimension-capped simplicial sets over finite
categories, with exact integral homology and executable theorem suites."""

from .fincat import (FinCat, Functor, Morphism, SchemaError, chains,
                     comma_over, comma_under, discrete_category,
                     identity_functor, make_fincat, nerve, nerve_of_functor,
                     opposite, poset_category, product_category,
                     span_category, validate_category, validate_functor)
from .sset import (BiSSet, CapError, SMap, SSet, audit_bisset, audit_sset,
                   boundary_simplex, check_extra_degeneracy, check_homotopy,
                   constant_sset, coproduct, cylinder_ends, diagonal,
                   identity_smap, opposite_sset, point, product, quotient,
                   standard_simplex, validate_smap)
from .replace import (Bifunctor, Diagram, bar_vs_decalage_iso, bk_hocolim,
                      coend, colim_augmentation, constant_diagram, decalage,
                      homotopy_left_kan, induced_cofinal_map, rho_map,
                      simplicial_replacement, truncate, two_sided_bar,
                      validate_diagram, voevodsky_hocolim)
from .homology import (ChainComplex, HomologySummary,
                       check_homotopy_right_cofinal, homology_of,
                       is_contractible_in_range, is_quasi_iso_in_range,
                       mapping_cone, normalized_chains, smith_normal_form)
from .verify import run_suites, summarize

__version__ = "0.1.0"
__all__ = [n for n in dir() if not n.startswith("_")]
