"""Schubert polynomials, skew divided differences and their structure constants."""

from ._version import __version__
from .bracket import (BracketElement, BracketMonomial, SearchResult, operator_equal,
                      rewrite_search, skew_element, to_operator)
from .divdiff import (ddiff_i, ddiff_ij, ddiff_perm, ddiff_word, isobaric_i,
                      isobaric_perm, isobaric_word)
from .nilcox import (NilCoxElement, schubert_expression, theorem1_check,
                     theorem2_constants)
from .parsing import (ParseError, parse_composition, parse_input, parse_partition,
                      parse_permutation, parse_polynomial, parse_word)
from .perm import (Permutation, all_permutations, bruhat_leq, canonical_word, compose,
                   cover_edge, from_word, reduced_words)
from .poly import Polynomial, elementary, complete, eta, permute_variables, staircase
from .schubert import (SchubertExpansion, constants_by_product, reduce_mod_ideal,
                       schubert_by_definition, schubert_expand, schubert_poly)
from .skewdiff import NotBruhatBelow, SkewOp, constants_by_skew, leibnitz_expand, skew_apply
from .skewkey import Composition, key_polynomial, skew_key, skew_schubert
from .symfunc import (grassmannian_bridge, lr_coefficients, schur_expand,
                      skew_schur_jt, skew_schur_ssyt)
from .sweep import SweepParams, SweepReport, run_sweep

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
