"""Juggling sequences, their ladder diagrams, and the braids and links they trace."""

from .braid import BraidWord, parse_braid, reduce_word
from .compiler import compile_word, identity_sequence, verify_roundtrip
from .errors import JuggleError
from .invariants import closure_invariants, compare_braids, compare_links, jones, kauffman_bracket
from .ladder import GeometryParams, build_ladder, find_crossings, resolve_geometry, resolve_ladder
from .mapping import extract_braid, juggle_braid, juggle_link
from .search import SearchSpec, search_indices
from .siteswap import SiteswapSequence, parse_siteswap, site_swap, validate

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "GeometryParams",
    "JuggleError",
    "SearchSpec",
    "SiteswapSequence",
    "build_ladder",
    "closure_invariants",
    "compare_braids",
    "compare_links",
    "compile_word",
    "extract_braid",
    "find_crossings",
    "identity_sequence",
    "jones",
    "juggle_braid",
    "juggle_link",
    "kauffman_bracket",
    "parse_braid",
    "parse_siteswap",
    "reduce_word",
    "resolve_geometry",
    "resolve_ladder",
    "search_indices",
    "site_swap",
    "validate",
    "verify_roundtrip",
]
