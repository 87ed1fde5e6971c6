"""Initial non-repetitive complexity of infinite words."""
from .constructions import base_w_prefix, brandenburg_sigma, theta, word_y_stream, word_z_stream
from .debruijn import DeBruijnWord, de_bruijn, extend_de_bruijn, maximal_inrc_stream, sparse_word_stream
from .factors import (
    ComplexityProfile,
    InrcResult,
    factor_complexity_on_prefix,
    grouped_factor_windows,
    inrc,
    nrc_on_prefix,
    special_factors,
)
from .oracles import OracleReport, oracle_inrc_fib, oracle_inrc_tm, oracle_inrc_trib, verify
from .repetitions import (
    Exponent,
    ends_with_power,
    find_overlap,
    find_power,
    is_overlap_free,
    is_power_free,
    list_squares,
    shortest_period,
)
from .wordspec import WordSpec, parse_word_spec
from .words import (
    Morphism,
    NumberTables,
    Word,
    WordStream,
    apply_morphism,
    builtin_stream,
    fixed_point_prefix,
    word,
    zimin,
)

__version__ = "0.1.0"
