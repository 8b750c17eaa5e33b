"""Type-C Kashiwara-Nakashima tableaux: symplectic jeu de taquin, crystals, keys."""
from .core import (
    KNError,
    SkewTableau,
    format_tableau,
    is_admissible,
    key_of_weight,
    parse_tableau,
    phi,
    phi_inverse,
    split_column,
    validate_kn,
    weight,
)
from .crystal import (
    LaurentPolynomial,
    generate_crystal,
    demazure_atom,
    demazure_character,
    demazure_crystal,
    opposite_demazure_atom,
    opposite_demazure_character,
    opposite_demazure_crystal,
)
from .keys import left_key, left_key_direct, left_key_sjdt, right_key, right_key_direct, right_key_sjdt
from .rsk_cocrystal import biword_of, cocrystal_keys, dual_rsk, generate_cocrystal
from .sjdt import forward_slide, rectify, reshape, reverse_slide

__version__ = "0.1.0"
