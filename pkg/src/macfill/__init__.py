"""Combinatorial models of the modified Macdonald polynomial.

Fillings with the maj / inv / quinv statistics, charge and cocharge of words,
the four extremal-filling constructions with the bijections between them,
and exhaustive bounded-alphabet checks of the associated identities.
"""

from .shape import Cell, Partition, cells, conjugate, leg, n_stat, partitions
from .filling import (
    Filling,
    content,
    descents,
    inv,
    maj,
    quinv,
    row_equivalent,
    row_multisets,
)
from .words import (
    SubwordDecomposition,
    charge,
    charge_standard,
    cocharge,
    cocharge_standard,
    killpatrick_decompose,
    ls_decompose,
    word_content,
)
from .reading import charge_word, cocharge_word, sort_cells
from .extremal import (
    NotExtremalError,
    build_inv_max,
    build_inv_zero,
    build_quinv_max,
    build_quinv_zero,
    classify,
    phi,
    varphi,
)
from .poly import Monomial, MultiPoly
from .macdonald import (
    ConjectureCounterexample,
    StatProfile,
    conjecture_match,
    enumerate_fillings,
    macdonald_poly,
    modified_hall_littlewood,
    q_whittaker,
    stat_profile,
)

__version__ = "0.1.0"
