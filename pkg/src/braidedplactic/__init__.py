"""Plactic monoids through row and column braidings.

Schensted insertion, idempotent braidings on rows and columns, braid-monoid
normal forms, letter-permuting operators, and the critical cochain complex
computing the Hochschild cohomology of plactic monoids over small alphabets.
"""

from .braiding import (
    BraidedSetSpec,
    DecoratedTableau,
    apply_braid_word,
    column_spec,
    delta_normalize,
    delta_word,
    normal_factors,
    reduced_normal_form,
    row_spec,
    sigma_C,
    sigma_R,
    sigma_decorated,
    verify_braided_set,
    verify_monoid_compat,
    verify_observations,
)
from .cohomology import (
    Character,
    Cochain,
    CriticalComplex,
    ResourceError,
    betti,
    column_complex,
    critical_basis,
    cup,
    differential_matrix,
    enumerate_columns,
    eps0,
    eps1,
    exterior_witness,
    h2_basis_epsilon0,
    quantum_symmetrizer,
    symmetrizer_pullback,
    xi,
)
from .crystal import s_tableau, s_tuple, s_word, verify_crystal
from .plactic import PlacticElement, is_central, longest_nondec_subword, plactic_equal
from .tableau import (
    EMPTY,
    Tableau,
    insert_left,
    insert_right,
    insert_word,
    parse_word,
    product,
    read,
    shape,
    tableau_of_word,
)

__version__ = "0.1.0"
