"""Schubert codes ``C_α(ℓ, m)`` over finite fields.

Exact parameter formulas, explicit point enumeration through the Plücker
embedding, and exhaustive minimum-distance / higher-weight searches.
"""

from ._kernels import BACKEND
from .codes import (
    GeneratorMatrix,
    WeightReport,
    build_grassmann_code,
    build_schubert_code,
    close_family,
    close_family_section_count,
    codeword_weight_distribution,
    higher_weight_bruteforce,
    min_distance_bruteforce,
    min_distance_codewords,
    weight_distribution,
    weight_report,
)
from .combinatorics import (
    QPolynomial,
    bareiss_determinant,
    binomial,
    gaussian_binomial,
    gaussian_binomial_poly,
    lambda_count,
    lambda_poly,
)
from .errors import (
    EnumerationBudgetExceeded,
    FieldTooLarge,
    InvalidInput,
    NondegeneracyViolation,
    NotAPrimePower,
    NotApplicable,
    RangeError,
    RankDeficient,
)
from .field import FieldElement, FieldSpec, enumerate_elements, make_field
from .formulas import (
    chen_parameters,
    dimension_arith_progression,
    dimension_via_determinant,
    dimension_via_limit_sums,
    divisor_higher_weight,
    grassmann_reference,
    gv_lower_bound,
    length_poly,
    length_via_cells,
    length_via_gv,
    length_via_nested_sums,
    parameter_bundle,
    schubert_divisor_length,
)
from .geometry import (
    enumerate_cell,
    enumerate_schubert_points,
    plucker_coordinates,
    profile_and_cell,
)
from .tuples import (
    BlockStructure,
    IndexTuple,
    consecutive_blocks,
    delta,
    enumerate_all,
    enumerate_downset,
    leq,
    parse_tuple,
)

__version__ = "0.1.0"
