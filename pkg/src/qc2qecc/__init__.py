"""Binary quantum codes from two-generator quasi-cyclic codes."""

__version__ = "0.1.0"

from qc2qecc.algebra import (  # noqa: E402
    BinaryPolynomial,
    FieldContext,
    bar,
    build_field,
    field_eval,
    format_compact,
    parse_compact,
    poly_divmod,
    poly_gcd,
    reciprocal_dual,
    ring_add,
    ring_mul,
)
from qc2qecc.cyclotomic import (  # noqa: E402
    Coset,
    DefiningSet,
    all_cosets,
    coset_of,
    generator_from_set,
    minimal_polynomial,
    negate_set,
    coset_precheck,
)
from qc2qecc.distance import (  # noqa: E402
    DistanceReport,
    PartialWeightDistribution,
    certify,
    info_set_search,
    min_distance_exact,
    symplectic_weight,
    weight_distribution,
)
from qc2qecc.f2linalg import BitMatrix, circulant_rows, in_rowspace, rank, row_reduce  # noqa: E402
from qc2qecc.qc2code import (  # noqa: E402
    TwoGenQC,
    dimension,
    dual_generators,
    generator_matrix,
    is_dual_containing_conditions,
    is_dual_containing_oracle,
    symplectic_inner,
    validate,
)
