"""Bent class functions on small finite groups.

Compute irreducible character tables, represent class functions in the
character basis, decide bentness by derivative sums (and spectra on abelian
groups), evaluate the coefficient criteria for Z_n, V4, S3 and Q8, construct
certified bent functions from CAZAC sequences, and search coefficient space
with reproducible seeds.
"""

from .bentness import (
    BENT,
    NOT_BENT,
    NOT_UNIMODULAR,
    BentReport,
    derivative_sum,
    derivative_sums,
    is_bent,
    is_bent_spectral,
    report_to_json,
    spectrum,
)
from .characters import (
    CharacterTable,
    OrthogonalityReport,
    character_table,
    inner_product,
    table_to_csv,
    table_to_json,
    verify_orthogonality,
)
from .class_functions import (
    ClassFunction,
    class_function_from_json,
    class_function_to_json,
    from_coefficients,
    from_values,
    is_unimodular,
    load_class_function,
    save_class_function,
    to_coefficients,
)
from .constructions import (
    CertifiedFunction,
    SequenceKind,
    SequenceSpec,
    TransformKind,
    character_twist,
    global_phase,
    make_bent_cyclic,
    quadratic_chirp,
    transform,
    translate,
    zadoff_chu,
)
from .criteria import (
    CriterionOutcome,
    S3Certificate,
    abelian_magnitude_necessary,
    certificate_to_json,
    cyclic_criterion,
    cyclic_lag_sums,
    klein_criterion,
    outcome_to_json,
    q8_equation_residuals,
    q8_necessary,
    s3_certificate,
    solve_magnitude_system,
    solve_q8_system,
)
from .errors import CapabilityError, ConstructionError, NumericDegeneracyError
from .groups import (
    CATALOG,
    Group,
    conjugacy_classes,
    element_order,
    group_from_json,
    group_from_label,
    group_to_json,
    inverse,
    load_group,
    make_abelian,
    make_cyclic,
    make_named,
    multiply,
    save_group,
)
from .ledger import LedgerEntry, PaperLedger, build_ledger, ledger_to_json
from .search import (
    SearchConfig,
    SearchResult,
    Strategy,
    objective,
    result_to_json,
    run_search,
)

__version__ = "0.1.0"
