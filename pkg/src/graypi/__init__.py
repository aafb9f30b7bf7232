"""Gray-code-indexed nested square roots of 2, the quadratic iteration maps
they are zeros of, and the pi / golden-ratio formulas built on them, all
verifiable against an independent arbitrary-precision oracle."""

from .graycode import (
    GrayWord,
    SignSequence,
    generate,
    moreno_index,
    rank,
    signs_from_word,
    word_at,
    word_from_signs,
)
from .lucas_lehmer import (
    IdentityReport,
    InterleavingReport,
    ZeroDescriptor,
    arctan_form_check,
    cheb_T,
    cheb_U,
    check_interleaving,
    eval_L,
    eval_M,
    identity_suite,
    m_zeros,
    maclaurin_defect,
    positive_zeros,
)
from .numerics import (
    BigReal,
    PiRational,
    PrecisionError,
    arctan_recip,
    cos_pi,
    reference_pi,
    sin_pi,
)
from .pi_formulas import (
    ApproxRecord,
    classic_term,
    convergence_table,
    error_sequence,
    exact_pi,
    golden_ratio,
    gray_term,
    phi_asymptotic,
    phi_exact,
)
from .radicals import (
    ClosedForm,
    NestedRadical,
    RadicandError,
    closed_form,
    compose_word,
    evaluate,
    verify_three_term,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BigReal",
    "PiRational",
    "PrecisionError",
    "arctan_recip",
    "reference_pi",
    "sin_pi",
    "cos_pi",
    "GrayWord",
    "SignSequence",
    "generate",
    "word_at",
    "rank",
    "moreno_index",
    "word_from_signs",
    "signs_from_word",
    "ClosedForm",
    "NestedRadical",
    "RadicandError",
    "evaluate",
    "closed_form",
    "compose_word",
    "verify_three_term",
    "ZeroDescriptor",
    "InterleavingReport",
    "IdentityReport",
    "eval_L",
    "eval_M",
    "cheb_T",
    "cheb_U",
    "positive_zeros",
    "m_zeros",
    "check_interleaving",
    "identity_suite",
    "arctan_form_check",
    "maclaurin_defect",
    "ApproxRecord",
    "classic_term",
    "gray_term",
    "error_sequence",
    "exact_pi",
    "phi_asymptotic",
    "phi_exact",
    "golden_ratio",
    "convergence_table",
]
