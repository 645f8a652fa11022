"""Generalized Werner states on n qudits: exact separability thresholds,
necessary-condition tests, and explicit separable decomposition certificates."""

from .certificate import (
    DEFAULT_TERM_CAP,
    ProductTerm,
    SeparableCertificate,
    VerificationReport,
    VerifyTolerances,
    load_certificate,
    parse_certificate,
    save_certificate,
    serialize_certificate,
    verify_certificate,
)
from .criteria import (
    IndexQuadruple,
    cauchy_schwarz_margin,
    iter_quadruples,
    necessary_max_s,
    ppt_min_eig,
    separability_threshold,
    witness_quadruple,
    worst_cs_margin,
)
from .decompose import decompose_phase_family, decompose_werner
from .errors import (
    CapacityError,
    CertificateFormatError,
    CertificateValidationError,
    ContractViolationError,
    InvalidIndexError,
    InvalidParameterError,
    ThresholdExceededError,
    WernercertError,
)
from .kernels import available_backends, backend_name, reconstruct_mixture
from .phases import (
    MomentSums,
    PhaseVector,
    cross_moment_sum,
    enumerate_phase_vectors,
    fourth_moment,
    moment_sums,
)
from .states import ghz_state, phase_family_density, phase_state, werner_state
from .tensor import (
    check_density,
    decode_index,
    eig_min_hermitian,
    encode_index,
    kron,
    kron_vec,
    partial_transpose,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CertificateFormatError",
    "CertificateValidationError",
    "ContractViolationError",
    "DEFAULT_TERM_CAP",
    "IndexQuadruple",
    "InvalidIndexError",
    "InvalidParameterError",
    "MomentSums",
    "PhaseVector",
    "ProductTerm",
    "SeparableCertificate",
    "ThresholdExceededError",
    "VerificationReport",
    "VerifyTolerances",
    "WernercertError",
    "available_backends",
    "backend_name",
    "cauchy_schwarz_margin",
    "check_density",
    "cross_moment_sum",
    "decode_index",
    "decompose_phase_family",
    "decompose_werner",
    "eig_min_hermitian",
    "encode_index",
    "enumerate_phase_vectors",
    "fourth_moment",
    "ghz_state",
    "iter_quadruples",
    "kron",
    "kron_vec",
    "load_certificate",
    "moment_sums",
    "necessary_max_s",
    "parse_certificate",
    "partial_transpose",
    "phase_family_density",
    "phase_state",
    "ppt_min_eig",
    "reconstruct_mixture",
    "save_certificate",
    "separability_threshold",
    "serialize_certificate",
    "verify_certificate",
    "werner_state",
    "witness_quadruple",
    "worst_cs_margin",
]
