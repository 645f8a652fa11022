"""Separable-decomposition certificates: data model, document format, verifier.

A certificate is a finite list of weighted pure product states claimed to
mix to a target density matrix.  The document format is deterministic
UTF-8 JSON: fixed key order, one term per line, every float printed with
17 significant digits so that serialize(parse(doc)) is byte-identical.
The verifier recomputes the mixture through its own Kronecker path and
never trusts generator-side bookkeeping.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

import numpy as np

from .errors import (
    CertificateFormatError,
    CertificateValidationError,
    InvalidParameterError,
)
from .kernels import reconstruct_mixture

FORMAT_VERSION = "1"
DEFAULT_TERM_CAP = 1 << 20
LOCAL_NORM_TOL = 1e-12
WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ProductTerm:
    """One mixture component: a probability weight and n local pure states.

    ``weight`` may be an exact Fraction (the generators keep rational
    bookkeeping) or a float (parsed documents); ``factors`` holds one
    length-d complex unit vector per qudit.
    """

    weight: Real
    factors: tuple[np.ndarray, ...]


@dataclass(frozen=True, eq=False)
class SeparableCertificate:
    """Explicit separable decomposition of a d**n-dimensional target."""

    d: int
    n: int
    terms: tuple[ProductTerm, ...]
    target: dict

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def weights(self) -> np.ndarray:
        return np.array([float(t.weight) for t in self.terms], dtype=np.float64)

    def factors_tensor(self) -> np.ndarray:
        """All local states as a (term_count, n, d) complex array."""
        out = np.empty((len(self.terms), self.n, self.d), dtype=np.complex128)
        for i, t in enumerate(self.terms):
            for r, vec in enumerate(t.factors):
                out[i, r, :] = vec
        return out

    def validate(self, term_cap: int = DEFAULT_TERM_CAP) -> None:
        """Enforce the certificate invariants; raises on the first violation."""
        if self.d < 2 or self.n < 1:
            raise CertificateValidationError(f"invalid shape d={self.d}, n={self.n}")
        if not self.terms:
            raise CertificateValidationError("certificate has no terms")
        if len(self.terms) > term_cap:
            raise CertificateValidationError(
                f"term count {len(self.terms)} exceeds the cap {term_cap}"
            )
        for i, term in enumerate(self.terms):
            if float(term.weight) < 0.0 or not math.isfinite(float(term.weight)):
                raise CertificateValidationError(f"term {i}: weight {term.weight} is not a nonnegative real")
            if len(term.factors) != self.n:
                raise CertificateValidationError(
                    f"term {i}: expected {self.n} local factors, got {len(term.factors)}"
                )
            for r, vec in enumerate(term.factors):
                if vec.shape != (self.d,):
                    raise CertificateValidationError(
                        f"term {i}: factor {r} has shape {vec.shape}, expected ({self.d},)"
                    )
                norm = float(np.linalg.norm(vec))
                if abs(norm - 1.0) > LOCAL_NORM_TOL:
                    raise CertificateValidationError(
                        f"term {i}: factor {r} has norm {norm!r}, not 1 within {LOCAL_NORM_TOL}"
                    )
        total = math.fsum(float(t.weight) for t in self.terms)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise CertificateValidationError(
                f"weights sum to {total!r}, not 1 within {WEIGHT_SUM_TOL}"
            )


@dataclass(frozen=True)
class VerifyTolerances:
    weights_sum: float = 1e-12
    local_norm: float = 1e-12
    residual: float = 1e-10


@dataclass(frozen=True)
class VerificationReport:
    """Numeric outcome of checking a certificate against a target density."""

    weights_sum_err: float
    worst_local_norm_err: float
    reconstruction_residual_maxabs: float
    reconstruction_residual_frobenius: float
    term_count: int
    passed: bool

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        return {
            "weights_sum_err": self.weights_sum_err,
            "worst_local_norm_err": self.worst_local_norm_err,
            "reconstruction_residual_maxabs": self.reconstruction_residual_maxabs,
            "reconstruction_residual_frobenius": self.reconstruction_residual_frobenius,
            "term_count": self.term_count,
            "verdict": self.verdict,
        }


def verify_certificate(
    cert: SeparableCertificate,
    target: np.ndarray,
    tolerances: VerifyTolerances | None = None,
    backend: str | None = None,
) -> VerificationReport:
    """Reconstruct the mixture and compare it to ``target``.

    Independent of the generator: only weights and local state vectors are
    used, through the kernel's own Kronecker path.
    """
    tol = tolerances if tolerances is not None else VerifyTolerances()
    target = np.asarray(target)
    dim = cert.d**cert.n
    if target.shape != (dim, dim):
        raise InvalidParameterError(f"target shape {target.shape} does not match d**n = {dim}")
    if not cert.terms:
        raise InvalidParameterError("certificate has no terms")
    weights = cert.weights()
    factors = cert.factors_tensor()
    weights_sum_err = abs(math.fsum(float(t.weight) for t in cert.terms) - 1.0)
    worst_norm_err = float(np.abs(np.linalg.norm(factors, axis=2) - 1.0).max())
    mixture = reconstruct_mixture(weights, factors, backend=backend)
    diff = mixture - target
    maxabs = float(np.abs(diff).max())
    frob = float(np.linalg.norm(diff))
    passed = (
        weights_sum_err <= tol.weights_sum
        and worst_norm_err <= tol.local_norm
        and maxabs <= tol.residual
    )
    return VerificationReport(
        weights_sum_err=weights_sum_err,
        worst_local_norm_err=worst_norm_err,
        reconstruction_residual_maxabs=maxabs,
        reconstruction_residual_frobenius=frob,
        term_count=len(cert.terms),
        passed=passed,
    )


def _fmt_float(x: float) -> str:
    x = float(x)
    if x == 0.0:
        return "0"  # normalize signed zeros so round-trips stay byte-identical
    return format(x, ".17g")


def _emit_json(value) -> str:
    """Deterministic JSON text: sorted object keys, 17-significant-digit floats."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt_float(value)
    if isinstance(value, Fraction):
        return json.dumps(str(value))
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_emit_json(v) for v in value) + "]"
    if isinstance(value, dict):
        if not all(isinstance(k, str) for k in value):
            raise CertificateValidationError("target descriptor keys must be strings")
        items = (f"{json.dumps(k)}:{_emit_json(value[k])}" for k in sorted(value))
        return "{" + ",".join(items) + "}"
    raise CertificateValidationError(f"cannot serialize descriptor value of type {type(value).__name__}")


def _emit_term(term: ProductTerm) -> str:
    factors = "[" + ",".join(
        "[" + ",".join(f"[{_fmt_float(z.real)},{_fmt_float(z.imag)}]" for z in vec) + "]"
        for vec in term.factors
    ) + "]"
    return f'{{"weight":{_fmt_float(float(term.weight))},"factors":{factors}}}'


def serialize_certificate(cert: SeparableCertificate, term_cap: int = DEFAULT_TERM_CAP) -> bytes:
    """Render the deterministic certificate document."""
    cert.validate(term_cap)
    lines = [
        '{"format_version":"%s","d":%d,"n":%d,"target_descriptor":%s,"term_count":%d,"terms":['
        % (FORMAT_VERSION, cert.d, cert.n, _emit_json(cert.target), len(cert.terms))
    ]
    for i, term in enumerate(cert.terms):
        sep = "," if i + 1 < len(cert.terms) else ""
        lines.append(_emit_term(term) + sep)
    lines.append("]}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CertificateValidationError(message)


def parse_certificate(data: bytes | str, term_cap: int = DEFAULT_TERM_CAP) -> SeparableCertificate:
    """Parse and validate a certificate document.

    Syntax problems raise :class:`CertificateFormatError` with a position;
    invariant violations raise :class:`CertificateValidationError` naming
    the failed invariant and term index.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CertificateFormatError(f"document is not valid UTF-8: {exc}") from exc
    else:
        text = data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(
            f"malformed certificate document at position {exc.pos}: {exc.msg}"
        ) from exc
    _require(isinstance(doc, dict), "document root must be an object")
    for key in ("format_version", "d", "n", "target_descriptor", "term_count", "terms"):
        _require(key in doc, f"missing required key {key!r}")
    _require(
        doc["format_version"] == FORMAT_VERSION,
        f"unsupported format_version {doc['format_version']!r} (expected {FORMAT_VERSION!r})",
    )
    d, n = doc["d"], doc["n"]
    _require(isinstance(d, int) and not isinstance(d, bool) and d >= 2, f"d must be an integer >= 2, got {d!r}")
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 1, f"n must be an integer >= 1, got {n!r}")
    _require(isinstance(doc["target_descriptor"], dict), "target_descriptor must be an object")
    raw_terms = doc["terms"]
    _require(isinstance(raw_terms, list) and raw_terms, "terms must be a nonempty list")
    _require(
        doc["term_count"] == len(raw_terms),
        f"term_count {doc['term_count']!r} does not match {len(raw_terms)} terms",
    )
    terms = []
    for i, raw in enumerate(raw_terms):
        _require(isinstance(raw, dict), f"term {i}: must be an object")
        _require("weight" in raw and "factors" in raw, f"term {i}: missing weight or factors")
        weight = raw["weight"]
        _require(
            isinstance(weight, (int, float)) and not isinstance(weight, bool) and math.isfinite(weight),
            f"term {i}: weight must be a finite number, got {weight!r}",
        )
        _require(weight >= 0, f"term {i}: weight {weight!r} is negative")
        raw_factors = raw["factors"]
        _require(
            isinstance(raw_factors, list) and len(raw_factors) == n,
            f"term {i}: expected {n} local factors",
        )
        factors = []
        for r, raw_vec in enumerate(raw_factors):
            _require(
                isinstance(raw_vec, list) and len(raw_vec) == d,
                f"term {i}: factor {r} must be a list of {d} complex entries",
            )
            vec = np.empty(d, dtype=np.complex128)
            for c, pair in enumerate(raw_vec):
                _require(
                    isinstance(pair, list)
                    and len(pair) == 2
                    and all(isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x) for x in pair),
                    f"term {i}: factor {r} entry {c} must be a finite [re, im] pair",
                )
                vec[c] = complex(pair[0], pair[1])
            factors.append(vec)
        terms.append(ProductTerm(weight=float(weight), factors=tuple(factors)))
    cert = SeparableCertificate(d=d, n=n, terms=tuple(terms), target=doc["target_descriptor"])
    cert.validate(term_cap)
    return cert


def save_certificate(cert: SeparableCertificate, path, term_cap: int = DEFAULT_TERM_CAP) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_certificate(cert, term_cap))


def load_certificate(path, term_cap: int = DEFAULT_TERM_CAP) -> SeparableCertificate:
    with open(path, "rb") as fh:
        return parse_certificate(fh.read(), term_cap)
