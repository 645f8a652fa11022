import json
import math
from fractions import Fraction

import numpy as np
import pytest

from wernercert.certificate import (
    ProductTerm,
    SeparableCertificate,
    VerifyTolerances,
    load_certificate,
    parse_certificate,
    save_certificate,
    serialize_certificate,
    verify_certificate,
)
from wernercert.decompose import decompose_phase_family, decompose_werner
from wernercert.errors import (
    CertificateFormatError,
    CertificateValidationError,
    InvalidParameterError,
)
from wernercert.states import phase_family_density, werner_state


def _sample_certs():
    yield decompose_werner(2, 2, Fraction(1, 3))
    yield decompose_werner(3, 2, Fraction(1, 4))
    yield decompose_werner(2, 3, Fraction(1, 10))
    yield decompose_werner(2, 2, 0)
    rng = np.random.default_rng(19)
    zeta = np.exp(1j * rng.uniform(0, 2 * np.pi, size=2))
    yield decompose_phase_family(2, 3, zeta=zeta)


def test_serialize_parse_roundtrip_byte_identical():
    for cert in _sample_certs():
        doc = serialize_certificate(cert)
        again = serialize_certificate(parse_certificate(doc))
        assert doc == again


def test_document_structure():
    cert = decompose_werner(2, 2, Fraction(1, 3))
    doc = serialize_certificate(cert)
    obj = json.loads(doc)
    assert obj["format_version"] == "1"
    assert obj["d"] == 2 and obj["n"] == 2
    assert obj["term_count"] == 18
    assert len(obj["terms"]) == 18
    assert obj["target_descriptor"]["family"] == "werner"
    # one term per line keeps documents diffable
    lines = doc.decode().splitlines()
    assert len(lines) == 1 + 18 + 1
    # complex entries are [re, im] pairs
    entry = obj["terms"][0]["factors"][0][0]
    assert isinstance(entry, list) and len(entry) == 2


def test_serialize_rejects_empty_and_bad_norm():
    with pytest.raises(CertificateValidationError):
        serialize_certificate(SeparableCertificate(d=2, n=1, terms=(), target={}))
    bad = SeparableCertificate(
        d=2,
        n=1,
        terms=(ProductTerm(weight=1.0, factors=(np.array([0.9, 0.0], dtype=complex),)),),
        target={},
    )
    with pytest.raises(CertificateValidationError) as err:
        serialize_certificate(bad)
    assert "term 0" in str(err.value)


def test_parse_rejects_truncated_document():
    doc = serialize_certificate(decompose_werner(2, 2, 0))
    with pytest.raises(CertificateFormatError) as err:
        parse_certificate(doc[: len(doc) // 2])
    assert "position" in str(err.value)


def test_parse_rejects_non_utf8():
    with pytest.raises(CertificateFormatError):
        parse_certificate(b"\xff\xfe{}")


def test_parse_rejects_wrong_version_and_counts():
    doc = serialize_certificate(decompose_werner(2, 2, 0)).decode()
    with pytest.raises(CertificateValidationError):
        parse_certificate(doc.replace('"format_version":"1"', '"format_version":"2"'))
    with pytest.raises(CertificateValidationError):
        parse_certificate(doc.replace('"term_count":4', '"term_count":5'))


def test_parse_rejects_bad_norm_naming_term():
    doc = serialize_certificate(decompose_werner(2, 2, 0)).decode()
    tampered = doc.replace("[1,0],[0,0]", "[0.9,0],[0,0]", 1)
    assert tampered != doc
    with pytest.raises(CertificateValidationError) as err:
        parse_certificate(tampered)
    assert "term 0" in str(err.value)


def test_parse_rejects_nonfinite_and_negative():
    doc = serialize_certificate(decompose_werner(2, 2, 0)).decode()
    with pytest.raises(CertificateValidationError):
        parse_certificate(doc.replace('"weight":0.25', '"weight":-0.25', 1))
    with pytest.raises(CertificateValidationError) as err:
        parse_certificate(doc.replace('"weight":0.25', '"weight":NaN', 1))
    assert "finite" in str(err.value)


def test_parse_enforces_term_cap():
    doc = serialize_certificate(decompose_werner(2, 2, 0))
    with pytest.raises(CertificateValidationError):
        parse_certificate(doc, term_cap=2)


def test_verify_threshold_certificate_passes_tightly():
    cert = decompose_werner(2, 2, Fraction(1, 3))
    report = verify_certificate(cert, werner_state(2, 2, 1 / 3))
    assert report.passed
    assert report.verdict == "pass"
    assert report.reconstruction_residual_maxabs <= 1e-12
    assert report.term_count == 18


def test_verify_wrong_target_residual_value():
    # worst entry gap is the repeated-string off-diagonal: |0.4/2 - (1/3)/2|
    cert = decompose_werner(2, 2, Fraction(1, 3))
    report = verify_certificate(cert, werner_state(2, 2, 0.4))
    assert not report.passed
    assert abs(report.reconstruction_residual_maxabs - abs(0.4 / 2 - (1 / 3) / 2)) <= 1e-12


def test_verify_flags_perturbed_weight():
    cert = decompose_werner(2, 2, Fraction(1, 3))
    terms = list(cert.terms)
    terms[0] = ProductTerm(weight=float(terms[0].weight) + 1e-6, factors=terms[0].factors)
    tampered = SeparableCertificate(d=cert.d, n=cert.n, terms=tuple(terms), target=cert.target)
    report = verify_certificate(tampered, werner_state(2, 2, 1 / 3))
    assert not report.passed
    assert report.weights_sum_err > 1e-7


def test_verify_is_term_order_independent():
    cert = decompose_werner(2, 2, Fraction(1, 3))
    target = werner_state(2, 2, 1 / 3)
    base = verify_certificate(cert, target)
    rng = np.random.default_rng(29)
    perm = rng.permutation(cert.term_count)
    shuffled = SeparableCertificate(
        d=cert.d, n=cert.n, terms=tuple(cert.terms[i] for i in perm), target=cert.target
    )
    report = verify_certificate(shuffled, target)
    assert report.passed == base.passed
    assert abs(report.reconstruction_residual_maxabs - base.reconstruction_residual_maxabs) <= 1e-13
    assert report.term_count == base.term_count


def test_verify_shape_mismatch():
    cert = decompose_werner(2, 2, 0)
    with pytest.raises(InvalidParameterError):
        verify_certificate(cert, np.eye(8) / 8)


def test_verify_custom_tolerances():
    cert = decompose_werner(2, 2, Fraction(1, 3))
    report = verify_certificate(
        cert, werner_state(2, 2, 0.4), VerifyTolerances(residual=1.0)
    )
    assert report.passed


def test_save_load_roundtrip(tmp_path):
    cert = decompose_phase_family(3, 2)
    path = tmp_path / "cert.json"
    save_certificate(cert, path)
    loaded = load_certificate(path)
    assert loaded.term_count == cert.term_count
    report = verify_certificate(loaded, phase_family_density(3, 2))
    assert report.passed


def test_report_dict_fields():
    cert = decompose_werner(2, 2, 0)
    report = verify_certificate(cert, werner_state(2, 2, 0.0))
    d = report.as_dict()
    assert set(d) == {
        "weights_sum_err",
        "worst_local_norm_err",
        "reconstruction_residual_maxabs",
        "reconstruction_residual_frobenius",
        "term_count",
        "verdict",
    }
    assert d["verdict"] == "pass"
    assert math.isfinite(d["reconstruction_residual_frobenius"])
