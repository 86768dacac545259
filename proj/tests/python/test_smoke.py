"""Smoke tests for the python bindings and the CLI report contract."""

import json
import os
import subprocess

import numpy as np
import pytest

import opalg

ROOT = os.environ.get("OPALG_ROOT", os.path.join(os.path.dirname(__file__), "..", ".."))
CLI = os.environ.get("OPALG_CLI")


def random_complex(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def test_polar_reconstructs_and_matches_singular_values():
    rng = np.random.default_rng(7)
    a = random_complex(rng, (5, 5))
    v, p = opalg.polar_decomposition(a)
    assert np.linalg.norm(a - v @ p, 2) <= 1e-8
    singulars = np.sort(np.linalg.svd(a, compute_uv=False))[::-1]
    spectrum = np.sort(np.linalg.eigvalsh(p))[::-1]
    assert np.max(np.abs(singulars - spectrum)) <= 1e-8


def test_majorization_and_factorization_agree():
    b = np.diag([1.0, 0.0]).astype(complex)
    assert opalg.majorization_lambda(np.eye(2, dtype=complex), b) is None
    result = opalg.douglas_factor(b, b)
    assert result is not None
    assert result.lambda_min == pytest.approx(1.0, abs=1e-9)
    assert result.residual <= 1e-9


def test_split_counterexample_is_absent():
    g = opalg.SequenceFunction([1.0 / n + 0j for n in range(1, 65)], 0j)
    f = opalg.SequenceFunction(
        [(1.0 / n if n % 2 == 0 else 0.0) + 0j for n in range(1, 65)], 0j
    )
    outcome = opalg.dfp_factor(f, g)
    assert outcome.factor is None
    assert outcome.verdict.oscillation == pytest.approx(1.0, abs=1e-12)
    isolated, gap = opalg.is_zero_isolated_sequence(g)
    assert not isolated
    assert gap == pytest.approx(1.0 / 64.0**2, abs=1e-12)


def test_segment_reduction_roundtrip():
    rng = np.random.default_rng(3)
    d, n = 3, 4
    q, _ = np.linalg.qr(random_complex(rng, (n * d, d)))
    coeffs = opalg.CoefficientTuple(
        [np.ascontiguousarray(q[i * d : (i + 1) * d]) for i in range(n)]
    )
    elements = [
        opalg.BimoduleElement([random_complex(rng, (d, d))]) for _ in range(n)
    ]
    program = opalg.reduce_to_segments(elements, coeffs)
    direct = opalg.cstar_combination(elements, coeffs)
    replayed = opalg.replay_program(elements, program)
    assert np.linalg.norm(direct.parts[0] - replayed.parts[0], 2) <= 1e-7
    for step in program.steps:
        defect = step.t1.conj().T @ step.t1 + step.t2.conj().T @ step.t2 - np.eye(d)
        assert np.linalg.norm(defect, 2) <= 1e-7


def test_matrix_range_sampler_is_unital_and_seeded():
    samples = opalg.matrix_range_sample(np.eye(3, dtype=complex), 2, 2, 8, 42)
    for s in samples:
        assert np.linalg.norm(s - np.eye(2), 2) <= 1e-12
    again = opalg.matrix_range_sample(np.eye(3, dtype=complex), 2, 2, 8, 42)
    for a, b in zip(samples, again):
        assert np.array_equal(a, b)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(opalg.NotEqualGram):
        opalg.douglas_factor_isometric(np.eye(2, dtype=complex), 2 * np.eye(2, dtype=complex))
    with pytest.raises(opalg.DimensionMismatch):
        opalg.majorization_lambda(np.eye(2, dtype=complex), np.eye(3, dtype=complex))


@pytest.mark.skipif(CLI is None, reason="OPALG_CLI not set")
def test_cli_reports_validate_against_the_schema():
    jsonschema = pytest.importorskip("jsonschema")
    with open(os.path.join(ROOT, "schemas", "report.schema.json")) as fh:
        schema = json.load(fh)
    fixtures = os.path.join(ROOT, "fixtures")
    commands = [
        ["factor", "--input", f"{fixtures}/matrices_basic.json", "--names", "A,B"],
        ["factor-isometric", "--input", f"{fixtures}/matrices_basic.json", "--names", "Aneg,Bpos"],
        ["lambda", "--input", f"{fixtures}/matrices_basic.json", "--names", "A,Z"],
        ["polar", "--input", f"{fixtures}/matrices_basic.json", "--names", "M"],
        ["ideal-contains", "--input", f"{fixtures}/matrices_basic.json", "--names", "A,B"],
        ["ideal-gen", "--input", f"{fixtures}/matrices_basic.json", "--names", "E1,E2"],
        ["ideal-countable", "--input", f"{fixtures}/matrices_basic.json",
         "--names", "E1,E2", "--depth", "2"],
        ["ideal-intersect", "--input", f"{fixtures}/ideal_intersect.json"],
        ["wo-closed", "--input", f"{fixtures}/matrices_basic.json", "--names", "A"],
        ["wo-closed", "--input", f"{fixtures}/dp_example_depth64.json", "--names", "g"],
        ["seq-dfp", "--input", f"{fixtures}/dp_example_depth64.json", "--names", "f,g"],
        ["seq-wpdp", "--input", f"{fixtures}/dp_example_depth64.json", "--names", "g"],
        ["seq-reduce", "--input", f"{fixtures}/substonean.json", "--tol", "5e-2"],
        ["seg-reduce", "--input", f"{fixtures}/segment_instance.json"],
        ["range-sample", "--input", f"{fixtures}/matrices_basic.json", "--names", "T",
         "--target-dim", "1", "--kraus", "2", "--count", "5", "--seed", "7"],
        ["diag-blocks", "--input", f"{fixtures}/diag_blocks.json", "--blocks-m", "2"],
        ["segment-demo", "--count", "100", "--seed", "7"],
        ["factor"],  # usage error: the error report must validate too
    ]
    for args in commands:
        out = subprocess.run([CLI] + args, capture_output=True, text=True)
        report = json.loads(out.stdout)
        jsonschema.validate(report, schema)


@pytest.mark.skipif(CLI is None, reason="OPALG_CLI not set")
def test_fixture_inputs_validate_against_their_schemas():
    jsonschema = pytest.importorskip("jsonschema")

    def load(path):
        with open(os.path.join(ROOT, path)) as fh:
            return json.load(fh)

    matrixfile = load("schemas/matrixfile.schema.json")
    jsonschema.validate(load("fixtures/matrices_basic.json"), matrixfile)
    jsonschema.validate(load("fixtures/ideal_intersect.json"), matrixfile)
    jsonschema.validate(load("fixtures/diag_blocks.json"), matrixfile)

    sequencefile = load("schemas/sequencefile.schema.json")
    jsonschema.validate(load("fixtures/dp_example_depth64.json"), sequencefile)
    jsonschema.validate(load("fixtures/substonean.json"), sequencefile)

    bundle = load("schemas/segment_bundle.schema.json")
    jsonschema.validate(load("fixtures/segment_instance.json"), bundle)
