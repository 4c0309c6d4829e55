import cmath
import json
import os

import pytest

import clarkframes as cf


def test_import_surface():
    assert hasattr(cf, "atomic_measure")
    assert hasattr(cf, "InnerFunction")
    assert hasattr(cf, "run_verification")


def test_two_atom_coefficients_alternate():
    mu = cf.atomic_measure([(0.0, 0.5), (0.5, 0.5)])
    for n in range(8):
        c = cf.fourier_coeff(mu, n)
        want = 1.0 if n % 2 == 0 else 0.0
        assert abs(c - want) < 1e-14


def test_phi_modes_agree():
    mu = cf.atomic_measure([(0.0, 0.5), (1.0 / 3.0, 0.3), (0.5, 0.2)])
    phi = cf.InnerFunction.from_measure(mu, 512)
    for z in (0.4, 0.3 + 0.2j, -0.5j):
        a = phi.eval(z, mode="ratio")
        b = phi.eval(z, mode="series")
        assert abs(a - b) < 1e-9
        assert abs(a) < 1.0


def test_clark_atoms_of_square():
    b = cf.blaschke_product([0j, 0j])
    clark = cf.clark_measure(b, 1.0 + 0j)
    ts = sorted(p.t for p in clark.measure.points)
    assert ts == pytest.approx([0.0, 0.5], abs=1e-12)
    assert clark.measure.weights == pytest.approx([0.5, 0.5], abs=1e-12)
    assert clark.certified_residual < 1e-9


def test_verification_passes_on_atomic_measure():
    mu = cf.atomic_measure([(0.0, 0.5), (0.5, 0.5)])
    report = cf.run_verification(mu, terms=64)
    assert report.all_passed
    statuses = {c.name: c.status for c in report.checks}
    assert statuses["toeplitz-identity"] == "pass"
    assert not any(s == "fail" for s in statuses.values())


def test_kaczmarz_residuals_decay():
    mu = cf.atomic_measure([(0.0, 0.5), (1.0 / 3.0, 0.3), (0.5, 0.2)])
    f = [1.0 + 0j, 0j, 0j]
    norm = cf.l2_norm(mu, f)
    f = [v / norm for v in f]
    trace = cf.kaczmarz_run(mu, f, 200)
    assert trace.residual_norms[0] > 0.1
    assert trace.residual_norms[-1] < 1e-10


def test_load_measure_spec_from_distribution():
    measure_dir = os.environ.get("CLARKFRAMES_MEASURE_DIR")
    if not measure_dir:
        pytest.skip("CLARKFRAMES_MEASURE_DIR not set")
    mu = cf.load_measure_spec(os.path.join(measure_dir, "three_atom.json"))
    assert isinstance(mu, cf.AtomicMeasure)
    c1 = cf.fourier_coeff(mu, 1)
    spec = json.load(open(os.path.join(measure_dir, "three_atom.json")))
    direct = sum(
        a["w"] * cmath.exp(-2j * cmath.pi * a["t"]) for a in spec["atoms"]
    )
    assert abs(c1 - direct) < 1e-13


def test_frame_deviation_vanishes_at_carrier_size():
    mu = cf.atomic_measure([(0.0, 0.5), (0.5, 0.5)])
    u = cf.u_coefficients(mu, 16)
    assert cf.frame_deviation(mu, u, 2) < 1e-12
    # the rank-1 truncation misses one dimension of a two-point space
    assert cf.frame_deviation(mu, u, 0) > 0.9


def test_projection_closed_form_matches_kernel():
    mu = cf.atomic_measure([(0.0, 0.5), (0.5, 0.5)])
    phi = cf.InnerFunction.from_measure(mu, 256)
    w = 0.3 + 0.1j
    z = 0.2 - 0.4j
    k = cf.model_kernel(phi, w, z)
    assert abs(k - (1.0 + w.conjugate() * z)) < 1e-10
