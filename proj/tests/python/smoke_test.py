"""Smoke tests for the qbell python module."""

import math
import sys

import qbell


def approx(a, b, tol=1e-6):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def test_families():
    chsh = qbell.build_chsh()
    assert chsh.d == 2
    approx(chsh.f(1, 0, 1).real, -1.0, 1e-12)

    cglmp = qbell.build_cglmp(3)
    approx(cglmp.epsilon(0, 0, 0).real, 1.0, 1e-12)
    approx(cglmp.epsilon(0, 0, 2).real, -1.0, 1e-12)
    assert cglmp.is_real()
    assert cglmp.dual_consistency_error() < 1e-12

    slk = qbell.build_slk(3, qbell.SlkParams(delta=0.0, eta1=0.5, eta2=0.5))
    approx(slk.epsilon(0, 0, 0).real, 1.0, 1e-12)


def test_fourier_roundtrip():
    f = [complex(0.1 * i, -0.05 * i) for i in range(12)]
    eps = qbell.fourier_to_probability(f, 3)
    back = qbell.fourier_to_correlation(eps, 3)
    assert max(abs(a - b) for a, b in zip(f, back)) < 1e-12


def test_bounds():
    approx(qbell.lr_bound(qbell.build_cglmp(3)).bound, 2.0, 1e-12)
    approx(qbell.optimal_slk_bound_closed_form(2), 1 / math.sqrt(2), 1e-12)
    slk = qbell.build_slk(3, qbell.SlkParams())
    approx(qbell.lr_bound(slk).bound, qbell.optimal_slk_bound_closed_form(3), 1e-9)


def test_quantum():
    chsh = qbell.build_chsh()
    op = qbell.bell_operator(chsh, qbell.MeasurementSettings.standard(2))
    approx(qbell.quantum_max(op).value, 2 * math.sqrt(2), 1e-6)

    cglmp = qbell.build_cglmp(3)
    settings = qbell.MeasurementSettings.standard(3)
    me = qbell.expectation(qbell.bell_operator(cglmp, settings),
                           qbell.family_state(3, 1.0))
    approx(me, 2.8729, 5e-4)

    pmin = qbell.noise_threshold(cglmp, settings)
    assert pmin is not None
    approx(pmin, 2.0 / me, 1e-9)

    flat = qbell.noise_threshold(
        qbell.build_slk(3, qbell.SlkParams(delta=0.0, eta1=0.5, eta2=0.5)), settings)
    assert flat is None

    scan = qbell.gamma_scan(cglmp, settings, qbell.uniform_grid(0.0, 1.5, 151))
    peak_gamma, peak_value = max(scan, key=lambda p: p[1])
    approx(peak_gamma, 0.79, 2e-2)
    approx(peak_value, 2.9149, 5e-4)


def test_polytope():
    verdict = qbell.tightness(qbell.build_cglmp(3))
    assert verdict.is_tight and verdict.rank >= verdict.h == 24

    slk = qbell.tightness(qbell.build_slk(3, qbell.SlkParams()))
    assert not slk.is_tight and slk.rank == 12

    families = qbell.slk_maximizer_families(3)
    assert [0, 0, 0, 0] in [list(f) for f in families]

    strategies = qbell.enumerate_strategies(2)
    assert len(strategies) == 16
    gen = qbell.generator(qbell.DeterministicStrategy(0, 0, 0, 0), 2)
    assert [i for i, x in enumerate(gen.vec) if x == 1.0] == [0, 4, 8, 12]


def test_appendix():
    report = qbell.verify_slk_appendix(2, qbell.SlkParams(), trials=100, seed=0)
    assert report.pass_
    assert report.max_observed <= 1.0 + 1e-8


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok: {test.__name__}")
    print(f"{len(tests)} smoke tests passed (qbell {qbell.__version__})")


if __name__ == "__main__":
    sys.exit(main())
