#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "memsfront/states.hpp"
#include "oracles.hpp"

using namespace memsfront;

TEST_CASE("eigensystem: isotropic and pure projector") {
    const Matrix4c id4 = Matrix4c::identity() * 0.25;
    const Eigensystem es = hermitian_eigensystem(id4);
    for (int k = 0; k < 4; ++k) CHECK(es.spectrum[k] == doctest::Approx(0.25).epsilon(1e-12));

    const Eigensystem bell = hermitian_eigensystem(bell_phi_plus());
    CHECK(bell.spectrum[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(bell.spectrum[1]) < 1e-12);
    CHECK(std::abs(bell.spectrum[3]) < 1e-12);
}

TEST_CASE("eigensystem: Werner(1/2) against the characteristic-polynomial oracle") {
    const Matrix4c w = werner(0.5).matrix();
    const Eigensystem es = hermitian_eigensystem(w);
    // (1+3r)/4 and (1-r)/4 at r = 1/2
    CHECK(es.spectrum[0] == doctest::Approx(5.0 / 8.0).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) CHECK(es.spectrum[k] == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
    CHECK(oracles::charpoly_residual(w, es.spectrum.values) < 1e-12);
    CHECK(oracles::power_sum_residual(w, es.spectrum.values) < 1e-12);
}

TEST_CASE("eigensystem: rejects non-Hermitian input") {
    Matrix4c m = Matrix4c::identity();
    m(0, 1) = {0.0, 1.0};  // missing the conjugate partner
    CHECK_THROWS_AS(hermitian_eigensystem(m), std::domain_error);
}

TEST_CASE("eigensystem: reconstruction and orthonormality on random matrices") {
    oracles::TestRng rng(20240917);
    double worst_recon = 0.0, worst_ortho = 0.0, worst_power = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Matrix4c m = oracles::random_hermitian(rng);
        const Eigensystem es = hermitian_eigensystem(m);
        worst_recon = std::max(worst_recon, es.assemble(es.spectrum.values).max_abs_diff(m));
        const Matrix4c gram = es.vectors.adjoint() * es.vectors;
        worst_ortho = std::max(worst_ortho, gram.max_abs_diff(Matrix4c::identity()));
        worst_power = std::max(worst_power, oracles::power_sum_residual(m, es.spectrum.values));
    }
    CHECK(worst_recon < RECON_TOL);
    CHECK(worst_ortho < RECON_TOL);
    CHECK(worst_power < 1e-9);
}

TEST_CASE("eigenvalue monotonicity under PSD addition") {
    oracles::TestRng rng(55001);
    for (int trial = 0; trial < 1000; ++trial) {
        const Matrix4c a = oracles::random_psd(rng);
        const Matrix4c b = oracles::random_psd(rng);
        const Spectrum sa = hermitian_eigensystem(a).spectrum;
        const Spectrum sab = hermitian_eigensystem(a + b).spectrum;
        for (int k = 0; k < 4; ++k) CHECK(sab[k] >= sa[k] - 1e-10);
    }
}

TEST_CASE("partial transpose: diagonal fixed point and Bell spectrum") {
    const Matrix4c id4 = Matrix4c::identity() * 0.25;
    CHECK(partial_transpose(id4) == id4);

    const Matrix4c pt = partial_transpose(bell_phi_plus());
    const Spectrum s = hermitian_eigensystem(pt).spectrum;
    CHECK(s[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s[3] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(oracles::charpoly_residual(pt, s.values) < 1e-12);
}

TEST_CASE("partial transpose: exact involution and trace preservation") {
    oracles::TestRng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix4c m = oracles::random_hermitian(rng);
        const Matrix4c pt = partial_transpose(m);
        CHECK(partial_transpose(pt) == m);  // bit-identical
        CHECK(pt.trace() == m.trace());
    }
}

TEST_CASE("partial transpose: Bell-diagonal spectrum closed form") {
    oracles::TestRng rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<double, 4> lam{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
        const double sum = lam[0] + lam[1] + lam[2] + lam[3];
        for (auto& l : lam) l /= sum;
        const Spectrum s = Spectrum::sorted(lam);
        const Spectrum pt = hermitian_eigensystem(partial_transpose(bell_diagonal(s).matrix())).spectrum;
        const Spectrum expected = Spectrum::sorted(
            {0.5 - s[0], 0.5 - s[1], 0.5 - s[2], 0.5 - s[3]});
        for (int k = 0; k < 4; ++k) CHECK(pt[k] == doctest::Approx(expected[k]).epsilon(1e-12));
    }
}

TEST_CASE("spectral_function: identity, square, log") {
    oracles::TestRng rng(7);
    const Matrix4c m = oracles::random_hermitian(rng);
    const Matrix4c same = spectral_function(m, [](double x) { return x; });
    CHECK(same.max_abs_diff(m) < 1e-10);

    // purity of Werner(1/2) by direct entrywise multiplication
    const Matrix4c w = werner(0.5).matrix();
    const Matrix4c w2 = spectral_function(w, [](double x) { return x * x; });
    CHECK(w2.max_abs_diff(w * w) < 1e-12);
    CHECK(w2.trace().real() == doctest::Approx(7.0 / 16.0).epsilon(1e-12));

    const Matrix4c log4 = spectral_function(
        Matrix4c::identity() * 0.25, [](double x) { return std::log(x) / std::log(4.0); });
    CHECK(log4.max_abs_diff(Matrix4c::identity() * (-1.0)) < 1e-12);
}

TEST_CASE("spectral_function: domain errors and the support convention") {
    const Matrix4c w = werner(0.5).matrix();  // eigenvalues 5/8, 1/8
    CHECK_THROWS_AS(spectral_function(w, [](double x) { return std::log(x - 0.25); }),
                    std::domain_error);
    // log of a singular matrix: fails without the convention, fine with it
    const Matrix4c bell = bell_phi_plus();
    CHECK_THROWS_AS(spectral_function(bell, [](double x) { return std::log2(x); }),
                    std::domain_error);
    const Matrix4c log_bell =
        spectral_function(bell, [](double x) { return std::log2(x); }, ZeroConvention::support);
    CHECK(log_bell.max_abs() < 1e-12);  // log2(1) = 0 on the support
}

TEST_CASE("matrix_sqrt squares back") {
    oracles::TestRng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix4c p = oracles::random_psd(rng);
        p = p * (1.0 / p.trace().real());
        const Matrix4c root = matrix_sqrt(p);
        CHECK((root * root).max_abs_diff(p) < 1e-10);
    }
}
