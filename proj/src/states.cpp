#include "memsfront/states.hpp"

#include <cmath>
#include <string>

namespace memsfront {

namespace {

void check_range01(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::domain_error(std::string(name) + " must lie in [0,1], got " +
                                std::to_string(v));
}

Matrix4c x_form_matrix(double x, double y, double a, double b, double r) {
    Matrix4c m;
    m(0, 0) = x + r / 2;
    m(1, 1) = a;
    m(2, 2) = b;
    m(3, 3) = y + r / 2;
    m(0, 3) = r / 2;
    m(3, 0) = r / 2;
    return m;
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix4c& m) : m_(m) {
    if (!m.is_hermitian())
        throw std::domain_error("DensityMatrix: matrix is not Hermitian within 1e-12");
    if (std::abs(m.trace() - complex(1.0)) > RECON_TOL)
        throw std::domain_error("DensityMatrix: trace differs from 1 by more than 1e-10");
    const Spectrum s = hermitian_eigensystem(m).spectrum;
    if (s.min() < -RECON_TOL)
        throw std::domain_error("DensityMatrix: negative eigenvalue " +
                                std::to_string(s.min()));
}

void XStateParams::validate() const {
    for (auto [v, name] : {std::pair{x, "x"}, {y, "y"}, {a, "a"}, {b, "b"}, {r, "r"}})
        if (v < -HERM_TOL)
            throw std::domain_error(std::string("XStateParams: ") + name + " is negative");
    if (std::abs(x + y + a + b + r - 1.0) > HERM_TOL)
        throw std::domain_error("XStateParams: x+y+a+b+r differs from 1 by more than 1e-12");
    if ((x + r / 2) * (y + r / 2) - (r / 2) * (r / 2) < -HERM_TOL)
        throw std::domain_error("XStateParams: (x+r/2)(y+r/2) >= (r/2)^2 violated (not PSD)");
}

Matrix4c bell_phi_plus() {
    Matrix4c m;
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return m;
}

DensityMatrix from_x_params(const XStateParams& p) {
    p.validate();
    return DensityMatrix(x_form_matrix(p.x, p.y, p.a, p.b, p.r));
}

DensityMatrix rank3_x_state(double a, double r) {
    check_range01(a, "a");
    check_range01(r, "r");
    if (a + r > 1.0 + HERM_TOL)
        throw std::domain_error("rank3_x_state: a + r must not exceed 1");
    Matrix4c m;
    m(0, 0) = m(3, 3) = (1.0 - a) / 2;
    m(1, 1) = a;
    m(0, 3) = m(3, 0) = r / 2;
    return DensityMatrix(m);
}

DensityMatrix maximal_form_from_spectrum(const Spectrum& s) {
    for (double v : s.values) check_range01(v, "eigenvalue");
    if (std::abs(s.sum() - 1.0) > RECON_TOL)
        throw std::domain_error("maximal_form_from_spectrum: eigenvalues must sum to 1");
    for (int k = 0; k < 3; ++k)
        if (s[k] < s[k + 1])
            throw std::domain_error("maximal_form_from_spectrum: spectrum not non-increasing");
    Matrix4c m;
    m(0, 0) = m(3, 3) = (s[0] + s[2]) / 2;
    m(1, 1) = s[1];
    m(2, 2) = s[3];
    m(0, 3) = m(3, 0) = (s[0] - s[2]) / 2;
    return DensityMatrix(m);
}

DensityMatrix werner(double r) {
    check_range01(r, "r");
    return DensityMatrix(x_form_matrix((1 - r) / 4, (1 - r) / 4, (1 - r) / 4, (1 - r) / 4, r));
}

DensityMatrix mems_ef_sl(double r) {
    check_range01(r, "r");
    Matrix4c m;
    if (r >= 2.0 / 3.0) {
        m(0, 0) = m(3, 3) = r / 2;
        m(1, 1) = 1 - r;
    } else {
        m(0, 0) = m(1, 1) = m(3, 3) = 1.0 / 3.0;
    }
    m(0, 3) = m(3, 0) = r / 2;
    return DensityMatrix(m);
}

DensityMatrix mems_n_sl(double r, int family) {
    check_range01(r, "r");
    if (family == 1) return werner(r);
    if (family != 2) throw std::domain_error("mems_n_sl: family must be 1 or 2");
    const double s = std::sqrt(3 * r * r + 1);
    Matrix4c m;
    m(0, 0) = m(3, 3) = (1 + s) / 6;
    m(1, 1) = (4 - 2 * s) / 6;
    m(0, 3) = m(3, 0) = r / 2;
    return DensityMatrix(m);
}

DensityMatrix mems_ef_sv(double c, EfSvBranch branch) {
    check_range01(c, "c");
    if (branch == EfSvBranch::rank3) {
        const double s = std::sqrt(4 - 3 * c * c);
        return rank3_x_state((s - 1) / 3, c);
    }
    return werner((1 + 2 * c) / 3);
}

DensityMatrix gisin_c(double r) {
    check_range01(r, "r");
    Matrix4c m;
    m(0, 0) = m(3, 3) = r / 2;
    m(1, 1) = m(2, 2) = (1 - r) / 2;
    m(0, 3) = m(3, 0) = r / 2;
    return DensityMatrix(m);
}

DensityMatrix bell_diagonal_rank2(double r) {
    check_range01(r, "r");
    Matrix4c m;
    m(0, 0) = m(3, 3) = 0.5;
    m(0, 3) = m(3, 0) = r - 0.5;
    return DensityMatrix(m);
}

DensityMatrix bell_diagonal(const Spectrum& s) {
    if (std::abs(s.sum() - 1.0) > RECON_TOL)
        throw std::domain_error("bell_diagonal: eigenvalues must sum to 1");
    // In the product basis: diag/corner blocks from |phi+/-,> middle from |psi+/->.
    Matrix4c m;
    m(0, 0) = m(3, 3) = (s[0] + s[1]) / 2;
    m(0, 3) = m(3, 0) = (s[0] - s[1]) / 2;
    m(1, 1) = m(2, 2) = (s[2] + s[3]) / 2;
    m(1, 2) = m(2, 1) = (s[2] - s[3]) / 2;
    return DensityMatrix(m);
}

Spectrum entropy_plane_spectrum(EntropySegment segment, double r) {
    auto in = [r](double lo, double hi) { return r >= lo - HERM_TOL && r <= hi + HERM_TOL; };
    switch (segment) {
        case EntropySegment::a:
            if (!in(0, 1)) throw std::domain_error("segment a: r outside [0,1]");
            return Spectrum::sorted({(1 + 3 * r) / 4, (1 - r) / 4, (1 - r) / 4, (1 - r) / 4});
        case EntropySegment::b:
            if (!in(0.5, 1)) throw std::domain_error("segment b: r outside [1/2,1]");
            return Spectrum::sorted({r, 1 - r, 0, 0});
        case EntropySegment::c:
            if (!in(0, 1.0 / 3.0)) throw std::domain_error("segment c: r outside [0,1/3]");
            return Spectrum::sorted({r, (1 - r) / 2, (1 - r) / 2, 0});
        case EntropySegment::d:
            if (!in(0, 1)) throw std::domain_error("segment d: r outside [0,1]");
            return Spectrum::sorted({(4 - r) / 12, (4 - r) / 12, (4 - r) / 12, r / 4});
    }
    throw std::domain_error("entropy_plane_spectrum: unknown segment");
}

// ---------------------------------------------------------------------------
// Random sampling. All randomness flows through SplitMix-seeded mt19937_64
// with explicit uniform/normal mappings so that output is bit-stable across
// platforms and standard-library versions.

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // Warm up so nearby seeds decorrelate.
        for (int i = 0; i < 4; ++i) splitmix64(state_);
    }

    double uniform01() {  // in [0, 1)
        return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
    }

    double exponential() { return -std::log1p(-uniform01()); }

    complex gaussian() {  // standard complex normal, variance 1 per component
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double m = std::sqrt(-2.0 * std::log(u1));
        return {m * std::cos(2 * M_PI * u2), m * std::sin(2 * M_PI * u2)};
    }

  private:
    std::uint64_t state_;
};

// Haar-random 4x4 unitary: QR of a complex Ginibre matrix by modified
// Gram-Schmidt with positive diagonal normalization.
Matrix4c haar_unitary(Rng& rng) {
    Matrix4c z;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) z(i, j) = rng.gaussian();
    for (int c = 0; c < 4; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            complex proj = 0.0;
            for (int i = 0; i < 4; ++i) proj += std::conj(z(i, prev)) * z(i, c);
            for (int i = 0; i < 4; ++i) z(i, c) -= proj * z(i, prev);
        }
        double norm = 0.0;
        for (int i = 0; i < 4; ++i) norm += std::norm(z(i, c));
        norm = std::sqrt(norm);
        for (int i = 0; i < 4; ++i) z(i, c) /= norm;
    }
    return z;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + index * 0xd1b54a32d192ed03ULL);
    splitmix64(s);
    return s;
}

DensityMatrix random_density(int rank, std::uint64_t rng_seed) {
    if (rank < 1 || rank > 4) throw std::domain_error("random_density: rank must be 1..4");
    Rng rng(rng_seed);
    std::array<double, 4> lam{};
    double sum = 0.0;
    for (int k = 0; k < rank; ++k) {
        lam[k] = rng.exponential();
        sum += lam[k];
    }
    for (int k = 0; k < rank; ++k) lam[k] /= sum;
    const Matrix4c u = haar_unitary(rng);
    Matrix4c m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            complex acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += lam[k] * u(i, k) * std::conj(u(j, k));
            m(i, j) = acc;
        }
    return DensityMatrix(m.hermitized());
}

XStateParams random_x_params(std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    std::array<double, 5> v{};
    double sum = 0.0;
    for (auto& e : v) {
        e = rng.exponential();
        sum += e;
    }
    for (auto& e : v) e /= sum;
    return XStateParams{v[0], v[1], v[2], v[3], v[4]};
}

LSDecomposition ls_decompose_x_state(const XStateParams& p) {
    p.validate();
    const double sab = std::sqrt(p.a * p.b);
    const double weight = p.r - 2 * sab;  // 1 - lambda
    const DensityMatrix entangled{bell_phi_plus()};
    if (weight <= 0.0)
        return LSDecomposition{1.0, from_x_params(p), entangled, true};

    Matrix4c sep;
    sep(0, 0) = p.x + sab;
    sep(1, 1) = p.a;
    sep(2, 2) = p.b;
    sep(3, 3) = p.y + sab;
    sep(0, 3) = sep(3, 0) = sab;
    const double lambda = 1.0 - weight;
    return LSDecomposition{lambda, DensityMatrix(sep * (1.0 / lambda)), entangled, false};
}

}  // namespace memsfront
