#include "memsfront/matrix4.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace memsfront {

Matrix4c Matrix4c::identity() {
    Matrix4c m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Matrix4c Matrix4c::diag(double d0, double d1, double d2, double d3) {
    Matrix4c m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    m(3, 3) = d3;
    return m;
}

Matrix4c Matrix4c::operator+(const Matrix4c& o) const {
    Matrix4c r;
    for (int i = 0; i < 16; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix4c Matrix4c::operator-(const Matrix4c& o) const {
    Matrix4c r;
    for (int i = 0; i < 16; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix4c Matrix4c::operator*(const Matrix4c& o) const {
    Matrix4c r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const complex a = (*this)(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < 4; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix4c Matrix4c::operator*(double s) const {
    Matrix4c r;
    for (int i = 0; i < 16; ++i) r.e_[i] = e_[i] * s;
    return r;
}

Matrix4c Matrix4c::operator*(complex s) const {
    Matrix4c r;
    for (int i = 0; i < 16; ++i) r.e_[i] = e_[i] * s;
    return r;
}

Matrix4c Matrix4c::adjoint() const {
    Matrix4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

Matrix4c Matrix4c::conjugate() const {
    Matrix4c r;
    for (int i = 0; i < 16; ++i) r.e_[i] = std::conj(e_[i]);
    return r;
}

Matrix4c Matrix4c::transpose() const {
    Matrix4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
    return r;
}

complex Matrix4c::trace() const { return e_[0] + e_[5] + e_[10] + e_[15]; }

double Matrix4c::max_abs() const {
    double m = 0.0;
    for (const auto& z : e_) m = std::max(m, std::abs(z));
    return m;
}

double Matrix4c::max_abs_diff(const Matrix4c& o) const {
    double m = 0.0;
    for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(e_[i] - o.e_[i]));
    return m;
}

double Matrix4c::frobenius_sq() const {
    double s = 0.0;
    for (const auto& z : e_) s += std::norm(z);
    return s;
}

bool Matrix4c::is_hermitian(double tol) const {
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

Matrix4c Matrix4c::hermitized() const {
    Matrix4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return r;
}

Spectrum Spectrum::sorted(std::array<double, 4> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Spectrum{v};
}

Matrix4c Eigensystem::assemble(const std::array<double, 4>& f_of_lambda) const {
    Matrix4c r;
    for (int k = 0; k < 4; ++k) {
        if (f_of_lambda[k] == 0.0) continue;
        for (int i = 0; i < 4; ++i) {
            const complex vik = vectors(i, k);
            for (int j = 0; j < 4; ++j) r(i, j) += f_of_lambda[k] * vik * std::conj(vectors(j, k));
        }
    }
    return r;
}

namespace {

double offdiag_sq(const Matrix4c& a) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return s;
}

// One complex Jacobi rotation zeroing a(p,q). The rotation is
// U = I except U(p,p)=c, U(p,q)=-s*phi, U(q,p)=s*conj(phi), U(q,q)=c,
// with phi the phase of a(p,q). Updates a <- U^dag a U and v <- v U.
void rotate(Matrix4c& a, Matrix4c& v, int p, int q) {
    const complex apq = a(p, q);
    const double b = std::abs(apq);
    if (b < 1e-300) {
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        return;
    }
    const complex phi = apq / b;
    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();
    const double theta = 0.5 * std::atan2(2.0 * b, alpha - gamma);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const complex spw = s * phi;             // s e^{i phi}
    const complex spc = s * std::conj(phi);  // s e^{-i phi}

    // a <- a U
    for (int k = 0; k < 4; ++k) {
        const complex akp = a(k, p);
        const complex akq = a(k, q);
        a(k, p) = akp * c + akq * spc;
        a(k, q) = akq * c - akp * spw;
    }
    // a <- U^dag a
    for (int k = 0; k < 4; ++k) {
        const complex apk = a(p, k);
        const complex aqk = a(q, k);
        a(p, k) = apk * c + aqk * spw;
        a(q, k) = aqk * c - apk * spc;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    // v <- v U
    for (int k = 0; k < 4; ++k) {
        const complex vkp = v(k, p);
        const complex vkq = v(k, q);
        v(k, p) = vkp * c + vkq * spc;
        v(k, q) = vkq * c - vkp * spw;
    }
}

}  // namespace

Eigensystem hermitian_eigensystem(const Matrix4c& m) {
    if (!m.is_hermitian())
        throw std::domain_error("hermitian_eigensystem: input is not Hermitian within tolerance");

    Matrix4c a = m.hermitized();
    Matrix4c v = Matrix4c::identity();

    for (int sweep = 0; sweep < 64 && offdiag_sq(a) > 1e-30; ++sweep)
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) rotate(a, v, p, q);

    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> d{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real()};
    std::sort(order.begin(), order.end(), [&d](int i, int j) { return d[i] > d[j]; });

    Eigensystem es;
    Matrix4c vs;
    for (int k = 0; k < 4; ++k) {
        es.spectrum.values[k] = d[order[k]];
        for (int i = 0; i < 4; ++i) vs(i, k) = v(i, order[k]);
    }
    es.vectors = vs;
    return es;
}

Matrix4c partial_transpose(const Matrix4c& rho) {
    Matrix4c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + l, 2 * k + j) = rho(2 * i + j, 2 * k + l);
    return r;
}

Matrix4c spectral_function(const Matrix4c& m, const std::function<double(double)>& f,
                           ZeroConvention zero_convention) {
    const Eigensystem es = hermitian_eigensystem(m);
    std::array<double, 4> fl{};
    for (int k = 0; k < 4; ++k) {
        double lam = es.spectrum[k];
        if (lam < 0.0 && lam > -EIG_CLIP) lam = 0.0;
        if (zero_convention == ZeroConvention::support && lam <= EIG_CLIP) {
            fl[k] = 0.0;
            continue;
        }
        const double val = f(lam);
        if (!std::isfinite(val)) {
            if (lam > EIG_CLIP)
                throw std::domain_error("spectral_function: f undefined at eigenvalue " +
                                        std::to_string(lam));
            throw std::domain_error(
                "spectral_function: f undefined at zero eigenvalue (support convention not set)");
        }
        fl[k] = val;
    }
    return es.assemble(fl);
}

Matrix4c matrix_sqrt(const Matrix4c& m) {
    return spectral_function(
        m, [](double x) { return std::sqrt(std::max(x, 0.0)); }, ZeroConvention::support);
}

}  // namespace memsfront
