#include "memsfront/measures.hpp"

#include <algorithm>
#include <cmath>

namespace memsfront {

namespace {

constexpr double LOG4 = 1.3862943611198906;  // ln 4

Matrix4c spin_flip_operator() {  // sigma_y x sigma_y (real)
    Matrix4c s;
    s(0, 3) = s(3, 0) = -1.0;
    s(1, 2) = s(2, 1) = 1.0;
    return s;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

double binary_entropy(double x) { return -xlog2x(x) - xlog2x(1.0 - x); }

double concurrence(const DensityMatrix& rho) {
    static const Matrix4c S = spin_flip_operator();
    const Matrix4c tilde = S * rho.matrix().conjugate() * S;
    const Matrix4c root = matrix_sqrt(rho.matrix());
    const Matrix4c m = (root * tilde * root).hermitized();
    const Spectrum lam = hermitian_eigensystem(m).spectrum;
    double c = 0.0;
    for (int k = 0; k < 4; ++k) {
        // Clip eigensolver noise: a true zero would otherwise surface as
        // sqrt(1e-17) ~ 3e-9 in the concurrence.
        const double s = lam[k] > EIG_CLIP ? std::sqrt(lam[k]) : 0.0;
        c += (k == 0) ? s : -s;
    }
    return std::max(0.0, c);
}

double tangle(const DensityMatrix& rho) {
    const double c = concurrence(rho);
    return c * c;
}

double eof_from_concurrence(double c) {
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double eof(const DensityMatrix& rho) { return eof_from_concurrence(concurrence(rho)); }

double negativity(const DensityMatrix& rho) {
    const Spectrum s = hermitian_eigensystem(partial_transpose(rho.matrix())).spectrum;
    double neg_sum = 0.0;
    for (double v : s.values)
        if (v < 0.0) neg_sum += v;
    return 2.0 * std::max(0.0, -neg_sum);
}

double negativity_x_form(const XStateParams& p) {
    return std::max(0.0, std::hypot(p.a - p.b, p.r) - (p.a + p.b));
}

double linear_entropy(const DensityMatrix& rho) {
    return (4.0 / 3.0) * (1.0 - rho.matrix().frobenius_sq());
}

double linear_entropy(const Spectrum& s) {
    double p = 0.0;
    for (double v : s.values) p += v * v;
    return (4.0 / 3.0) * (1.0 - p);
}

double von_neumann_entropy(const Spectrum& s) {
    double acc = 0.0;
    for (double v : s.values)
        if (v > EIG_CLIP) acc -= v * std::log(v);
    return acc / LOG4;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return von_neumann_entropy(hermitian_eigensystem(rho.matrix()).spectrum);
}

double participation_ratio(const DensityMatrix& rho) {
    return 1.0 / rho.matrix().frobenius_sq();
}

bool participation_separable(double ratio) { return ratio >= 3.0; }

DensityMatrix closest_separable_rank3(double a, double r) {
    if (a < 0.0 || r < 0.0 || a + r > 1.0 + HERM_TOL)
        throw std::domain_error("closest_separable_rank3: need a, r >= 0 and a + r <= 1");
    const double den = (1 + a) * (1 + a) - r * r;
    Matrix4c m;
    double c, d, e;
    if (den < 1e-13) {  // only reachable at (a, r) -> (0, 1)
        c = 0.5;
        d = 0.0;
        e = 0.0;
    } else {
        c = (1 + a) * (1 - a * a - r * r) / (2 * den);
        d = a * (1 + a) * r / den;
        e = a * (1 + a) * (1 + a) / den;
    }
    m(0, 0) = m(3, 3) = c;
    m(1, 1) = e;
    m(2, 2) = 1 - 2 * c - e;
    m(0, 3) = m(3, 0) = d;
    return DensityMatrix(m);
}

double er_rank3(double a, double r) {
    if (a < 0.0 || r < 0.0 || a + r > 1.0 + HERM_TOL)
        throw std::domain_error("er_rank3: need a, r >= 0 and a + r <= 1");
    // Regrouped so the r -> 1+a limit is the plain 0 log 0 convention.
    return 0.5 * xlog2x(1 + a + r) + 0.5 * xlog2x(1 + a - r) - xlog2x(1 + a);
}

double er_werner(double r) {
    const double lam = (1 + 3 * r) / 4;
    if (lam <= 0.5) return 0.0;
    return 1.0 - binary_entropy(lam);
}

std::array<double, 9> correlation_matrix(const DensityMatrix& rho) {
    static const std::array<std::array<complex, 4>, 3> pauli{{
        {complex(0), complex(1), complex(1), complex(0)},                    // x
        {complex(0), complex(0, -1), complex(0, 1), complex(0)},             // y
        {complex(1), complex(0), complex(0), complex(-1)},                   // z
    }};
    const Matrix4c& m = rho.matrix();
    std::array<double, 9> t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // Tr(rho (sigma_i x sigma_j)) = sum_{pq} rho_pq (sigma_i x sigma_j)_qp
            complex acc = 0.0;
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q) {
                    const complex spq =
                        pauli[i][2 * (q / 2) + (p / 2)] * pauli[j][2 * (q % 2) + (p % 2)];
                    if (spq != complex(0)) acc += m(p, q) * spq;
                }
            t[3 * i + j] = acc.real();
        }
    return t;
}

double chsh_b(const DensityMatrix& rho) {
    const std::array<double, 9> t = correlation_matrix(rho);
    // Eigenvalues of the 3x3 symmetric T^T T by cyclic Jacobi.
    double g[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += t[3 * k + i] * t[3 * k + j];
            g[i][j] = acc;
        }
    for (int sweep = 0; sweep < 32; ++sweep) {
        double off = std::abs(g[0][1]) + std::abs(g[0][2]) + std::abs(g[1][2]);
        if (off < 1e-16) break;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(g[p][q]) < 1e-300) continue;
                const double theta = 0.5 * std::atan2(2 * g[p][q], g[p][p] - g[q][q]);
                const double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < 3; ++k) {
                    const double gkp = g[k][p], gkq = g[k][q];
                    g[k][p] = c * gkp + s * gkq;
                    g[k][q] = -s * gkp + c * gkq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double gpk = g[p][k], gqk = g[q][k];
                    g[p][k] = c * gpk + s * gqk;
                    g[q][k] = -s * gpk + c * gqk;
                }
            }
    }
    std::array<double, 3> ev{g[0][0], g[1][1], g[2][2]};
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return 2.0 * std::sqrt(std::max(0.0, ev[0] + ev[1]));
}

double chsh_x_form(const XStateParams& p) {
    const double tzz = 4 * (p.x + p.r / 2) - 1;
    return 2.0 * std::hypot(tzz, p.r);
}

std::pair<double, double> cn_bounds(double c) {
    const double n_min = std::sqrt(2 * (c - 0.5) * (c - 0.5) + 0.5) + (c - 1.0);
    return {n_min, c};
}

MeasureVector measure_all(const DensityMatrix& rho) {
    MeasureVector v;
    v.concurrence = concurrence(rho);
    v.tangle = v.concurrence * v.concurrence;
    v.eof = eof_from_concurrence(v.concurrence);
    v.negativity = negativity(rho);
    v.linear_entropy = linear_entropy(rho);
    v.von_neumann_entropy = von_neumann_entropy(rho);
    v.chsh_b = chsh_b(rho);
    return v;
}

}  // namespace memsfront
