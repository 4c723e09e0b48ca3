#pragma once

#include <utility>

#include "memsfront/states.hpp"

namespace memsfront {

/// All entanglement and mixedness functionals of one state.
/// Entanglement quantities (eof, er) use log base 2 so Bell states score 1;
/// the von Neumann entropy uses log base 4 so the maximally mixed state
/// scores 1.
struct MeasureVector {
    double concurrence = 0;
    double tangle = 0;
    double eof = 0;
    double negativity = 0;
    double linear_entropy = 0;
    double von_neumann_entropy = 0;
    double chsh_b = 0;
};

/// Binary entropy -x log2 x - (1-x) log2(1-x), with 0 log 0 := 0.
double binary_entropy(double x);

/// Wootters concurrence: max{0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)} where
/// l_i are the (non-increasing) eigenvalues of rho (sy x sy) rho* (sy x sy),
/// computed as the spectrum of sqrt(rho) rho~ sqrt(rho).
double concurrence(const DensityMatrix& rho);

double tangle(const DensityMatrix& rho);

/// Entanglement of formation h((1 + sqrt(1-C^2))/2).
double eof(const DensityMatrix& rho);
double eof_from_concurrence(double c);

/// Twice the magnitude of the negative part of the partial-transpose
/// spectrum.
double negativity(const DensityMatrix& rho);

/// Closed form for X states: max{0, sqrt((a-b)^2 + r^2) - (a+b)}.
double negativity_x_form(const XStateParams& p);

/// (4/3)(1 - Tr rho^2).
double linear_entropy(const DensityMatrix& rho);

/// -sum_i lambda_i log4 lambda_i with 0 log 0 := 0.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const Spectrum& s);
double linear_entropy(const Spectrum& s);

/// 1 / Tr rho^2, in [1, 4]. Every state with ratio >= 3 is separable.
double participation_ratio(const DensityMatrix& rho);
bool participation_separable(double ratio);

/// Closest separable state to the rank<=3 X state diag((1-a)/2, a, 0,
/// (1-a)/2) with corners r/2. Requires a, r >= 0 and a + r <= 1.
DensityMatrix closest_separable_rank3(double a, double r);

/// Relative entropy of entanglement of the same family, log base 2:
///   ((1+a)/2) log[((1+a)^2 - r^2)/(1+a)^2] + (r/2) log[(1+a+r)/(1+a-r)],
/// evaluated in the regrouped form that stays finite at r -> 1+a.
double er_rank3(double a, double r);

/// Relative entropy of entanglement of Werner(r): the closest separable
/// state is the boundary Werner state (r = 1/3), giving 1 - h((1+3r)/4).
double er_werner(double r);

/// Largest CHSH combination over all apparatus settings, computed from the
/// two largest singular values of the 3x3 correlation matrix
/// T_ij = Tr(rho sigma_i x sigma_j):  B = 2 sqrt(t1^2 + t2^2).
/// B > 2 flags a Bell-inequality violation.
double chsh_b(const DensityMatrix& rho);

/// Closed form for the symmetric (y = x) X family:
///   B = 2 sqrt((4(x + r/2) - 1)^2 + r^2).
/// This restricts the apparatus settings to the x-z correlation plane; it
/// equals chsh_b exactly when |4(x+r/2)-1| >= r and is a lower bound
/// otherwise.
double chsh_x_form(const XStateParams& p);

/// Correlation matrix entries T_ij (row-major 3x3).
std::array<double, 9> correlation_matrix(const DensityMatrix& rho);

/// Bounds of the negativity at fixed concurrence c:
///   n_max = c,  n_min = sqrt(2(c - 1/2)^2 + 1/2) + (c - 1).
std::pair<double, double> cn_bounds(double c);

MeasureVector measure_all(const DensityMatrix& rho);

}  // namespace memsfront
