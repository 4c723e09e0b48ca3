#pragma once

#include <cstdint>

#include "memsfront/matrix4.hpp"

namespace memsfront {

/// Validated two-qubit density matrix: Hermitian, unit trace, PSD.
/// Basis ordering is |00>, |01>, |10>, |11> throughout.
class DensityMatrix {
  public:
    /// Validates the invariants (trace 1 to 1e-10, eigenvalues >= -1e-10,
    /// Hermitian to 1e-12) and throws std::domain_error naming the violated
    /// one.
    explicit DensityMatrix(const Matrix4c& m);

    const Matrix4c& matrix() const { return m_; }
    const complex& operator()(int i, int j) const { return m_(i, j); }

  private:
    Matrix4c m_;
};

/// Parameters (x, y, a, b, r) of the X-form state
///   diag(x+r/2, a, b, y+r/2) with anti-diagonal corners r/2.
struct XStateParams {
    double x = 0, y = 0, a = 0, b = 0, r = 0;

    /// Throws std::domain_error if negative, not normalized to 1e-12, or the
    /// induced matrix is not PSD to -1e-12.
    void validate() const;
};

/// rho = lambda rho_s + (1-lambda) rho_e with maximal separable weight.
struct LSDecomposition {
    double lambda = 1.0;
    DensityMatrix separable_part;
    DensityMatrix entangled_part;  // |phi+><phi+| (rank-1)
    bool fully_separable = false;  // set when r - 2 sqrt(ab) <= 0
};

Matrix4c bell_phi_plus();  // |phi+><phi+|

/// X-form matrix from validated parameters.
DensityMatrix from_x_params(const XStateParams& p);

/// X-form state diag((1-a)/2, a, 0, (1-a)/2) with corners r/2; the rank<=3
/// family every frontier branch below reduces to.
DensityMatrix rank3_x_state(double a, double r);

/// The entanglement-maximal state for a given spectrum s (non-increasing):
/// X-form with x + r/2 = (l1+l3)/2, r = l1-l3, a = l2, b = l4.
DensityMatrix maximal_form_from_spectrum(const Spectrum& s);

/// r |phi+><phi+| + (1-r)/4 * identity.
DensityMatrix werner(double r);

/// Concurrence-vs-linear-entropy frontier family: branch II for r < 2/3,
/// branch I for r >= 2/3 (the matrices coincide at r = 2/3).
DensityMatrix mems_ef_sl(double r);

/// Negativity-vs-linear-entropy frontier families: 1 = Werner(r),
/// 2 = the rank-3 family with a = (4 - 2 sqrt(3r^2+1))/6, b = 0.
DensityMatrix mems_n_sl(double r, int family);

enum class EfSvBranch { rank3, werner };

/// Concurrence-vs-von-Neumann-entropy frontier families, parametrized by the
/// concurrence c of the output state.
DensityMatrix mems_ef_sv(double c, EfSvBranch branch);

/// r |phi+><phi+| + (1-r)/2 (|01><01| + |10><10|); spectrum {r,(1-r)/2,(1-r)/2,0}.
DensityMatrix gisin_c(double r);

/// r |phi+><phi+| + (1-r) |phi-><phi-|; X-form with corner value r - 1/2.
DensityMatrix bell_diagonal_rank2(double r);

/// Bell-diagonal state with the given spectrum assigned to the four Bell
/// projectors |phi+>, |phi->, |psi+>, |psi-> in order.
DensityMatrix bell_diagonal(const Spectrum& s);

enum class EntropySegment { a, b, c, d };

/// Eigenvalue families tracing the boundary of the S_L vs S_V region:
///   a: {(1+3r)/4, (1-r)/4 x3}       r in [0,1]   (upper boundary)
///   b: {r, 1-r, 0, 0}               r in [1/2,1] (lower, purest piece)
///   c: {r, (1-r)/2, (1-r)/2, 0}     r in [0,1/3] (lower, middle piece)
///   d: {(4-r)/12 x3, 3r/12}         r in [0,1]   (lower, most mixed piece)
/// Re-sorted non-increasing. Throws std::domain_error outside the range.
Spectrum entropy_plane_spectrum(EntropySegment segment, double r);

/// Random density matrix of the requested rank: eigenvalues drawn from the
/// flat Dirichlet over the rank-k simplex, conjugated by a Haar-random
/// unitary. Fully deterministic for a fixed seed, independent of platform.
DensityMatrix random_density(int rank, std::uint64_t rng_seed);

/// Random X-form parameters, flat Dirichlet over the 4-simplex (x,y,a,b,r).
XStateParams random_x_params(std::uint64_t rng_seed);

/// Derives a per-record seed stream from (seed, index); splitmix64 mixing.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Lewenstein-Sanpera decomposition of an X-form state: the separable part
/// keeps the diagonal with corners sqrt(ab), the entangled part is
/// |phi+><phi+|, and 1 - lambda = r - 2 sqrt(ab). When r - 2 sqrt(ab) <= 0
/// the state itself is separable: lambda = 1 and fully_separable is set.
LSDecomposition ls_decompose_x_state(const XStateParams& p);

}  // namespace memsfront
