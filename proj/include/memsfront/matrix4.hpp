#pragma once

#include <array>
#include <complex>
#include <functional>
#include <stdexcept>

namespace memsfront {

using complex = std::complex<double>;

// Tolerances shared across the library and its tests.
inline constexpr double HERM_TOL = 1e-12;   // Hermiticity check
inline constexpr double RECON_TOL = 1e-10;  // eigen-reconstruction / invariants
inline constexpr double EIG_CLIP = 1e-12;   // negative-eigenvalue clipping for PSD drift

/// Dense complex 4x4 matrix, row-major, fixed size.
class Matrix4c {
  public:
    Matrix4c() : e_{} {}

    static Matrix4c zero() { return Matrix4c{}; }
    static Matrix4c identity();
    /// Diagonal matrix from four real entries.
    static Matrix4c diag(double d0, double d1, double d2, double d3);

    complex& operator()(int i, int j) { return e_[4 * i + j]; }
    const complex& operator()(int i, int j) const { return e_[4 * i + j]; }

    Matrix4c operator+(const Matrix4c& o) const;
    Matrix4c operator-(const Matrix4c& o) const;
    Matrix4c operator*(const Matrix4c& o) const;
    Matrix4c operator*(double s) const;
    Matrix4c operator*(complex s) const;

    Matrix4c adjoint() const;
    Matrix4c conjugate() const;
    Matrix4c transpose() const;

    complex trace() const;
    /// Largest |entry| of the matrix.
    double max_abs() const;
    /// Largest entrywise |difference| against another matrix.
    double max_abs_diff(const Matrix4c& o) const;
    /// sum_ij |m_ij|^2 (= Tr m^dag m); for Hermitian m this equals Tr m^2.
    double frobenius_sq() const;

    bool is_hermitian(double tol = HERM_TOL) const;
    /// (m + m^dag)/2
    Matrix4c hermitized() const;

    bool operator==(const Matrix4c& o) const { return e_ == o.e_; }

  private:
    std::array<complex, 16> e_;
};

inline Matrix4c operator*(double s, const Matrix4c& m) { return m * s; }

/// Four real eigenvalues sorted non-increasing.
struct Spectrum {
    std::array<double, 4> values{};

    static Spectrum sorted(std::array<double, 4> v);
    double operator[](int i) const { return values[i]; }
    double sum() const { return values[0] + values[1] + values[2] + values[3]; }
    double min() const { return values[3]; }
};

/// Eigenvalues (non-increasing) and matching orthonormal eigenvectors,
/// stored as the columns of `vectors`.
struct Eigensystem {
    Spectrum spectrum;
    Matrix4c vectors;

    /// sum_k f(lambda_k) v_k v_k^dag
    Matrix4c assemble(const std::array<double, 4>& f_of_lambda) const;
};

/// Full eigensystem of a Hermitian matrix via cyclic complex Jacobi
/// rotations. Throws std::domain_error if `m` is not Hermitian within
/// HERM_TOL.
Eigensystem hermitian_eigensystem(const Matrix4c& m);

/// Transposition of the second-qubit index:
/// entry (2i+j, 2k+l) -> (2i+l, 2k+j). Exact entry copy, an involution.
Matrix4c partial_transpose(const Matrix4c& rho);

/// Handling of (near-)zero eigenvalues in spectral_function.
enum class ZeroConvention {
    none,     // f is applied to every eigenvalue
    support,  // eigenvalues <= EIG_CLIP are skipped (0*f(0) := 0)
};

/// sum_k f(lambda_k) v_k v_k^dag. Eigenvalues in (-EIG_CLIP, 0) are
/// clipped to 0 first. A non-finite f value at an eigenvalue above the
/// support cutoff raises std::domain_error.
Matrix4c spectral_function(const Matrix4c& m, const std::function<double(double)>& f,
                           ZeroConvention zero_convention = ZeroConvention::none);

/// Principal square root of a PSD Hermitian matrix (support convention).
Matrix4c matrix_sqrt(const Matrix4c& m);

}  // namespace memsfront
