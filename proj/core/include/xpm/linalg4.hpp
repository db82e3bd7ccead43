#pragma once

#include <array>
#include <complex>

namespace xpm {

using cx = std::complex<double>;

// Dense complex 4x4 matrix, row-major. Just enough linear algebra for
// two-qubit density matrices: products, adjoints, Hermitian eigensolves,
// and the Hermitian square root.
class Mat4 {
 public:
  Mat4() = default;

  static Mat4 identity();
  static Mat4 diag(double a, double b, double c, double d);

  cx& operator()(int r, int c) { return a_[r * 4 + c]; }
  const cx& operator()(int r, int c) const { return a_[r * 4 + c]; }

  Mat4 adjoint() const;
  Mat4 conjugate() const;
  cx trace() const;
  double frobenius_norm() const;
  // max_{r,c} |A(r,c) - conj(A(c,r))|
  double hermiticity_defect() const;

  friend Mat4 operator*(const Mat4& x, const Mat4& y);
  friend Mat4 operator+(const Mat4& x, const Mat4& y);
  friend Mat4 operator-(const Mat4& x, const Mat4& y);
  friend Mat4 operator*(cx s, const Mat4& x);

 private:
  std::array<cx, 16> a_{};
};

struct Eig4 {
  std::array<double, 4> values;  // ascending
  Mat4 vectors;                  // columns; M = V diag(values) V†
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Throws validation_error if the Hermiticity defect exceeds
// herm_tol.
Eig4 eig_hermitian(const Mat4& m, double herm_tol = 1e-10);
std::array<double, 4> eigvals_hermitian(const Mat4& m,
                                        double herm_tol = 1e-10);

// Square root of a Hermitian PSD matrix. Eigenvalues in [-neg_tol, 0) are
// clipped to zero; more negative ones raise numerical_error.
Mat4 hermitian_sqrt(const Mat4& m, double neg_tol = 1e-10);

// Logical two-qubit state, basis order (|00⟩, |01⟩, |10⟩, |11⟩).
// Validated to be Hermitian, unit-trace, and positive semidefinite.
class DensityMatrix4 {
 public:
  static constexpr double kHermTol = 1e-12;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kPsdTol = 1e-10;

  // Throws numerical_error when the candidate violates an invariant.
  explicit DensityMatrix4(const Mat4& m);

  // Non-throwing physicality check: Hermitian, unit trace, eigenvalues in
  // [-kPsdTol, 1 + kPsdTol].
  static bool is_physical(const Mat4& m);

  const Mat4& matrix() const { return m_; }
  cx operator()(int r, int c) const { return m_(r, c); }

 private:
  Mat4 m_;
};

// Wootters concurrence C(ρ) ∈ [0, 1]. The spin-flipped state is
// ρ̃ = (σy⊗σy) ρ* (σy⊗σy); the eigenvalues of ρρ̃ are obtained from the
// Hermitian PSD similarity √ρ ρ̃ √ρ, and
//   C = max(0, λ1 - λ2 - λ3 - λ4)
// with λi the descending square roots of those eigenvalues.
double concurrence(const DensityMatrix4& rho);

namespace detail {
// Concurrence without physicality validation; rho must already be known
// Hermitian PSD (used by sampling loops that check physicality themselves).
double concurrence_unchecked(const Mat4& rho);
}  // namespace detail

}  // namespace xpm
