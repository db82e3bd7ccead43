#include "xpm/linalg4.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "xpm/errors.hpp"

namespace xpm {

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat4 Mat4::diag(double a, double b, double c, double d) {
  Mat4 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

Mat4 Mat4::adjoint() const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

Mat4 Mat4::conjugate() const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(i, j));
  return r;
}

cx Mat4::trace() const {
  return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3);
}

double Mat4::frobenius_norm() const {
  double s = 0.0;
  for (const cx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double Mat4::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

Mat4 operator*(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cx s = 0.0;
      for (int k = 0; k < 4; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat4 operator+(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = x(i, j) + y(i, j);
  return r;
}

Mat4 operator-(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

Mat4 operator*(cx s, const Mat4& x) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = s * x(i, j);
  return r;
}

namespace {

double offdiag_norm(const Mat4& a) {
  double s = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

// One complex Jacobi rotation zeroing A(p,q). The 2x2 unitary is
//   G = [[c, -conj(s)], [s, c]]  on the (p,q) plane,
// with c real and s = sin(theta) e^{-i arg(A_pq)}; theta solves the real
// Jacobi equation for |A_pq|.
void jacobi_rotate(Mat4& a, Mat4& q_acc, int p, int q) {
  const cx apq = a(p, q);
  const double abs_apq = std::abs(apq);
  if (abs_apq == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double zeta = (app - aqq) / (2.0 * abs_apq);
  double t;  // tan(theta), smaller-magnitude root of t² + 2ζt - 1 = 0
  if (zeta >= 0.0)
    t = 1.0 / (zeta + std::sqrt(1.0 + zeta * zeta));
  else
    t = -1.0 / (-zeta + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double sigma = t * c;
  const cx u = apq / abs_apq;  // e^{i arg(A_pq)}
  const cx s = sigma * std::conj(u);
  const cx s_conj = sigma * u;

  // Columns: A <- A G.
  for (int k = 0; k < 4; ++k) {
    const cx akp = a(k, p);
    const cx akq = a(k, q);
    a(k, p) = akp * c + akq * s;
    a(k, q) = -akp * s_conj + akq * c;
  }
  // Rows: A <- G† A.
  for (int k = 0; k < 4; ++k) {
    const cx apk = a(p, k);
    const cx aqk = a(q, k);
    a(p, k) = c * apk + s_conj * aqk;
    a(q, k) = -s * apk + c * aqk;
  }
  // Accumulate eigenvectors: Q <- Q G.
  for (int k = 0; k < 4; ++k) {
    const cx qkp = q_acc(k, p);
    const cx qkq = q_acc(k, q);
    q_acc(k, p) = qkp * c + qkq * s;
    q_acc(k, q) = -qkp * s_conj + qkq * c;
  }
  // The rotation zeroes these analytically; kill the numerical residue.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

Eig4 eig_hermitian(const Mat4& m, double herm_tol) {
  const double defect = m.hermiticity_defect();
  const double scale = std::max(1.0, m.frobenius_norm());
  if (defect > herm_tol * scale) {
    std::ostringstream msg;
    msg << "eig_hermitian: matrix is not Hermitian (defect " << defect << ")";
    throw validation_error(msg.str());
  }

  // Work on the exactly Hermitian part (A + A†)/2.
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  Mat4 q = Mat4::identity();
  const double stop = 1e-15 * scale;
  for (int sweep = 0; sweep < 40; ++sweep) {
    if (offdiag_norm(a) <= stop) break;
    for (int p = 0; p < 4; ++p)
      for (int qq = p + 1; qq < 4; ++qq) jacobi_rotate(a, q, p, qq);
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::array<double, 4> vals{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(),
                             a(3, 3).real()};
  std::sort(order.begin(), order.end(),
            [&vals](int i, int j) { return vals[i] < vals[j]; });

  Eig4 out;
  for (int i = 0; i < 4; ++i) {
    out.values[i] = vals[order[i]];
    for (int r = 0; r < 4; ++r) out.vectors(r, i) = q(r, order[i]);
  }
  return out;
}

std::array<double, 4> eigvals_hermitian(const Mat4& m, double herm_tol) {
  return eig_hermitian(m, herm_tol).values;
}

Mat4 hermitian_sqrt(const Mat4& m, double neg_tol) {
  const Eig4 eig = eig_hermitian(m);
  if (eig.values[0] < -neg_tol) {
    std::ostringstream msg;
    msg << "hermitian_sqrt: matrix not PSD (min eigenvalue " << eig.values[0]
        << ")";
    throw numerical_error(msg.str());
  }
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cx s = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double lam = std::max(0.0, eig.values[k]);
        s += eig.vectors(i, k) * std::sqrt(lam) * std::conj(eig.vectors(j, k));
      }
      r(i, j) = s;
    }
  return r;
}

DensityMatrix4::DensityMatrix4(const Mat4& m) : m_(m) {
  if (m.hermiticity_defect() > kHermTol)
    throw numerical_error("density matrix is not Hermitian");
  if (std::abs(m.trace() - cx(1.0)) > kTraceTol)
    throw numerical_error("density matrix trace differs from 1");
  const auto vals = eigvals_hermitian(m);
  if (vals[0] < -kPsdTol || vals[3] > 1.0 + kPsdTol)
    throw numerical_error("density matrix eigenvalues outside [0, 1]");
}

bool DensityMatrix4::is_physical(const Mat4& m) {
  if (m.hermiticity_defect() > kHermTol) return false;
  if (std::abs(m.trace() - cx(1.0)) > kTraceTol) return false;
  const auto vals = eigvals_hermitian(m);
  return vals[0] >= -kPsdTol && vals[3] <= 1.0 + kPsdTol;
}

namespace {

// (σy ⊗ σy): |00⟩ -> -|11⟩, |01⟩ -> |10⟩, |10⟩ -> |01⟩, |11⟩ -> -|00⟩.
Mat4 spin_flip_matrix() {
  Mat4 y;
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

namespace detail {

double concurrence_unchecked(const Mat4& rho) {
  static const Mat4 y = spin_flip_matrix();
  const Mat4 rho_tilde = y * rho.conjugate() * y;
  const Mat4 s = hermitian_sqrt(rho);
  const Mat4 b = s * rho_tilde * s;  // Hermitian PSD, same spectrum as ρρ̃
  const auto mu = eigvals_hermitian(b, 1e-9);
  std::array<double, 4> lam;
  for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(0.0, mu[i]));
  // mu ascending -> lam ascending; C = λ_max - (sum of the rest).
  return std::max(0.0, lam[3] - lam[2] - lam[1] - lam[0]);
}

}  // namespace detail

double concurrence(const DensityMatrix4& rho) {
  return detail::concurrence_unchecked(rho.matrix());
}

}  // namespace xpm
