#pragma once

// Independent reference computations for tests: brute-force quadrature,
// characteristic-polynomial eigenvalues, and closed-form concurrence for
// pure states. These deliberately avoid the library's own numerical paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "xpm/linalg4.hpp"

namespace oracle {

using cx = std::complex<double>;

// Composite Simpson with a fixed (even) interval count.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int intervals = 1 << 15) {
  if (a == b) return 0.0;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Midpoint rule for complex integrands.
inline cx midpoint(const std::function<cx(double)>& f, double a, double b,
                   int n) {
  const double h = (b - a) / n;
  cx sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f(a + (i + 0.5) * h);
  return sum * h;
}

// 2-D midpoint rule on [ax, bx] x [ay, by].
inline cx midpoint2d(const std::function<cx(double, double)>& f, double ax,
                     double bx, double ay, double by, int nx, int ny) {
  const double hx = (bx - ax) / nx;
  const double hy = (by - ay) / ny;
  cx sum = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double x = ax + (i + 0.5) * hx;
    cx row = 0.0;
    for (int j = 0; j < ny; ++j) row += f(x, ay + (j + 0.5) * hy);
    sum += row;
  }
  return sum * hx * hy;
}

// Eigenvalues of a Hermitian 4x4 via the characteristic polynomial:
// Newton's identities give the coefficients from power sums, then
// Durand-Kerner finds all quartic roots simultaneously.
inline std::array<double, 4> char_poly_eigs(const xpm::Mat4& m) {
  const xpm::Mat4 m2 = m * m;
  const xpm::Mat4 m3 = m2 * m;
  const xpm::Mat4 m4 = m3 * m;
  const double p1 = m.trace().real();
  const double p2 = m2.trace().real();
  const double p3 = m3.trace().real();
  const double p4 = m4.trace().real();
  const double e1 = p1;
  const double e2 = (e1 * p1 - p2) / 2.0;
  const double e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
  const double e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0;
  // λ⁴ - e1 λ³ + e2 λ² - e3 λ + e4 = 0
  const std::array<cx, 5> c{e4, -e3, e2, -e1, 1.0};

  const auto poly = [&c](cx x) {
    cx v = c[4];
    for (int k = 3; k >= 0; --k) v = v * x + c[k];
    return v;
  };

  std::array<cx, 4> r;
  const double scale =
      1.0 + std::max({std::abs(e1), std::abs(e2), std::abs(e3), std::abs(e4)});
  r[0] = cx(0.4, 0.9) * scale;
  for (int k = 1; k < 4; ++k) r[k] = r[k - 1] * cx(0.4, 0.9);
  for (int it = 0; it < 500; ++it) {
    double moved = 0.0;
    for (int k = 0; k < 4; ++k) {
      cx denom = 1.0;
      for (int l = 0; l < 4; ++l)
        if (l != k) denom *= r[k] - r[l];
      const cx delta = poly(r[k]) / denom;
      r[k] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-15 * scale) break;
  }
  std::array<double, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = r[k].real();
  std::sort(out.begin(), out.end());
  return out;
}

// C(|ψ⟩) = 2 |c00 c11 - c01 c10| for pure two-qubit states.
inline double pure_concurrence(const std::array<cx, 4>& c) {
  return 2.0 * std::abs(c[0] * c[3] - c[1] * c[2]);
}

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

inline xpm::Mat4 random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
  xpm::Mat4 m;
  for (int i = 0; i < 4; ++i) {
    m(i, i) = urand(rng, -scale, scale);
    for (int j = i + 1; j < 4; ++j) {
      const cx v(urand(rng, -scale, scale), urand(rng, -scale, scale));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

inline std::array<cx, 4> random_pure_state(std::mt19937_64& rng) {
  std::array<cx, 4> c;
  double norm2 = 0.0;
  for (auto& a : c) {
    a = cx(urand(rng, -1, 1), urand(rng, -1, 1));
    norm2 += std::norm(a);
  }
  for (auto& a : c) a /= std::sqrt(norm2);
  return c;
}

// Random PSD unit-trace matrix (mixed state).
inline xpm::Mat4 random_density(std::mt19937_64& rng) {
  xpm::Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a(i, j) = cx(urand(rng, -1, 1), urand(rng, -1, 1));
  xpm::Mat4 g = a * a.adjoint();
  const double tr = g.trace().real();
  return (1.0 / tr) * g;
}

// Haar-ish random 2x2 unitary embedded on one qubit.
inline xpm::Mat4 random_local_unitary(std::mt19937_64& rng, int qubit) {
  const double theta = urand(rng, 0, 2 * M_PI);
  const double a = urand(rng, 0, 2 * M_PI);
  const double b = urand(rng, 0, 2 * M_PI);
  const cx u00 = std::cos(theta) * cx(std::cos(a), std::sin(a));
  const cx u01 = std::sin(theta) * cx(std::cos(b), std::sin(b));
  const std::array<std::array<cx, 2>, 2> u{
      {{u00, u01}, {-std::conj(u01), std::conj(u00)}}};
  xpm::Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          // basis index = 2*first + second
          const int row = qubit == 0 ? 2 * i + k : 2 * k + i;
          const int col = qubit == 0 ? 2 * j + l : 2 * l + j;
          if (k == l)
            out(row, col) += u[i][j];
        }
  return out;
}

}  // namespace oracle
