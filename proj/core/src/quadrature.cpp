#include "xpm/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "xpm/errors.hpp"

namespace xpm {

namespace {

using cx = std::complex<double>;

struct SimpsonState {
  const std::function<cx(double)>& f;
  int max_depth;
};

cx adaptive(const SimpsonState& s, double a, double b, cx fa, cx fm, cx fb,
            cx whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const cx flm = s.f(lm);
  const cx frm = s.f(rm);
  const cx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const cx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const cx delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth >= s.max_depth) {
    std::ostringstream msg;
    msg << "adaptive quadrature did not converge on [" << a << ", " << b
        << "]: local error " << std::abs(delta) / 15.0 << " exceeds " << tol;
    throw numerical_error(msg.str());
  }
  return adaptive(s, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adaptive(s, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

cx integrate_adaptive(const std::function<cx(double)>& f, double a, double b,
                      double abs_tol, int max_depth) {
  if (!(abs_tol > 0)) throw validation_error("quadrature tolerance must be > 0");
  if (a == b) return cx(0.0, 0.0);
  SimpsonState s{f, max_depth};
  const double m = 0.5 * (a + b);
  const cx fa = f(a), fm = f(m), fb = f(b);
  const cx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive(s, a, b, fa, fm, fb, whole, abs_tol, 0);
}

double integrate_adaptive_real(const std::function<double(double)>& f,
                               double a, double b, double abs_tol,
                               int max_depth) {
  return integrate_adaptive([&f](double x) { return cx(f(x), 0.0); }, a, b,
                            abs_tol, max_depth)
      .real();
}

namespace {

// Orthonormal Hermite polynomials w.r.t. e^{-x²}:
//   p0 = π^{-1/4},  p_{k+1} = x √(2/(k+1)) p_k - √(k/(k+1)) p_{k-1},
//   p_n' = √(2n) p_{n-1}.
double hermite_pn(int n, double x, double* pn_minus_1 = nullptr) {
  double pkm1 = 0.0;
  double pk = std::pow(M_PI, -0.25);
  for (int k = 0; k < n; ++k) {
    const double pkp1 = x * std::sqrt(2.0 / (k + 1)) * pk -
                        std::sqrt(double(k) / (k + 1)) * pkm1;
    pkm1 = pk;
    pk = pkp1;
  }
  if (pn_minus_1) *pn_minus_1 = pkm1;
  return pk;
}

// Bisection-guarded Newton on a bracketing interval [lo, hi].
double refine_root(int n, double lo, double hi) {
  double flo = hermite_pn(n, lo);
  double r = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    double pm1 = 0.0;
    const double p = hermite_pn(n, r, &pm1);
    if (p == 0.0) return r;
    if ((p > 0.0) == (flo > 0.0)) {
      lo = r;
      flo = p;
    } else {
      hi = r;
    }
    const double dp = std::sqrt(2.0 * n) * pm1;
    double next = (dp != 0.0) ? r - p / dp : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - r) <= 1e-16 * std::max(1.0, std::abs(r))) return next;
    r = next;
  }
  return r;
}

GaussHermiteRule make_rule(int n) {
  // All roots of p_n lie in (-√(2n+1), √(2n+1)). Scan the positive half
  // axis for sign changes, refine, and mirror.
  const double bound = std::sqrt(2.0 * n + 1.0) + 1.0;
  const int scan = 80 * n;
  const double h = bound / scan;

  std::vector<double> roots;
  if (n % 2 == 1) roots.push_back(0.0);
  double x_prev = 0.0;
  double f_prev = hermite_pn(n, x_prev);
  for (int i = 1; i <= scan; ++i) {
    const double x = i * h;
    const double fx = hermite_pn(n, x);
    if (f_prev * fx < 0.0) roots.push_back(refine_root(n, x_prev, x));
    x_prev = x;
    f_prev = fx;
  }

  GaussHermiteRule rule;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it)
    if (*it > 0.0) rule.nodes.push_back(-*it);
  for (double r : roots) rule.nodes.push_back(r);
  if (static_cast<int>(rule.nodes.size()) != n)
    throw numerical_error("Gauss-Hermite root scan found " +
                          std::to_string(rule.nodes.size()) + " of " +
                          std::to_string(n) + " nodes");

  // Christoffel numbers: w_i = 1 / Σ_{k<n} p_k(x_i)².
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    double pkm1 = 0.0;
    double pk = std::pow(M_PI, -0.25);
    double sum = pk * pk;
    for (int k = 0; k + 1 < n; ++k) {
      const double pkp1 = x * std::sqrt(2.0 / (k + 1)) * pk -
                          std::sqrt(double(k) / (k + 1)) * pkm1;
      pkm1 = pk;
      pk = pkp1;
      sum += pk * pk;
    }
    rule.weights[i] = 1.0 / sum;
  }
  return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite(int order) {
  if (order < 1 || order > 512)
    throw validation_error("Gauss-Hermite order must be in [1, 512]");
  static std::mutex mu;
  static std::map<int, GaussHermiteRule> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
  return it->second;
}

}  // namespace xpm
