#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace xpm {

// Adaptive Simpson integration of a complex-valued integrand on [a, b].
// Throws numerical_error if the requested absolute tolerance cannot be
// reached within the recursion depth limit.
std::complex<double> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol = 1e-12, int max_depth = 48);

double integrate_adaptive_real(const std::function<double(double)>& f,
                               double a, double b, double abs_tol = 1e-12,
                               int max_depth = 48);

// Nodes and weights for ∫ f(x) e^{-x²} dx ≈ Σ_i w_i f(x_i).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached rule of the given order (thread-safe).
const GaussHermiteRule& gauss_hermite(int order);

}  // namespace xpm
