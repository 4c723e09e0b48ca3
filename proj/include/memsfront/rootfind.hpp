#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace memsfront {

/// Raised when a bracketed solve fails to converge; carries the last residual.
class SolveError : public std::runtime_error {
  public:
    SolveError(const std::string& what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

struct SolveOptions {
    double xtol = 1e-14;
    double ftol = 0.0;  // stop early when |f| <= ftol (0 disables)
    int max_iter = 200;
};

/// Root of f on [lo, hi] with f(lo), f(hi) of opposite sign (or zero at an
/// endpoint). Bisection with secant acceleration; deterministic and
/// derivative-free. Throws SolveError if the bracket is invalid or the
/// iteration limit is hit.
double solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                       const SolveOptions& opts = {});

/// Scan [lo, hi] at n+1 uniform points for the first sign change of f;
/// returns the bracketing subinterval, or nullopt if f never changes sign.
std::optional<std::pair<double, double>> scan_bracket(const std::function<double(double)>& f,
                                                      double lo, double hi, int n);

}  // namespace memsfront
