#include "memsfront/rootfind.hpp"

#include <cmath>

namespace memsfront {

double solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                       const SolveOptions& opts) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::isnan(flo) || std::isnan(fhi) || flo * fhi > 0.0)
        throw SolveError("solve_bracketed: endpoints do not bracket a root",
                         std::min(std::abs(flo), std::abs(fhi)));

    for (int it = 0; it < opts.max_iter; ++it) {
        // Secant proposal, midpoint fallback when degenerate or outside.
        double x = (std::abs(fhi - flo) > 0.0) ? hi - fhi * (hi - lo) / (fhi - flo)
                                               : 0.5 * (lo + hi);
        const double mid = 0.5 * (lo + hi);
        if (!(x > lo && x < hi)) x = mid;
        // Keep making geometric progress even when secant stalls at an edge.
        if (std::min(x - lo, hi - x) < 0.01 * (hi - lo) && it % 2 == 1) x = mid;

        const double fx = f(x);
        if (fx == 0.0 || (opts.ftol > 0.0 && std::abs(fx) <= opts.ftol)) return x;
        if (std::isnan(fx)) throw SolveError("solve_bracketed: NaN inside bracket", fx);
        if (flo * fx < 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if (hi - lo <= opts.xtol * (1.0 + std::abs(lo) + std::abs(hi)))
            return 0.5 * (lo + hi);
    }
    throw SolveError("solve_bracketed: iteration limit",
                     std::min(std::abs(flo), std::abs(fhi)));
}

std::optional<std::pair<double, double>> scan_bracket(const std::function<double(double)>& f,
                                                      double lo, double hi, int n) {
    double xprev = lo;
    double fprev = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / n;
        const double fx = f(x);
        if (!std::isnan(fprev) && !std::isnan(fx) && (fprev == 0.0 || fprev * fx < 0.0))
            return std::make_pair(xprev, x);
        xprev = x;
        fprev = fx;
    }
    return std::nullopt;
}

}  // namespace memsfront
