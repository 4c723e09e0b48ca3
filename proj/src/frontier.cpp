#include "memsfront/frontier.hpp"

#include <cmath>
#include <vector>

#include "memsfront/rootfind.hpp"

namespace memsfront {

namespace {

constexpr double SL_SEP = 8.0 / 9.0;  // linear-entropy separability threshold

double ln(double x) { return std::log(x); }

// S_L = (8/3) r (1-r) inverted on the r >= 1/2 root (the rank-2 family).
double rank2_r_at_sl(double s_l) { return 0.5 * (1.0 + std::sqrt(1.0 - 1.5 * s_l)); }

// S_L = 8/9 - (2/3) r^2 inverted (the a = 1/3 branch of the C frontier).
double rank3_r_at_sl_ef(double s_l) { return std::sqrt(1.5 * (SL_SEP - s_l)); }

// Entanglement-of-formation plane helpers (spectra are closed-form).
double sv_rank2(double r) {  // spectrum {r, 1-r, 0, 0}
    return von_neumann_entropy(Spectrum::sorted({r, 1 - r, 0, 0}));
}

double sv_mems_ef_sv_rank3(double c) {
    const double s = std::sqrt(4 - 3 * c * c);
    const double d = (4 - s) / 6;
    return von_neumann_entropy(Spectrum::sorted({d + c / 2, d - c / 2, (s - 1) / 3, 0}));
}

double sv_mems_ef_sv_werner(double c) { return sv_werner((1 + 2 * c) / 3); }

// Decreasing function inverted on [lo, hi] by bracketed solve.
double invert_decreasing(const std::function<double(double)>& f, double target, double lo,
                         double hi) {
    return solve_bracketed([&](double x) { return f(x) - target; }, lo, hi);
}

struct Candidate {
    bool valid = false;
    FrontierPoint point;
};

void consider(Candidate& best, const FrontierPoint& p) {
    if (!best.valid || p.entanglement > best.point.entanglement) best = {true, p};
}

FrontierPoint separable_sl_point(double s_l) {
    const double r = s_l < 1.0 ? std::sqrt(1.0 - s_l) : 0.0;
    return {s_l, 0.0, Branch::separable, (1 - r) / 4, r, (1 - r) / 4};
}

FrontierPoint separable_sv_point(double s_v) {
    const double r =
        s_v >= 1.0 ? 0.0 : invert_decreasing(sv_werner, s_v, 0.0, 1.0 / 3.0);
    return {s_v, 0.0, Branch::separable, (1 - r) / 4, r, (1 - r) / 4};
}

}  // namespace

Plane plane_from_name(const std::string& name) {
    if (name == "ef-sl") return Plane::ef_sl;
    if (name == "er-sl") return Plane::er_sl;
    if (name == "n-sl") return Plane::n_sl;
    if (name == "ef-sv") return Plane::ef_sv;
    if (name == "er-sv") return Plane::er_sv;
    if (name == "n-sv") return Plane::n_sv;
    throw std::domain_error("unknown plane '" + name + "'");
}

std::string plane_name(Plane p) {
    switch (p) {
        case Plane::ef_sl: return "ef-sl";
        case Plane::er_sl: return "er-sl";
        case Plane::n_sl: return "n-sl";
        case Plane::ef_sv: return "ef-sv";
        case Plane::er_sv: return "er-sv";
        case Plane::n_sv: return "n-sv";
    }
    return "?";
}

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::rank2: return "RANK2";
        case Branch::rank3: return "RANK3";
        case Branch::werner: return "WERNER";
        case Branch::family1: return "FAMILY1";
        case Branch::family2: return "FAMILY2";
        case Branch::rank4: return "RANK4";
        case Branch::separable: return "SEPARABLE";
    }
    return "?";
}

DensityMatrix FrontierPoint::reconstruct() const {
    switch (branch) {
        case Branch::rank2:
        case Branch::rank3:
            return rank3_x_state(a, r);
        case Branch::werner:
        case Branch::family1:
        case Branch::separable:
            return werner(r);
        case Branch::family2:
            return mems_n_sl(r, 2);
        case Branch::rank4: {
            const double x = (1 - a - b - r) / 2;
            return from_x_params(XStateParams{x, x, a, b, r});
        }
    }
    throw std::domain_error("FrontierPoint: unknown branch");
}

double sl_rank3(double a, double r) { return (2.0 / 3.0) * (1 + 2 * a - 3 * a * a - r * r); }

double sv_rank3(double a, double r) {
    return von_neumann_entropy(Spectrum::sorted({(1 - a + r) / 2, a, (1 - a - r) / 2, 0}));
}

double sv_werner(double r) {
    return von_neumann_entropy(
        Spectrum::sorted({(1 + 3 * r) / 4, (1 - r) / 4, (1 - r) / 4, (1 - r) / 4}));
}

double er_sl_stationary_a(double r) {
    auto f = [r](double a) {
        return r * ln(((1 + a) * (1 + a) - r * r) / ((1 + a) * (1 + a))) -
               (3 * a - 1) * ln((1 + a + r) / (1 + a - r));
    };
    const auto bracket = scan_bracket(f, 1e-9, 1.0 - 1e-9, 64);
    if (!bracket)
        throw SolveError("er_sl_stationary_a: no stationary point for r=" + std::to_string(r),
                         std::abs(f(0.5)));
    return solve_bracketed(f, bracket->first, bracket->second);
}

double er_sv_stationary_a(double r) {
    auto f = [r](double a) {
        const double p = (1 + a) * (1 + a) - r * r;
        const double q = (1 - a) * (1 - a) - r * r;
        return ln(p / ((1 + a) * (1 + a))) * ln((1 - a - r) / (1 - a + r)) -
               ln((1 + a + r) / (1 + a - r)) * ln(q / (4 * a * a));
    };
    const double hi = 1.0 - r;
    const auto bracket = scan_bracket(f, hi * 1e-7, hi * (1.0 - 1e-9), 64);
    if (!bracket)
        throw SolveError("er_sv_stationary_a: no stationary point for r=" + std::to_string(r),
                         std::abs(f(hi / 2)));
    return solve_bracketed(f, bracket->first, bracket->second);
}

FrontierPoint ef_sl_frontier(double s_l) {
    if (s_l <= 0.0) return {0.0, 1.0, Branch::rank2, 0.0, 1.0};
    if (s_l > SL_SEP) return separable_sl_point(s_l);

    Candidate best;
    if (s_l <= 16.0 / 27.0) {  // rho_I, rank 2: C = r, middle entry 1-r
        const double r = rank2_r_at_sl(s_l);
        consider(best, {s_l, r, Branch::rank2, 1 - r, r});
    }
    if (s_l >= 16.0 / 27.0) {  // rho_II, rank 3: C = r, middle entry 1/3
        const double r = rank3_r_at_sl_ef(s_l);
        consider(best, {s_l, r, Branch::rank3, 1.0 / 3.0, r});
    }
    return best.point;
}

FrontierPoint er_sl_frontier(double s_l) {
    if (s_l <= 0.0) return {0.0, 1.0, Branch::rank2, 0.0, 1.0};
    if (s_l > SL_SEP) return separable_sl_point(s_l);

    Candidate best;
    // Werner stationary family; a comparison candidate only.
    {
        const double rw = std::sqrt(1.0 - s_l);
        consider(best, {s_l, er_werner(rw), Branch::werner, (1 - rw) / 4, rw, (1 - rw) / 4});
    }
    if (s_l <= 2.0 / 3.0) {
        const double r = rank2_r_at_sl(s_l);
        consider(best, {s_l, er_rank3(1 - r, r), Branch::rank2, 1 - r, r});
    }
    // Rank-3 stationary family; invalid when the solution leaves a + r <= 1.
    auto f = [s_l](double r) { return sl_rank3(er_sl_stationary_a(r), r) - s_l; };
    if (const auto bracket = scan_bracket(f, 1e-7, 1.0 - 1e-7, 64)) {
        const double r = solve_bracketed(f, bracket->first, bracket->second);
        const double a = er_sl_stationary_a(r);
        if (a + r <= 1.0 + 1e-9)
            consider(best, {s_l, er_rank3(a, r), Branch::rank3, a, r});
    }
    return best.point;
}

FrontierPoint n_sl_frontier(double s_l) {
    if (s_l <= 0.0) return {0.0, 1.0, Branch::family1, 0.0, 1.0};
    if (s_l > SL_SEP) return separable_sl_point(s_l);
    const double r = std::sqrt(1.0 - s_l);
    const double n = std::max(0.0, (3 * r - 1) / 2);
    return {s_l, n, Branch::family1, (1 - r) / 4, r, (1 - r) / 4};
}

FrontierPoint ef_sv_frontier(double s_v) {
    if (s_v <= 0.0) return {0.0, 1.0, Branch::rank3, 0.0, 1.0};
    if (s_v >= 1.0) return separable_sv_point(s_v);

    Candidate best;
    if (s_v <= sv_mems_ef_sv_werner(0.0)) {
        const double c = invert_decreasing(sv_mems_ef_sv_werner, s_v, 0.0, 1.0);
        const double rw = (1 + 2 * c) / 3;
        consider(best, {s_v, c, Branch::werner, (1 - rw) / 4, rw, (1 - rw) / 4});
    } else {
        return separable_sv_point(s_v);
    }
    if (s_v <= sv_mems_ef_sv_rank3(0.0)) {
        const double c = invert_decreasing(sv_mems_ef_sv_rank3, s_v, 0.0, 1.0);
        consider(best, {s_v, c, Branch::rank3, (std::sqrt(4 - 3 * c * c) - 1) / 3, c});
    }
    if (s_v <= 0.5) {  // rank-2 comparison candidate, spectrum {r, 1-r}
        const double r = invert_decreasing([](double r) { return sv_rank2(r); }, s_v, 0.5, 1.0);
        consider(best, {s_v, r, Branch::rank2, 1 - r, r});
    }
    return best.point;
}

FrontierPoint er_sv_frontier(double s_v) {
    if (s_v <= 0.0) return {0.0, 1.0, Branch::rank3, 0.0, 1.0};
    if (s_v >= 1.0) return separable_sv_point(s_v);

    const double sv_th = sv_werner(1.0 / 3.0);
    if (s_v > sv_th) return separable_sv_point(s_v);

    Candidate best;
    {
        const double rw = invert_decreasing(sv_werner, s_v, 0.0, 1.0);
        consider(best, {s_v, er_werner(rw), Branch::werner, (1 - rw) / 4, rw, (1 - rw) / 4});
    }
    if (s_v <= 0.5) {
        const double r = invert_decreasing([](double r) { return sv_rank2(r); }, s_v, 0.5, 1.0);
        consider(best, {s_v, er_rank3(1 - r, r), Branch::rank2, 1 - r, r});
    }
    auto f = [s_v](double r) { return sv_rank3(er_sv_stationary_a(r), r) - s_v; };
    if (const auto bracket = scan_bracket(f, 1e-6, 1.0 - 1e-8, 64)) {
        const double r = solve_bracketed(f, bracket->first, bracket->second);
        const double a = er_sv_stationary_a(r);
        if (a + r <= 1.0 + 1e-9)
            consider(best, {s_v, er_rank3(a, r), Branch::rank3, a, r});
    }
    return best.point;
}

FrontierPoint n_sv_frontier(double s_v) {
    if (s_v <= 0.0) return {0.0, 1.0, Branch::werner, 0.0, 1.0};
    if (s_v >= 1.0) return separable_sv_point(s_v);
    const double r = invert_decreasing(sv_werner, s_v, 0.0, 1.0);
    const double n = std::max(0.0, (3 * r - 1) / 2);
    FrontierPoint p{s_v, n, n > 0.0 ? Branch::werner : Branch::separable, (1 - r) / 4, r,
                    (1 - r) / 4};
    return p;
}

FrontierPoint frontier_point(Plane plane, double mixedness) {
    switch (plane) {
        case Plane::ef_sl: return ef_sl_frontier(mixedness);
        case Plane::er_sl: return er_sl_frontier(mixedness);
        case Plane::n_sl: return n_sl_frontier(mixedness);
        case Plane::ef_sv: return ef_sv_frontier(mixedness);
        case Plane::er_sv: return er_sv_frontier(mixedness);
        case Plane::n_sv: return n_sv_frontier(mixedness);
    }
    throw std::domain_error("frontier_point: unknown plane");
}

namespace {

// Second (u != w) solution family of the rank-4 stationarity system.
// u parametrizes it on (0, 1/e); w solves w ln w = u ln u on (1/e, 1) and
// v = exp(2 u ln u / (u + w)). The state has spectrum {t, v^2 t, u^2 t, w^2 t}
// with t = 1/(1 + u^2 + v^2 + w^2).
struct Rank4Solution {
    double a, b, x, r, s_v, c;
};

Rank4Solution rank4_from_u(double u) {
    const double target = u * ln(u);
    const double w = solve_bracketed([target](double w) { return w * ln(w) - target; },
                                     std::exp(-1.0) + 1e-12, 1.0 - 1e-12);
    const double v = std::exp(2 * u * ln(u) / (u + w));
    const double t = 1.0 / (1 + u * u + v * v + w * w);
    const double x = v * v * t;
    const double r = t - x;
    const double a = u * u * t;
    const double b = w * w * t;
    const double s_v =
        von_neumann_entropy(Spectrum::sorted({t, v * v * t, u * u * t, w * w * t}));
    const double c = std::max(0.0, r - 2 * std::sqrt(a * b));
    return {a, b, x, r, s_v, c};
}

}  // namespace

std::optional<FrontierPoint> rank4_candidate_ef_sv(double s_v) {
    auto f = [s_v](double u) { return rank4_from_u(u).s_v - s_v; };
    const auto bracket = scan_bracket(f, 1e-5, std::exp(-1.0) - 1e-9, 400);
    if (!bracket) return std::nullopt;
    const double u = solve_bracketed(f, bracket->first, bracket->second);
    const Rank4Solution sol = rank4_from_u(u);
    return FrontierPoint{sol.s_v, sol.c, Branch::rank4, sol.a, sol.r, sol.b};
}

EnvelopePoint sl_sv_envelope(EntropySegment segment, double r) {
    const Spectrum s = entropy_plane_spectrum(segment, r);
    return {von_neumann_entropy(s), linear_entropy(s)};
}

double sv_upper_at_sl(double s_l) {
    const double r = std::sqrt(std::max(0.0, 1.0 - s_l));
    return sl_sv_envelope(EntropySegment::a, std::min(r, 1.0)).s_v;
}

double sv_lower_at_sl(double s_l) {
    if (s_l <= 2.0 / 3.0) {
        const double r = rank2_r_at_sl(std::max(0.0, s_l));
        return sl_sv_envelope(EntropySegment::b, std::min(r, 1.0)).s_v;
    }
    if (s_l <= SL_SEP) {
        const double r = (1.0 - std::sqrt(std::max(0.0, 4.0 - 4.5 * s_l))) / 3.0;
        return sl_sv_envelope(EntropySegment::c, std::clamp(r, 0.0, 1.0 / 3.0)).s_v;
    }
    const double r = 1.0 - 3.0 * std::sqrt(std::max(0.0, 1.0 - s_l));
    return sl_sv_envelope(EntropySegment::d, std::clamp(r, 0.0, 1.0)).s_v;
}

CrossingTable crossing_table() {
    CrossingTable t;

    // C-vs-S_L branch point: the r at which the two branch matrices coincide
    // (middle entries 1-r and 1/3 agree).
    t.ef_sl_branch_r = solve_bracketed([](double r) { return (1 - r) - 1.0 / 3.0; }, 0.0, 1.0);
    {
        Matrix4c rho_one, rho_two;  // both branch formulas at the solved r
        const double r = t.ef_sl_branch_r;
        rho_one(0, 0) = rho_one(3, 3) = r / 2;
        rho_one(1, 1) = 1 - r;
        rho_two(0, 0) = rho_two(1, 1) = rho_two(3, 3) = 1.0 / 3.0;
        rho_one(0, 3) = rho_one(3, 0) = rho_two(0, 3) = rho_two(3, 0) = r / 2;
        t.ef_sl_residual = rho_one.max_abs_diff(rho_two);
    }

    // E_R-vs-S_L crossing: the rank-3 stationary solution meets the a + r = 1
    // boundary, where it coincides with the rank-2 family (a = 1 - r).
    {
        auto g = [](double r) {
            const double a = 1 - r;
            return r * ln(((1 + a) * (1 + a) - r * r) / ((1 + a) * (1 + a))) -
                   (3 * a - 1) * ln((1 + a + r) / (1 + a - r));
        };
        const double r = solve_bracketed(g, 0.51, 0.99);
        t.er_sl = {sl_rank3(1 - r, r), er_rank3(1 - r, r), 1 - r, r, std::abs(g(r))};
    }

    // C-vs-S_V crossing: equal entropies of the rank-3 and Werner families at
    // the same concurrence.
    {
        auto h = [](double c) { return sv_mems_ef_sv_rank3(c) - sv_mems_ef_sv_werner(c); };
        const double c = solve_bracketed(h, 1e-9, 0.9);
        t.ef_sv = {c, sv_mems_ef_sv_rank3(c), std::abs(h(c))};
    }

    // E_R-vs-S_V crossing: equal E_R of the rank-3 and Werner branches.
    {
        auto diff = [](double s_v) {
            auto f = [s_v](double r) { return sv_rank3(er_sv_stationary_a(r), r) - s_v; };
            const auto br = scan_bracket(f, 1e-6, 1.0 - 1e-8, 64);
            if (!br) throw SolveError("er_sv crossing: rank-3 branch vanished", s_v);
            const double r = solve_bracketed(f, br->first, br->second);
            const double rw = invert_decreasing(sv_werner, s_v, 0.0, 1.0);
            return er_rank3(er_sv_stationary_a(r), r) - er_werner(rw);
        };
        const double s_v = solve_bracketed(diff, 0.3, 0.78);
        const double rw = invert_decreasing(sv_werner, s_v, 0.0, 1.0);
        t.er_sv = {s_v, er_werner(rw), rw, std::abs(diff(s_v))};
    }

    // Separability thresholds: entropies at which the frontiers reach zero
    // entanglement (Werner negativity (3r-1)/2 = 0 at r = 1/3).
    {
        const double r13 =
            solve_bracketed([](double r) { return (3 * r - 1) / 2; }, 0.0, 1.0);
        t.sv_separability_threshold = sv_werner(r13);
        t.sv_threshold_residual = concurrence(werner(r13));
        t.sl_separability_threshold = 1.0 - r13 * r13;
        t.sl_threshold_residual =
            std::abs(n_sl_frontier(t.sl_separability_threshold).entanglement);
    }
    return t;
}

}  // namespace memsfront
