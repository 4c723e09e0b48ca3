#include "memsfront/mcverify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace memsfront {

namespace {

int rank_for(RankPolicy policy, std::uint64_t seed, std::uint64_t index) {
    switch (policy) {
        case RankPolicy::fixed1: return 1;
        case RankPolicy::fixed2: return 2;
        case RankPolicy::fixed3: return 3;
        case RankPolicy::fixed4: return 4;
        case RankPolicy::uniform: break;
    }
    return 1 + static_cast<int>(derive_seed(seed ^ 0x5bf0f5a2ULL, index) % 4);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    const int workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    if (workers <= 1 || n < 256) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("MEMSFRONT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

DensityMatrix ScatterBatch::state_of(const SampleRecord& rec) const {
    return random_density(rec.rank, derive_seed(seed, rec.index));
}

ScatterBatch scatter(std::size_t n, std::uint64_t seed, RankPolicy policy) {
    ScatterBatch batch{seed, policy, std::vector<SampleRecord>(n)};
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            SampleRecord& rec = batch.records[i];
            rec.index = i;
            rec.rank = rank_for(policy, seed, i);
            const DensityMatrix rho = random_density(rec.rank, derive_seed(seed, i));
            rec.spectrum = hermitian_eigensystem(rho.matrix()).spectrum;
            rec.measures = measure_all(rho);
        }
    });
    return batch;
}

DominanceReport check_dominance(const ScatterBatch& batch, Plane plane, double tol) {
    const bool negativity_plane = plane == Plane::n_sl || plane == Plane::n_sv;
    const bool sl_plane = plane == Plane::ef_sl || plane == Plane::n_sl;
    if (plane == Plane::er_sl || plane == Plane::er_sv)
        throw std::domain_error(
            "check_dominance: E_R planes use check_dominance_er (closed-form population)");

    DominanceReport report{plane, batch.seed, batch.records.size(), {}};
    const std::size_t n = batch.records.size();
    std::vector<std::vector<Violation>> found(std::max<std::size_t>(n, 1));
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const SampleRecord& rec = batch.records[i];
            const double mixedness =
                sl_plane ? rec.measures.linear_entropy : rec.measures.von_neumann_entropy;
            const double ent =
                negativity_plane ? rec.measures.negativity : rec.measures.concurrence;
            const double front = frontier_point(plane, mixedness).entanglement;
            if (ent - front > tol) found[i].push_back({rec.index, mixedness, ent, front});
        }
    });
    for (auto& v : found)
        report.violations.insert(report.violations.end(), v.begin(), v.end());
    return report;
}

DominanceReport check_dominance_er(Plane plane, std::size_t n_points, double tol) {
    if (plane != Plane::er_sl && plane != Plane::er_sv)
        throw std::domain_error("check_dominance_er: plane must be er-sl or er-sv");
    DominanceReport report{plane, 0, 0, {}};

    // Population: uniform (a, r) sweep of the rank<=3 X family within
    // a + r <= 1, plus the Werner family. E_R is exact on both.
    const std::size_t grid = std::max<std::size_t>(8, static_cast<std::size_t>(
                                                          std::sqrt(static_cast<double>(n_points))));
    std::vector<std::pair<double, double>> population;  // (mixedness, er)
    population.reserve(grid * grid + grid);
    for (std::size_t i = 0; i < grid; ++i) {
        const double a = static_cast<double>(i) / (grid - 1);
        for (std::size_t j = 0; j < grid; ++j) {
            const double r = (1.0 - a) * static_cast<double>(j) / (grid - 1);
            const double mixedness =
                plane == Plane::er_sl ? sl_rank3(a, r) : sv_rank3(a, r);
            population.emplace_back(mixedness, er_rank3(a, r));
        }
    }
    for (std::size_t i = 0; i < grid; ++i) {
        const double r = static_cast<double>(i) / (grid - 1);
        const double mixedness = plane == Plane::er_sl ? 1.0 - r * r : sv_werner(r);
        population.emplace_back(mixedness, er_werner(r));
    }

    report.checked = population.size();
    const std::size_t n = population.size();
    std::vector<std::vector<Violation>> found(n);
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const auto [mixedness, er] = population[i];
            if (er <= tol) continue;
            const double front = frontier_point(plane, mixedness).entanglement;
            if (er - front > tol) found[i].push_back({i, mixedness, er, front});
        }
    });
    for (auto& v : found)
        report.violations.insert(report.violations.end(), v.begin(), v.end());
    return report;
}

AppendixReport check_pt_negative_count(const ScatterBatch& batch, std::size_t n_bell_diag) {
    AppendixReport report;
    report.seed = batch.seed;
    report.checked = batch.records.size();
    report.bell_diag_checked = n_bell_diag;

    const std::size_t n = batch.records.size();
    std::vector<std::uint8_t> multi(n, 0), mismatch(n, 0);
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const SampleRecord& rec = batch.records[i];
            const DensityMatrix rho = batch.state_of(rec);
            const Spectrum pt = hermitian_eigensystem(partial_transpose(rho.matrix())).spectrum;
            int negatives = 0;
            for (double v : pt.values)
                if (v < -1e-10) ++negatives;
            if (negatives > 1) multi[i] = 1;
            const double n_from_min = 2.0 * std::max(0.0, -pt.min());
            if (std::abs(n_from_min - rec.measures.negativity) > 1e-10) mismatch[i] = 1;
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        if (multi[i]) report.multi_negative_indices.push_back(batch.records[i].index);
        if (mismatch[i]) report.negativity_mismatch_indices.push_back(batch.records[i].index);
    }

    // Bell-diagonal PT spectrum: {(sum - 2 lambda_i)/2} as a set.
    for (std::size_t i = 0; i < n_bell_diag; ++i) {
        const XStateParams p = random_x_params(derive_seed(batch.seed ^ 0xbe11d1a6ULL, i));
        // Reuse the 4-simplex draw (x, y, a, b, r) -> spectrum from its first
        // four entries renormalized.
        const double sum = p.x + p.y + p.a + p.b;
        const Spectrum lam = Spectrum::sorted({p.x / sum, p.y / sum, p.a / sum, p.b / sum});
        const DensityMatrix rho = bell_diagonal(lam);
        const Spectrum pt = hermitian_eigensystem(partial_transpose(rho.matrix())).spectrum;
        const Spectrum expected = Spectrum::sorted({(1 - 2 * lam[0]) / 2, (1 - 2 * lam[1]) / 2,
                                                    (1 - 2 * lam[2]) / 2, (1 - 2 * lam[3]) / 2});
        for (int k = 0; k < 4; ++k)
            report.max_bell_diag_error =
                std::max(report.max_bell_diag_error, std::abs(pt[k] - expected[k]));
    }
    return report;
}

OrderingReport check_ordering_violations(const ScatterBatch& batch) {
    OrderingReport report;
    report.seed = batch.seed;
    const auto& recs = batch.records;
    for (std::size_t i = 0; i < recs.size(); ++i)
        for (std::size_t j = i + 1; j < recs.size(); ++j) {
            ++report.pairs;
            const auto& ma = recs[i].measures;
            const auto& mb = recs[j].measures;
            if ((ma.concurrence - mb.concurrence) * (ma.negativity - mb.negativity) < 0)
                ++report.cn_reversals;
            if ((ma.linear_entropy - mb.linear_entropy) *
                    (ma.von_neumann_entropy - mb.von_neumann_entropy) <
                0)
                ++report.sl_sv_reversals;
        }
    return report;
}

LsReport check_ls_identity(std::size_t n, std::uint64_t seed) {
    LsReport report;
    report.seed = seed;
    report.checked = n;
    for (std::size_t i = 0; i < n; ++i) {
        const XStateParams p = random_x_params(derive_seed(seed, i));
        const LSDecomposition dec = ls_decompose_x_state(p);
        const double c = concurrence(from_x_params(p));
        const double err = std::abs((1.0 - dec.lambda) - c);
        report.max_identity_error = std::max(report.max_identity_error, err);
        if (err > 1e-10) report.identity_failures.push_back(i);
        const Spectrum pt =
            hermitian_eigensystem(partial_transpose(dec.separable_part.matrix())).spectrum;
        if (pt.min() < -1e-10) report.separability_failures.push_back(i);
    }
    return report;
}

}  // namespace memsfront
