#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "memsfront/frontier.hpp"

namespace memsfront {

enum class RankPolicy { uniform, fixed1, fixed2, fixed3, fixed4 };

/// One random state's spectrum and full measure vector. The state itself is
/// regenerated on demand from (seed, index, rank), so records stay small.
struct SampleRecord {
    std::uint64_t index = 0;
    int rank = 4;
    Spectrum spectrum;
    MeasureVector measures;
};

/// A deterministic batch of random states.
struct ScatterBatch {
    std::uint64_t seed = 0;
    RankPolicy policy = RankPolicy::uniform;
    std::vector<SampleRecord> records;

    DensityMatrix state_of(const SampleRecord& rec) const;
};

/// Worker count: min(MEMSFRONT_THREADS if set, hardware concurrency).
int worker_count();

/// n random states; deterministic for a fixed seed regardless of the worker
/// count.
ScatterBatch scatter(std::size_t n, std::uint64_t seed, RankPolicy policy = RankPolicy::uniform);

struct Violation {
    std::uint64_t index = 0;
    double mixedness = 0;
    double entanglement = 0;
    double frontier = 0;
};

/// Frontier dominance over random states: lists every record whose
/// entanglement exceeds the frontier value at its mixedness by more than tol.
/// Planes ef-sl / n-sl / ef-sv / n-sv; frontier values come from the solvers.
struct DominanceReport {
    Plane plane = Plane::ef_sl;
    std::uint64_t seed = 0;
    std::size_t checked = 0;
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
};

DominanceReport check_dominance(const ScatterBatch& batch, Plane plane, double tol = 1e-9);

/// Relative-entropy plane dominance, restricted to the population where E_R
/// has a closed form: a sweep of the rank<=3 X family plus the Werner family.
DominanceReport check_dominance_er(Plane plane, std::size_t n_points, double tol = 1e-9);

/// Partial-transpose spectral properties over a batch:
/// at most one PT eigenvalue below -1e-10, and the negativity equals
/// 2 max{0, -lambda_4(rho^T_B)} to 1e-10.
struct AppendixReport {
    std::uint64_t seed = 0;
    std::size_t checked = 0;
    std::size_t bell_diag_checked = 0;
    std::vector<std::uint64_t> multi_negative_indices;
    std::vector<std::uint64_t> negativity_mismatch_indices;
    double max_bell_diag_error = 0;  // PT spectrum closed form on Bell-diagonal states
    bool pass() const {
        return multi_negative_indices.empty() && negativity_mismatch_indices.empty() &&
               max_bell_diag_error <= 1e-10;
    }
};

AppendixReport check_pt_negative_count(const ScatterBatch& batch,
                                       std::size_t n_bell_diag = 1000);

/// Existence of measure-ordering reversals among sample pairs.
struct OrderingReport {
    std::uint64_t seed = 0;
    std::size_t pairs = 0;
    std::size_t cn_reversals = 0;      // sign(C_A - C_B) != sign(N_A - N_B)
    std::size_t sl_sv_reversals = 0;   // sign(S_L^A - S_L^B) != sign(S_V^A - S_V^B)
    bool pass() const { return cn_reversals > 0 && sl_sv_reversals > 0; }
};

OrderingReport check_ordering_violations(const ScatterBatch& batch);

/// Lewenstein-Sanpera weight identity on random X-form parameters:
/// 1 - lambda equals the concurrence to 1e-10 and the separable part has a
/// PSD partial transpose.
struct LsReport {
    std::uint64_t seed = 0;
    std::size_t checked = 0;
    std::vector<std::uint64_t> identity_failures;
    std::vector<std::uint64_t> separability_failures;
    double max_identity_error = 0;
    bool pass() const { return identity_failures.empty() && separability_failures.empty(); }
};

LsReport check_ls_identity(std::size_t n, std::uint64_t seed);

}  // namespace memsfront
