#pragma once

#include <optional>
#include <string>

#include "memsfront/measures.hpp"

namespace memsfront {

enum class Plane { ef_sl, er_sl, n_sl, ef_sv, er_sv, n_sv };

Plane plane_from_name(const std::string& name);  // "ef-sl", "er-sl", ...
std::string plane_name(Plane p);

enum class Branch { rank2, rank3, werner, family1, family2, rank4, separable };

std::string branch_name(Branch b);

/// One point of a frontier curve. `a` and `r` are the solved family
/// parameters; reconstruct() rebuilds the state they describe.
struct FrontierPoint {
    double mixedness = 0;
    double entanglement = 0;
    Branch branch = Branch::separable;
    double a = 0;
    double r = 0;
    double b = 0;  // nonzero only on the rank-4 comparison branch

    DensityMatrix reconstruct() const;
};

/// Crossing constants of all planes, solved from their defining equations;
/// each carries the achieved equation residual.
struct CrossingTable {
    double ef_sl_branch_r = 0;      // r where the two C-vs-S_L branches coincide
    double ef_sl_residual = 0;
    struct {
        double s_l = 0, e_r = 0, a = 0, r = 0, residual = 0;
    } er_sl;
    struct {
        double c = 0, s_v = 0, residual = 0;
    } ef_sv;
    struct {
        double s_v = 0, e_r = 0, werner_r = 0, residual = 0;
    } er_sv;
    double sv_separability_threshold = 0;  // S_V above which no entangled states exist
    double sv_threshold_residual = 0;
    double sl_separability_threshold = 0;  // = 8/9
    double sl_threshold_residual = 0;
};

/// S_L of the rank<=3 X family diag((1-a)/2, a, 0, (1-a)/2), corners r/2.
double sl_rank3(double a, double r);
/// S_V of the same family (spectrum {(1-a+r)/2, a, (1-a-r)/2, 0}).
double sv_rank3(double a, double r);
/// S_V of Werner(r).
double sv_werner(double r);

/// Stationarity condition of E_R at fixed S_L on the rank-3 family;
/// the solved a for given r (scanned bracket + bisection).
double er_sl_stationary_a(double r);
/// Stationarity condition of E_R at fixed S_V on the rank-3 family.
double er_sv_stationary_a(double r);

/// Frontier point of the requested plane at the given mixedness in [0, 1].
/// Branch selection compares the entanglement of every valid candidate
/// family. Beyond the separability threshold the point carries zero
/// entanglement on the Werner family.
FrontierPoint frontier_point(Plane plane, double mixedness);

FrontierPoint ef_sl_frontier(double s_l);
FrontierPoint er_sl_frontier(double s_l);
FrontierPoint n_sl_frontier(double s_l);
FrontierPoint ef_sv_frontier(double s_v);
FrontierPoint er_sv_frontier(double s_v);
FrontierPoint n_sv_frontier(double s_v);

/// Non-maximal rank-4 stationary branch of the C-vs-S_V problem, obtained
/// from the second (u != w) solution of the transcendental system
///   u log u = w log w,  2u log u = (u + w) log v.
/// Empty when no solution exists at this entropy.
std::optional<FrontierPoint> rank4_candidate_ef_sv(double s_v);

/// Both entropies of the boundary spectrum family at parameter r.
struct EnvelopePoint {
    double s_v = 0;
    double s_l = 0;
};
EnvelopePoint sl_sv_envelope(EntropySegment segment, double r);

/// Envelope bounds at a given S_L: the segment-(a) value above, the piecewise
/// (b)/(c)/(d) value below.
double sv_upper_at_sl(double s_l);
double sv_lower_at_sl(double s_l);

/// Solves every crossing equation from scratch (bracketing intervals only).
CrossingTable crossing_table();

}  // namespace memsfront
