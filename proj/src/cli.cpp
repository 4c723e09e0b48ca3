#include "memsfront/cli.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "memsfront/mcverify.hpp"
#include "memsfront/rootfind.hpp"

namespace memsfront::cli {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// State-file parsing

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
    throw std::runtime_error("state file: line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + what);
}

struct ComplexScanner {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    // number := [+-] digits [. digits] [e [+-] digits], optionally ending 'j'
    double read_number(bool& is_imag) {
        skip_ws();
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits = 0;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
            ++pos;
            ++digits;
        }
        if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
            ++pos;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (digits == 0) parse_fail(line, static_cast<int>(start + 1), "expected a number");
        is_imag = false;
        if (pos < s.size() && s[pos] == 'j') {
            is_imag = true;
            ++pos;
        }
        return std::stod(s.substr(start, pos - start - (is_imag ? 1 : 0)));
    }

    complex read_complex() {
        bool imag1 = false;
        const double first = read_number(imag1);
        if (imag1) return {0.0, first};
        skip_ws();
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            const std::size_t sign_col = pos;
            bool imag2 = false;
            const double second = read_number(imag2);
            if (!imag2)
                parse_fail(line, static_cast<int>(sign_col + 1),
                           "expected imaginary part ending in 'j'");
            return {first, second};
        }
        return {first, 0.0};
    }
};

DensityMatrix state_from_family(const std::map<std::string, std::string>& kv, int line) {
    const std::string name = kv.at("family");
    double param = 0.0;
    bool has_param = false;
    for (const char* key : {"r", "c"})
        if (auto it = kv.find(key); it != kv.end()) {
            param = std::stod(it->second);
            has_param = true;
        }
    if (name == "bell") return DensityMatrix(bell_phi_plus());
    if (!has_param) parse_fail(line, 1, "family '" + name + "' needs r=<value> (or c=<value>)");
    if (name == "werner") return werner(param);
    if (name == "mems-ef-sl") return mems_ef_sl(param);
    if (name == "mems-n-sl-1") return mems_n_sl(param, 1);
    if (name == "mems-n-sl-2") return mems_n_sl(param, 2);
    if (name == "mems-ef-sv-rank3") return mems_ef_sv(param, EfSvBranch::rank3);
    if (name == "mems-ef-sv-werner") return mems_ef_sv(param, EfSvBranch::werner);
    if (name == "gisin") return gisin_c(param);
    if (name == "bell-diag-rank2") return bell_diagonal_rank2(param);
    parse_fail(line, 1, "unknown family '" + name + "'");
}

}  // namespace

DensityMatrix parse_state_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::vector<std::pair<int, std::string>> lines;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (raw.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        if (raw[raw.find_first_not_of(" \t")] == '#') continue;
        lines.emplace_back(lineno, raw);
    }
    if (lines.empty()) throw std::runtime_error("state file: empty");

    if (lines.front().second.find("family=") != std::string::npos) {
        std::map<std::string, std::string> kv;
        for (const auto& [ln, text_line] : lines) {
            std::istringstream ls(text_line);
            std::string tok;
            while (ls >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos)
                    parse_fail(ln, 1, "expected key=value, got '" + tok + "'");
                kv[tok.substr(0, eq)] = tok.substr(eq + 1);
            }
        }
        return state_from_family(kv, lines.front().first);
    }

    if (lines.size() != 4)
        throw std::runtime_error("state file: expected 4 matrix rows, got " +
                                 std::to_string(lines.size()));
    Matrix4c m;
    for (int i = 0; i < 4; ++i) {
        ComplexScanner scan{lines[i].second, lines[i].first};
        for (int j = 0; j < 4; ++j) {
            if (scan.done())
                parse_fail(lines[i].first, static_cast<int>(scan.pos + 1),
                           "expected 4 entries in row");
            m(i, j) = scan.read_complex();
        }
        if (!scan.done())
            parse_fail(lines[i].first, static_cast<int>(scan.pos + 1),
                       "trailing input after 4 entries");
    }
    return DensityMatrix(m);  // throws naming the violated invariant
}

DensityMatrix parse_state_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open state file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_state_text(ss.str());
}

namespace {

// ---------------------------------------------------------------------------
// Row emitters shared between `frontier`/`envelope`/`scatter` and `figure`.

void emit_frontier_rows(std::ostream& os, Plane plane, int steps) {
    os << "mixedness,entanglement,branch,a,r\n";
    for (int i = 0; i <= steps; ++i) {
        const double m = static_cast<double>(i) / steps;
        const FrontierPoint p = frontier_point(plane, m);
        os << num(p.mixedness) << ',' << num(p.entanglement) << ',' << branch_name(p.branch)
           << ',' << num(p.a) << ',' << num(p.r) << '\n';
    }
}

void emit_envelope_rows(std::ostream& os, int steps) {
    os << "segment,r,s_v,s_l\n";
    const struct {
        EntropySegment seg;
        const char* name;
        double lo, hi;
    } segments[] = {{EntropySegment::a, "a", 0.0, 1.0},
                    {EntropySegment::b, "b", 0.5, 1.0},
                    {EntropySegment::c, "c", 0.0, 1.0 / 3.0},
                    {EntropySegment::d, "d", 0.0, 1.0}};
    for (const auto& s : segments)
        for (int i = 0; i <= steps; ++i) {
            const double r = s.lo + (s.hi - s.lo) * i / steps;
            const EnvelopePoint p = sl_sv_envelope(s.seg, r);
            os << s.name << ',' << num(r) << ',' << num(p.s_v) << ',' << num(p.s_l) << '\n';
        }
}

void emit_scatter_rows(std::ostream& os, const ScatterBatch& batch) {
    os << "index,rank,lambda1,lambda2,lambda3,lambda4,concurrence,tangle,eof,negativity,"
          "linear_entropy,von_neumann_entropy,chsh_b\n";
    for (const SampleRecord& rec : batch.records) {
        os << rec.index << ',' << rec.rank;
        for (double v : rec.spectrum.values) os << ',' << num(v);
        const MeasureVector& m = rec.measures;
        os << ',' << num(m.concurrence) << ',' << num(m.tangle) << ',' << num(m.eof) << ','
           << num(m.negativity) << ',' << num(m.linear_entropy) << ','
           << num(m.von_neumann_entropy) << ',' << num(m.chsh_b) << '\n';
    }
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    body(f);
}

// ---------------------------------------------------------------------------
// Figure datasets. Each is a composition of the same primitives the
// `frontier`/`envelope`/`scatter` subcommands use.

void emit_family_curve(std::ostream& os, const char* label, int steps,
                       const std::function<DensityMatrix(double)>& family, double lo = 0.0,
                       double hi = 1.0) {
    for (int i = 0; i <= steps; ++i) {
        const double r = lo + (hi - lo) * i / steps;
        const MeasureVector m = measure_all(family(r));
        os << label << ',' << num(r) << ',' << num(m.linear_entropy) << ','
           << num(m.von_neumann_entropy) << ',' << num(m.concurrence) << ',' << num(m.eof)
           << ',' << num(m.negativity) << ',' << num(m.chsh_b) << '\n';
    }
}

void emit_figure(std::ostream& os, int id, int steps, std::size_t n, std::uint64_t seed) {
    const char* family_header =
        "curve,param,s_l,s_v,concurrence,eof,negativity,chsh_b\n";
    switch (id) {
        case 1: {  // negativity vs concurrence: scatter + the two bounds
            os << "kind,concurrence,negativity\n";
            for (const SampleRecord& rec : scatter(n, seed).records)
                os << "sample," << num(rec.measures.concurrence) << ','
                   << num(rec.measures.negativity) << '\n';
            for (int i = 0; i <= steps; ++i) {
                const double c = static_cast<double>(i) / steps;
                const auto [n_min, n_max] = cn_bounds(c);
                os << "lower_bound," << num(c) << ',' << num(n_min) << '\n';
                os << "upper_bound," << num(c) << ',' << num(n_max) << '\n';
            }
            break;
        }
        case 2: {  // S_V vs S_L: scatter + the four boundary segments
            os << "kind,rank,s_l,s_v\n";
            for (const SampleRecord& rec : scatter(n, seed).records)
                os << "sample," << rec.rank << ',' << num(rec.measures.linear_entropy) << ','
                   << num(rec.measures.von_neumann_entropy) << '\n';
            const struct {
                EntropySegment seg;
                const char* name;
                double lo, hi;
            } segments[] = {{EntropySegment::a, "segment_a", 0.0, 1.0},
                            {EntropySegment::b, "segment_b", 0.5, 1.0},
                            {EntropySegment::c, "segment_c", 0.0, 1.0 / 3.0},
                            {EntropySegment::d, "segment_d", 0.0, 1.0}};
            for (const auto& s : segments)
                for (int i = 0; i <= steps; ++i) {
                    const double r = s.lo + (s.hi - s.lo) * i / steps;
                    const EnvelopePoint p = sl_sv_envelope(s.seg, r);
                    os << s.name << ",0," << num(p.s_l) << ',' << num(p.s_v) << '\n';
                }
            break;
        }
        case 3:  // C and E_F vs S_L: frontier family vs Werner states
            os << family_header;
            emit_family_curve(os, "mems_ef_sl", steps, [](double r) { return mems_ef_sl(r); });
            emit_family_curve(os, "werner", steps, [](double r) { return werner(r); });
            break;
        case 4: {  // solved (a, r) of the E_R vs S_L frontier
            os << "s_l,a,r,branch\n";
            for (int i = 0; i <= steps; ++i) {
                const FrontierPoint p = er_sl_frontier(static_cast<double>(i) / steps);
                os << num(p.mixedness) << ',' << num(p.a) << ',' << num(p.r) << ','
                   << branch_name(p.branch) << '\n';
            }
            break;
        }
        case 5: {  // E_R vs S_L: frontier + non-maximal candidates
            os << "curve,s_l,e_r,branch\n";
            for (int i = 0; i <= steps; ++i) {
                const FrontierPoint p = er_sl_frontier(static_cast<double>(i) / steps);
                os << "frontier," << num(p.mixedness) << ',' << num(p.entanglement) << ','
                   << branch_name(p.branch) << '\n';
            }
            for (int i = 0; i <= steps; ++i) {  // Werner stationary family
                const double r = static_cast<double>(i) / steps;
                os << "werner," << num(1 - r * r) << ',' << num(er_werner(r)) << ",WERNER\n";
            }
            break;
        }
        case 6: {  // E_F - E_R vs S_L for the C-frontier family and Werner
            os << "curve,s_l,ef_minus_er\n";
            for (int i = 0; i <= steps; ++i) {
                const double r = static_cast<double>(i) / steps;
                const DensityMatrix rho = mems_ef_sl(r);
                const double a_param = r >= 2.0 / 3.0 ? 1 - r : 1.0 / 3.0;
                os << "mems_ef_sl," << num(linear_entropy(rho)) << ','
                   << num(eof(rho) - er_rank3(a_param, r)) << '\n';
            }
            for (int i = 0; i <= steps; ++i) {
                const double r = static_cast<double>(i) / steps;
                os << "werner," << num(1 - r * r) << ','
                   << num(eof(werner(r)) - er_werner(r)) << '\n';
            }
            break;
        }
        case 7:  // N vs S_L: both frontier families + the C-frontier curve
            os << family_header;
            emit_family_curve(os, "mems_n_sl_1", steps, [](double r) { return mems_n_sl(r, 1); });
            emit_family_curve(os, "mems_n_sl_2", steps, [](double r) { return mems_n_sl(r, 2); });
            emit_family_curve(os, "mems_ef_sl", steps, [](double r) { return mems_ef_sl(r); });
            break;
        case 8: {  // C vs S_V: all four candidate families
            os << family_header;
            emit_family_curve(os, "rank3", steps,
                              [](double c) { return mems_ef_sv(c, EfSvBranch::rank3); });
            emit_family_curve(os, "werner", steps,
                              [](double c) { return mems_ef_sv(c, EfSvBranch::werner); });
            emit_family_curve(os, "rank2", steps, [](double r) { return mems_ef_sl(r); }, 2.0 / 3.0,
                              1.0);
            for (int i = 0; i <= steps; ++i) {  // transcendental rank-4 candidate
                const double s_v = 0.663 + (0.792 - 0.663) * i / steps;
                if (const auto p = rank4_candidate_ef_sv(s_v)) {
                    const MeasureVector m = measure_all(p->reconstruct());
                    os << "rank4," << num(s_v) << ',' << num(m.linear_entropy) << ','
                       << num(m.von_neumann_entropy) << ',' << num(m.concurrence) << ','
                       << num(m.eof) << ',' << num(m.negativity) << ',' << num(m.chsh_b)
                       << '\n';
                }
            }
            break;
        }
        case 9: {  // E_R vs S_V: frontier + both branches
            os << "curve,s_v,e_r,branch\n";
            for (int i = 0; i <= steps; ++i) {
                const FrontierPoint p = er_sv_frontier(static_cast<double>(i) / steps);
                os << "frontier," << num(p.mixedness) << ',' << num(p.entanglement) << ','
                   << branch_name(p.branch) << '\n';
            }
            for (int i = 0; i <= steps; ++i) {
                const double r = static_cast<double>(i) / steps;
                os << "werner," << num(sv_werner(r)) << ',' << num(er_werner(r)) << ",WERNER\n";
            }
            break;
        }
        case 10: {  // N vs S_V: Werner frontier + rank-2 candidate
            os << family_header;
            emit_family_curve(os, "werner", steps, [](double r) { return werner(r); });
            emit_family_curve(os, "rank2_bell_diag", steps,
                              [](double r) { return bell_diagonal_rank2(r); }, 0.5, 1.0);
            break;
        }
        case 11:  // CHSH quantity B vs both entropies for five families
            os << family_header;
            emit_family_curve(os, "mems_ef_sl", steps, [](double r) { return mems_ef_sl(r); });
            emit_family_curve(os, "werner", steps, [](double r) { return werner(r); });
            emit_family_curve(os, "mems_n_sl_2", steps, [](double r) { return mems_n_sl(r, 2); });
            emit_family_curve(os, "mems_ef_sv_rank3", steps,
                              [](double c) { return mems_ef_sv(c, EfSvBranch::rank3); });
            emit_family_curve(os, "rank2_bell_diag", steps,
                              [](double r) { return bell_diagonal_rank2(r); }, 0.5, 1.0);
            break;
        default:
            throw std::runtime_error("figure --id must be 1..11");
    }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyResult {
    bool ok = true;
    void line(std::ostream& os, bool pass, const std::string& what) {
        os << (pass ? "PASS " : "FAIL ") << what << '\n';
        ok = ok && pass;
    }
};

void run_dominance(std::ostream& os, VerifyResult& result, std::size_t n, std::uint64_t seed,
                   double tol) {
    const ScatterBatch batch = scatter(n, seed);
    for (Plane plane : {Plane::ef_sl, Plane::n_sl, Plane::ef_sv, Plane::n_sv}) {
        const DominanceReport rep = check_dominance(batch, plane, tol);
        result.line(os, rep.pass(),
                    "dominance " + plane_name(plane) + ": " + std::to_string(rep.checked) +
                        " samples, " + std::to_string(rep.violations.size()) +
                        " violations (seed " + std::to_string(seed) + ")");
    }
    for (Plane plane : {Plane::er_sl, Plane::er_sv}) {
        const DominanceReport rep = check_dominance_er(plane, 10000, tol);
        result.line(os, rep.pass(),
                    "dominance " + plane_name(plane) + " (closed-form population): " +
                        std::to_string(rep.checked) + " points, " +
                        std::to_string(rep.violations.size()) + " violations");
    }
}

void run_appendix(std::ostream& os, VerifyResult& result, std::size_t n, std::uint64_t seed) {
    const ScatterBatch batch = scatter(n, seed);
    const AppendixReport rep = check_pt_negative_count(batch);
    result.line(os, rep.multi_negative_indices.empty(),
                "partial transpose has at most one negative eigenvalue: " +
                    std::to_string(rep.checked) + " samples, " +
                    std::to_string(rep.multi_negative_indices.size()) + " counterexamples");
    result.line(os, rep.negativity_mismatch_indices.empty(),
                "negativity equals 2 max{0, -lambda_4(PT)}: " +
                    std::to_string(rep.negativity_mismatch_indices.size()) + " mismatches");
    result.line(os, rep.max_bell_diag_error <= 1e-10,
                "Bell-diagonal PT spectrum closed form: max error " +
                    num(rep.max_bell_diag_error) + " over " +
                    std::to_string(rep.bell_diag_checked) + " states");
}

void run_ordering(std::ostream& os, VerifyResult& result, std::size_t n, std::uint64_t seed) {
    const OrderingReport rep = check_ordering_violations(scatter(n, seed));
    result.line(os, rep.cn_reversals > 0,
                "C/N ordering reversals exist: " + std::to_string(rep.cn_reversals) + " of " +
                    std::to_string(rep.pairs) + " pairs");
    result.line(os, rep.sl_sv_reversals > 0,
                "S_L/S_V ordering reversals exist: " + std::to_string(rep.sl_sv_reversals) +
                    " of " + std::to_string(rep.pairs) + " pairs");
}

void run_ls(std::ostream& os, VerifyResult& result, std::size_t n, std::uint64_t seed) {
    const LsReport rep = check_ls_identity(n, seed);
    result.line(os, rep.identity_failures.empty(),
                "LS weight equals concurrence: max error " + num(rep.max_identity_error) +
                    " over " + std::to_string(rep.checked) + " states");
    result.line(os, rep.separability_failures.empty(),
                "LS separable part has PSD partial transpose: " +
                    std::to_string(rep.separability_failures.size()) + " failures");
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out) {
    CLI::App app{"two-qubit entanglement/mixedness measures, MEMS families and frontiers"};
    app.require_subcommand(1);

    // measure
    std::string state_path;
    CLI::App* measure_cmd = app.add_subcommand("measure", "print all measures of a state file");
    measure_cmd->add_option("statefile", state_path, "state file")->required();

    // frontier
    std::string plane_str, out_path;
    int steps = 400;
    CLI::App* frontier_cmd = app.add_subcommand("frontier", "emit one frontier curve as CSV");
    frontier_cmd->add_option("--plane", plane_str, "ef-sl|er-sl|n-sl|ef-sv|er-sv|n-sv")
        ->required();
    frontier_cmd->add_option("--steps", steps, "grid intervals (rows = steps+1)");
    frontier_cmd->add_option("--out", out_path, "output CSV path")->required();

    // envelope
    CLI::App* envelope_cmd = app.add_subcommand("envelope", "emit the S_V-S_L boundary as CSV");
    envelope_cmd->add_option("--steps", steps, "grid intervals per segment");
    envelope_cmd->add_option("--out", out_path, "output CSV path")->required();

    // scatter
    std::size_t n_samples = 10000;
    std::uint64_t seed = 1;
    std::string rank_policy = "uniform";
    CLI::App* scatter_cmd = app.add_subcommand("scatter", "emit random-state samples as CSV");
    scatter_cmd->add_option("--n", n_samples, "sample count");
    scatter_cmd->add_option("--seed", seed, "RNG seed");
    scatter_cmd->add_option("--rank", rank_policy, "uniform|1|2|3|4");
    scatter_cmd->add_option("--out", out_path, "output CSV path")->required();

    // verify
    std::string suite = "all";
    std::size_t n_verify = 0;  // 0 = per-suite defaults
    double tol = 1e-9;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "dominance|appendix|ordering|ls|all");
    verify_cmd->add_option("--n", n_verify, "sample count (default per suite)");
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--tol", tol, "dominance tolerance");

    // crossings
    CLI::App* crossings_cmd =
        app.add_subcommand("crossings", "solve and print all crossing constants");

    // figure
    int figure_id = 0;
    CLI::App* figure_cmd = app.add_subcommand("figure", "emit a figure dataset as CSV");
    figure_cmd->add_option("--id", figure_id, "figure id (1..11)")->required();
    figure_cmd->add_option("--steps", steps, "curve grid intervals");
    figure_cmd->add_option("--n", n_samples, "scatter sample count");
    figure_cmd->add_option("--seed", seed, "RNG seed");
    figure_cmd->add_option("--out", out_path, "output CSV path")->required();

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return exit_ok;
        }
        std::ostringstream msg;
        msg << e.what();
        out << "error: " << msg.str() << '\n';
        return exit_usage;
    }

    try {
        if (*measure_cmd) {
            const DensityMatrix rho = parse_state_file(state_path);
            const MeasureVector m = measure_all(rho);
            const double ratio = participation_ratio(rho);
            out << "concurrence=" << num(m.concurrence) << '\n'
                << "tangle=" << num(m.tangle) << '\n'
                << "eof=" << num(m.eof) << '\n'
                << "negativity=" << num(m.negativity) << '\n'
                << "linear_entropy=" << num(m.linear_entropy) << '\n'
                << "von_neumann_entropy=" << num(m.von_neumann_entropy) << '\n'
                << "participation_ratio=" << num(ratio) << '\n'
                << "chsh_b=" << num(m.chsh_b) << '\n'
                << "bell_violation=" << (m.chsh_b > 2.0 ? 1 : 0) << '\n'
                << "separable_by_participation=" << (participation_separable(ratio) ? 1 : 0)
                << '\n';
            return exit_ok;
        }
        if (*frontier_cmd) {
            const Plane plane = plane_from_name(plane_str);
            write_file(out_path, [&](std::ostream& f) { emit_frontier_rows(f, plane, steps); });
            return exit_ok;
        }
        if (*envelope_cmd) {
            write_file(out_path, [&](std::ostream& f) { emit_envelope_rows(f, steps); });
            return exit_ok;
        }
        if (*scatter_cmd) {
            RankPolicy policy = RankPolicy::uniform;
            if (rank_policy == "1") policy = RankPolicy::fixed1;
            else if (rank_policy == "2") policy = RankPolicy::fixed2;
            else if (rank_policy == "3") policy = RankPolicy::fixed3;
            else if (rank_policy == "4") policy = RankPolicy::fixed4;
            else if (rank_policy != "uniform")
                throw std::runtime_error("--rank must be uniform|1|2|3|4");
            const ScatterBatch batch = scatter(n_samples, seed, policy);
            write_file(out_path, [&](std::ostream& f) { emit_scatter_rows(f, batch); });
            return exit_ok;
        }
        if (*verify_cmd) {
            VerifyResult result;
            const auto count = [n_verify](std::size_t dflt) {
                return n_verify > 0 ? n_verify : dflt;
            };
            if (suite == "dominance" || suite == "all")
                run_dominance(out, result, count(100000), seed, tol);
            if (suite == "appendix" || suite == "all")
                run_appendix(out, result, count(100000), seed);
            if (suite == "ordering" || suite == "all")
                run_ordering(out, result, count(1000), seed);
            if (suite == "ls" || suite == "all") run_ls(out, result, count(10000), seed);
            if (suite != "dominance" && suite != "appendix" && suite != "ordering" &&
                suite != "ls" && suite != "all")
                throw std::runtime_error("--suite must be dominance|appendix|ordering|ls|all");
            out << (result.ok ? "ALL CHECKS PASSED" : "VIOLATIONS FOUND") << '\n';
            return result.ok ? exit_ok : exit_violation;
        }
        if (*crossings_cmd) {
            const CrossingTable t = crossing_table();
            out << "ef_sl_branch_r = " << num(t.ef_sl_branch_r) << "  (residual "
                << num(t.ef_sl_residual) << ")\n";
            out << "er_sl: S_L = " << num(t.er_sl.s_l) << "  E_R = " << num(t.er_sl.e_r)
                << "  a = " << num(t.er_sl.a) << "  r = " << num(t.er_sl.r) << "  (residual "
                << num(t.er_sl.residual) << ")\n";
            out << "ef_sv: C = " << num(t.ef_sv.c) << "  S_V = " << num(t.ef_sv.s_v)
                << "  (residual " << num(t.ef_sv.residual) << ")\n";
            out << "er_sv: S_V = " << num(t.er_sv.s_v) << "  E_R = " << num(t.er_sv.e_r)
                << "  werner_r = " << num(t.er_sv.werner_r) << "  (residual "
                << num(t.er_sv.residual) << ")\n";
            out << "sv_separability_threshold = " << num(t.sv_separability_threshold)
                << "  (residual " << num(t.sv_threshold_residual) << ")\n";
            out << "sl_separability_threshold = " << num(t.sl_separability_threshold)
                << "  (residual " << num(t.sl_threshold_residual) << ")\n";
            return exit_ok;
        }
        if (*figure_cmd) {
            write_file(out_path,
                       [&](std::ostream& f) { emit_figure(f, figure_id, steps, n_samples, seed); });
            return exit_ok;
        }
    } catch (const SolveError& e) {
        out << "error: solver did not converge: " << e.what() << '\n';
        return exit_no_converge;
    } catch (const CLI::Error& e) {
        out << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

int run(const std::vector<std::string>& argv) { return run(argv, std::cout); }

}  // namespace memsfront::cli
