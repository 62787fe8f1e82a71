#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lemni/area.hpp"
#include "lemni/constructions.hpp"
#include "lemni/io.hpp"
#include "lemni/metrics.hpp"
#include "lemni/potential.hpp"
#include "lemni/rng.hpp"
#include "lemni/search.hpp"

using namespace lemni;

namespace {

struct Output {
    std::string name;  // suffix appended to the --out prefix
    std::string content;
};

// With --out PREFIX, writes PREFIX.<name> for every output plus a manifest;
// without it, dumps everything to stdout. Data outputs carry no timestamps,
// so reruns with the same seed are byte-identical; the manifest holds the
// only clock value.
void emit(const std::string& out_prefix, const std::string& command_line, std::uint64_t seed,
          const std::vector<Output>& outputs) {
    if (out_prefix.empty()) {
        for (const Output& o : outputs) std::cout << o.content;
        return;
    }
    std::vector<io::ManifestEntry> entries;
    for (const Output& o : outputs) {
        std::string path = out_prefix + "." + o.name;
        io::write_file(path, o.content);
        entries.push_back({path, io::fnv1a(o.content)});
    }
    io::write_file(out_prefix + ".manifest.json",
                   io::manifest_json(command_line, seed, entries));
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

RootConfiguration random_disc_config(int degree, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0xd15c));
    std::vector<Root> roots;
    for (int i = 0; i < degree; ++i) {
        double r = std::sqrt(rng.next_double());
        double theta = kTau * rng.next_double();
        roots.push_back({std::polar(r, theta), 1});
    }
    return RootConfiguration(std::move(roots), ConstraintTag::UnitDisc);
}

// --roots accepts inline JSON or a path to a JSON file
RootConfiguration config_from_flags(const std::string& roots_arg, const std::string& family,
                                    int n) {
    if (!roots_arg.empty()) {
        std::string text = roots_arg;
        if (roots_arg.find('{') == std::string::npos) text = io::read_file(roots_arg);
        return io::parse_config(text);
    }
    if (!family.empty()) return named_family(family_kind_from_string(family), n);
    throw CLI::ValidationError("need either --roots or --family");
}

SamplerConfig sampler_from_flags(long long p, int trials, std::uint64_t seed,
                                 const std::string& kind) {
    SamplerConfig cfg;
    cfg.kind = sampler_kind_from_string(kind);
    cfg.target_points = p;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

// canonical cyclic-gap signature: sorted angles -> gap sequence -> the
// lexicographically smallest rotation (rotation-invariant comparison)
std::vector<double> gap_signature(const RootConfiguration& config) {
    std::vector<double> angles = config.sorted_angles();
    const size_t n = angles.size();
    std::vector<double> gaps(n);
    for (size_t i = 0; i < n; ++i)
        gaps[i] = (i + 1 < n ? angles[i + 1] : angles[0] + kTau) - angles[i];
    std::vector<double> best = gaps;
    for (size_t r = 1; r < n; ++r) {
        std::rotate(gaps.begin(), gaps.begin() + 1, gaps.end());
        if (gaps < best) best = gaps;
    }
    return best;
}

bool same_up_to_rotation(const RootConfiguration& a, const RootConfiguration& b, double tol) {
    std::vector<double> ga = gap_signature(a), gb = gap_signature(b);
    if (ga.size() != gb.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (std::abs(ga[i] - gb[i]) > tol) return false;
    return true;
}

int parse_monomial(const std::string& s) {
    // accepts "z^K" (or a bare integer K) for the inner composition map
    if (s.rfind("z^", 0) == 0) return std::stoi(s.substr(2));
    if (s == "z") return 1;
    return std::stoi(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lemnikit — a numerical laboratory for polynomial lemniscates"};
    app.require_subcommand(1);
    const std::string command_line = join_args(argc, argv);

    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (overrides LEMNIKIT_THREADS)");

    // ---- area ----------------------------------------------------------
    std::string a_roots, a_family, a_out, a_kind = "triangular", a_id = "config";
    int a_n = 3, a_trials = 6;
    long long a_p = 100000;
    double a_t = 1.0;
    std::uint64_t a_seed = 1;
    auto* area_cmd = app.add_subcommand("area", "Monte Carlo area of a lemniscate");
    area_cmd->add_option("--roots", a_roots, "configuration JSON (inline or file)");
    area_cmd->add_option("--family", a_family, "erdos | erdos-deflated | stretched");
    area_cmd->add_option("--n", a_n, "family degree parameter");
    area_cmd->add_option("--t", a_t, "level t > 0");
    area_cmd->add_option("--p", a_p, "target points per trial");
    area_cmd->add_option("--trials", a_trials, "number of independent trials");
    area_cmd->add_option("--seed", a_seed, "RNG seed");
    area_cmd->add_option("--sampler", a_kind, "triangular | square | uniform");
    area_cmd->add_option("--id", a_id, "spec_id recorded in the CSV");
    area_cmd->add_option("--out", a_out, "output file prefix");

    // ---- bench-samplers --------------------------------------------------
    std::string b_out;
    int b_nmax = 10, b_trials = 6;
    long long b_p = 100000;
    std::uint64_t b_seed = 1;
    auto* bench_cmd =
        app.add_subcommand("bench-samplers", "sampler error table on the unit-level family z^n - 1");
    bench_cmd->add_option("--n-max", b_nmax, "largest degree (from 2)");
    bench_cmd->add_option("--p", b_p, "target points per trial");
    bench_cmd->add_option("--trials", b_trials, "trials per estimate");
    bench_cmd->add_option("--seed", b_seed, "RNG seed");
    bench_cmd->add_option("--out", b_out, "output file prefix");

    // ---- table-minimizers ------------------------------------------------
    std::string t_out;
    long long t_p = 20000;
    int t_trials = 4;
    std::uint64_t t_seed = 1;
    auto* table_cmd = app.add_subcommand(
        "table-minimizers", "desk-scale exhaustive searches for n=3..6 vs the known minimizers");
    table_cmd->add_option("--p", t_p, "points per trial");
    table_cmd->add_option("--trials", t_trials, "trials per candidate");
    table_cmd->add_option("--seed", t_seed, "RNG seed");
    table_cmd->add_option("--out", t_out, "output file prefix");

    // ---- verify ----------------------------------------------------------
    std::string v_check, v_roots, v_family = "erdos", v_out, v_inner = "z^2";
    int v_n = 8, v_random_degree = 0, v_trials = 4, v_resolution = 1024, v_circles = 100;
    long long v_p = 50000, v_samples = 100000, v_L = 0;
    double v_t = 1.0, v_eps = 0.3;
    std::uint64_t v_seed = 1;
    bool v_prob = false;
    auto* verify_cmd = app.add_subcommand("verify", "numeric checks of the proved inequalities");
    verify_cmd->add_option("check", v_check,
                           "inradius | perimeter | chain | reflection | signs | pushing | crane")
        ->required();
    verify_cmd->add_option("--roots", v_roots, "configuration JSON (inline or file)");
    verify_cmd->add_option("--family", v_family, "named family for the target polynomial");
    verify_cmd->add_option("--n", v_n, "degree parameter");
    verify_cmd->add_option("--t", v_t, "level");
    verify_cmd->add_option("--eps", v_eps, "pushing epsilon");
    verify_cmd->add_option("--L", v_L, "probabilistic pushing sample count");
    verify_cmd->add_flag("--prob", v_prob, "use the probabilistic pushing variant");
    verify_cmd->add_option("--random-degree", v_random_degree,
                           "use a random disc configuration of this degree");
    verify_cmd->add_option("--seed", v_seed, "RNG seed");
    verify_cmd->add_option("--samples", v_samples, "reflection sample count");
    verify_cmd->add_option("--circles", v_circles, "random circles for the sign-change check");
    verify_cmd->add_option("--p", v_p, "points per trial for area estimates");
    verify_cmd->add_option("--trials", v_trials, "trials for area estimates");
    verify_cmd->add_option("--resolution", v_resolution, "grid resolution for rho/L estimates");
    verify_cmd->add_option("--inner", v_inner, "inner map for crane (z^K)");
    verify_cmd->add_option("--out", v_out, "output file prefix");

    // ---- construct ---------------------------------------------------------
    auto* construct_cmd = app.add_subcommand("construct", "constructive procedures");
    construct_cmd->require_subcommand(1);

    std::string cw_out;
    double cw_R = 1.0, cw_alpha = 1.0, cw_tol = 1e-14;
    long long cw_cap = 1000000;
    auto* cw = construct_cmd->add_subcommand("wagner", "small-area circle polynomial");
    cw->add_option("--R", cw_R, "growth parameter R > 1");
    cw->add_option("--alpha", cw_alpha, "level exponent: t = (log M)^alpha");
    cw->add_option("--tol", cw_tol, "series tail tolerance");
    cw->add_option("--cap", cw_cap, "degree cap for M");
    cw->add_option("--out", cw_out, "output file prefix");

    std::string cp_roots, cp_family, cp_out;
    int cp_n = 10, cp_random_degree = 0;
    double cp_eps = 0.3;
    long long cp_L = 0;
    std::uint64_t cp_seed = 1;
    bool cp_prob = false, cp_ceil = false;
    auto* cp = construct_cmd->add_subcommand("push", "push interior zeros to the circle");
    cp->add_option("--roots", cp_roots, "configuration JSON (inline or file)");
    cp->add_option("--family", cp_family, "named family");
    cp->add_option("--n", cp_n, "degree parameter");
    cp->add_option("--eps", cp_eps, "epsilon");
    cp->add_flag("--prob", cp_prob, "probabilistic variant");
    cp->add_flag("--ceil", cp_ceil, "round L = 6/eps^2 up instead of down");
    cp->add_option("--L", cp_L, "sample count for the probabilistic variant");
    cp->add_option("--seed", cp_seed, "RNG seed");
    cp->add_option("--random-degree", cp_random_degree, "random disc configuration degree");
    cp->add_option("--out", cp_out, "output file prefix");

    std::string cf_kind = "erdos", cf_out;
    int cf_n = 6;
    auto* cf = construct_cmd->add_subcommand("family", "named configuration families");
    cf->add_option("--kind", cf_kind, "erdos | erdos-deflated | stretched");
    cf->add_option("--n", cf_n, "degree parameter");
    cf->add_option("--out", cf_out, "output file prefix");

    // ---- search -----------------------------------------------------------
    auto* search_cmd = app.add_subcommand("search", "extremal configuration search");
    search_cmd->require_subcommand(1);

    std::string se_out;
    int se_n = 3, se_m = 24, se_trials = 4;
    long long se_p = 20000, se_budget = 10000000;
    double se_t = 1.0;
    std::uint64_t se_seed = 1;
    bool se_nosym = false, se_svg = false;
    auto* se = search_cmd->add_subcommand("exhaustive", "grid subset search");
    se->add_option("--n", se_n, "degree");
    se->add_option("--m", se_m, "grid order");
    se->add_option("--t", se_t, "level");
    se->add_option("--p", se_p, "points per trial");
    se->add_option("--trials", se_trials, "trials per candidate");
    se->add_option("--seed", se_seed, "RNG seed");
    se->add_option("--budget", se_budget, "candidate budget guard");
    se->add_flag("--no-symmetry", se_nosym, "drop the conjugate-symmetry restriction");
    se->add_flag("--svg", se_svg, "also emit an SVG contour of the winner");
    se->add_option("--out", se_out, "output file prefix");

    std::string sl_init, sl_out;
    int sl_arc = 16, sl_trials = 4;
    long long sl_p = 20000;
    double sl_t = 1.0;
    std::uint64_t sl_seed = 1;
    auto* sl = search_cmd->add_subcommand("local", "cyclic coordinate descent on the circle");
    sl->add_option("--init", sl_init, "initial configuration JSON (inline or file)")->required();
    sl->add_option("--arc-steps", sl_arc, "arc discretization");
    sl->add_option("--t", sl_t, "level");
    sl->add_option("--p", sl_p, "points per trial");
    sl->add_option("--trials", sl_trials, "trials per candidate");
    sl->add_option("--seed", sl_seed, "RNG seed");
    sl->add_option("--out", sl_out, "output file prefix");

    std::string sc_out;
    int sc_nmin = 2, sc_nmax = 8, sc_trials = 4;
    long long sc_p = 20000;
    double sc_t = 1.0;
    std::uint64_t sc_seed = 1;
    auto* sc = search_cmd->add_subcommand("cnh", "merged-roots family sweep");
    sc->add_option("--n-min", sc_nmin, "first degree");
    sc->add_option("--n-max", sc_nmax, "last degree");
    sc->add_option("--t", sc_t, "level");
    sc->add_option("--p", sc_p, "points per trial");
    sc->add_option("--trials", sc_trials, "trials per candidate");
    sc->add_option("--seed", sc_seed, "RNG seed");
    sc->add_option("--out", sc_out, "output file prefix");

    CLI11_PARSE(app, argc, argv);

    if (threads > 0) setenv("LEMNIKIT_THREADS", std::to_string(threads).c_str(), 1);

    try {
        if (*area_cmd) {
            RootConfiguration config = config_from_flags(a_roots, a_family, a_n);
            LevelSetSpec spec(config, a_t);
            AreaEstimate est = estimate_area(spec, sampler_from_flags(a_p, a_trials, a_seed, a_kind));
            std::string csv = io::area_csv({{a_family.empty() ? a_id : a_family + "-" +
                                                               std::to_string(a_n),
                                             a_kind, est}});
            emit(a_out, command_line, a_seed, {{"area.csv", csv}});
            if (!a_out.empty()) std::cout << csv;
            return 0;
        }

        if (*bench_cmd) {
            std::ostringstream csv;
            csv << "n,closed_form,square_mean,square_err,triangular_mean,triangular_err,"
                   "uniform_mean,uniform_err\n";
            for (int n = 2; n <= b_nmax; ++n) {
                LevelSetSpec spec(RootConfiguration::roots_of_unity(n), 1.0);
                double exact = erdos_area_closed_form(n);
                csv << n << ',' << exact;
                for (const char* kind : {"square", "triangular", "uniform"}) {
                    AreaEstimate est =
                        estimate_area(spec, sampler_from_flags(b_p, b_trials, b_seed, kind));
                    csv << ',' << est.mean << ',' << est.mean - exact;
                }
                csv << '\n';
            }
            emit(b_out, command_line, b_seed, {{"bench.csv", csv.str()}});
            if (!b_out.empty()) std::cout << csv.str();
            return 0;
        }

        if (*table_cmd) {
            struct Row {
                int n, m;
                RootConfiguration expected;
            };
            const std::vector<Row> rows{{3, 24, c_nh(3, 1)},
                                        {4, 24, c_nh(4, 2)},
                                        {5, 20, c_nh(5, 2)},
                                        {6, 24, c_nh(6, 2)}};
            std::ostringstream out;
            out << "n,m,found_angles_over_2pi,matches_known_minimizer\n";
            bool all_ok = true;
            for (const Row& row : rows) {
                SearchSpace space;
                space.n = row.n;
                space.m = row.m;
                SearchReport rep = exhaustive_search(
                    space, 1.0, sampler_from_flags(t_p, t_trials, t_seed, "triangular"));
                bool ok = same_up_to_rotation(rep.best, row.expected, 1e-9);
                all_ok = all_ok && ok;
                out << row.n << ',' << row.m << ',';
                std::vector<double> angles = rep.best.sorted_angles();
                for (size_t i = 0; i < angles.size(); ++i)
                    out << (i ? ";" : "") << angles[i] / kTau;
                out << ',' << (ok ? "yes" : "NO") << '\n';
            }
            emit(t_out, command_line, t_seed, {{"minimizers.csv", out.str()}});
            if (!t_out.empty()) std::cout << out.str();
            return all_ok ? 0 : 1;
        }

        if (*verify_cmd) {
            std::vector<VerifyReport> reports;
            SamplerConfig sampler = sampler_from_flags(v_p, v_trials, v_seed, "triangular");
            auto target = [&]() {
                if (v_random_degree > 0) return random_disc_config(v_random_degree, v_seed);
                return config_from_flags(v_roots, v_family, v_n);
            };
            if (v_check == "inradius") {
                reports.push_back(verify_inradius_area(LevelSetSpec(target(), v_t), v_resolution,
                                                       sampler));
            } else if (v_check == "perimeter") {
                reports.push_back(
                    verify_perimeter_area(LevelSetSpec(target(), v_t), v_resolution, sampler, 0.05));
            } else if (v_check == "chain") {
                reports.push_back(
                    verify_area_chain(LevelSetSpec(target(), v_t), v_resolution, sampler, 0.10));
            } else if (v_check == "reflection") {
                reports.push_back(verify_reflection(target(), v_samples, v_seed));
            } else if (v_check == "signs") {
                RootConfiguration config = target();
                long long n = config.degree();
                int worst = 0;
                Rng rng(derive_seed(v_seed, 0x51f7));
                for (int i = 0; i < v_circles; ++i) {
                    Complex center = std::polar(0.5 * std::sqrt(rng.next_double()),
                                                kTau * rng.next_double());
                    double radius = 0.1 + 0.8 * rng.next_double();
                    bool clean = true;
                    for (const Root& r : config.roots())
                        if (std::abs(std::abs(r.location - center) - radius) <= 1e-6) clean = false;
                    if (!clean) continue;
                    worst = std::max(worst, sign_changes(config, v_t, center, radius,
                                                         std::max(512, 32 * static_cast<int>(n))));
                }
                VerifyReport rep;
                rep.check = "sign_changes";
                rep.lhs = worst;
                rep.rhs = 2.0 * static_cast<double>(n);
                rep.margin = rep.rhs - rep.lhs;
                rep.tolerance = 0.0;
                rep.pass = rep.margin >= 0.0;
                reports.push_back(rep);
            } else if (v_check == "pushing") {
                RootConfiguration config = target();
                PushResult pr = v_prob
                                    ? push_zeros_probabilistic(
                                          config, v_eps,
                                          v_L > 0 ? v_L
                                                  : 4 * static_cast<long long>(
                                                            std::ceil(6.0 / (v_eps * v_eps))),
                                          v_seed)
                                    : push_zeros_deterministic(config, v_eps);
                VerifyReport rep;
                rep.check = v_prob ? "pushing_probabilistic" : "pushing_deterministic";
                rep.lhs = pr.comparison_margin;
                rep.rhs = 0.0;
                rep.margin = pr.comparison_margin;
                rep.tolerance = 0.0;
                rep.pass = pr.comparison_margin >= 0.0;
                reports.push_back(rep);
            } else if (v_check == "crane") {
                int d = parse_monomial(v_inner);
                if (d < 1) throw CLI::ValidationError("--inner needs z^K with K >= 1");
                RootConfiguration outer = config_from_flags(v_roots, v_family, v_n);
                reports.push_back(verify_crane(RootConfiguration::monomial(d),
                                               LevelSetSpec(outer, v_t), sampler));
            } else {
                throw CLI::ValidationError("unknown check: " + v_check);
            }
            std::string json = io::verify_to_json(reports);
            emit(v_out, command_line, v_seed, {{"verify.json", json}});
            if (!v_out.empty()) std::cout << json;
            bool all_pass = true;
            for (const VerifyReport& r : reports) all_pass = all_pass && r.pass;
            return all_pass ? 0 : 1;
        }

        if (*cw) {
            WagnerParams params{cw_R, cw_tol, cw_alpha, cw_cap};
            WagnerResult result = wagner_polynomial(params);
            std::vector<VerifyReport> checks;
            {
                VerifyReport density;
                density.check = "density_bounds";
                double lo = result.measure.min_density(10000);
                double hi = result.measure.max_density(10000);
                density.lhs = lo;
                density.rhs = hi;
                density.margin = std::min(lo - 0.5, 1.5 - hi);
                density.tolerance = 1e-9;
                density.pass = density.margin >= -density.tolerance;
                checks.push_back(density);

                VerifyReport contain;
                contain.check = "level_set_inside_3D";
                double min_log = std::numeric_limits<double>::infinity();
                for (int k = 0; k < 1000; ++k)
                    min_log = std::min(min_log, log_abs_eval(result.config,
                                                             std::polar(3.0, kTau * k / 1000.0)));
                contain.lhs = min_log;
                contain.rhs = std::log(result.level);
                contain.margin = contain.lhs - contain.rhs;
                contain.tolerance = 0.0;
                contain.pass = contain.margin > 0.0;
                checks.push_back(contain);
            }
            std::ostringstream summary;
            summary << "R=" << cw_R << " N=" << result.N << " M=" << result.M
                    << " level=" << result.level << " A_ratio=" << result.A_ratio << '\n';
            emit(cw_out, command_line, 0,
                 {{"config.json", io::config_to_json(result.config)},
                  {"measure.json", io::measure_to_json(result.measure)},
                  {"verify.json", io::verify_to_json(checks)}});
            std::cout << summary.str();
            bool ok = checks[0].pass && checks[1].pass;
            return ok ? 0 : 1;
        }

        if (*cp) {
            RootConfiguration config =
                cp_random_degree > 0 ? random_disc_config(cp_random_degree, cp_seed)
                                     : config_from_flags(cp_roots, cp_family, cp_n);
            PushResult pr =
                cp_prob ? push_zeros_probabilistic(
                              config, cp_eps,
                              cp_L > 0 ? cp_L
                                       : 4 * static_cast<long long>(
                                                 std::ceil(6.0 / (cp_eps * cp_eps))),
                              cp_seed)
                        : push_zeros_deterministic(config, cp_eps, cp_ceil);
            VerifyReport rep;
            rep.check = cp_prob ? "pushing_probabilistic" : "pushing_deterministic";
            rep.lhs = pr.comparison_margin;
            rep.rhs = 0.0;
            rep.margin = pr.comparison_margin;
            rep.tolerance = 0.0;
            rep.pass = pr.comparison_margin >= 0.0;
            std::ostringstream summary;
            summary << "L=" << pr.L << " degree=" << pr.pushed.degree()
                    << " margin=" << pr.comparison_margin;
            if (cp_prob) summary << " failure_bound=" << pr.failure_bound;
            summary << '\n';
            emit(cp_out, command_line, cp_seed,
                 {{"config.json", io::config_to_json(pr.pushed)},
                  {"verify.json", io::verify_to_json({rep})}});
            std::cout << summary.str();
            return rep.pass || cp_prob ? 0 : 1;
        }

        if (*cf) {
            RootConfiguration config = named_family(family_kind_from_string(cf_kind), cf_n);
            std::string json = io::config_to_json(config);
            emit(cf_out, command_line, 0, {{"config.json", json}});
            if (!cf_out.empty()) std::cout << json;
            return 0;
        }

        if (*se) {
            SearchSpace space;
            space.n = se_n;
            space.m = se_m;
            space.symmetry = se_nosym ? Symmetry::None : Symmetry::ConjugateSymmetric;
            space.budget = se_budget;
            SearchReport rep = exhaustive_search(
                space, se_t, sampler_from_flags(se_p, se_trials, se_seed, "triangular"));
            std::vector<Output> outputs{
                {"report.json", io::report_to_json(rep, se_out.empty() ? "" : se_out + ".trace.csv")},
                {"trace.csv", io::trace_csv(rep.trace)}};
            if (se_svg)
                outputs.push_back({"winner.svg", contour_svg(LevelSetSpec(rep.best, se_t), 512)});
            emit(se_out, command_line, se_seed, outputs);
            std::cout << "evaluated=" << rep.evaluated << " best_area=" << rep.best_area.mean
                      << " +- " << rep.best_area.stddev << '\n';
            return 0;
        }

        if (*sl) {
            RootConfiguration init = config_from_flags(sl_init, "", 0);
            SearchReport rep = local_search(
                init, sl_t, sampler_from_flags(sl_p, sl_trials, sl_seed, "triangular"), sl_arc);
            emit(sl_out, command_line, sl_seed,
                 {{"report.json", io::report_to_json(rep, sl_out.empty() ? "" : sl_out + ".trace.csv")},
                  {"trace.csv", io::trace_csv(rep.trace)}});
            std::cout << "evaluated=" << rep.evaluated << " best_area=" << rep.best_area.mean
                      << " +- " << rep.best_area.stddev << '\n';
            return 0;
        }

        if (*sc) {
            std::vector<CnhRow> rows = cnh_sweep(
                sc_nmin, sc_nmax, sc_t, sampler_from_flags(sc_p, sc_trials, sc_seed, "triangular"));
            std::ostringstream csv;
            csv << "n,h,area_mean,area_std,is_best\n";
            for (const CnhRow& row : rows)
                for (size_t h = 1; h <= row.areas.size(); ++h)
                    csv << row.n << ',' << h << ',' << row.areas[h - 1] << ','
                        << row.stddevs[h - 1] << ','
                        << (static_cast<int>(h) == row.best_h ? 1 : 0) << '\n';
            emit(sc_out, command_line, sc_seed, {{"cnh.csv", csv.str()}});
            if (!sc_out.empty()) std::cout << csv.str();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
