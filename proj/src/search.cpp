#include "lemni/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lemni/parallel.hpp"

namespace lemni {

std::string to_string(Symmetry s) {
    return s == Symmetry::ConjugateSymmetric ? "conjugate-symmetric" : "none";
}

Symmetry symmetry_from_string(const std::string& s) {
    if (s == "conjugate-symmetric") return Symmetry::ConjugateSymmetric;
    if (s == "none") return Symmetry::None;
    throw std::invalid_argument("unknown symmetry: " + s);
}

namespace {

struct Candidate {
    long long id = 0;
    std::vector<Root> roots;
    std::vector<double> angles_over_2pi;  // sorted, with multiplicity
    int q = 0, s = 0, r = 0;
};

struct Score {
    double mean = 0.0;
    double stddev = 0.0;
};

// shared common-random-number point sets, one per trial
std::vector<std::vector<Complex>> shared_points(const SamplerConfig& sampler, double radius) {
    std::vector<std::vector<Complex>> pts(sampler.trials);
    for (int t = 0; t < sampler.trials; ++t) pts[t] = lattice_points(sampler, radius, t);
    return pts;
}

Score score_candidate(const std::vector<Root>& roots, double log_t,
                      const std::vector<std::vector<Complex>>& points, double radius) {
    const double disc_area = kPi * radius * radius;
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& pts : points) {
        long long hits = 0;
        for (Complex z : pts) {
            double acc = 0.0;
            for (const Root& r : roots)
                acc += static_cast<double>(r.multiplicity) * std::log(std::abs(z - r.location));
            if (acc < log_t) ++hits;
        }
        double a = disc_area * static_cast<double>(hits) / static_cast<double>(pts.size());
        sum += a;
        sum_sq += a * a;
    }
    double mean = sum / points.size();
    double var = std::max(0.0, sum_sq / points.size() - mean * mean);
    return {mean, std::sqrt(var)};
}

std::vector<double> sorted_angle_list(const std::vector<Root>& roots) {
    std::vector<double> out;
    for (const Root& r : roots) {
        double a = std::arg(r.location) / kTau;
        if (a < 0.0) a += 1.0;
        for (long long k = 0; k < r.multiplicity; ++k) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (long long i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result < 0 || result > (1LL << 50)) return 1LL << 50;  // saturate
    }
    return result;
}

// visits every k-combination of {0..pool-1} in lexicographic order
template <class F>
void for_each_combination(int pool, int k, F f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0) {
        f(idx);
        return;
    }
    if (k > pool) return;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == pool - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Candidate make_symmetric_candidate(int q, int s, const std::vector<int>& grid_js, int m) {
    Candidate c;
    c.q = q;
    c.s = s;
    c.r = static_cast<int>(grid_js.size());
    if (q > 0) c.roots.push_back({Complex(1.0, 0.0), q});
    if (s > 0) c.roots.push_back({Complex(-1.0, 0.0), s});
    for (int j : grid_js) {
        double theta = kPi * j / m;
        c.roots.push_back({std::polar(1.0, theta), 1});
        c.roots.push_back({std::polar(1.0, -theta), 1});
    }
    c.angles_over_2pi = sorted_angle_list(c.roots);
    return c;
}

struct Best {
    bool set = false;
    Score score;
    Candidate cand;

    // smaller mean wins; exact ties go to the lexicographically smaller
    // sorted angle list
    void offer(const Score& sc, const Candidate& c) {
        if (!set || sc.mean < score.mean ||
            (sc.mean == score.mean && c.angles_over_2pi < cand.angles_over_2pi)) {
            set = true;
            score = sc;
            cand = c;
        }
    }
};

}  // namespace

SearchReport exhaustive_search(const SearchSpace& space, double level,
                               const SamplerConfig& sampler) {
    if (space.n < 1 || space.m < 2) throw std::invalid_argument("exhaustive_search: bad space");
    if (!(level > 0.0)) throw std::invalid_argument("exhaustive_search: level > 0 required");

    // candidate count guard
    long long count = 0;
    const int n = space.n, m = space.m;
    if (space.symmetry == Symmetry::ConjugateSymmetric) {
        for (int q = space.anchor_one ? 1 : 0; q <= n; ++q)
            for (int s = 0; q + s <= n; ++s) {
                int rem = n - q - s;
                if (rem % 2) continue;
                count += binomial(m - 1, rem / 2);
            }
    } else {
        count = space.anchor_one ? binomial(m - 1, n - 1) : binomial(m, n);
    }
    if (count > space.budget)
        throw std::runtime_error("exhaustive_search: " + std::to_string(count) +
                                 " candidates exceed the budget of " +
                                 std::to_string(space.budget));
    if (count == 0) throw std::runtime_error("exhaustive_search: empty candidate space");

    const double radius = std::max(1.0 + std::pow(level, 1.0 / n), 1.05);
    const double log_t = std::log(level);
    const auto points = shared_points(sampler, radius);

    // materialize candidates (the budget guard keeps this desk-scale), then
    // evaluate in parallel
    std::vector<Candidate> cands;
    cands.reserve(static_cast<size_t>(count));
    long long id = 0;
    if (space.symmetry == Symmetry::ConjugateSymmetric) {
        for (int q = space.anchor_one ? 1 : 0; q <= n; ++q)
            for (int s = 0; q + s <= n; ++s) {
                int rem = n - q - s;
                if (rem % 2) continue;
                for_each_combination(m - 1, rem / 2, [&](const std::vector<int>& idx) {
                    std::vector<int> js(idx.size());
                    for (size_t i = 0; i < idx.size(); ++i) js[i] = idx[i] + 1;
                    Candidate c = make_symmetric_candidate(q, s, js, m);
                    c.id = id++;
                    cands.push_back(std::move(c));
                });
            }
    } else {
        int pool = space.anchor_one ? m - 1 : m;
        int pick = space.anchor_one ? n - 1 : n;
        for_each_combination(pool, pick, [&](const std::vector<int>& idx) {
            Candidate c;
            if (space.anchor_one) c.roots.push_back({Complex(1.0, 0.0), 1});
            for (int i : idx) {
                int k = space.anchor_one ? i + 1 : i;
                c.roots.push_back({std::polar(1.0, kTau * k / m), 1});
            }
            for (const Root& r : c.roots) {
                if (std::abs(r.location - Complex(1.0, 0.0)) < 1e-12) c.q += 1;
                if (std::abs(r.location - Complex(-1.0, 0.0)) < 1e-12) c.s += 1;
            }
            c.r = n - c.q - c.s;
            c.angles_over_2pi = sorted_angle_list(c.roots);
            c.id = id++;
            cands.push_back(std::move(c));
        });
    }

    std::vector<Score> scores(cands.size());
    parallel_for(static_cast<long long>(cands.size()),
                 [&](long long i) { scores[i] = score_candidate(cands[i].roots, log_t, points, radius); });

    Best best;
    for (size_t i = 0; i < cands.size(); ++i) best.offer(scores[i], cands[i]);

    SearchReport report{RootConfiguration(best.cand.roots, ConstraintTag::UnitCircle),
                        AreaEstimate{},
                        static_cast<long long>(cands.size()),
                        {},
                        {},
                        sampler.seed};
    for (size_t i = 0; i < cands.size(); ++i) {
        report.trace.push_back({cands[i].id, cands[i].angles_over_2pi, cands[i].q, cands[i].s,
                                cands[i].r, scores[i].mean, scores[i].stddev});
        double combined = std::hypot(scores[i].stddev, best.score.stddev);
        if (cands[i].id != best.cand.id &&
            std::abs(scores[i].mean - best.score.mean) <= combined)
            report.ties.push_back(cands[i].angles_over_2pi);
    }
    SamplerConfig fine = sampler;
    fine.target_points *= 10;
    report.best_area = estimate_area(LevelSetSpec(report.best, level), fine);
    return report;
}

SearchReport local_search(const RootConfiguration& initial, double level,
                          const SamplerConfig& sampler, int arc_discretization) {
    if (initial.tag() != ConstraintTag::UnitCircle)
        throw std::invalid_argument("local_search: initial roots must lie on the unit circle");
    if (arc_discretization < 2)
        throw std::invalid_argument("local_search: arc_discretization >= 2 required");
    if (!(level > 0.0)) throw std::invalid_argument("local_search: level > 0 required");

    std::vector<double> angles = initial.sorted_angles();  // ascending, with multiplicity
    const int n = static_cast<int>(angles.size());
    const double radius = std::max(1.0 + std::pow(level, 1.0 / n), 1.05);
    const double log_t = std::log(level);
    const auto points = shared_points(sampler, radius);

    auto roots_of = [](const std::vector<double>& a) {
        std::vector<Root> roots;
        for (double th : a) roots.push_back({std::polar(1.0, th), 1});
        return roots;
    };
    auto score_of = [&](const std::vector<double>& a) {
        return score_candidate(roots_of(a), log_t, points, radius);
    };

    Score current = score_of(angles);
    long long evaluated = 1, move_id = 0;
    SearchReport report{RootConfiguration(roots_of(angles), ConstraintTag::UnitCircle),
                        AreaEstimate{},
                        0,
                        {},
                        {},
                        sampler.seed};
    auto record = [&](const std::vector<double>& a, const Score& sc) {
        std::vector<double> over(a.begin(), a.end());
        for (double& v : over) v /= kTau;
        std::sort(over.begin(), over.end());
        report.trace.push_back({move_id++, over, 0, 0, 0, sc.mean, sc.stddev});
    };
    record(angles, current);

    for (int cycle = 0; cycle < 100 && n > 1; ++cycle) {
        bool moved = false;
        for (int k = 1; k < n; ++k) {
            double lo = angles[k - 1];
            double hi = (k + 1 < n) ? angles[k + 1] : angles[0] + kTau;
            Score best_sc = current;
            double best_angle = angles[k];
            // open arc: the endpoints themselves would merge the root into a
            // neighbor, and under noise that ties with mirror configurations
            for (int d = 0; d < arc_discretization; ++d) {
                double cand = lo + (hi - lo) * (d + 1) / (arc_discretization + 1);
                std::vector<double> trial = angles;
                trial[k] = std::fmod(cand, kTau);
                std::sort(trial.begin(), trial.end());
                Score sc = score_of(trial);
                ++evaluated;
                // a move must beat the incumbent by more than the combined
                // trial noise, otherwise near-ties (e.g. mirror-symmetric
                // configurations of equal true area) would be accepted on
                // sampling noise alone
                if (sc.mean < best_sc.mean - std::hypot(sc.stddev, best_sc.stddev)) {
                    best_sc = sc;
                    best_angle = std::fmod(cand, kTau);
                }
            }
            if (best_angle != angles[k]) {
                angles[k] = best_angle;
                std::sort(angles.begin(), angles.end());
                current = best_sc;
                moved = true;
                record(angles, current);
            }
        }
        if (!moved) break;
    }

    report.best = RootConfiguration(roots_of(angles), ConstraintTag::UnitCircle);
    report.evaluated = evaluated;
    SamplerConfig fine = sampler;
    fine.target_points *= 10;
    report.best_area = estimate_area(LevelSetSpec(report.best, level), fine);
    return report;
}

std::vector<CnhRow> cnh_sweep(int n_min, int n_max, double level, const SamplerConfig& sampler) {
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("cnh_sweep: bad range");
    std::vector<CnhRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        CnhRow row;
        row.n = n;
        const double radius = std::max(1.0 + std::pow(level, 1.0 / n), 1.05);
        const double log_t = std::log(level);
        const auto points = shared_points(sampler, radius);
        for (int h = 1; h <= n; ++h) {
            std::vector<Root> roots;
            roots.push_back({std::polar(1.0, kPi * (h - 1) / n), h});
            for (int k = h; k < n; ++k) roots.push_back({std::polar(1.0, kTau * k / n), 1});
            Score sc = score_candidate(roots, log_t, points, radius);
            row.areas.push_back(sc.mean);
            row.stddevs.push_back(sc.stddev);
        }
        row.best_h = static_cast<int>(std::min_element(row.areas.begin(), row.areas.end()) -
                                      row.areas.begin()) +
                     1;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace lemni
