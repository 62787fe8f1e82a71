#include "lemni/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lemni/parallel.hpp"
#include "lemni/rng.hpp"

namespace lemni {

namespace {

double max_root_modulus(const RootConfiguration& config) {
    double m = 0.0;
    for (const Root& r : config.roots()) m = std::max(m, std::abs(r.location));
    return m;
}

// Window that certifiably contains the lemniscate even for untagged configs:
// |p(z)| >= (|z| - max|w_k|)^n outside the root hull.
double window_radius_for(const LevelSetSpec& spec, double override_radius) {
    if (override_radius > 0.0) return override_radius;
    if (spec.config.tag() != ConstraintTag::None) return bounding_radius(spec);
    double n = static_cast<double>(spec.config.degree());
    return std::max(max_root_modulus(spec.config) + std::pow(spec.level, 1.0 / n), 1.05);
}

}  // namespace

GridMask build_grid_mask(const LevelSetSpec& spec, int resolution, double window_radius) {
    if (resolution < 64) throw std::invalid_argument("build_grid_mask: resolution >= 64 required");
    GridMask mask;
    mask.resolution = resolution;
    mask.window_radius = window_radius;
    mask.bits.assign(static_cast<size_t>(resolution) * resolution, 0);
    const double h = mask.cell_size();
    const double log_t = std::log(spec.level);
    parallel_for(resolution, [&](long long row) {
        double y = -window_radius + (static_cast<double>(row) + 0.5) * h;
        std::uint8_t* out = &mask.bits[static_cast<size_t>(row) * resolution];
        for (int col = 0; col < resolution; ++col) {
            double x = -window_radius + (col + 0.5) * h;
            out[col] = log_abs_eval(spec.config, Complex(x, y)) < log_t ? 1 : 0;
        }
    });
    return mask;
}

namespace {

// Felzenszwalb-Huttenlocher 1D squared distance transform (parabolic envelope)
void edt_1d(const std::vector<double>& f, std::vector<double>& d, int n) {
    static thread_local std::vector<int> v;
    static thread_local std::vector<double> z;
    v.assign(n, 0);
    z.assign(n + 1, 0.0);
    int k = 0;
    v[0] = 0;
    z[0] = -std::numeric_limits<double>::infinity();
    z[1] = std::numeric_limits<double>::infinity();
    for (int q = 1; q < n; ++q) {
        if (!std::isfinite(f[q]) && f[q] > 0) continue;  // +inf sources never win
        double s;
        while (true) {
            int p = v[k];
            s = ((f[q] + q * (double)q) - (f[p] + p * (double)p)) / (2.0 * (q - p));
            if (s <= z[k]) {
                --k;
            } else {
                break;
            }
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = std::numeric_limits<double>::infinity();
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        double dq = q - (double)v[k];
        d[q] = dq * dq + f[v[k]];
    }
}

// squared distance of every cell to the nearest zero cell of the mask
std::vector<double> squared_edt(const GridMask& mask) {
    const int n = mask.resolution;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < dist.size(); ++i) dist[i] = mask.bits[i] ? inf : 0.0;

    // columns
    parallel_for(n, [&](long long col) {
        std::vector<double> f(n), d(n);
        for (int row = 0; row < n; ++row) f[row] = dist[static_cast<size_t>(row) * n + col];
        bool any_source = false;
        for (int row = 0; row < n; ++row) any_source |= (f[row] == 0.0);
        if (!any_source) return;  // column stays +inf
        edt_1d(f, d, n);
        for (int row = 0; row < n; ++row) dist[static_cast<size_t>(row) * n + col] = d[row];
    });
    // rows
    parallel_for(n, [&](long long row) {
        std::vector<double> f(n), d(n);
        bool all_inf = true;
        for (int col = 0; col < n; ++col) {
            f[col] = dist[static_cast<size_t>(row) * n + col];
            all_inf &= !std::isfinite(f[col]);
        }
        if (all_inf) return;
        // clamp +inf columns so the envelope stays finite
        double big = 4.0 * (double)n * n;
        for (int col = 0; col < n; ++col)
            if (!std::isfinite(f[col])) f[col] = big;
        edt_1d(f, d, n);
        for (int col = 0; col < n; ++col) dist[static_cast<size_t>(row) * n + col] = d[col];
    });
    return dist;
}

}  // namespace

double inradius_estimate(const LevelSetSpec& spec, int resolution, double window_radius_override) {
    if (resolution < 128) throw std::invalid_argument("inradius_estimate: resolution >= 128");
    const double window = window_radius_for(spec, window_radius_override);
    GridMask mask = build_grid_mask(spec, resolution, window);
    bool empty = true;
    for (std::uint8_t b : mask.bits)
        if (b) { empty = false; break; }
    if (empty) return 0.0;
    std::vector<double> d2 = squared_edt(mask);
    double best = 0.0;
    for (size_t i = 0; i < d2.size(); ++i)
        if (mask.bits[i]) best = std::max(best, d2[i]);
    return std::sqrt(best) * mask.cell_size();
}

std::vector<std::pair<Complex, Complex>> contour_segments(const LevelSetSpec& spec, int resolution,
                                                          double window_radius_override) {
    if (resolution < 128) throw std::invalid_argument("contour: resolution >= 128");
    const double window = window_radius_for(spec, window_radius_override);
    const int n = resolution + 1;  // grid nodes
    const double h = 2.0 * window / resolution;
    const double log_t = std::log(spec.level);

    std::vector<double> f(static_cast<size_t>(n) * n);
    parallel_for(n, [&](long long row) {
        double y = -window + static_cast<double>(row) * h;
        for (int col = 0; col < n; ++col) {
            double x = -window + col * h;
            double v = log_abs_eval(spec.config, Complex(x, y)) - log_t;
            // nudge exact zeros off the contour so interpolation stays finite
            f[static_cast<size_t>(row) * n + col] = (v == 0.0) ? -1e-300 : v;
        }
    });

    std::vector<std::vector<std::pair<Complex, Complex>>> per_row(resolution);
    parallel_for(resolution, [&](long long row) {
        auto& segs = per_row[row];
        auto node = [&](int r, int c) { return f[static_cast<size_t>(r) * n + c]; };
        auto point = [&](int r, int c) {
            return Complex(-window + c * h, -window + r * h);
        };
        for (int col = 0; col < resolution; ++col) {
            // corners: bl=(row,col) br=(row,col+1) tr=(row+1,col+1) tl=(row+1,col)
            double bl = node(row, col), br = node(row, col + 1);
            double tr = node(row + 1, col + 1), tl = node(row + 1, col);
            int code = (bl < 0 ? 1 : 0) | (br < 0 ? 2 : 0) | (tr < 0 ? 4 : 0) | (tl < 0 ? 8 : 0);
            if (code == 0 || code == 15) continue;
            auto lerp = [](Complex a, Complex b, double fa, double fb) {
                double t = fa / (fa - fb);
                return a + t * (b - a);
            };
            Complex pbl = point(row, col), pbr = point(row, col + 1);
            Complex ptr = point(row + 1, col + 1), ptl = point(row + 1, col);
            Complex bottom = lerp(pbl, pbr, bl, br);
            Complex right = lerp(pbr, ptr, br, tr);
            Complex top = lerp(ptl, ptr, tl, tr);
            Complex left = lerp(pbl, ptl, bl, tl);
            switch (code) {
                case 1: case 14: segs.emplace_back(left, bottom); break;
                case 2: case 13: segs.emplace_back(bottom, right); break;
                case 3: case 12: segs.emplace_back(left, right); break;
                case 4: case 11: segs.emplace_back(right, top); break;
                case 6: case 9: segs.emplace_back(bottom, top); break;
                case 7: case 8: segs.emplace_back(left, top); break;
                case 5: case 10: {
                    // saddle: midpoint-value rule (deterministic)
                    double center = 0.25 * (bl + br + tr + tl);
                    bool center_in = center < 0;
                    if ((code == 5) == center_in) {
                        segs.emplace_back(left, top);
                        segs.emplace_back(bottom, right);
                    } else {
                        segs.emplace_back(left, bottom);
                        segs.emplace_back(right, top);
                    }
                    break;
                }
                default: break;
            }
        }
    });
    std::vector<std::pair<Complex, Complex>> segs;
    for (auto& v : per_row) segs.insert(segs.end(), v.begin(), v.end());
    return segs;
}

double perimeter_estimate(const LevelSetSpec& spec, int resolution, double window_radius_override) {
    auto segs = contour_segments(spec, resolution, window_radius_override);
    if (segs.empty())
        throw std::runtime_error("perimeter_estimate: no contour found at this resolution");
    double total = 0.0;
    for (const auto& [a, b] : segs) total += std::abs(b - a);
    return total;
}

std::vector<std::vector<Complex>> contour_loops(const LevelSetSpec& spec, int resolution,
                                                double window_radius_override) {
    auto segs = contour_segments(spec, resolution, window_radius_override);
    const double window = window_radius_for(spec, window_radius_override);
    const double q = resolution / (2.0 * window) * 8.0;  // quantization for endpoint matching
    auto key = [&](Complex z) {
        return std::pair<long long, long long>(llround((z.real() + window) * q),
                                               llround((z.imag() + window) * q));
    };
    // segments shorter than the quantum (both endpoints in one bucket) are
    // marching-squares slivers from near-node crossings; they cannot chain
    // and contribute nothing visible, so drop them up front
    segs.erase(std::remove_if(segs.begin(), segs.end(),
                              [&](const auto& s) { return key(s.first) == key(s.second); }),
               segs.end());
    std::map<std::pair<long long, long long>, std::vector<size_t>> by_start;
    for (size_t i = 0; i < segs.size(); ++i) {
        by_start[key(segs[i].first)].push_back(i);
        by_start[key(segs[i].second)].push_back(i);
    }
    std::vector<bool> used(segs.size(), false);
    std::vector<std::vector<Complex>> loops;
    for (size_t i = 0; i < segs.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        std::vector<Complex> loop{segs[i].first, segs[i].second};
        Complex cur = segs[i].second;
        while (true) {
            auto it = by_start.find(key(cur));
            size_t next = SIZE_MAX;
            if (it != by_start.end()) {
                for (size_t j : it->second)
                    if (!used[j]) { next = j; break; }
            }
            if (next == SIZE_MAX) break;
            used[next] = true;
            Complex other = key(segs[next].first) == key(cur) ? segs[next].second : segs[next].first;
            loop.push_back(other);
            cur = other;
            if (key(cur) == key(loop.front())) break;
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

std::string contour_svg(const LevelSetSpec& spec, int resolution, double window_radius_override) {
    const double window = window_radius_for(spec, window_radius_override);
    auto loops = contour_loops(spec, resolution, window);
    const double scale = 400.0 / window;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    for (const auto& loop : loops) {
        svg << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"1\" d=\"";
        for (size_t i = 0; i < loop.size(); ++i) {
            svg << (i == 0 ? 'M' : 'L') << (loop[i].real() + window) * scale << ' '
                << (window - loop[i].imag()) * scale << ' ';
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

}  // namespace

int component_count(const LevelSetSpec& spec, int resolution, double window_radius_override) {
    if (resolution < 128) throw std::invalid_argument("component_count: resolution >= 128");
    const double window = window_radius_for(spec, window_radius_override);
    GridMask mask = build_grid_mask(spec, resolution, window);
    const int n = resolution;
    UnionFind uf(n * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (!mask.at(r, c)) continue;
            if (c + 1 < n && mask.at(r, c + 1)) uf.unite(r * n + c, r * n + c + 1);
            if (r + 1 < n && mask.at(r + 1, c)) uf.unite(r * n + c, (r + 1) * n + c);
        }
    }
    int count = 0;
    for (int i = 0; i < n * n; ++i)
        if (mask.bits[i] && uf.find(i) == i) ++count;
    return count;
}

std::vector<double> ArcList::lengths() const {
    std::vector<double> out;
    out.reserve(arcs.size());
    for (const auto& [a, b] : arcs) out.push_back(b - a);
    return out;
}

double ArcList::total_length() const {
    double t = 0.0;
    for (const auto& [a, b] : arcs) t += b - a;
    return t;
}

ArcList circle_arc_intersections(const LevelSetSpec& spec, int angular_samples,
                                 double bisection_tol) {
    const long long min_samples = 8 * spec.config.degree();
    if (angular_samples < min_samples)
        throw std::invalid_argument("circle_arc_intersections: angular_samples >= 8*degree");
    const double log_t = std::log(spec.level);
    auto g = [&](double theta) {
        return log_abs_eval(spec.config, Complex(std::cos(theta), std::sin(theta))) - log_t;
    };

    const int K = angular_samples;
    std::vector<bool> in(K);
    for (int k = 0; k < K; ++k) in[k] = g(kTau * k / K) < 0.0;

    bool any_in = false, any_out = false;
    for (bool b : in) (b ? any_in : any_out) = true;
    ArcList result;
    if (!any_in) return result;
    if (!any_out) {
        result.arcs.emplace_back(0.0, kTau);
        return result;
    }

    auto refine = [&](double lo, double hi) {
        // g(lo), g(hi) have opposite membership; bisect to the crossing
        bool lo_in = g(lo) < 0.0;
        while (hi - lo > bisection_tol) {
            double mid = 0.5 * (lo + hi);
            if ((g(mid) < 0.0) == lo_in)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    // walk the circle; collect (entry, exit) pairs
    std::vector<double> entries, exits;
    for (int k = 0; k < K; ++k) {
        int next = (k + 1) % K;
        if (in[k] != in[next]) {
            double cross = refine(kTau * k / K, kTau * (k + 1) / K);
            if (!in[k])
                entries.push_back(cross);
            else
                exits.push_back(cross);
        }
    }
    // pair each entry with the first exit after it
    std::sort(entries.begin(), entries.end());
    std::sort(exits.begin(), exits.end());
    for (double e : entries) {
        auto it = std::upper_bound(exits.begin(), exits.end(), e);
        double x = (it == exits.end()) ? exits.front() + kTau : *it;
        result.arcs.emplace_back(e, x);
    }
    std::sort(result.arcs.begin(), result.arcs.end());
    return result;
}

int sign_changes(const RootConfiguration& config, double t, Complex center, double radius,
                 int angular_samples) {
    if (!(t > 0.0)) throw std::invalid_argument("sign_changes: t > 0 required");
    for (const Root& r : config.roots()) {
        if (std::abs(std::abs(r.location - center) - radius) <= 1e-9)
            throw std::domain_error("sign_changes: root on (or too near) the circle");
    }
    const double log_t = std::log(t);
    const double zero_tol = 1e-12 * std::max<double>(1, config.degree());
    int changes = 0;
    int prev = 0, first = 0;
    for (int k = 0; k < angular_samples; ++k) {
        double theta = kTau * k / angular_samples;
        double h = log_abs_eval(config, center + radius * Complex(std::cos(theta), std::sin(theta))) -
                   log_t;
        int s = (h > zero_tol) ? 1 : (h < -zero_tol ? -1 : 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        if (first == 0) first = s;
        prev = s;
    }
    if (prev != 0 && first != 0 && prev != first) ++changes;  // wrap-around
    return changes;
}

namespace {

// sup of |f| on [0, 2pi) via dense grid plus golden-section refinement of the
// bracket around the grid argmax
double sup_on_circle(const std::function<double(double)>& f, int grid) {
    double best = -std::numeric_limits<double>::infinity();
    int best_k = 0;
    for (int k = 0; k < grid; ++k) {
        double v = f(kTau * k / grid);
        if (v > best) {
            best = v;
            best_k = k;
        }
    }
    double lo = kTau * (best_k - 1) / grid;
    double hi = kTau * (best_k + 1) / grid;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    return std::max({best, f1, f2});
}

}  // namespace

double doubling_exponent(const RootConfiguration& config, double shrink, int grid) {
    if (config.tag() != ConstraintTag::UnitCircle)
        throw std::invalid_argument("doubling_exponent: configuration must be on the unit circle");
    if (!(shrink > 0.0 && shrink < 1.0))
        throw std::invalid_argument("doubling_exponent: 0 < shrink < 1 required");
    auto v = [&](double r, double theta) {
        return log_abs_eval(config, shrink * r * Complex(std::cos(theta), std::sin(theta)));
    };
    // |v| is subharmonic where v is harmonic (no roots inside shrink*D), so
    // both suprema live on the bounding circles
    double sup_full = sup_on_circle([&](double th) { return std::abs(v(1.0, th)); }, grid);
    double sup_half = sup_on_circle([&](double th) { return std::abs(v(0.5, th)); }, grid);
    return std::log(sup_full / sup_half);
}

double discrepancy(const RootConfiguration& config) {
    if (config.tag() != ConstraintTag::UnitCircle)
        throw std::invalid_argument("discrepancy: configuration must be on the unit circle");
    // unique angles with masses
    std::vector<std::pair<double, double>> atoms;  // (angle in [0,2pi), mass)
    const double n = static_cast<double>(config.degree());
    {
        std::vector<std::pair<double, double>> raw;
        for (const Root& r : config.roots()) {
            double a = std::arg(r.location);
            if (a < 0) a += kTau;
            if (a >= kTau) a -= kTau;
            raw.emplace_back(a, r.multiplicity / n);
        }
        std::sort(raw.begin(), raw.end());
        for (const auto& [a, w] : raw) {
            if (!atoms.empty() && std::abs(atoms.back().first - a) < 1e-15)
                atoms.back().second += w;
            else
                atoms.emplace_back(a, w);
        }
    }
    const int m = static_cast<int>(atoms.size());
    // candidate endpoint events: angle value with a side (-0 includes the
    // atom when used as a left endpoint; +0 excludes it), plus 0 and 2pi
    struct Event {
        double angle;
        int side;  // -1: just below atom, +1: just above atom, 0: domain endpoint
        int atom;  // index, or -1
    };
    std::vector<Event> events;
    events.push_back({0.0, 0, -1});
    events.push_back({kTau, 0, -1});
    for (int i = 0; i < m; ++i) {
        events.push_back({atoms[i].first, -1, i});
        events.push_back({atoms[i].first, +1, i});
    }
    std::vector<double> prefix(m + 1, 0.0);
    for (int i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + atoms[i].second;
    // mass of open arc (alpha, beta): atoms strictly inside, where "inside"
    // depends on the limit side of each endpoint
    auto first_at_or_after = [&](double angle) {
        return static_cast<int>(std::lower_bound(atoms.begin(), atoms.end(),
                                                 std::make_pair(angle, -1.0)) -
                                atoms.begin());
    };
    auto mass_open = [&](const Event& a, const Event& b) {
        int lo = first_at_or_after(a.angle);
        // side -1 means alpha sits just below its atom, so that atom counts
        if (a.side != -1 && lo < m && atoms[lo].first == a.angle) ++lo;
        int hi = first_at_or_after(b.angle);
        // side +1 means beta sits just above its atom, so that atom counts
        if (b.side == +1 && hi < m && atoms[hi].first == b.angle) ++hi;
        if (hi <= lo) return 0.0;
        return prefix[hi] - prefix[lo];
    };
    double best = 0.0;
    for (const Event& a : events) {
        for (const Event& b : events) {
            if (b.angle < a.angle || (b.angle == a.angle && !(a.side < b.side))) continue;
            if (a.atom >= 0 && a.atom == b.atom) continue;  // degenerate punctual arc
            double len = (b.angle - a.angle) / kTau;
            double mass = mass_open(a, b);
            best = std::max(best, std::abs(mass - len));
        }
    }
    return best;
}

VerifyReport verify_inradius_area(const LevelSetSpec& spec, int resolution,
                                  const SamplerConfig& sampler) {
    VerifyReport rep;
    rep.check = "inradius_area";
    double rho = inradius_estimate(spec, resolution);
    AreaEstimate area = estimate_area(spec, sampler);
    double n = static_cast<double>(spec.config.degree());
    rep.lhs = rho;
    rep.rhs = std::sqrt(std::max(area.mean, 0.0)) / (72.0 * kPi * std::sqrt(kPi) * n);
    rep.margin = rep.lhs - rep.rhs;
    double window = window_radius_for(spec, 0.0);
    double cell = 2.0 * window / resolution;
    rep.tolerance = 2.0 * cell * std::sqrt(2.0);
    rep.pass = rep.margin >= -rep.tolerance;
    return rep;
}

VerifyReport verify_reflection(const RootConfiguration& config, long long samples,
                               std::uint64_t seed) {
    VerifyReport rep;
    rep.check = "reflection";
    Rng rng(derive_seed(seed, 0xf1ec7));
    long long violations = 0;
    for (long long i = 0; i < samples; ++i) {
        double r = rng.next_double();
        if (r <= 0.0 || r >= 1.0) continue;
        double theta = kTau * rng.next_double();
        Complex dir(std::cos(theta), std::sin(theta));
        double inner = log_abs_eval(config, r * dir);
        double outer = log_abs_eval(config, (2.0 - r) * dir);
        if (inner > outer + 1e-12) ++violations;
    }
    rep.lhs = static_cast<double>(violations);
    rep.rhs = 0.0;
    rep.margin = -rep.lhs;
    rep.tolerance = 0.0;
    rep.pass = violations == 0;
    return rep;
}

VerifyReport verify_perimeter_area(const LevelSetSpec& spec, int resolution,
                                   const SamplerConfig& sampler, double rel_tolerance) {
    VerifyReport rep;
    rep.check = "perimeter_area";
    double L = perimeter_estimate(spec, resolution);
    AreaEstimate area = estimate_area(spec, sampler);
    double n = static_cast<double>(spec.config.degree());
    rep.lhs = L;
    rep.rhs = 4.0 * n * std::sqrt(kPi) * std::sqrt(std::max(area.mean, 0.0));
    rep.margin = rep.rhs - rep.lhs;  // want L <= bound
    rep.tolerance = rel_tolerance * rep.rhs;
    rep.pass = rep.margin >= -rep.tolerance;
    return rep;
}

VerifyReport verify_area_chain(const LevelSetSpec& spec, int resolution,
                               const SamplerConfig& sampler, double rel_tolerance) {
    VerifyReport rep;
    rep.check = "area_inradius_perimeter";
    double rho = inradius_estimate(spec, resolution);
    double L = perimeter_estimate(spec, resolution);
    AreaEstimate area = estimate_area(spec, sampler);
    rep.lhs = area.mean;
    rep.rhs = 18.0 * kPi * rho * L;
    rep.margin = rep.rhs - rep.lhs;  // want A <= 18 pi rho L
    rep.tolerance = rel_tolerance * rep.rhs;
    rep.pass = rep.margin >= -rep.tolerance;
    return rep;
}

VerifyReport verify_crane(const RootConfiguration& inner_q, const LevelSetSpec& outer_spec,
                          const SamplerConfig& sampler) {
    VerifyReport rep;
    rep.check = "crane_composition";
    RootConfiguration composed = compose_with_generator(inner_q, outer_spec.config);
    LevelSetSpec composed_spec(composed, outer_spec.level);

    SamplerConfig inner_cfg = sampler;
    double deg = static_cast<double>(composed.degree());
    inner_cfg.bounding_radius_override =
        std::max(max_root_modulus(composed) + std::pow(outer_spec.level, 1.0 / deg), 1.05);
    AreaEstimate composed_area = estimate_area(composed_spec, inner_cfg);
    AreaEstimate outer_area = estimate_area(outer_spec, sampler);

    double d = static_cast<double>(inner_q.degree());
    double sigma = std::hypot(composed_area.stddev, outer_area.stddev);
    rep.lhs = composed_area.mean;
    rep.rhs = kPi * std::pow(std::max(outer_area.mean, 0.0) / kPi, 1.0 / d) + 4.0 * sigma;
    rep.margin = rep.rhs - rep.lhs;  // want m(composed) <= bound
    rep.tolerance = 0.0;
    rep.pass = rep.margin >= 0.0;
    return rep;
}

}  // namespace lemni
