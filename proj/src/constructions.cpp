#include "lemni/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lemni/parallel.hpp"
#include "lemni/rng.hpp"

namespace lemni {

namespace {

void require_roots_in_disc(const RootConfiguration& config) {
    for (const Root& r : config.roots())
        if (std::abs(r.location) > 1.0 + 1e-12)
            throw std::invalid_argument("zero-pushing: all roots must lie in the closed unit disc");
}

// min over the polar grid of the (1-eps)-scaled closed disc of
// (1/L) log|q| - log|p|; grid points that hit a root of p contribute +inf
// and are skipped
double grid_margin(const RootConfiguration& p, const RootConfiguration& q, long long L,
                   double eps, int radial_grid, int angular_grid) {
    const double rmax = 1.0 - eps;
    std::vector<double> row_min(radial_grid, std::numeric_limits<double>::infinity());
    parallel_for(radial_grid, [&](long long i) {
        double r = radial_grid == 1 ? rmax : rmax * static_cast<double>(i) / (radial_grid - 1);
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < angular_grid; ++j) {
            double theta = kTau * j / angular_grid;
            Complex z = r * Complex(std::cos(theta), std::sin(theta));
            double lp = log_abs_eval(p, z);
            if (!std::isfinite(lp)) continue;  // z is a root of p; inequality trivial there
            double lq = log_abs_eval(q, z);
            best = std::min(best, lq / static_cast<double>(L) - lp);
        }
        row_min[i] = best;
    });
    return *std::min_element(row_min.begin(), row_min.end());
}

Complex unit(Complex z) { return z / std::abs(z); }

}  // namespace

PushResult push_zeros_deterministic(const RootConfiguration& config, double epsilon, bool round_up,
                                    int radial_grid, int angular_grid) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("push_zeros_deterministic: 0 < eps < 1 required");
    require_roots_in_disc(config);
    const double raw = 6.0 / (epsilon * epsilon);
    const long long L = round_up ? static_cast<long long>(std::ceil(raw))
                                 : static_cast<long long>(std::floor(raw));
    std::vector<Root> pushed;
    for (const Root& r : config.roots()) {
        const Complex w = r.location;
        if (std::abs(w) > 1.0 - epsilon) {
            pushed.push_back({unit(w), r.multiplicity * L});
        } else {
            for (long long k = 0; k < L; ++k) {
                Complex zeta = std::polar(1.0, kTau * static_cast<double>(k) / L);
                pushed.push_back({unit((zeta + w) / (1.0 + std::conj(w) * zeta)), r.multiplicity});
            }
        }
    }
    PushResult result{RootConfiguration(std::move(pushed), ConstraintTag::UnitCircle), L, epsilon,
                      0.0, 0.0};
    result.comparison_margin =
        grid_margin(config, result.pushed, L, epsilon, radial_grid, angular_grid);
    return result;
}

PushResult push_zeros_probabilistic(const RootConfiguration& config, double epsilon, long long L,
                                    std::uint64_t seed, int radial_grid, int angular_grid) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("push_zeros_probabilistic: 0 < eps < 1 required");
    if (L < 1) throw std::invalid_argument("push_zeros_probabilistic: L >= 1 required");
    require_roots_in_disc(config);
    std::vector<Root> pushed;
    long long inner_count = 0;
    std::uint64_t stream = 0;
    for (const Root& r : config.roots()) {
        const Complex w = r.location;
        if (std::abs(w) > 1.0 - epsilon) {
            pushed.push_back({unit(w), r.multiplicity * L});
        } else {
            inner_count += r.multiplicity;
            Rng rng(derive_seed(seed, stream++));
            for (long long k = 0; k < r.multiplicity * L; ++k) {
                Complex zeta = std::polar(1.0, kTau * rng.next_double());
                pushed.push_back({unit((zeta + w) / (1.0 + std::conj(w) * zeta)), 1});
            }
        }
    }
    PushResult result{RootConfiguration(std::move(pushed), ConstraintTag::UnitCircle), L, epsilon,
                      0.0, 0.0};
    result.comparison_margin =
        grid_margin(config, result.pushed, L, epsilon, radial_grid, angular_grid);
    if (inner_count > 0) {
        double le = std::log(epsilon);
        result.failure_bound = std::exp(-static_cast<double>(L) * static_cast<double>(inner_count) *
                                        std::pow(epsilon, 4) / (128.0 * le * le));
    }
    return result;
}

std::vector<double> wagner_coefficients(const WagnerParams& params) {
    if (!(params.R > 1.0)) throw std::invalid_argument("wagner_coefficients: R > 1 required");
    if (!(params.truncation_tolerance > 0.0))
        throw std::invalid_argument("wagner_coefficients: positive truncation tolerance required");
    const double eR = std::exp(params.R);
    const double x = 0.5 * params.R;
    // exp(e^R (e^z - 1)) = sum d_k z^k; (k+1) d_{k+1} = sum_j (e^R/j!) d_{k-j}
    std::vector<double> d{1.0};
    std::vector<double> inv_fact{1.0};
    double term = 0.0, prev_term = std::numeric_limits<double>::infinity();
    const int hard_cap = 100000;
    for (int k = 0;; ++k) {
        if (k + 1 > hard_cap)
            throw std::runtime_error("wagner_coefficients: series did not converge by k = " +
                                     std::to_string(hard_cap));
        inv_fact.push_back(inv_fact.back() / static_cast<double>(k + 1));
        double acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += eR * inv_fact[j] * d[k - j];
        double next = acc / static_cast<double>(k + 1);
        if (!std::isfinite(next))
            throw std::overflow_error("wagner_coefficients: overflow at coefficient k = " +
                                      std::to_string(k + 1));
        d.push_back(next);
        prev_term = term;
        term = next * std::pow(x, k + 1);
        // once terms at least halve each step, the geometric tail after this
        // index is below the tolerance
        if (k >= 1 && term <= 0.5 * params.truncation_tolerance && term <= 0.5 * prev_term) break;
    }
    return {d.begin() + 1, d.end()};  // b_1..b_N
}

WagnerResult wagner_polynomial(const WagnerParams& params) {
    std::vector<double> b = wagner_coefficients(params);
    const double x = 0.5 * params.R;
    double a_ratio = 0.0;
    {
        double xk = 1.0;
        for (size_t k = 0; k < b.size(); ++k) {
            xk *= x;
            a_ratio += 4.0 * static_cast<double>(k + 1) * b[k] * xk;
        }
    }
    const double m_real = std::ceil(16.0 * params.R * a_ratio);
    if (!(m_real >= 1.0) || m_real > static_cast<double>(params.degree_cap))
        throw std::runtime_error("wagner_polynomial: M = " + std::to_string(m_real) +
                                 " exceeds the degree cap; lower R");
    const long long M = static_cast<long long>(m_real);

    CircleMeasure measure;
    measure.coeffs.reserve(b.size());
    {
        double xk = 1.0;
        for (size_t k = 0; k < b.size(); ++k) {
            xk *= x;
            measure.coeffs.emplace_back(static_cast<double>(k + 1) * b[k] * xk / a_ratio, 0.0);
        }
    }
    DiscreteCircleMeasure atoms = equal_mass_partition(measure, M);
    WagnerResult result{atoms.to_configuration(),
                        std::pow(std::log(static_cast<double>(M)), params.alpha_exponent),
                        M,
                        static_cast<int>(b.size()),
                        a_ratio,
                        std::move(measure)};
    return result;
}

RootConfiguration c_nh(int n, int h) {
    if (n < 1 || h < 1 || h > n) throw std::invalid_argument("c_nh: need 1 <= h <= n");
    std::vector<Root> roots;
    roots.push_back({std::polar(1.0, kPi * (h - 1) / n), h});
    for (int k = h; k < n; ++k) roots.push_back({std::polar(1.0, kTau * k / n), 1});
    return RootConfiguration(std::move(roots), ConstraintTag::UnitCircle);
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Erdos: return "erdos";
        case FamilyKind::ErdosDeflated: return "erdos-deflated";
        case FamilyKind::Stretched: return "stretched";
    }
    throw std::logic_error("unknown family kind");
}

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "erdos") return FamilyKind::Erdos;
    if (s == "erdos-deflated") return FamilyKind::ErdosDeflated;
    if (s == "stretched") return FamilyKind::Stretched;
    throw std::invalid_argument("unknown family kind: " + s);
}

RootConfiguration named_family(FamilyKind kind, int n) {
    if (n < 2) throw std::invalid_argument("named_family: n >= 2 required");
    switch (kind) {
        case FamilyKind::Erdos:
            return RootConfiguration::roots_of_unity(n);
        case FamilyKind::ErdosDeflated: {
            std::vector<Root> roots;
            for (int k = 1; k < n; ++k) roots.push_back({std::polar(1.0, kTau * k / n), 1});
            return RootConfiguration(std::move(roots), ConstraintTag::UnitCircle);
        }
        case FamilyKind::Stretched: {
            // (z^n - 1)/(z - 1) composed with z^s, s = ceil(log n); the roots
            // are the exact radicals of the deflated roots of unity
            const int s = static_cast<int>(std::ceil(std::log(static_cast<double>(n))));
            std::vector<Root> roots;
            for (int k = 1; k < n; ++k)
                for (int j = 0; j < s; ++j)
                    roots.push_back(
                        {std::polar(1.0, (kTau * k / n + kTau * j) / s), 1});
            return RootConfiguration(std::move(roots), ConstraintTag::UnitCircle);
        }
    }
    throw std::logic_error("unknown family kind");
}

}  // namespace lemni
