#include "lemni/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lemni/parallel.hpp"

namespace lemni {

double CircleMeasure::density(double theta) const {
    Complex w(std::cos(theta), std::sin(theta));
    Complex wk = 1.0;
    double v = 1.0;
    for (const Complex& c : coeffs) {
        wk *= w;
        v += 2.0 * (c * wk).real();
    }
    return v;
}

double CircleMeasure::min_density(int grid) const {
    double m = density(0.0);
    for (int k = 1; k < grid; ++k) m = std::min(m, density(kTau * k / grid));
    return m;
}

double CircleMeasure::max_density(int grid) const {
    double m = density(0.0);
    for (int k = 1; k < grid; ++k) m = std::max(m, density(kTau * k / grid));
    return m;
}

namespace {

// composite Simpson for int_a^b v dtheta / 2pi, one Simpson triple per segment
double simpson_mass(const CircleMeasure& m, double a, double b, int segments) {
    double h = (b - a) / segments;
    double acc = 0.0;
    for (int s = 0; s < segments; ++s) {
        double x0 = a + s * h;
        acc += (h / 6.0) * (m.density(x0) + 4.0 * m.density(x0 + 0.5 * h) + m.density(x0 + h));
    }
    return acc / kTau;
}

}  // namespace

double CircleMeasure::cdf(double theta) const {
    if (theta <= 0.0) return 0.0;
    int n_modes = static_cast<int>(coeffs.size());
    int segments = std::max(128 * std::max(n_modes, 1), 1024);
    segments = std::max(8, static_cast<int>(segments * theta / kTau));
    return simpson_mass(*this, 0.0, theta, segments);
}

RootConfiguration DiscreteCircleMeasure::to_configuration() const {
    std::vector<Root> roots;
    roots.reserve(angles.size());
    for (double a : angles) roots.push_back({Complex(std::cos(a), std::sin(a)), 1});
    return RootConfiguration(std::move(roots), ConstraintTag::UnitCircle);
}

double discrete_potential(const RootConfiguration& config, Complex z) {
    return log_abs_eval(config, z) / static_cast<double>(config.degree());
}

double discrete_potential(const DiscreteCircleMeasure& atoms, Complex z) {
    if (atoms.angles.empty()) throw std::invalid_argument("discrete_potential: no atoms");
    double acc = 0.0;
    for (double a : atoms.angles) acc += std::log(std::abs(z - Complex(std::cos(a), std::sin(a))));
    return acc / static_cast<double>(atoms.angles.size());
}

double series_potential(const CircleMeasure& measure, Complex z, bool allow_near_circle) {
    double r = std::abs(z);
    if (std::abs(r - 1.0) < 1e-9 && !allow_near_circle)
        throw std::domain_error("series_potential: |z| too close to 1 for the truncated series");
    if (r < 1.0) {
        Complex zk = 1.0;
        double u = 0.0;
        for (size_t k = 0; k < measure.coeffs.size(); ++k) {
            zk *= z;
            u -= (measure.coeffs[k] * zk).real() / static_cast<double>(k + 1);
        }
        return u;
    }
    Complex w = 1.0 / z;
    Complex wk = 1.0;
    double u = std::log(r);
    for (size_t k = 0; k < measure.coeffs.size(); ++k) {
        wk *= w;
        u -= (std::conj(measure.coeffs[k]) * wk).real() / static_cast<double>(k + 1);
    }
    return u;
}

DiscreteCircleMeasure equal_mass_partition(const CircleMeasure& measure, long long M,
                                           bool midpoint) {
    if (M < 1) throw std::invalid_argument("equal_mass_partition: M >= 1 required");
    if (measure.min_density() <= 0.0)
        throw std::domain_error("equal_mass_partition: density must be strictly positive");

    // prefix CDF on a fine uniform grid (composite Simpson per segment)
    const int n_modes = static_cast<int>(measure.coeffs.size());
    const int panels = std::max(128 * std::max(n_modes, 1), 2048);
    std::vector<double> prefix(panels + 1, 0.0);
    const double h = kTau / panels;
    for (int i = 0; i < panels; ++i)
        prefix[i + 1] = prefix[i] + simpson_mass(measure, i * h, (i + 1) * h, 1);
    const double total = prefix[panels];  // 1 up to quadrature error

    DiscreteCircleMeasure out;
    out.angles.assign(M, 0.0);
    parallel_for(M, [&](long long j) {
        double u = (static_cast<double>(j) + (midpoint ? 0.5 : 0.0)) / static_cast<double>(M);
        u *= total;  // absorb quadrature error in the total mass
        if (u <= 0.0) {
            out.angles[j] = 0.0;
            return;
        }
        int seg = static_cast<int>(std::upper_bound(prefix.begin(), prefix.end(), u) -
                                   prefix.begin()) -
                  1;
        seg = std::clamp(seg, 0, panels - 1);
        double lo = seg * h, hi = (seg + 1) * h;
        double f_lo = prefix[seg];
        for (int it = 0; it < 64 && hi - lo > 1e-13; ++it) {
            double mid = 0.5 * (lo + hi);
            double f_mid = f_lo + simpson_mass(measure, lo, mid, 4);
            if (std::abs(f_mid - u) <= 1e-12) {
                lo = hi = mid;
                f_lo = f_mid;
                break;
            }
            if (f_mid < u) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        out.angles[j] = 0.5 * (lo + hi);
    });
    return out;
}

}  // namespace lemni
