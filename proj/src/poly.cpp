#include "lemni/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lemni {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::string to_string(ConstraintTag tag) {
    switch (tag) {
        case ConstraintTag::UnitDisc: return "UNIT_DISC";
        case ConstraintTag::UnitCircle: return "UNIT_CIRCLE";
        default: return "NONE";
    }
}

ConstraintTag tag_from_string(const std::string& s) {
    if (s == "UNIT_DISC") return ConstraintTag::UnitDisc;
    if (s == "UNIT_CIRCLE") return ConstraintTag::UnitCircle;
    if (s == "NONE" || s.empty()) return ConstraintTag::None;
    throw std::invalid_argument("unknown constraint tag: " + s);
}

RootConfiguration::RootConfiguration(std::vector<Root> roots, ConstraintTag tag)
    : roots_(std::move(roots)), tag_(tag) {
    if (roots_.empty()) throw std::invalid_argument("RootConfiguration: no roots");
    for (const Root& r : roots_) {
        if (!finite(r.location))
            throw std::invalid_argument("RootConfiguration: non-finite root location");
        if (r.multiplicity < 1)
            throw std::invalid_argument("RootConfiguration: multiplicity must be >= 1");
        double mod = std::abs(r.location);
        if (tag_ == ConstraintTag::UnitDisc && mod > 1.0 + 1e-12)
            throw std::invalid_argument("RootConfiguration: UNIT_DISC tag but |root| > 1");
        if (tag_ == ConstraintTag::UnitCircle && std::abs(mod - 1.0) > 1e-12)
            throw std::invalid_argument("RootConfiguration: UNIT_CIRCLE tag but |root| != 1");
        degree_ += r.multiplicity;
    }
}

RootConfiguration RootConfiguration::from_angles(const std::vector<double>& angles_over_2pi,
                                                 const std::vector<long long>& mults) {
    if (angles_over_2pi.size() != mults.size())
        throw std::invalid_argument("from_angles: angles/mults size mismatch");
    std::vector<Root> roots;
    roots.reserve(angles_over_2pi.size());
    for (size_t i = 0; i < angles_over_2pi.size(); ++i) {
        double a = angles_over_2pi[i] * kTau;
        roots.push_back({Complex(std::cos(a), std::sin(a)), mults[i]});
    }
    return RootConfiguration(std::move(roots), ConstraintTag::UnitCircle);
}

RootConfiguration RootConfiguration::roots_of_unity(int n) {
    if (n < 1) throw std::invalid_argument("roots_of_unity: n >= 1 required");
    std::vector<Root> roots;
    roots.reserve(n);
    for (int k = 0; k < n; ++k) {
        double a = kTau * k / n;
        roots.push_back({Complex(std::cos(a), std::sin(a)), 1});
    }
    return RootConfiguration(std::move(roots), ConstraintTag::UnitCircle);
}

RootConfiguration RootConfiguration::monomial(int n) {
    if (n < 1) throw std::invalid_argument("monomial: n >= 1 required");
    return RootConfiguration({{Complex(0.0, 0.0), n}}, ConstraintTag::UnitDisc);
}

RootConfiguration RootConfiguration::power(long long k) const {
    if (k < 1) throw std::invalid_argument("power: k >= 1 required");
    std::vector<Root> roots = roots_;
    for (Root& r : roots) r.multiplicity *= k;
    return RootConfiguration(std::move(roots), tag_);
}

RootConfiguration RootConfiguration::rotated(Complex omega) const {
    std::vector<Root> roots = roots_;
    for (Root& r : roots) r.location *= omega;
    // rotation by a non-unimodular factor invalidates circle/disc tags
    ConstraintTag tag = std::abs(std::abs(omega) - 1.0) <= 1e-12 ? tag_ : ConstraintTag::None;
    return RootConfiguration(std::move(roots), tag);
}

RootConfiguration RootConfiguration::conjugated() const {
    std::vector<Root> roots = roots_;
    for (Root& r : roots) r.location = std::conj(r.location);
    return RootConfiguration(std::move(roots), tag_);
}

std::vector<double> RootConfiguration::sorted_angles() const {
    std::vector<double> angles;
    angles.reserve(static_cast<size_t>(degree_));
    for (const Root& r : roots_) {
        double a = std::arg(r.location);
        if (a < 0) a += kTau;
        for (long long m = 0; m < r.multiplicity; ++m) angles.push_back(a);
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

double log_abs_eval(const RootConfiguration& config, Complex z) {
    double sum = 0.0;
    for (const Root& r : config.roots()) {
        Complex d = z - r.location;
        if (d.real() == 0.0 && d.imag() == 0.0)
            return -std::numeric_limits<double>::infinity();
        sum += static_cast<double>(r.multiplicity) * std::log(std::hypot(d.real(), d.imag()));
    }
    return sum;
}

bool membership(const LevelSetSpec& spec, Complex z) {
    return log_abs_eval(spec.config, z) < std::log(spec.level);
}

Complex blaschke_map(Complex a, Complex z) {
    if (std::abs(a) >= 1.0) throw std::invalid_argument("blaschke_map: |a| < 1 required");
    Complex denom = 1.0 - std::conj(a) * z;
    if (std::abs(denom) < 1e-300) throw std::domain_error("blaschke_map: pole at z = 1/conj(a)");
    return (z - a) / denom;
}

std::vector<Complex> coefficients_from_roots(const RootConfiguration& config) {
    std::vector<Complex> coeffs{Complex(1.0, 0.0)};
    for (const Root& r : config.roots()) {
        for (long long m = 0; m < r.multiplicity; ++m) {
            coeffs.push_back(Complex(0.0, 0.0));
            for (size_t i = coeffs.size() - 1; i > 0; --i)
                coeffs[i] = coeffs[i - 1] - r.location * coeffs[i];
            coeffs[0] = -r.location * coeffs[0];
        }
    }
    return coeffs;  // ascending; the in-place update keeps that invariant
}

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex v(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) v = v * z + c[i];
    return v;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, double residual_tol) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) throw std::invalid_argument("polynomial_roots: degree >= 1 required");

    std::vector<Complex> deriv(deg);
    for (int i = 1; i <= deg; ++i) deriv[i - 1] = coeffs[i] * static_cast<double>(i);

    // Cauchy-style radius for the starting circle
    double lead = std::abs(coeffs.back());
    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(coeffs[i]) / lead);
    radius = 1.0 + radius;

    std::vector<Complex> zs(deg);
    for (int i = 0; i < deg; ++i) {
        double a = kTau * (i + 0.25) / deg + 0.61;  // offset avoids symmetry ties
        zs[i] = radius * Complex(std::cos(a), std::sin(a));
    }

    double scale = 0.0;
    for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));

    const int max_iter = 500;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool converged = true;
        for (int i = 0; i < deg; ++i) {
            Complex p = horner(coeffs, zs[i]);
            if (std::abs(p) > residual_tol * scale) converged = false;
            Complex dp = horner(deriv, zs[i]);
            if (std::abs(dp) < 1e-300) {
                zs[i] += Complex(1e-6, 1e-6);
                converged = false;
                continue;
            }
            Complex newton = p / dp;
            Complex repel(0.0, 0.0);
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                Complex d = zs[i] - zs[j];
                if (std::abs(d) < 1e-300) d = Complex(1e-12, 0.0);
                repel += 1.0 / d;
            }
            Complex denom = 1.0 - newton * repel;
            Complex step = std::abs(denom) < 1e-300 ? newton : newton / denom;
            zs[i] -= step;
        }
        if (converged) return zs;
    }
    // final residual check
    for (const Complex& z : zs) {
        if (std::abs(horner(coeffs, z)) > 1e-6 * scale)
            throw std::runtime_error("polynomial_roots: Aberth iteration failed to converge");
    }
    return zs;
}

RootConfiguration compose_with_generator(const RootConfiguration& inner_q,
                                         const RootConfiguration& outer_p) {
    std::vector<Complex> q_coeffs = coefficients_from_roots(inner_q);
    std::vector<Root> out;
    for (const Root& w : outer_p.roots()) {
        std::vector<Complex> shifted = q_coeffs;
        shifted[0] -= w.location;  // q(z) - w
        std::vector<Complex> zs;
        try {
            zs = polynomial_roots(shifted);
        } catch (const std::runtime_error&) {
            throw std::runtime_error("compose_with_generator: root-finding failed for target w = (" +
                                     std::to_string(w.location.real()) + "," +
                                     std::to_string(w.location.imag()) + ")");
        }
        for (const Complex& z : zs) out.push_back({z, w.multiplicity});
    }
    return RootConfiguration(std::move(out), ConstraintTag::None);
}

}  // namespace lemni
