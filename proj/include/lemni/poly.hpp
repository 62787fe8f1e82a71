#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lemni {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTau = 2.0 * kPi;

enum class ConstraintTag { None, UnitDisc, UnitCircle };

std::string to_string(ConstraintTag tag);
ConstraintTag tag_from_string(const std::string& s);

struct Root {
    Complex location;
    long long multiplicity = 1;
};

// Monic polynomial represented by its root multiset. Multiplicity is kept
// explicit so that degree-10^6 configurations with few distinct roots stay
// cheap. Immutable after construction.
class RootConfiguration {
  public:
    RootConfiguration(std::vector<Root> roots, ConstraintTag tag = ConstraintTag::None);

    // angles are fractions of a full turn
    static RootConfiguration from_angles(const std::vector<double>& angles_over_2pi,
                                         const std::vector<long long>& mults);
    static RootConfiguration roots_of_unity(int n);
    static RootConfiguration monomial(int n);  // z^n

    const std::vector<Root>& roots() const { return roots_; }
    long long degree() const { return degree_; }
    ConstraintTag tag() const { return tag_; }

    RootConfiguration power(long long k) const;
    RootConfiguration rotated(Complex omega) const;
    RootConfiguration conjugated() const;

    // sorted angles in [0,2pi), repeated by multiplicity
    std::vector<double> sorted_angles() const;

  private:
    std::vector<Root> roots_;
    long long degree_ = 0;
    ConstraintTag tag_ = ConstraintTag::None;
};

struct LevelSetSpec {
    RootConfiguration config;
    double level;  // t > 0

    LevelSetSpec(RootConfiguration c, double t) : config(std::move(c)), level(t) {
        if (!(t > 0.0)) throw std::invalid_argument("LevelSetSpec: level must be > 0");
    }
};

// log|p(z)| = sum_k m_k log|z - w_k|; -inf exactly at a root.
double log_abs_eval(const RootConfiguration& config, Complex z);

// strict sublevel set {|p| < t}
bool membership(const LevelSetSpec& spec, Complex z);

// B_a(z) = (z - a) / (1 - conj(a) z), |a| < 1
Complex blaschke_map(Complex a, Complex z);

// Root configuration of p(q(z)): for each root w of p (mult m), all d roots
// of q(z) = w, each with multiplicity m.
RootConfiguration compose_with_generator(const RootConfiguration& inner_q,
                                         const RootConfiguration& outer_p);

// Coefficients (ascending, monic) of the polynomial with the given roots.
std::vector<Complex> coefficients_from_roots(const RootConfiguration& config);

// All roots of the monic polynomial with the given ascending coefficients
// (Aberth-Ehrlich iteration).
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_ascending,
                                      double residual_tol = 1e-12);

}  // namespace lemni
