#pragma once

#include <cstdint>
#include <vector>

#include "lemni/poly.hpp"
#include "lemni/potential.hpp"

namespace lemni {

// Small-area polynomial on the circle, built from the coefficient measure of
// Q_R(z) = E(R+z) - E(R) with generator E(z) = exp(exp(z)). All arithmetic is
// normalized by E(R) so nothing overflows.
struct WagnerParams {
    double R = 1.0;                        // > 1
    double truncation_tolerance = 1e-14;   // tail mass of sum_{k>N} b_k (R/2)^k
    double alpha_exponent = 1.0;           // achieved level t_M = (log M)^alpha
    long long degree_cap = 1000000;
};

struct WagnerResult {
    RootConfiguration config;  // M unit-circle atoms, strictly increasing angles
    double level = 0.0;        // t_M = (log M)^alpha
    long long M = 0;
    int N = 0;                 // series truncation
    double A_ratio = 0.0;      // A_{R,N} / E(R)
    CircleMeasure measure;
};

// Normalized series coefficients b_k = a_k(R)/E(R), k = 1..N, with N chosen
// so the weighted tail sum_{k>N} b_k (R/2)^k falls below the tolerance.
std::vector<double> wagner_coefficients(const WagnerParams& params);

WagnerResult wagner_polynomial(const WagnerParams& params);

struct PushResult {
    RootConfiguration pushed;       // degree L * deg(original), roots on T
    long long L = 0;
    double epsilon = 0.0;
    // min over the polar test grid of (1-eps)*closed disc of
    // (1/L) log|q(z)| - log|p(z)|; nonnegative certifies the domination
    double comparison_margin = 0.0;
    // probabilistic variant only: Hoeffding bad-event bound
    // exp(-L a_n eps^4 / (128 (log eps)^2)), a_n = inner-zero count
    double failure_bound = 0.0;
};

// Roots with |w| > 1-eps pushed radially to T (multiplicity x L); roots with
// |w| <= 1-eps replaced by the L Blaschke images B_{-w}(zeta_k) of the L-th
// roots of unity. L = floor(6/eps^2), or ceil with round_up.
PushResult push_zeros_deterministic(const RootConfiguration& config, double epsilon,
                                    bool round_up = false, int radial_grid = 200,
                                    int angular_grid = 200);

// Same split, but each inner root is replaced by L independent samples of
// harmonic measure at w (Blaschke image of a uniform circle point). The
// margin may come out negative; that is reported, not fatal.
PushResult push_zeros_probabilistic(const RootConfiguration& config, double epsilon, long long L,
                                    std::uint64_t seed, int radial_grid = 100,
                                    int angular_grid = 100);

// n-th roots of unity with the h consecutive roots e^{2 pi i k/n},
// 0 <= k <= h-1, merged into one root of multiplicity h at e^{pi i (h-1)/n}.
RootConfiguration c_nh(int n, int h);

enum class FamilyKind { Erdos, ErdosDeflated, Stretched };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& s);

// Erdos: z^n - 1. ErdosDeflated: (z^n - 1)/(z - 1). Stretched:
// ErdosDeflated composed with z^ceil(log n) (integer exponent keeps it a
// polynomial).
RootConfiguration named_family(FamilyKind kind, int n);

}  // namespace lemni
