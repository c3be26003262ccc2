#pragma once

#include <functional>
#include <string>
#include <vector>

#include "yf/poly.hpp"
#include "yf/rational.hpp"
#include "yf/specs.hpp"

namespace yf {

struct MomentSequence {
    std::vector<Rat> a;      // a_0..a_N, normalized so a_0 = 1
    std::string provenance;  // motzkin | jfraction | nc | all-partitions | compressed | recurrence
};

// Weighted Motzkin path transfer recursion (up into height k: y_k; flat at
// height k: x_{k+1}).
MomentSequence moments_motzkin(const Specialization& s, int N);
// Series expansion of the depth-(N+1) truncated Jacobi continued fraction.
MomentSequence moments_jfraction(const Specialization& s, int N);
// Sum over non-crossing partitions of prod c_k^{ell_{k-1}} t_k^{g_k}.
MomentSequence moments_nc(const Specialization& s, int N);
// Sum over all partitions of prod c_k^{ell_{k-1}} (1+eps_k)^{g_k};
// requires a divergent-type specialization with exact (c, t).
MomentSequence moments_all_partitions(const Specialization& s, int N);
// Sum over compositions of N(kappa) c^{A(kappa)} t^{dep(B(kappa))}.
MomentSequence moments_compressed(const Specialization& s, int N);

struct OrthoPolySequence {
    std::vector<RatPoly> p;  // monic P_0..P_N
};
OrthoPolySequence orthopoly(const Specialization& s, int N);

// The moment functional L[t^k] = a_k applied to a polynomial.
Rat apply_L(const MomentSequence& m, const RatPoly& poly);

// Shifted Charlier machinery.
MomentSequence shifted_charlier_moments(const Rat& rho, const Rat& sigma, int N);
// Coefficients of M(z; rho, sigma) from the rational-term series expansion
// of the confluent-hypergeometric ratio.
MomentSequence shifted_charlier_mgf_series(const Rat& rho, const Rat& sigma, int N);
// Sum over partitions of rho^{blocks*} sigma^{gbar_1} (rho+sigma-1)^{#S}.
MomentSequence shifted_charlier_combinatorial(const Rat& rho, const Rat& sigma, int N);

struct TodaFamily {
    std::string name;
    // (varrho, n) -> x_n(varrho) for n >= 1 and y_n(varrho) for n >= 0;
    // the n = 1 chain equation uses the family's own y_0.
    std::function<double(double, long)> x;
    std::function<double(double, long)> y;
};
TodaFamily toda_family_charlier();
TodaFamily toda_family_shifted_charlier(double sigma);
TodaFamily toda_family_constant(std::vector<double> xs, std::vector<double> ys);

struct TodaResidualReport {
    double max_residual_x = 0.0;  // |d x_n/d rho - (y_n - y_{n-1})|
    double max_residual_y = 0.0;  // |d y_n/d rho - y_n (x_{n+1} - x_n)|
    // The same residuals divided by the local equation scale; the central
    // difference error is ~ h^2/6 relative to that scale.
    double max_relative_x = 0.0;
    double max_relative_y = 0.0;
};
TodaResidualReport toda_residual(const TodaFamily& fam, const std::vector<double>& grid, int nmax,
                                 double step = 1e-4);

// Leading principal Hankel determinants Delta_1..Delta_k of (a_n).
std::vector<Rat> hankel_determinants(const MomentSequence& m, int k);

}  // namespace yf
