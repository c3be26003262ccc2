#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yf/rational.hpp"
#include "yf/rng.hpp"
#include "yf/specs.hpp"
#include "yf/words.hpp"

namespace yf {

struct CoherentMeasure {
    int n = 0;
    std::vector<FibWord> level;  // canonical order
    std::vector<Rat> weight;     // M_n(w), exact
};

// Materialized clone coherent measure (n <= 14).
CoherentMeasure measure_level(const Specialization& s, int n);
// M_n(w) = sum over covers of M_{n+1}(w') dim(w)/dim(w'), exact.
bool verify_coherence(const Specialization& s, int n);

// Exact joint law of the first k runs: M_n(r_1 = rs[0], ..., r_k = rs[k-1]).
Rat runs_law(const Specialization& s, int n, const std::vector<int>& rs);
// Exact M_n(h_1 = hs[0], ..., h_k = hs[k-1], h_{k+1} > 0).
Rat hikes_law(const Specialization& s, int n, const std::vector<int>& hs);
// M_n(h_1 = 0) = 1 - (n-1) y_{n-1} / (x_{n-1} x_n).
Rat first_hike_zero(const Specialization& s, int n);

// The bookkeeping sequences d_j = n - h~_{[1,j)} and c_j used by hikes_law,
// for j = 1..k+1.
struct HikesDC {
    std::vector<int> d, c;
};
HikesDC hikes_dc(int n, const std::vector<int>& hs);

// Samplers -----------------------------------------------------------------

// Generic forward walk along transition probabilities phi(w')/phi(w).
FibWord sample_word_walk(const Specialization& s, int n, Rng& rng);

// Sequential block sampler: draws the runs r_1, r_2, ... from their exact
// product law.  `blocks[j]` is the j-th run of ones (each followed by a 2);
// `tail` is the terminal all-ones run, absent when `max_blocks` truncated
// the walk early (the truncated prefix law is exact).  O(n) per word.
struct RunSample {
    std::vector<int> blocks;
    std::optional<int> tail;
};
RunSample sample_runs(const Specialization& s, int n, Rng& rng, int max_blocks = -1);
FibWord word_from_runs(const RunSample& runs, int n);
FibWord sample_word_blocks(const Specialization& s, int n, Rng& rng);

RunSample sample_runs_charlier(const Rat& rho, int n, Rng& rng, int max_blocks = -1);
// The hikes h_1, h_2, ... of a sampled shifted Plancherel word.
std::vector<int> sample_hikes_shifted_plancherel(const Rat& sigma, int n, Rng& rng, int max_hikes = -1);

// Limit laws ---------------------------------------------------------------

double beta_1_theta_sample(double theta, Rng& rng);  // inverse CDF: 1-(1-u)^{1/theta}
double eta_rho_sample(double rho, Rng& rng);         // atom rho at 0, else beta(1, rho)
double eta_rho_cdf(double rho, double x);
double beta_1_theta_cdf(double theta, double x);
// GEM(theta) stick fractions (i.i.d. beta(1,theta)).
std::vector<double> gem_sticks(double theta, int count, Rng& rng);
// xi_sigma sticks: N coin-run successes then i.i.d. beta(1, sigma/2), rest 0.
std::vector<double> xi_sigma_sticks(double sigma, int count, Rng& rng);
// P(N = n) = sigma^{-C(n,2)} (1 - sigma^{-n}).
double xi_sigma_n_law(double sigma, int n);
// Stick-breaking masses X_j from the fractions U_j.
std::vector<double> stick_masses(const std::vector<double>& fractions);

// (1/2) E[sum X_j] under xi_sigma via the closed sum, and the 1/(sigma+1)
// comparison value.
struct ExpectationCompare {
    double half_expected_mass = 0.0;
    double inverse_sigma_plus_one = 0.0;
};
ExpectationCompare expectation_compare(double sigma);

// Scaling-limit verification -------------------------------------------------

struct ScalingReport {
    std::string family;
    std::map<std::string, std::string> params;
    int n = 0;
    long samples = 0;
    uint64_t seed = 0;
    uint64_t streams = 1;
    double dkw_epsilon = 0.0;  // DKW bound at confidence delta
    double dkw_delta = 0.0;
    std::map<std::string, double> stats;
};

ScalingReport verify_scaling_charlier(const Rat& rho, int n, long samples, uint64_t seed, int streams = 1);
ScalingReport verify_scaling_shifted_plancherel(const Rat& sigma, int n, long samples, uint64_t seed,
                                                int streams = 1);
ScalingReport verify_scaling_plancherel(int n, long samples, uint64_t seed, int streams = 1);

// Type-I masses --------------------------------------------------------------

struct TypeIMassReport {
    double mu_one_infinity = 0.0;         // mu_I(1^inf)
    double mu_one_infinity_error = 0.0;   // truncation error estimate
    std::vector<double> level_mass;       // m -> sum over |u| = m of mu_I(1^inf 2u)
    double partial_sum = 0.0;             // mu_I(1^inf) + sum of level masses
    bool divergent = false;               // divergent type: all masses vanish
    std::string note;
};
TypeIMassReport type_one_masses(const Specialization& s, int weight_cap);

// mu_I(1^inf 2u) for an individual suffix.
double type_one_mass_of(const Specialization& s, const FibWord& u);

// Al-Salam--Chihara rho = 1/q limit masses (m+1) q (q-1)^2 q^{-m-3}.
std::vector<double> asch_type_one_limit_masses(double q, int mmax);

}  // namespace yf
