#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yf/rational.hpp"
#include "yf/rng.hpp"
#include "yf/specs.hpp"
#include "yf/words.hpp"

namespace yf {

// One-line notation, 1-based values: perm[i] = sigma(i+1).
using Perm = std::vector<int>;

Perm perm_inverse(const Perm& p);
bool is_involution(const Perm& p);
std::string perm_to_string(const Perm& p);  // "2 7 1 5 6 4 3"
Perm perm_parse(const std::string& s);

// Standard Young--Fibonacci tableau: columns left to right, each of height
// one or two; the top of a height-two column exceeds its bottom.
struct Tableau {
    struct Column {
        int bottom = 0;
        int top = 0;  // 0 when the column has height one
        bool operator==(const Column&) const = default;
    };
    std::vector<Column> cols;

    FibWord shape() const;
    std::string to_string() const;  // "[7/3][6/4][5][2/1]"
    bool operator==(const Tableau&) const = default;
};

// The Young--Fibonacci RS correspondence (insertion and recording tableaux).
std::pair<Tableau, Tableau> rs(const Perm& sigma);

// Inverts RS by a table lookup over S_n, built once per n (n <= 10).
Perm rs_inverse(const Tableau& p, const Tableau& q);

// A saturated chain empty = w_0 up to w_n.
using Chain = std::vector<FibWord>;

bool is_saturated_chain(const Chain& chain);
std::string chain_to_string(const Chain& chain);

// Shape sequence of the recording tableaux of the standardized prefixes.
Chain chain_of_q(const Perm& sigma);

// Harmonic-function handle for cotransition probabilities.
class Harmonic {
  public:
    static Harmonic plancherel();
    static Harmonic clone(Specialization s);
    Rat phi(const FibWord& w) const;
    const std::string& name() const { return name_; }

  private:
    std::string name_;
    std::optional<Specialization> spec_;
};

// Generalized cotransition step probabilities mu_CT(w, v); zero unless
// v is covered by w.
Rat cotransition_prob(const FibWord& w, const FibWord& v, const Harmonic& phi);
// Downward sampling of a full chain from w.
Chain cotransition_sample(const FibWord& w, const Harmonic& phi, Rng& rng);
// Product of the step weights of a saturated chain (top down).
Rat chain_measure(const Chain& chain, const Harmonic& phi);

// Random permutation from the triad (pi, phi, psi): shape from the clone
// measure of pi, two cotransition chains, then the RS lookup.
Perm random_permutation(int n, const Specialization& pi, const Harmonic& phi, const Harmonic& psi, Rng& rng);
// Random involution from (pi, phi).
Perm random_involution(int n, const Specialization& pi, const Harmonic& phi, Rng& rng);
// Shape-level sampling (two-cycles = total hikes, fixed points = total runs).
FibWord shape_level_involution(int n, const Specialization& pi, Rng& rng);

// Exact mu_n(sigma) = dim(w) pi(w) mu_phi(chain of P) mu_psi(chain of Q).
Rat permutation_measure(const Perm& sigma, const Harmonic& pi, const Harmonic& phi, const Harmonic& psi);
// Exact nu_n(sigma) for involutions.
Rat involution_measure(const Perm& sigma, const Harmonic& pi, const Harmonic& phi);

// Cycle readoff: height-two column (top t over bottom b) -> transposition,
// height-one column -> fixed point.  Validated exhaustively on S_7.
Perm involution_from_tableau(const Tableau& t);

std::vector<Perm> all_permutations(int n);
std::vector<Perm> all_involutions(int n);

}  // namespace yf
