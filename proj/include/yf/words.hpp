#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

// A Fibonacci word: finite string over {1,2}, most significant digit first
// (prefix = left end). Weight is the digit sum.
class FibWord {
  public:
    FibWord() = default;
    explicit FibWord(std::vector<uint8_t> digits);

    // Parses "2212"; "" and "empty" both denote the empty word.
    static FibWord parse(const std::string& s);

    const std::vector<uint8_t>& digits() const { return d_; }
    int length() const { return static_cast<int>(d_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return d_.empty(); }

    uint8_t digit(int i) const { return d_[static_cast<size_t>(i)]; }

    FibWord prepended(uint8_t digit) const;
    // Word with the first `count` digits removed.
    FibWord suffix(int count) const;

    std::string to_string() const;

    // Canonical order: digitwise with 2 sorting before 1, matching the level
    // tables used for all matrix indexings (221 < 212 < 2111 < 122 < ...).
    bool operator==(const FibWord& o) const { return d_ == o.d_; }
    bool operator<(const FibWord& o) const;

  private:
    std::vector<uint8_t> d_;
    int weight_ = 0;
};

struct RunsHikes {
    std::vector<int> runs;        // r_1..r_p, lengths of maximal 1-blocks
    std::vector<int> runs_tilde;  // r~_k = r_k + 2 (k < p), r~_p = r_p
    std::vector<int> hikes;       // h_1..h_m, lengths of maximal 2-blocks
    std::vector<int> hikes_tilde; // h~_k = 2 h_k + 1 (k < m), h~_m = 2 h_m
};

// Row lengths of the ribbon R(w), read from the bottom row up.
using RibbonComposition = std::vector<int>;

std::vector<FibWord> covers_up(const FibWord& w);
std::vector<FibWord> covers_down(const FibWord& w);

// Number of saturated chains from the empty word to w.
BigInt dim(const FibWord& w);

// All of YF_n in canonical order; |result| = F_n with F_0 = F_1 = 1.
std::vector<FibWord> enumerate_level(int n);

RunsHikes runs_hikes(const FibWord& w);
int total_hike(const FibWord& w);  // number of 2's
int total_run(const FibWord& w);   // number of 1's

RibbonComposition ribbon(const FibWord& w);
bool is_fibonacci_composition(const std::vector<int>& comp);
// Inverse of ribbon(); throws on a non-Fibonacci composition.
FibWord fib_of(const std::vector<int>& comp);

// u >= v in dominance order: all digit prefix sums of u weakly dominate.
bool dominates(const FibWord& u, const FibWord& v);

// Position of w in the canonical ordering of its level.
int level_index(const FibWord& w);

}  // namespace yf
