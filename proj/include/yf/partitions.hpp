#pragma once

#include <functional>
#include <string>
#include <vector>

#include "yf/words.hpp"

namespace yf {

// Set partition of {1..n} in canonical form (blocks sorted by minima).
class SetPartition {
  public:
    SetPartition() = default;
    SetPartition(int n, std::vector<std::vector<int>> blocks);
    // From a restricted growth string (0-based block labels, first use in order).
    static SetPartition from_rgs(const std::vector<int>& rgs);
    static SetPartition parse(const std::string& s);  // "135|29|4|678"

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int i) const { return block_of_[static_cast<size_t>(i - 1)]; }
    // Next element of i's block, or 0 if i is maximal in its block.
    int successor(int i) const { return succ_[static_cast<size_t>(i - 1)]; }
    int predecessor(int i) const { return pred_[static_cast<size_t>(i - 1)]; }

    std::string to_string() const;
    bool operator==(const SetPartition& o) const { return blocks_ == o.blocks_; }

  private:
    void index();
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_, succ_, pred_;
};

enum class Role { singleton, opener, closer, transient_ };
Role role_of(const SetPartition& pi, int i);

struct PartitionStats {
    std::vector<int> ell;     // ell[k] = #{i : #Gamma_i = k}, k = 0..p
    std::vector<int> g;       // g[m-1] = #{i in C u T : gamma_i = m}, m = 1..p
    std::vector<int> gamma;   // gamma[i-1] for i in C u T, else 0
    std::vector<int> gsize;   // #Gamma_i for each i
    int gbar1 = 0;            // closers with gamma_i = 1
    long nest = 0;            // sum (k-1) g_k
    long area = 0;            // sum k ell_k
    int blocks = 0;
    int blocks_star = 0;      // non-singleton blocks
    int singletons = 0;
};

PartitionStats stats(const SetPartition& pi);
bool is_noncrossing(const SetPartition& pi);

void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn);
void for_each_noncrossing(int n, const std::function<void(const SetPartition&)>& fn);
std::vector<SetPartition> enumerate_partitions(int n);
std::vector<SetPartition> enumerate_noncrossing(int n);

// Colored Motzkin path (Charlier histoire).
struct Histoire {
    enum class Type { up, flat, down };
    struct Step {
        Type type;
        int height;  // flat: its level; up: starting height; down: starting height
        int color;   // flat: 0..height, down: 1..height, up: unused (0)
    };
    std::vector<Step> steps;
    std::string to_string() const;  // e.g. "UUF1F0D2UF2D2D1"
    static Histoire parse(const std::string& s);
};

Histoire histoire(const SetPartition& pi);
SetPartition histoire_inverse(const Histoire& h);

// Composition utilities ---------------------------------------------------

using Composition = std::vector<int>;

void for_each_composition(int n, const std::function<void(const Composition&)>& fn);

struct CompositionSplit {
    Composition a;      // A(kappa), a Fibonacci composition
    Composition b;      // B(kappa), a Fibonacci composition
    Composition dep_b;  // dep(B(kappa))
    FibWord u;          // Fib(A(kappa))
    FibWord v;          // Fib(B(kappa))
};

CompositionSplit split(const Composition& kappa);
Composition depletion(const Composition& fib_comp);

// z-map of a non-crossing partition: interleaves (ell_0, g_1, ell_1-g_1, ...).
Composition z_map(const SetPartition& pi);

// Deterministic non-crossing preimage of a composition under the z-map,
// via the inventory rule U_k = min(g_k, ell_{k-1} - g_{k-1}).
SetPartition z_preimage(const Composition& kappa);

struct MultiplicityMatrix {
    int n = 0;
    std::vector<FibWord> level;
    std::vector<std::vector<long>> counts;  // N_{u,v}, canonical order
};
MultiplicityMatrix multiplicity_matrix(int n);

}  // namespace yf
