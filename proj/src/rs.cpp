#include "yf/rs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "yf/clone.hpp"
#include "yf/measures.hpp"

namespace yf {

Perm perm_inverse(const Perm& p) {
    Perm inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

bool is_involution(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[static_cast<size_t>(p[i] - 1)] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string perm_to_string(const Perm& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s;
}

Perm perm_parse(const std::string& s) {
    Perm p;
    std::istringstream is(s);
    int v;
    while (is >> v) p.push_back(v);
    std::vector<bool> seen(p.size() + 1, false);
    for (int e : p) {
        if (e < 1 || e > static_cast<int>(p.size()) || seen[static_cast<size_t>(e)])
            throw std::invalid_argument("perm_parse: not a permutation in one-line notation");
        seen[static_cast<size_t>(e)] = true;
    }
    return p;
}

FibWord Tableau::shape() const {
    std::vector<uint8_t> ds;
    for (const auto& c : cols) ds.push_back(c.top ? 2 : 1);
    return FibWord(std::move(ds));
}

std::string Tableau::to_string() const {
    std::string s;
    for (const auto& c : cols) {
        s += '[';
        if (c.top) s += std::to_string(c.top) + "/";
        s += std::to_string(c.bottom);
        s += ']';
    }
    return s;
}

std::pair<Tableau, Tableau> rs(const Perm& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> matched(static_cast<size_t>(n) + 1, false);
    Tableau p;
    // Read sigma right to left; match each unmatched entry with the maximal
    // unmatched value weakly to its left (itself included).
    for (int k = n; k >= 1; --k) {
        int v = sigma[static_cast<size_t>(k - 1)];
        if (matched[static_cast<size_t>(v)]) continue;
        int best = 0;
        for (int j = 1; j <= k; ++j) {
            int u = sigma[static_cast<size_t>(j - 1)];
            if (!matched[static_cast<size_t>(u)]) best = std::max(best, u);
        }
        Tableau::Column col;
        if (best == v) {
            col.bottom = v;  // height one
            matched[static_cast<size_t>(v)] = true;
        } else {
            col.bottom = v;
            col.top = best;  // larger value on top
            matched[static_cast<size_t>(v)] = true;
            matched[static_cast<size_t>(best)] = true;
        }
        p.cols.push_back(col);
    }
    // Recording tableau: replace each value by its position, swapping the
    // two entries of height-two columns.
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(sigma[static_cast<size_t>(i - 1)])] = i;
    Tableau q;
    for (const auto& c : p.cols) {
        Tableau::Column col;
        if (c.top) {
            col.bottom = pos[static_cast<size_t>(c.top)];
            col.top = pos[static_cast<size_t>(c.bottom)];
        } else {
            col.bottom = pos[static_cast<size_t>(c.bottom)];
        }
        q.cols.push_back(col);
    }
    return {p, q};
}

bool is_saturated_chain(const Chain& chain) {
    if (chain.empty() || !chain.front().empty()) return false;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        auto ups = covers_up(chain[i]);
        if (std::find(ups.begin(), ups.end(), chain[i + 1]) == ups.end()) return false;
    }
    return true;
}

std::string chain_to_string(const Chain& chain) {
    std::string s;
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i) s += " > ";
        s += chain[i].empty() ? "empty" : chain[i].to_string();
    }
    return s;
}

namespace {

Perm standardization(const Perm& prefix) {
    Perm out(prefix.size());
    std::vector<std::pair<int, int>> order;
    for (size_t i = 0; i < prefix.size(); ++i) order.emplace_back(prefix[i], static_cast<int>(i));
    std::sort(order.begin(), order.end());
    for (size_t rank = 0; rank < order.size(); ++rank)
        out[static_cast<size_t>(order[rank].second)] = static_cast<int>(rank) + 1;
    return out;
}

// Compact code of a saturated chain: the cover index taken at each step.
uint64_t chain_code(const Chain& chain) {
    uint64_t code = 0;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        auto ups = covers_up(chain[i]);
        auto it = std::find(ups.begin(), ups.end(), chain[i + 1]);
        if (it == ups.end()) throw std::invalid_argument("chain_code: not a saturated chain");
        code = code * 64 + static_cast<uint64_t>(it - ups.begin());
    }
    return code;
}

std::string tableau_key(const Tableau& p, const Tableau& q) { return p.to_string() + "|" + q.to_string(); }

struct RsTables {
    std::map<std::string, Perm> by_tableaux;
    std::map<std::pair<uint64_t, uint64_t>, Perm> by_chains;      // (P chain, Q chain)
    std::map<uint64_t, Perm> involution_by_chain;
};

const RsTables& rs_tables(int n) {
    static std::map<int, RsTables> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n > 10) throw std::invalid_argument("rs lookup tables are limited to n <= 10");
    RsTables t;
    Perm sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        auto [p, q] = rs(sigma);
        t.by_tableaux[tableau_key(p, q)] = sigma;
        uint64_t qc = chain_code(chain_of_q(sigma));
        uint64_t pc = chain_code(chain_of_q(perm_inverse(sigma)));
        t.by_chains[{pc, qc}] = sigma;
        if (is_involution(sigma)) t.involution_by_chain[qc] = sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

Chain chain_of_q(const Perm& sigma) {
    Chain chain;
    chain.push_back(FibWord{});
    for (size_t k = 1; k <= sigma.size(); ++k) {
        Perm prefix(sigma.begin(), sigma.begin() + static_cast<long>(k));
        auto [p, q] = rs(standardization(prefix));
        (void)p;
        chain.push_back(q.shape());
    }
    if (!is_saturated_chain(chain)) throw std::logic_error("chain_of_q: standardized shapes are not a chain");
    return chain;
}

Perm rs_inverse(const Tableau& p, const Tableau& q) {
    if (!(p.shape() == q.shape())) throw std::invalid_argument("rs_inverse: shapes differ");
    int n = p.shape().weight();
    const auto& t = rs_tables(n);
    auto it = t.by_tableaux.find(tableau_key(p, q));
    if (it == t.by_tableaux.end()) throw std::invalid_argument("rs_inverse: not a valid SYFT pair");
    return it->second;
}

Harmonic Harmonic::plancherel() {
    Harmonic h;
    h.name_ = "plancherel";
    return h;
}

Harmonic Harmonic::clone(Specialization s) {
    Harmonic h;
    h.name_ = "clone:" + s.name;
    h.spec_ = std::move(s);
    return h;
}

Rat Harmonic::phi(const FibWord& w) const {
    if (!spec_) return Rat(dim(w)) / Rat(factorial(static_cast<unsigned long>(w.weight())));
    return harmonic_phi(w, *spec_);
}

Rat cotransition_prob(const FibWord& w, const FibWord& v, const Harmonic& phi) {
    auto downs = covers_down(w);
    if (std::find(downs.begin(), downs.end(), v) == downs.end()) return Rat(0);
    if (w.digit(0) == 1) return Rat(1);
    FibWord u = w.suffix(1);  // w = 2u
    return phi.phi(v) / phi.phi(u);
}

Chain cotransition_sample(const FibWord& w, const Harmonic& phi, Rng& rng) {
    Chain down;
    down.push_back(w);
    FibWord cur = w;
    while (cur.weight() > 0) {
        FibWord next;
        if (cur.digit(0) == 1) {
            next = cur.suffix(1);
        } else {
            FibWord u = cur.suffix(1);
            auto choices = covers_up(u);
            Rat phiu = phi.phi(u);
            double r = rng.uniform();
            double cum = 0.0;
            next = choices.back();
            for (const auto& v : choices) {
                cum += to_double(phi.phi(v) / phiu);
                if (r < cum) {
                    next = v;
                    break;
                }
            }
        }
        down.push_back(next);
        cur = next;
    }
    std::reverse(down.begin(), down.end());
    return down;
}

Rat chain_measure(const Chain& chain, const Harmonic& phi) {
    if (!is_saturated_chain(chain)) throw std::invalid_argument("chain_measure: not a saturated chain");
    Rat acc(1);
    for (size_t i = chain.size(); i-- > 1;) acc *= cotransition_prob(chain[i], chain[i - 1], phi);
    return acc;
}

namespace {

FibWord sample_shape(const Specialization& pi, int n, Rng& rng) {
    auto m = measure_level(pi, n);
    double r = rng.uniform();
    double cum = 0.0;
    for (size_t i = 0; i < m.level.size(); ++i) {
        cum += to_double(m.weight[i]);
        if (r < cum) return m.level[i];
    }
    return m.level.back();
}

}  // namespace

Perm random_permutation(int n, const Specialization& pi, const Harmonic& phi, const Harmonic& psi, Rng& rng) {
    FibWord w = sample_shape(pi, n, rng);
    auto chain_p = cotransition_sample(w, phi, rng);
    auto chain_q = cotransition_sample(w, psi, rng);
    const auto& t = rs_tables(n);
    auto it = t.by_chains.find({chain_code(chain_p), chain_code(chain_q)});
    if (it == t.by_chains.end()) throw std::logic_error("random_permutation: chain pair not in the RS table");
    return it->second;
}

Perm random_involution(int n, const Specialization& pi, const Harmonic& phi, Rng& rng) {
    FibWord w = sample_shape(pi, n, rng);
    auto chain = cotransition_sample(w, phi, rng);
    const auto& t = rs_tables(n);
    auto it = t.involution_by_chain.find(chain_code(chain));
    if (it == t.involution_by_chain.end()) throw std::logic_error("random_involution: chain not in the table");
    return it->second;
}

FibWord shape_level_involution(int n, const Specialization& pi, Rng& rng) {
    if (n <= 14) {
        return sample_shape(pi, n, rng);
    }
    return sample_word_blocks(pi, n, rng);
}

Rat permutation_measure(const Perm& sigma, const Harmonic& pi, const Harmonic& phi, const Harmonic& psi) {
    auto chain_q = chain_of_q(sigma);
    auto chain_p = chain_of_q(perm_inverse(sigma));
    FibWord w = chain_q.back();
    return Rat(dim(w)) * pi.phi(w) * chain_measure(chain_p, phi) * chain_measure(chain_q, psi);
}

Rat involution_measure(const Perm& sigma, const Harmonic& pi, const Harmonic& phi) {
    if (!is_involution(sigma)) throw std::invalid_argument("involution_measure: not an involution");
    auto chain = chain_of_q(sigma);
    FibWord w = chain.back();
    return Rat(dim(w)) * pi.phi(w) * chain_measure(chain, phi);
}

Perm involution_from_tableau(const Tableau& t) {
    int n = t.shape().weight();
    Perm sigma(static_cast<size_t>(n), 0);
    for (const auto& c : t.cols) {
        if (c.top) {
            sigma[static_cast<size_t>(c.top - 1)] = c.bottom;
            sigma[static_cast<size_t>(c.bottom - 1)] = c.top;
        } else {
            sigma[static_cast<size_t>(c.bottom - 1)] = c.bottom;
        }
    }
    return sigma;
}

std::vector<Perm> all_permutations(int n) {
    std::vector<Perm> out;
    Perm sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do out.push_back(sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<Perm> all_involutions(int n) {
    std::vector<Perm> out;
    for (auto& s : all_permutations(n))
        if (is_involution(s)) out.push_back(s);
    return out;
}

}  // namespace yf
