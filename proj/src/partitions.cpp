#include "yf/partitions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace yf {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    index();
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
    int n = static_cast<int>(rgs.size());
    int maxb = -1;
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) {
        int b = rgs[static_cast<size_t>(i)];
        if (b > maxb + 1 || b < 0) throw std::invalid_argument("from_rgs: not a restricted growth string");
        if (b == maxb + 1) {
            blocks.emplace_back();
            ++maxb;
        }
        blocks[static_cast<size_t>(b)].push_back(i + 1);
    }
    SetPartition pi;
    pi.n_ = n;
    pi.blocks_ = std::move(blocks);
    pi.index();
    return pi;
}

SetPartition SetPartition::parse(const std::string& s) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    int n = 0;
    auto flush = [&]() {
        if (cur.empty()) throw std::invalid_argument("SetPartition::parse: empty block");
        blocks.push_back(cur);
        cur.clear();
    };
    for (char c : s) {
        if (c == '|') {
            flush();
        } else if (c >= '1' && c <= '9') {
            cur.push_back(c - '0');
            ++n;
        } else {
            throw std::invalid_argument("SetPartition::parse: bad character (single-digit elements only)");
        }
    }
    if (!cur.empty()) flush();
    return SetPartition(n, std::move(blocks));
}

void SetPartition::index() {
    block_of_.assign(static_cast<size_t>(n_), -1);
    succ_.assign(static_cast<size_t>(n_), 0);
    pred_.assign(static_cast<size_t>(n_), 0);
    std::vector<bool> seen(static_cast<size_t>(n_), false);
    for (size_t b = 0; b < blocks_.size(); ++b) {
        const auto& blk = blocks_[b];
        for (size_t j = 0; j < blk.size(); ++j) {
            int e = blk[j];
            if (e < 1 || e > n_ || seen[static_cast<size_t>(e - 1)])
                throw std::invalid_argument("SetPartition: blocks must partition {1..n}");
            seen[static_cast<size_t>(e - 1)] = true;
            block_of_[static_cast<size_t>(e - 1)] = static_cast<int>(b);
            if (j + 1 < blk.size()) succ_[static_cast<size_t>(e - 1)] = blk[j + 1];
            if (j > 0) pred_[static_cast<size_t>(e - 1)] = blk[j - 1];
        }
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("SetPartition: blocks must cover {1..n}");
}

std::string SetPartition::to_string() const {
    std::string s;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += '|';
        for (int e : blocks_[b]) s += std::to_string(e);
    }
    return s;
}

Role role_of(const SetPartition& pi, int i) {
    bool has_succ = pi.successor(i) != 0;
    bool has_pred = pi.predecessor(i) != 0;
    if (!has_succ && !has_pred) return Role::singleton;
    if (has_succ && !has_pred) return Role::opener;
    if (!has_succ && has_pred) return Role::closer;
    return Role::transient_;
}

PartitionStats stats(const SetPartition& pi) {
    const int n = pi.n();
    PartitionStats st;
    st.gamma.assign(static_cast<size_t>(n), 0);
    st.gsize.assign(static_cast<size_t>(n), 0);
    std::vector<int> gcount;  // g_m counts, index m-1
    int maxh = 0;
    for (int i = 1; i <= n; ++i) {
        // Gamma_i: openers/transients a < i whose successor is >= i.
        std::vector<int> gam;
        for (int a = 1; a < i; ++a)
            if (pi.successor(a) >= i) gam.push_back(a);
        int h = static_cast<int>(gam.size());
        st.gsize[static_cast<size_t>(i - 1)] = h;
        maxh = std::max(maxh, h);
        Role r = role_of(pi, i);
        if (r == Role::closer || r == Role::transient_) {
            int pred = pi.predecessor(i);
            auto it = std::find(gam.begin(), gam.end(), pred);
            if (it == gam.end()) throw std::logic_error("stats: predecessor not in Gamma_i");
            int gammai = static_cast<int>(it - gam.begin()) + 1;
            st.gamma[static_cast<size_t>(i - 1)] = gammai;
            if (static_cast<int>(gcount.size()) < gammai) gcount.resize(static_cast<size_t>(gammai), 0);
            ++gcount[static_cast<size_t>(gammai - 1)];
            if (r == Role::closer && gammai == 1) ++st.gbar1;
        }
    }
    st.ell.assign(static_cast<size_t>(maxh) + 1, 0);
    for (int i = 1; i <= n; ++i) ++st.ell[static_cast<size_t>(st.gsize[static_cast<size_t>(i - 1)])];
    st.g = gcount;
    for (size_t m = 0; m < st.g.size(); ++m) st.nest += static_cast<long>(m) * st.g[m];
    for (size_t k = 0; k < st.ell.size(); ++k) st.area += static_cast<long>(k) * st.ell[k];
    st.blocks = static_cast<int>(pi.blocks().size());
    for (const auto& b : pi.blocks()) {
        if (b.size() == 1)
            ++st.singletons;
        else
            ++st.blocks_star;
    }
    return st;
}

bool is_noncrossing(const SetPartition& pi) {
    // Arcs (a, succ(a)); a crossing is a < c < b < d with arcs (a,b), (c,d).
    std::vector<std::pair<int, int>> arcs;
    for (int a = 1; a <= pi.n(); ++a)
        if (pi.successor(a) != 0) arcs.emplace_back(a, pi.successor(a));
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = 0; j < arcs.size(); ++j) {
            if (i == j) continue;
            auto [a, b] = arcs[i];
            auto [c, d] = arcs[j];
            if (a < c && c < b && b < d) return false;
        }
    return true;
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n >= 0 required");
    if (n == 0) {
        fn(SetPartition::from_rgs({}));
        return;
    }
    // Iterate restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max prefix.
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    std::vector<int> maxv(static_cast<size_t>(n), 0);  // max of rgs[0..i-1]
    while (true) {
        fn(SetPartition::from_rgs(rgs));
        int i = n - 1;
        while (i > 0 && rgs[static_cast<size_t>(i)] > maxv[static_cast<size_t>(i)]) --i;
        if (i == 0) break;
        ++rgs[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            rgs[static_cast<size_t>(j)] = 0;
            maxv[static_cast<size_t>(j)] =
                std::max(maxv[static_cast<size_t>(j - 1)], rgs[static_cast<size_t>(j - 1)]);
        }
    }
}

void for_each_noncrossing(int n, const std::function<void(const SetPartition&)>& fn) {
    for_each_partition(n, [&](const SetPartition& pi) {
        if (is_noncrossing(pi)) fn(pi);
    });
}

std::vector<SetPartition> enumerate_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& pi) { out.push_back(pi); });
    return out;
}

std::vector<SetPartition> enumerate_noncrossing(int n) {
    std::vector<SetPartition> out;
    for_each_noncrossing(n, [&](const SetPartition& pi) { out.push_back(pi); });
    return out;
}

std::string Histoire::to_string() const {
    std::string s;
    for (const auto& st : steps) {
        switch (st.type) {
            case Type::up: s += "U"; break;
            case Type::flat: s += "F" + std::to_string(st.color); break;
            case Type::down: s += "D" + std::to_string(st.color); break;
        }
    }
    return s;
}

Histoire Histoire::parse(const std::string& s) {
    Histoire h;
    int height = 0;
    size_t i = 0;
    auto read_color = [&]() {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("Histoire::parse: missing color");
        int c = std::stoi(s.substr(i, j - i));
        i = j;
        return c;
    };
    while (i < s.size()) {
        char c = s[i++];
        if (c == 'U') {
            h.steps.push_back({Type::up, height, 0});
            ++height;
        } else if (c == 'F') {
            int color = read_color();
            if (color < 0 || color > height) throw std::invalid_argument("Histoire::parse: flat color out of range");
            h.steps.push_back({Type::flat, height, color});
        } else if (c == 'D') {
            int color = read_color();
            if (color < 1 || color > height) throw std::invalid_argument("Histoire::parse: down color out of range");
            h.steps.push_back({Type::down, height, color});
            --height;
            if (height < 0) throw std::invalid_argument("Histoire::parse: path dips below zero");
        } else {
            throw std::invalid_argument("Histoire::parse: bad step character");
        }
    }
    if (height != 0) throw std::invalid_argument("Histoire::parse: path does not return to zero");
    return h;
}

Histoire histoire(const SetPartition& pi) {
    Histoire h;
    auto st = stats(pi);
    for (int i = 1; i <= pi.n(); ++i) {
        int height = st.gsize[static_cast<size_t>(i - 1)];
        switch (role_of(pi, i)) {
            case Role::opener: h.steps.push_back({Histoire::Type::up, height, 0}); break;
            case Role::singleton: h.steps.push_back({Histoire::Type::flat, height, 0}); break;
            case Role::transient_:
                h.steps.push_back({Histoire::Type::flat, height, st.gamma[static_cast<size_t>(i - 1)]});
                break;
            case Role::closer:
                h.steps.push_back({Histoire::Type::down, height, st.gamma[static_cast<size_t>(i - 1)]});
                break;
        }
    }
    return h;
}

SetPartition histoire_inverse(const Histoire& h) {
    int n = static_cast<int>(h.steps.size());
    std::vector<int> pred(static_cast<size_t>(n) + 1, 0);
    std::vector<int> active;  // open chain ends, in increasing order
    int height = 0;
    for (int i = 1; i <= n; ++i) {
        const auto& st = h.steps[static_cast<size_t>(i - 1)];
        switch (st.type) {
            case Histoire::Type::up:
                active.push_back(i);
                ++height;
                break;
            case Histoire::Type::flat:
                if (st.color < 0 || st.color > height)
                    throw std::invalid_argument("histoire_inverse: flat color out of range");
                if (st.color > 0) {
                    int a = active[static_cast<size_t>(st.color - 1)];
                    pred[static_cast<size_t>(i)] = a;
                    active.erase(active.begin() + (st.color - 1));
                    active.push_back(i);  // i is the running maximum
                }
                break;
            case Histoire::Type::down:
                if (st.color < 1 || st.color > height)
                    throw std::invalid_argument("histoire_inverse: down color out of range");
                pred[static_cast<size_t>(i)] = active[static_cast<size_t>(st.color - 1)];
                active.erase(active.begin() + (st.color - 1));
                --height;
                break;
        }
    }
    if (height != 0) throw std::invalid_argument("histoire_inverse: path does not end at zero");
    // Assemble blocks from predecessor links.
    std::vector<std::vector<int>> blocks;
    std::vector<int> chain_of(static_cast<size_t>(n) + 1, -1);
    for (int i = 1; i <= n; ++i) {
        if (pred[static_cast<size_t>(i)] == 0) {
            chain_of[static_cast<size_t>(i)] = static_cast<int>(blocks.size());
            blocks.push_back({i});
        } else {
            int c = chain_of[static_cast<size_t>(pred[static_cast<size_t>(i)])];
            chain_of[static_cast<size_t>(i)] = c;
            blocks[static_cast<size_t>(c)].push_back(i);
        }
    }
    return SetPartition(n, std::move(blocks));
}

void for_each_composition(int n, const std::function<void(const Composition&)>& fn) {
    if (n == 0) {
        fn({});
        return;
    }
    if (n < 0 || n > 30) throw std::invalid_argument("for_each_composition: 0 <= n <= 30");
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        Composition comp;
        int part = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1ul << i)) {
                comp.push_back(part);
                part = 1;
            } else {
                ++part;
            }
        }
        comp.push_back(part);
        fn(comp);
    }
}

Composition depletion(const Composition& fib_comp) {
    if (!is_fibonacci_composition(fib_comp)) throw std::invalid_argument("depletion: not a Fibonacci composition");
    int p = static_cast<int>(fib_comp.size());
    if (p <= 1) return {};
    Composition dep(static_cast<size_t>(p - 1));
    for (int k = 1; k <= p - 2; ++k) dep[static_cast<size_t>(k - 1)] = fib_comp[static_cast<size_t>(k)] - 1;
    dep[static_cast<size_t>(p - 2)] = fib_comp[static_cast<size_t>(p - 1)];
    return dep;
}

CompositionSplit split(const Composition& kappa) {
    if (kappa.empty()) throw std::invalid_argument("split: empty composition");
    for (int c : kappa)
        if (c < 1) throw std::invalid_argument("split: parts must be positive");
    int m = static_cast<int>(kappa.size());
    CompositionSplit out;
    auto kap = [&](int i) { return kappa[static_cast<size_t>(i - 1)]; };  // 1-based
    if (m <= 2) {
        out.a = kappa;
        out.b = kappa;
    } else if (m == 3) {
        out.a = {kap(1), kap(2) + kap(3)};
        out.b = {kap(1) + kap(3), kap(2)};
    } else {
        int p = m / 2;
        out.a.resize(static_cast<size_t>(p) + 1);
        out.b.resize(static_cast<size_t>(p) + 1);
        out.a[0] = kap(1);
        for (int k = 2; k <= p; ++k) out.a[static_cast<size_t>(k - 1)] = kap(2 * k - 2) + kap(2 * k - 1);
        out.a[static_cast<size_t>(p)] = (m == 2 * p) ? kap(2 * p) : kap(2 * p) + kap(2 * p + 1);
        // beta_1 collects every odd-indexed part (so that B composes n).
        int odd_sum = 0;
        for (int j = 1; 2 * j - 1 <= m; ++j) odd_sum += kap(2 * j - 1);
        out.b[0] = 1 - p + odd_sum;
        for (int k = 2; k <= p; ++k) out.b[static_cast<size_t>(k - 1)] = 1 + kap(2 * k - 2);
        out.b[static_cast<size_t>(p)] = kap(2 * p);
    }
    out.dep_b = depletion(out.b);
    out.u = fib_of(out.a);
    out.v = fib_of(out.b);
    return out;
}

Composition z_map(const SetPartition& pi) {
    if (!is_noncrossing(pi)) throw std::invalid_argument("z_map: partition must be non-crossing");
    auto st = stats(pi);
    int p = static_cast<int>(st.ell.size()) - 1;
    Composition z;
    z.push_back(st.ell[0]);
    for (int k = 1; k <= p; ++k) {
        int gk = k <= static_cast<int>(st.g.size()) ? st.g[static_cast<size_t>(k - 1)] : 0;
        z.push_back(gk);
        int diff = st.ell[static_cast<size_t>(k)] - gk;
        if (k < p || diff > 0) z.push_back(diff);
    }
    for (int c : z)
        if (c < 1) throw std::logic_error("z_map: non-positive part");
    return z;
}

SetPartition z_preimage(const Composition& kappa) {
    auto sp = split(kappa);
    const Composition& ell = sp.a;
    const Composition& g = sp.dep_b;
    int p = static_cast<int>(ell.size()) - 1;
    int total = 0;
    for (int c : kappa) total += c;
    if (p == 0) {
        Histoire h;
        for (int i = 0; i < total; ++i) h.steps.push_back({Histoire::Type::flat, 0, 0});
        return histoire_inverse(h);
    }
    auto ellof = [&](int k) { return k >= 0 && k <= p ? ell[static_cast<size_t>(k)] : 0; };
    auto gof = [&](int k) { return (k >= 1 && k <= static_cast<int>(g.size())) ? g[static_cast<size_t>(k - 1)] : 0; };
    // Inventory: U_k = D_{k-1} = min(g_k, ell_{k-1} - g_{k-1}), D_p = 0,
    // H_{k,k} = g_k - D_{k-1}, H_{0,k} = ell_k - g_k - D_k.
    std::vector<int> U(static_cast<size_t>(p) + 2, 0), D(static_cast<size_t>(p) + 2, 0);
    std::vector<int> H0(static_cast<size_t>(p) + 1, 0), Ht(static_cast<size_t>(p) + 1, 0);
    for (int k = p; k >= 1; --k) {
        U[static_cast<size_t>(k)] = std::min(gof(k), ellof(k - 1) - gof(k - 1));
        D[static_cast<size_t>(k - 1)] = U[static_cast<size_t>(k)];
        Ht[static_cast<size_t>(k)] = gof(k) - D[static_cast<size_t>(k - 1)];
        H0[static_cast<size_t>(k)] = ellof(k) - gof(k) - D[static_cast<size_t>(k)];
        if (U[static_cast<size_t>(k)] < 1 || Ht[static_cast<size_t>(k)] < 0 || H0[static_cast<size_t>(k)] < 0)
            throw std::logic_error("z_preimage: invalid inventory");
    }
    H0[0] = ellof(0) - D[0];
    if (H0[0] < 0) throw std::logic_error("z_preimage: invalid inventory at level 0");
    // Prescribed ordering: climb with all available up-steps, emit singleton
    // flats then transient flats at the current level, then one down-step.
    Histoire h;
    int height = 0;
    while (static_cast<int>(h.steps.size()) < total) {
        if (height < p && U[static_cast<size_t>(height + 1)] > 0) {
            --U[static_cast<size_t>(height + 1)];
            h.steps.push_back({Histoire::Type::up, height, 0});
            ++height;
            continue;
        }
        if (H0[static_cast<size_t>(height)] > 0) {
            --H0[static_cast<size_t>(height)];
            h.steps.push_back({Histoire::Type::flat, height, 0});
            continue;
        }
        if (height >= 1 && Ht[static_cast<size_t>(height)] > 0) {
            --Ht[static_cast<size_t>(height)];
            h.steps.push_back({Histoire::Type::flat, height, height});
            continue;
        }
        if (height >= 1 && D[static_cast<size_t>(height - 1)] > 0) {
            --D[static_cast<size_t>(height - 1)];
            h.steps.push_back({Histoire::Type::down, height, height});
            --height;
            continue;
        }
        throw std::logic_error("z_preimage: inventory exhausted early");
    }
    if (height != 0) throw std::logic_error("z_preimage: path does not close");
    return histoire_inverse(h);
}

MultiplicityMatrix multiplicity_matrix(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("multiplicity_matrix: 1 <= n <= 12");
    MultiplicityMatrix M;
    M.n = n;
    M.level = enumerate_level(n);
    size_t sz = M.level.size();
    M.counts.assign(sz, std::vector<long>(sz, 0));
    for_each_noncrossing(n, [&](const SetPartition& pi) {
        auto sp = split(z_map(pi));
        ++M.counts[static_cast<size_t>(level_index(sp.u))][static_cast<size_t>(level_index(sp.v))];
    });
    return M;
}

}  // namespace yf
