#include "yf/clone.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace yf {

namespace {

template <class T, class XF, class YF>
T band_det_A(int l, int m, XF&& x, YF&& y) {
    if (l < 0) throw std::invalid_argument("det_A: l must be >= 0");
    T a2(1), a1(1);  // A_{-1} unused, A_0 = 1
    for (int j = 1; j <= l; ++j) {
        T cur = x(m + j) * a1;
        if (j >= 2) cur -= y(m + j - 1) * a2;
        a2 = a1;
        a1 = cur;
    }
    return a1;
}

template <class T, class XF, class YF>
T band_det_B(int k, int m, XF&& x, YF&& y) {
    if (k < 0) throw std::invalid_argument("det_B: k must be >= 0");
    T b2 = y(m + 1);
    if (k == 0) return b2;
    T b1 = x(m + 3) * y(m + 1) - x(m + 1) * y(m + 2);
    for (int j = 2; j <= k; ++j) {
        T cur = x(m + j + 2) * b1 - y(m + j + 1) * b2;
        b2 = b1;
        b1 = cur;
    }
    return b1;
}

}  // namespace

Rat det_A(int l, const Specialization& s, int m) {
    return band_det_A<Rat>(l, m, [&](long k) { return s.x(k); }, [&](long k) { return s.y(k); });
}

double det_A_num(int l, const Specialization& s, int m) {
    return band_det_A<double>(l, m, [&](long k) { return s.xd(k); }, [&](long k) { return s.yd(k); });
}

Rat det_B(int k, const Specialization& s, int m) {
    return band_det_B<Rat>(k, m, [&](long j) { return s.x(j); }, [&](long j) { return s.y(j); });
}

double det_B_num(int k, const Specialization& s, int m) {
    return band_det_B<double>(k, m, [&](long j) { return s.xd(j); }, [&](long j) { return s.yd(j); });
}

namespace {

// s_w by the prefix recursion: strip 1^k 2, multiply B_k(|rest|), recurse;
// a trailing 1^k contributes A_k(0).
template <class T, class AF, class BF>
T clone_schur_generic(const FibWord& w, AF&& detA, BF&& detB) {
    T acc(1);
    int i = 0;
    const int len = w.length();
    int remaining = w.weight();
    while (i < len) {
        int k = 0;
        while (i < len && w.digit(i) == 1) ++k, ++i;
        if (i == len) {
            acc *= detA(k, 0);
            return acc;
        }
        ++i;  // the 2
        remaining -= k + 2;
        acc *= detB(k, remaining);
    }
    return acc;  // w = empty or ended with a 2 (suffix weight 0): s = acc * A_0
}

}  // namespace

Rat clone_schur(const FibWord& w, const Specialization& s) {
    return clone_schur_generic<Rat>(
        w, [&](int l, int m) { return det_A(l, s, m); }, [&](int k, int m) { return det_B(k, s, m); });
}

double clone_schur_num(const FibWord& w, const Specialization& s) {
    return clone_schur_generic<double>(
        w, [&](int l, int m) { return det_A_num(l, s, m); }, [&](int k, int m) { return det_B_num(k, s, m); });
}

Rat clone_homogeneous(const FibWord& w, const Specialization& s) {
    Rat acc(1);
    int suffix_weight = w.weight();
    for (int i = 0; i < w.length(); ++i) {
        suffix_weight -= w.digit(i);
        if (w.digit(i) == 1)
            acc *= s.x(suffix_weight + 1);
        else
            acc *= s.y(suffix_weight + 1);
    }
    return acc;
}

Rat harmonic_phi(const FibWord& w, const Specialization& s) {
    Rat denom(1);
    for (int i = 1; i <= w.weight(); ++i) {
        Rat xi = s.x(i);
        if (xi == 0) throw std::domain_error("harmonic_phi: x_" + std::to_string(i) + " = 0");
        denom *= xi;
    }
    return clone_schur(w, s) / denom;
}

namespace {

std::map<int, KostkaMatrix>& kostka_cache() {
    static std::map<int, KostkaMatrix> cache;
    return cache;
}
std::mutex kostka_mutex;

KostkaMatrix build_kostka(int n, const std::map<int, KostkaMatrix>& cache) {
    KostkaMatrix K;
    K.n = n;
    K.level = enumerate_level(n);
    size_t sz = K.level.size();
    K.k.assign(sz, std::vector<BigInt>(sz, BigInt(0)));
    if (n <= 1) {
        K.k[0][0] = 1;
        return K;
    }
    const KostkaMatrix& K1 = cache.at(n - 1);
    const KostkaMatrix& K2 = cache.at(n - 2);
    // Canonical order lists 2 YF_{n-2} first, then 1 YF_{n-1}; the block
    // layout is K_n = [[K_{n-2}, D_{n-1} K_{n-1}], [0, K_{n-1}]].
    size_t top = K2.level.size();
    for (size_t i = 0; i < top; ++i)
        for (size_t j = 0; j < top; ++j) K.k[i][j] = K2.k[i][j];
    for (size_t i = 0; i < K1.level.size(); ++i)
        for (size_t j = 0; j < K1.level.size(); ++j) K.k[top + i][top + j] = K1.k[i][j];
    // D_{n-1}: rows YF_{n-2}, cols YF_{n-1}; (u, w) = 1 iff u covers up to w.
    for (size_t i = 0; i < top; ++i) {
        for (const auto& w : covers_up(K2.level[i])) {
            size_t r = static_cast<size_t>(level_index(w));
            for (size_t j = 0; j < K1.level.size(); ++j) K.k[i][top + j] += K1.k[r][j];
        }
    }
    return K;
}

}  // namespace

const KostkaMatrix& kostka(int n) {
    if (n < 0) throw std::invalid_argument("kostka: n must be >= 0");
    std::lock_guard<std::mutex> lock(kostka_mutex);
    auto& cache = kostka_cache();
    for (int m = 0; m <= n; ++m)
        if (!cache.count(m)) cache.emplace(m, build_kostka(m, cache));
    return cache.at(n);
}

std::vector<std::vector<Rat>> kostka_inverse(int n) {
    const KostkaMatrix& K = kostka(n);
    size_t sz = K.level.size();
    // K_n is unitriangular in canonical order (rows 1u vs cols 2v vanish),
    // so back-substitution is exact and the inverse is integral.
    std::vector<std::vector<Rat>> inv(sz, std::vector<Rat>(sz, Rat(0)));
    for (size_t j = 0; j < sz; ++j) {
        // Solve K x = e_j by back substitution (K upper triangular, diag 1).
        for (size_t ii = sz; ii-- > 0;) {
            Rat v = (ii == j) ? Rat(1) : Rat(0);
            for (size_t kk = ii + 1; kk < sz; ++kk)
                if (K.k[ii][kk] != 0 && inv[kk][j] != 0) v -= Rat(K.k[ii][kk]) * inv[kk][j];
            inv[ii][j] = v;
        }
    }
    return inv;
}

MPoly epsilon_expansion(const FibWord& w) {
    if (w.weight() > 8) throw std::invalid_argument("epsilon_expansion: weight capped at 8");
    // t_k = k + eps_1 + ... + eps_k; u_k = 1 + t_{k-1}.
    auto t = [](long k) {
        MPoly p(k);
        for (long i = 1; i <= k; ++i) p += MPoly::variable(static_cast<int>(i));
        return p;
    };
    auto u = [&](long k) { return MPoly(1) + t(k - 1); };
    return clone_schur_generic<MPoly>(
        w,
        [&](int l, int m) { return band_det_A<MPoly>(l, m, u, t); },
        [&](int k, int m) { return band_det_B<MPoly>(k, m, u, t); });
}

}  // namespace yf
