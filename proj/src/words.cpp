#include "yf/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace yf {

FibWord::FibWord(std::vector<uint8_t> digits) : d_(std::move(digits)) {
    for (uint8_t d : d_) {
        if (d != 1 && d != 2) throw std::invalid_argument("FibWord: digits must be 1 or 2");
        weight_ += d;
    }
}

FibWord FibWord::parse(const std::string& s) {
    if (s.empty() || s == "empty") return FibWord{};
    std::vector<uint8_t> ds;
    ds.reserve(s.size());
    for (char c : s) {
        if (c == '1') ds.push_back(1);
        else if (c == '2') ds.push_back(2);
        else throw std::invalid_argument("FibWord: bad digit '" + std::string(1, c) + "' in \"" + s + "\"");
    }
    return FibWord(std::move(ds));
}

FibWord FibWord::prepended(uint8_t digit) const {
    std::vector<uint8_t> ds;
    ds.reserve(d_.size() + 1);
    ds.push_back(digit);
    ds.insert(ds.end(), d_.begin(), d_.end());
    return FibWord(std::move(ds));
}

FibWord FibWord::suffix(int count) const {
    if (count < 0 || count > length()) throw std::out_of_range("FibWord::suffix");
    return FibWord(std::vector<uint8_t>(d_.begin() + count, d_.end()));
}

std::string FibWord::to_string() const {
    std::string s;
    s.reserve(d_.size());
    for (uint8_t d : d_) s.push_back(d == 2 ? '2' : '1');
    return s;
}

bool FibWord::operator<(const FibWord& o) const {
    size_t n = std::min(d_.size(), o.d_.size());
    for (size_t i = 0; i < n; ++i) {
        if (d_[i] != o.d_[i]) return d_[i] > o.d_[i];  // 2 sorts before 1
    }
    return d_.size() < o.d_.size();
}

std::vector<FibWord> covers_up(const FibWord& w) {
    std::vector<FibWord> out;
    // F1: prepend a 1.
    out.push_back(w.prepended(1));
    const auto& d = w.digits();
    int lead2 = 0;
    while (lead2 < w.length() && d[static_cast<size_t>(lead2)] == 2) ++lead2;
    // F2: 2^k 1 v -> 2^{k+1} v.
    if (lead2 < w.length()) {
        std::vector<uint8_t> ds;
        ds.reserve(d.size() + 1);
        for (int i = 0; i < lead2 + 1; ++i) ds.push_back(2);
        ds.insert(ds.end(), d.begin() + lead2 + 1, d.end());
        out.emplace_back(std::move(ds));
    }
    // F3: 2^k v -> 2^l 1 2^{k-l} v for l = 1..k.
    for (int l = 1; l <= lead2; ++l) {
        std::vector<uint8_t> ds;
        ds.reserve(d.size() + 1);
        for (int i = 0; i < l; ++i) ds.push_back(2);
        ds.push_back(1);
        for (int i = l; i < lead2; ++i) ds.push_back(2);
        ds.insert(ds.end(), d.begin() + lead2, d.end());
        out.emplace_back(std::move(ds));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FibWord> covers_down(const FibWord& w) {
    std::vector<FibWord> out;
    if (w.weight() == 0) return out;
    const auto& d = w.digits();
    int m = 0;
    while (m < w.length() && d[static_cast<size_t>(m)] == 2) ++m;
    if (m == 0) {
        // w = 1u: only rule F1 applies in reverse.
        out.push_back(w.suffix(1));
    } else {
        // F2 inverse: w = 2^{k+1} (2^{m-k-1} z) came from 2^k 1 2^{m-k-1} z.
        for (int k = 0; k < m; ++k) {
            std::vector<uint8_t> ds;
            ds.reserve(d.size());
            for (int i = 0; i < k; ++i) ds.push_back(2);
            ds.push_back(1);
            for (int i = k + 1; i < m; ++i) ds.push_back(2);
            ds.insert(ds.end(), d.begin() + m, d.end());
            out.emplace_back(std::move(ds));
        }
        // F3 inverse: w = 2^m 1 y came from 2^m y (one edge regardless of
        // how the trailing 2-block of y is split).
        if (m < w.length()) {
            std::vector<uint8_t> ds;
            ds.reserve(d.size() - 1);
            for (int i = 0; i < m; ++i) ds.push_back(2);
            ds.insert(ds.end(), d.begin() + m + 1, d.end());
            out.emplace_back(std::move(ds));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BigInt dim(const FibWord& w) {
    // Product over the positions of 2's: splitting w = u2v at such a
    // position contributes a factor |v| + 1.
    BigInt result = 1;
    int suffix_weight = w.weight();
    for (int i = 0; i < w.length(); ++i) {
        suffix_weight -= w.digit(i);
        if (w.digit(i) == 2) result *= suffix_weight + 1;
    }
    return result;
}

std::vector<FibWord> enumerate_level(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_level: n must be >= 0");
    std::vector<std::vector<FibWord>> levels;
    levels.reserve(static_cast<size_t>(n) + 1);
    levels.push_back({FibWord{}});
    if (n >= 1) levels.push_back({FibWord::parse("1")});
    for (int m = 2; m <= n; ++m) {
        std::vector<FibWord> level;
        for (const auto& v : levels[static_cast<size_t>(m - 2)]) level.push_back(v.prepended(2));
        for (const auto& v : levels[static_cast<size_t>(m - 1)]) level.push_back(v.prepended(1));
        levels.push_back(std::move(level));
    }
    return levels[static_cast<size_t>(n)];
}

RunsHikes runs_hikes(const FibWord& w) {
    RunsHikes rh;
    const auto& d = w.digits();
    const int len = w.length();
    // Runs: w = 1^{r_1} 2 1^{r_2} 2 ... 2 1^{r_p}.
    {
        int i = 0;
        while (true) {
            int r = 0;
            while (i < len && d[static_cast<size_t>(i)] == 1) ++r, ++i;
            rh.runs.push_back(r);
            if (i >= len) break;
            ++i;  // skip the 2
        }
        int p = static_cast<int>(rh.runs.size());
        for (int k = 0; k < p; ++k) rh.runs_tilde.push_back(k + 1 < p ? rh.runs[static_cast<size_t>(k)] + 2 : rh.runs[static_cast<size_t>(k)]);
    }
    // Hikes: w = 2^{h_1} 1 2^{h_2} 1 ... 1 2^{h_m}.
    {
        int i = 0;
        while (true) {
            int h = 0;
            while (i < len && d[static_cast<size_t>(i)] == 2) ++h, ++i;
            rh.hikes.push_back(h);
            if (i >= len) break;
            ++i;  // skip the 1
        }
        int m = static_cast<int>(rh.hikes.size());
        for (int k = 0; k < m; ++k) rh.hikes_tilde.push_back(k + 1 < m ? 2 * rh.hikes[static_cast<size_t>(k)] + 1 : 2 * rh.hikes[static_cast<size_t>(k)]);
    }
    return rh;
}

int total_hike(const FibWord& w) {
    int c = 0;
    for (uint8_t d : w.digits()) c += (d == 2);
    return c;
}

int total_run(const FibWord& w) {
    int c = 0;
    for (uint8_t d : w.digits()) c += (d == 1);
    return c;
}

RibbonComposition ribbon(const FibWord& w) {
    if (w.empty()) return {};
    auto rh = runs_hikes(w);
    const auto& r = rh.runs;
    int p = static_cast<int>(r.size());
    RibbonComposition comp(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        int add = (i == 0 || i == p - 1) ? 1 : 2;
        comp[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] + add;
    }
    if (p == 1) comp[0] = r[0];  // w = 1^n has no 2's: composition (n)
    return comp;
}

bool is_fibonacci_composition(const std::vector<int>& comp) {
    for (int c : comp)
        if (c < 1) return false;
    for (size_t i = 1; i + 1 < comp.size(); ++i)
        if (comp[i] <= 1) return false;
    return true;
}

FibWord fib_of(const std::vector<int>& comp) {
    if (!is_fibonacci_composition(comp)) throw std::invalid_argument("fib_of: not a Fibonacci composition");
    std::vector<uint8_t> ds;
    int p = static_cast<int>(comp.size());
    if (p == 0) return FibWord{};
    if (p == 1) {
        ds.assign(static_cast<size_t>(comp[0]), 1);
        return FibWord(std::move(ds));
    }
    for (int i = 0; i < p; ++i) {
        int sub = (i == 0 || i == p - 1) ? 1 : 2;
        int r = comp[static_cast<size_t>(i)] - sub;
        if (r < 0) throw std::invalid_argument("fib_of: not a Fibonacci composition");
        for (int j = 0; j < r; ++j) ds.push_back(1);
        if (i + 1 < p) ds.push_back(2);
    }
    return FibWord(std::move(ds));
}

bool dominates(const FibWord& u, const FibWord& v) {
    int n = std::min(u.length(), v.length());
    int su = 0, sv = 0;
    for (int i = 0; i < n; ++i) {
        su += u.digit(i);
        sv += v.digit(i);
        if (su < sv) return false;
    }
    return true;
}

int level_index(const FibWord& w) {
    auto level = enumerate_level(w.weight());
    auto it = std::lower_bound(level.begin(), level.end(), w);
    return static_cast<int>(it - level.begin());
}

}  // namespace yf
