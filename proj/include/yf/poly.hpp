#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

// Dense polynomial in one formal variable, coefficient index = degree.
// Used for tau-polynomials and for truncated power series in z.
template <class T>
class Poly {
  public:
    Poly() = default;
    Poly(T constant) { c_.push_back(std::move(constant)); trim(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<T>{T(0), T(1)}); }

    const std::vector<T>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<size_t>(k)];
    }

    T operator()(const T& x) const {
        T acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        std::vector<T> d;
        for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly truncated(int max_deg) const {
        std::vector<T> c;
        for (int i = 0; i <= max_deg && i < static_cast<int>(c_.size()); ++i) c.push_back(c_[static_cast<size_t>(i)]);
        return Poly(std::move(c));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using RatPoly = Poly<Rat>;

// Product of two truncated power series, keeping degrees <= max_deg.
template <class T>
Poly<T> series_mul(const Poly<T>& a, const Poly<T>& b, int max_deg) {
    std::vector<T> c(static_cast<size_t>(max_deg) + 1, T(0));
    for (int i = 0; i <= std::min(max_deg, a.degree()); ++i) {
        if (a.coeff(i) == T(0)) continue;
        for (int j = 0; j + i <= max_deg && j <= b.degree(); ++j) c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return Poly<T>(std::move(c));
}

// Reciprocal of a power series with nonzero constant term, to order max_deg.
template <class T>
Poly<T> series_inverse(const Poly<T>& a, int max_deg) {
    if (a.coeff(0) == T(0)) throw std::domain_error("series_inverse: zero constant term");
    std::vector<T> inv(static_cast<size_t>(max_deg) + 1, T(0));
    T a0 = a.coeff(0);
    inv[0] = T(1) / a0;
    for (int n = 1; n <= max_deg; ++n) {
        T s(0);
        for (int k = 1; k <= n; ++k) s += a.coeff(k) * inv[static_cast<size_t>(n - k)];
        inv[static_cast<size_t>(n)] = -s / a0;
    }
    return Poly<T>(std::move(inv));
}

template <class T>
Poly<T> series_div(const Poly<T>& a, const Poly<T>& b, int max_deg) {
    return series_mul(a, series_inverse(b, max_deg), max_deg).truncated(max_deg);
}

// Sparse multivariate polynomial over BigInt in variables eps_1, eps_2, ...
// Monomial key: exponent vector, trailing zeros trimmed.
class MPoly {
  public:
    using Key = std::vector<uint16_t>;

    MPoly() = default;
    MPoly(long constant) {
        if (constant != 0) terms_[Key{}] = BigInt(constant);
    }
    static MPoly variable(int index) {  // eps_index, 1-based
        MPoly p;
        Key k(static_cast<size_t>(index), 0);
        k.back() = 1;
        p.terms_[k] = 1;
        return p;
    }

    const std::map<Key, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [k, v] : b.terms_) r.add_term(k, v);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [k, v] : b.terms_) r.add_term(k, -v);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ka, va] : a.terms_)
            for (const auto& [kb, vb] : b.terms_) r.add_term(mul_keys(ka, kb), va * vb);
        return r;
    }
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    bool all_coefficients_nonnegative() const {
        for (const auto& [k, v] : terms_)
            if (v < 0) return false;
        return true;
    }

    std::string to_string() const;

  private:
    static Key mul_keys(const Key& a, const Key& b) {
        Key k(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) k[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) k[i] += b[i];
        while (!k.empty() && k.back() == 0) k.pop_back();
        return k;
    }
    void add_term(const Key& k, const BigInt& v) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (v != 0) terms_[k] = v;
        } else {
            it->second += v;
            if (it->second == 0) terms_.erase(it);
        }
    }
    std::map<Key, BigInt> terms_;
};

inline std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += v.get_str();
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            s += "*e" + std::to_string(i + 1);
            if (k[i] > 1) s += "^" + std::to_string(k[i]);
        }
    }
    return s;
}

}  // namespace yf
