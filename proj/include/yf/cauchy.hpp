#pragma once

#include <functional>
#include <vector>

#include "yf/poly.hpp"
#include "yf/rational.hpp"
#include "yf/specs.hpp"
#include "yf/words.hpp"

namespace yf {

// Banded (quadridiagonal) determinant data: subdiagonal fixed to 1,
// diagonal a_k, first superdiagonal b_k, second superdiagonal c_k.
// The determinant obeys D_n = a_n D_{n-1} - b_{n-1} D_{n-2} + c_{n-2} D_{n-3}.
template <class T>
struct BandedSpec {
    std::function<T(long)> a, b, c;
};

template <class T>
T banded_det(const BandedSpec<T>& bs, int n) {
    if (n < 0) throw std::invalid_argument("banded_det: n >= 0");
    T d3(0), d2(0), d1(1);  // D_{-2}, D_{-1}, D_0
    for (int k = 1; k <= n; ++k) {
        T cur = bs.a(k) * d1;
        if (k >= 2) cur -= bs.b(k - 1) * d2;
        if (k >= 3) cur += bs.c(k - 2) * d3;
        d3 = d2;
        d2 = d1;
        d1 = cur;
    }
    return d1;
}

// First clone Cauchy identity: sum over |w| = n of h_w(p|q) s_w(x|y).
Rat cauchy_first(int n, const Specialization& pq, const Specialization& xy);
// Second clone Cauchy identity: sum over |w| = n of s_w(p|q) s_w(x|y).
Rat cauchy_second(int n, const Specialization& pq, const Specialization& xy);

// Brute-force sides, for oracle checks.
Rat cauchy_first_bruteforce(int n, const Specialization& pq, const Specialization& xy);
Rat cauchy_second_bruteforce(int n, const Specialization& pq, const Specialization& xy);

// E[tau^{#two-cycles}] for a random involution whose shape follows the clone
// measure of s: the quadridiagonal determinant with entries
// (x_k, (1 - k tau) y_k, -k tau x_k y_{k+1}) divided by x_1..x_n.
RatPoly involution_mgf(const Specialization& s, int n);
double involution_mgf_at(const Specialization& s, int n, double tau);

// Shifted Plancherel H_n(sigma, tau) polynomials and two-cycle expectations
// G_n(sigma), together with the fake-variant sequences.
struct HGSequences {
    std::vector<RatPoly> h;       // H_0..H_N as tau-polynomials (exact route)
    std::vector<Rat> g;           // G_n = dH_n/dtau at tau = 1
    std::vector<Rat> g_fake;      // fake shifted Plancherel variant
};
HGSequences shifted_plancherel_hg(const Rat& sigma, int N);

// Float recurrences for large N.
std::vector<double> shifted_plancherel_g_num(double sigma, int N);
std::vector<double> shifted_plancherel_g_fake_num(double sigma, int N);

}  // namespace yf
