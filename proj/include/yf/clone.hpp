#pragma once

#include <vector>

#include "yf/poly.hpp"
#include "yf/rational.hpp"
#include "yf/specs.hpp"
#include "yf/words.hpp"

namespace yf {

// Tridiagonal band determinants, by the 2-/3-term recurrences only.
// A_l(m): l x l tridiagonal with diagonal x_{m+1}..x_{m+l}.
Rat det_A(int l, const Specialization& s, int m = 0);
double det_A_num(int l, const Specialization& s, int m = 0);
// B_k(m): (k+1) x (k+1) with first row (y_{m+1}, x_{m+1} y_{m+2}, 0, ...).
Rat det_B(int k, const Specialization& s, int m = 0);
double det_B_num(int k, const Specialization& s, int m = 0);

Rat clone_schur(const FibWord& w, const Specialization& s);
double clone_schur_num(const FibWord& w, const Specialization& s);

Rat clone_homogeneous(const FibWord& w, const Specialization& s);

// phi_{x,y}(w) = s_w / (x_1 ... x_{|w|}); throws if some x_i vanishes.
Rat harmonic_phi(const FibWord& w, const Specialization& s);

// Clone Kostka matrix K_n over YF_n x YF_n in canonical order.
struct KostkaMatrix {
    int n = 0;
    std::vector<FibWord> level;          // canonical order
    std::vector<std::vector<BigInt>> k;  // k[row][col]
};
const KostkaMatrix& kostka(int n);  // memoized
// Exact inverse; K_n is unitriangular, so entries are integers.
std::vector<std::vector<Rat>> kostka_inverse(int n);

// Expansion of s_w(u|t) with t_k = k + eps_1 + ... + eps_k, u_k = 1 + t_{k-1}.
MPoly epsilon_expansion(const FibWord& w);

}  // namespace yf
