#include "yf/cauchy.hpp"

#include "yf/clone.hpp"

namespace yf {

Rat cauchy_first(int n, const Specialization& pq, const Specialization& xy) {
    BandedSpec<Rat> bs;
    bs.a = [&](long k) -> Rat { return pq.x(k) * xy.x(k); };
    bs.b = [&](long k) -> Rat { return xy.y(k) * (pq.x(k) * pq.x(k + 1) - pq.y(k)); };
    bs.c = [&](long k) -> Rat { return -(pq.y(k) * xy.x(k) * xy.y(k + 1) * pq.x(k + 2)); };
    return banded_det(bs, n);
}

Rat cauchy_second(int n, const Specialization& pq, const Specialization& xy) {
    BandedSpec<Rat> bs;
    bs.a = [&](long k) -> Rat { return pq.x(k) * xy.x(k); };
    bs.b = [&](long k) -> Rat {
        return pq.y(k) * (xy.x(k) * xy.x(k + 1) - xy.y(k)) + xy.y(k) * (pq.x(k) * pq.x(k + 1) - pq.y(k));
    };
    bs.c = [&](long k) -> Rat { return pq.x(k) * xy.x(k) * pq.y(k + 1) * xy.y(k + 1); };
    return banded_det(bs, n);
}

Rat cauchy_first_bruteforce(int n, const Specialization& pq, const Specialization& xy) {
    Rat sum(0);
    for (const auto& w : enumerate_level(n)) sum += clone_homogeneous(w, pq) * clone_schur(w, xy);
    return sum;
}

Rat cauchy_second_bruteforce(int n, const Specialization& pq, const Specialization& xy) {
    Rat sum(0);
    for (const auto& w : enumerate_level(n)) sum += clone_schur(w, pq) * clone_schur(w, xy);
    return sum;
}

RatPoly involution_mgf(const Specialization& s, int n) {
    RatPoly tau = RatPoly::variable();
    BandedSpec<RatPoly> bs;
    bs.a = [&](long k) { return RatPoly(s.x(k)); };
    bs.b = [&](long k) { return (RatPoly(Rat(1)) - RatPoly(Rat(k)) * tau) * RatPoly(s.y(k)); };
    bs.c = [&](long k) { return RatPoly(Rat(0)) - RatPoly(Rat(k) * s.x(k) * s.y(k + 1)) * tau; };
    RatPoly det = banded_det(bs, n);
    Rat denom(1);
    for (long i = 1; i <= n; ++i) denom *= s.x(i);
    std::vector<Rat> coeffs;
    for (int d = 0; d <= det.degree(); ++d) coeffs.push_back(det.coeff(d) / denom);
    return RatPoly(coeffs);
}

double involution_mgf_at(const Specialization& s, int n, double tau) {
    BandedSpec<double> bs;
    bs.a = [&](long k) { return s.xd(k); };
    bs.b = [&](long k) { return (1.0 - k * tau) * s.yd(k); };
    bs.c = [&](long k) { return -(k * tau * s.xd(k) * s.yd(k + 1)); };
    double det = banded_det(bs, n);
    for (long i = 1; i <= n; ++i) det /= s.xd(i);
    return det;
}

HGSequences shifted_plancherel_hg(const Rat& sigma, int N) {
    HGSequences out;
    RatPoly tau = RatPoly::variable();
    out.h.push_back(RatPoly(Rat(1)));
    if (N >= 1) out.h.push_back(RatPoly(Rat(1)));
    for (int n = 2; n <= N; ++n) {
        // (n + sigma - 1) H_n = H_{n-1} + tau (n-1) H_{n-2} + (sigma - 1).
        RatPoly v = out.h[static_cast<size_t>(n - 1)] + tau * RatPoly(Rat(n - 1)) * out.h[static_cast<size_t>(n - 2)] +
                    RatPoly(sigma - 1);
        Rat scale = Rat(1) / (sigma + n - 1);
        std::vector<Rat> cs;
        for (int d = 0; d <= v.degree(); ++d) cs.push_back(v.coeff(d) * scale);
        out.h.push_back(RatPoly(cs));
    }
    // G_n: differentiated recurrences with H_n(sigma, 1) = 1.
    out.g.assign(static_cast<size_t>(N) + 1, Rat(0));
    out.g_fake.assign(static_cast<size_t>(N) + 1, Rat(0));
    for (int n = 2; n <= N; ++n) {
        out.g[static_cast<size_t>(n)] =
            (out.g[static_cast<size_t>(n - 1)] + Rat(n - 1) * out.g[static_cast<size_t>(n - 2)] + Rat(n - 1)) /
            (sigma + n - 1);
        // Fake variant: inhomogeneous term (n-1) + (sigma-1).
        out.g_fake[static_cast<size_t>(n)] =
            (out.g_fake[static_cast<size_t>(n - 1)] + Rat(n - 1) * out.g_fake[static_cast<size_t>(n - 2)] +
             Rat(n - 1) + (sigma - 1)) /
            (sigma + n - 1);
    }
    return out;
}

std::vector<double> shifted_plancherel_g_num(double sigma, int N) {
    std::vector<double> g(static_cast<size_t>(N) + 1, 0.0);
    for (int n = 2; n <= N; ++n)
        g[static_cast<size_t>(n)] =
            (g[static_cast<size_t>(n - 1)] + (n - 1) * g[static_cast<size_t>(n - 2)] + (n - 1)) / (sigma + n - 1);
    return g;
}

std::vector<double> shifted_plancherel_g_fake_num(double sigma, int N) {
    std::vector<double> g(static_cast<size_t>(N) + 1, 0.0);
    for (int n = 2; n <= N; ++n)
        g[static_cast<size_t>(n)] = (g[static_cast<size_t>(n - 1)] + (n - 1) * g[static_cast<size_t>(n - 2)] +
                                     (n - 1) + (sigma - 1)) /
                                    (sigma + n - 1);
    return g;
}

}  // namespace yf
