#include "yf/moments.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "yf/partitions.hpp"

namespace yf {

MomentSequence moments_motzkin(const Specialization& s, int N) {
    if (N < 0) throw std::invalid_argument("moments_motzkin: N >= 0");
    // f[h] = total weight of length-i prefixes ending at height h.
    std::vector<Rat> f(static_cast<size_t>(N) + 2, Rat(0));
    MomentSequence out;
    out.provenance = "motzkin";
    out.a.push_back(Rat(1));
    f[0] = 1;
    std::vector<Rat> g(f.size());
    for (int i = 1; i <= N; ++i) {
        for (size_t h = 0; h < f.size(); ++h) {
            Rat v = f[h] * s.x(static_cast<long>(h) + 1);
            if (h > 0) v += f[h - 1] * s.y(static_cast<long>(h));
            if (h + 1 < f.size()) v += f[h + 1];
            g[h] = v;
        }
        std::swap(f, g);
        out.a.push_back(f[0]);
    }
    return out;
}

MomentSequence moments_jfraction(const Specialization& s, int N) {
    if (N < 0) throw std::invalid_argument("moments_jfraction: N >= 0");
    // M_k(z) = 1 / (1 - x_{k+1} z - y_{k+1} z^2 M_{k+1}(z)), truncated at
    // degree N.  Depth N+1 suffices: level k first contributes at z^{2k}.
    RatPoly m(Rat(1));
    for (int k = N; k >= 0; --k) {
        std::vector<Rat> den(3, Rat(0));
        den[0] = 1;
        den[1] = -s.x(k + 1);
        RatPoly d(den);
        RatPoly z2m = series_mul(RatPoly(std::vector<Rat>{Rat(0), Rat(0), -s.y(k + 1)}), m, N);
        m = series_inverse(d + z2m, N);
    }
    MomentSequence out;
    out.provenance = "jfraction";
    for (int n = 0; n <= N; ++n) out.a.push_back(m.coeff(n));
    return out;
}

namespace {

Rat partition_weight(const PartitionStats& st, const std::vector<Rat>& c, const std::vector<Rat>& w) {
    // prod_k c_k^{ell_{k-1}} w_k^{g_k}; c and w are 1-based prefixes.
    Rat acc(1);
    for (size_t k = 0; k < st.ell.size(); ++k) acc *= rat_pow(c[k], st.ell[k]);
    for (size_t m = 0; m < st.g.size(); ++m)
        if (st.g[m] != 0) acc *= rat_pow(w[m], st.g[m]);
    return acc;
}

}  // namespace

MomentSequence moments_nc(const Specialization& s, int N) {
    auto ct = ct_from_xy(s, N + 2);
    MomentSequence out;
    out.provenance = "nc";
    out.a.push_back(Rat(1));
    for (int n = 1; n <= N; ++n) {
        Rat sum(0);
        for_each_noncrossing(n, [&](const SetPartition& pi) { sum += partition_weight(stats(pi), ct.c, ct.t); });
        out.a.push_back(sum);
    }
    return out;
}

MomentSequence moments_all_partitions(const Specialization& s, int N) {
    auto ct = ct_from_xy(s, N + 2);
    // eps_k = t_k - t_{k-1} - 1 must be nonnegative (divergent type).
    std::vector<Rat> one_plus_eps(ct.t.size());
    for (size_t k = 0; k < ct.t.size(); ++k) {
        Rat prev = k == 0 ? Rat(0) : ct.t[k - 1];
        Rat eps = ct.t[k] - prev - 1;
        if (eps < 0)
            throw std::domain_error("moments_all_partitions: not of divergent type (eps_" + std::to_string(k + 1) +
                                    " = " + rat_to_string(eps) + " < 0)");
        one_plus_eps[k] = eps + 1;
    }
    MomentSequence out;
    out.provenance = "all-partitions";
    out.a.push_back(Rat(1));
    for (int n = 1; n <= N; ++n) {
        Rat sum(0);
        for_each_partition(n, [&](const SetPartition& pi) { sum += partition_weight(stats(pi), ct.c, one_plus_eps); });
        out.a.push_back(sum);
    }
    return out;
}

MomentSequence moments_compressed(const Specialization& s, int N) {
    auto ct = ct_from_xy(s, N + 2);
    MomentSequence out;
    out.provenance = "compressed";
    out.a.push_back(Rat(1));
    for (int n = 1; n <= N; ++n) {
        // N(kappa) by bucketing the z-map over NC(n).
        std::map<Composition, long> mult;
        for_each_noncrossing(n, [&](const SetPartition& pi) { ++mult[z_map(pi)]; });
        Rat sum(0);
        for (const auto& [kappa, count] : mult) {
            auto sp = split(kappa);
            Rat w(count);
            for (size_t i = 0; i < sp.a.size(); ++i) w *= rat_pow(ct.c[i], sp.a[i]);
            for (size_t i = 0; i < sp.dep_b.size(); ++i) w *= rat_pow(ct.t[i], sp.dep_b[i]);
            sum += w;
        }
        out.a.push_back(sum);
    }
    return out;
}

OrthoPolySequence orthopoly(const Specialization& s, int N) {
    OrthoPolySequence out;
    out.p.push_back(RatPoly(Rat(1)));
    if (N == 0) return out;
    RatPoly t = RatPoly::variable();
    out.p.push_back(t - RatPoly(s.x(1)));
    for (int n = 1; n < N; ++n) {
        RatPoly next = (t - RatPoly(s.x(n + 1))) * out.p.back() - RatPoly(s.y(n)) * out.p[static_cast<size_t>(n - 1)];
        out.p.push_back(next);
    }
    return out;
}

Rat apply_L(const MomentSequence& m, const RatPoly& poly) {
    if (poly.degree() >= static_cast<int>(m.a.size()))
        throw std::invalid_argument("apply_L: moment sequence too short for the polynomial");
    Rat acc(0);
    for (int k = 0; k <= poly.degree(); ++k) acc += poly.coeff(k) * m.a[static_cast<size_t>(k)];
    return acc;
}

MomentSequence shifted_charlier_moments(const Rat& rho, const Rat& sigma, int N) {
    // a_{n+1}(rho, sigma) = (sigma+rho-1) a_n(rho, sigma)
    //   + rho sigma sum_k a_k(rho, sigma) a_{n-k-1}(rho, sigma+1),
    // memoized over the sigma-shift depth.
    std::vector<std::vector<Rat>> a(static_cast<size_t>(N) + 1);
    for (int j = N; j >= 0; --j) {
        Rat sig = sigma + j;
        auto& row = a[static_cast<size_t>(j)];
        row.assign(static_cast<size_t>(N) + 1, Rat(0));
        row[0] = 1;
        for (int n = 0; n < N; ++n) {
            Rat v = (sig + rho - 1) * row[static_cast<size_t>(n)];
            if (j + 1 <= N) {
                Rat conv(0);
                for (int k = 0; k + 1 <= n; ++k)
                    conv += row[static_cast<size_t>(k)] * a[static_cast<size_t>(j + 1)][static_cast<size_t>(n - k - 1)];
                v += rho * sig * conv;
            }
            row[static_cast<size_t>(n + 1)] = v;
        }
    }
    MomentSequence out;
    out.provenance = "recurrence";
    out.a = a[0];
    return out;
}

MomentSequence shifted_charlier_mgf_series(const Rat& rho, const Rat& sigma, int N) {
    // 1F1(s; s - 1/z; -rho) = 1 + sum_r (s)_r rho^r z^r /
    //                              (r! (1-s z)(1-(s+1)z)...(1-(s+r-1)z)).
    auto hyp = [&](const Rat& s) {
        RatPoly acc(Rat(1));
        RatPoly prod(Rat(1));  // running 1/prod_{j<r} (1-(s+j)z) expansion
        Rat coef(1);
        for (int r = 1; r <= N; ++r) {
            coef *= (s + (r - 1)) * rho / r;
            // multiply the running product by 1/(1-(s+r-1)z)
            std::vector<Rat> geo(static_cast<size_t>(N) + 1);
            Rat base = s + (r - 1), pw(1);
            for (int i = 0; i <= N; ++i) {
                geo[static_cast<size_t>(i)] = pw;
                pw *= base;
            }
            prod = series_mul(prod, RatPoly(geo), N);
            // term = coef * z^r * prod
            std::vector<Rat> term(static_cast<size_t>(N) + 1, Rat(0));
            for (int i = 0; i + r <= N; ++i) term[static_cast<size_t>(i + r)] = coef * prod.coeff(i);
            acc += RatPoly(term);
        }
        return acc.truncated(N);
    };
    RatPoly num = hyp(sigma);
    RatPoly den = series_mul(RatPoly(std::vector<Rat>{Rat(1), -(sigma - 1)}), hyp(sigma - 1), N);
    RatPoly m = series_div(num, den, N);
    MomentSequence out;
    out.provenance = "mgf-series";
    for (int n = 0; n <= N; ++n) out.a.push_back(m.coeff(n));
    return out;
}

MomentSequence shifted_charlier_combinatorial(const Rat& rho, const Rat& sigma, int N) {
    MomentSequence out;
    out.provenance = "combinatorial";
    out.a.push_back(Rat(1));
    for (int n = 1; n <= N; ++n) {
        Rat sum(0);
        for_each_partition(n, [&](const SetPartition& pi) {
            auto st = stats(pi);
            sum += rat_pow(rho, st.blocks_star) * rat_pow(sigma, st.gbar1) * rat_pow(rho + sigma - 1, st.singletons);
        });
        out.a.push_back(sum);
    }
    return out;
}

TodaFamily toda_family_charlier() {
    TodaFamily f;
    f.name = "charlier";
    f.x = [](double vr, long n) { return static_cast<double>(n) + std::exp(vr) - 1.0; };
    f.y = [](double vr, long n) { return std::exp(vr) * static_cast<double>(n); };
    return f;
}

TodaFamily toda_family_shifted_charlier(double sigma) {
    TodaFamily f;
    f.name = "shifted-charlier";
    f.x = [sigma](double vr, long n) { return std::exp(vr) + sigma + static_cast<double>(n) - 2.0; };
    f.y = [sigma](double vr, long n) { return std::exp(vr) * (sigma + static_cast<double>(n) - 1.0); };
    return f;
}

TodaFamily toda_family_constant(std::vector<double> xs, std::vector<double> ys) {
    TodaFamily f;
    f.name = "constant";
    f.x = [xs = std::move(xs)](double, long n) { return xs.at(static_cast<size_t>(n - 1)); };
    f.y = [ys = std::move(ys)](double, long n) { return n == 0 ? 0.0 : ys.at(static_cast<size_t>(n - 1)); };
    return f;
}

TodaResidualReport toda_residual(const TodaFamily& fam, const std::vector<double>& grid, int nmax, double step) {
    TodaResidualReport rep;
    for (double vr : grid) {
        for (long n = 1; n <= nmax; ++n) {
            double dx = (fam.x(vr + step, n) - fam.x(vr - step, n)) / (2 * step);
            double dy = (fam.y(vr + step, n) - fam.y(vr - step, n)) / (2 * step);
            double ym1 = fam.y(vr, n - 1);
            double yn = fam.y(vr, n);
            double rx = dx - (yn - ym1);
            double ry = dy - yn * (fam.x(vr, n + 1) - fam.x(vr, n));
            double sx = std::max({1.0, std::abs(yn), std::abs(ym1)});
            double sy = std::max({1.0, std::abs(yn), std::abs(dy)});
            rep.max_residual_x = std::max(rep.max_residual_x, std::abs(rx));
            rep.max_residual_y = std::max(rep.max_residual_y, std::abs(ry));
            rep.max_relative_x = std::max(rep.max_relative_x, std::abs(rx) / sx);
            rep.max_relative_y = std::max(rep.max_relative_y, std::abs(ry) / sy);
        }
    }
    return rep;
}

std::vector<Rat> hankel_determinants(const MomentSequence& m, int kmax) {
    std::vector<Rat> out;
    for (int k = 1; k <= kmax; ++k) {
        if (2 * k - 2 >= static_cast<int>(m.a.size()))
            throw std::invalid_argument("hankel_determinants: moment sequence too short");
        std::vector<std::vector<Rat>> mat(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.a[static_cast<size_t>(i + j)];
        // Fraction-free enough: plain rational Gaussian elimination.
        Rat det(1);
        bool zero = false;
        for (int col = 0; col < k && !zero; ++col) {
            int piv = -1;
            for (int r = col; r < k; ++r)
                if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                zero = true;
                break;
            }
            if (piv != col) {
                std::swap(mat[static_cast<size_t>(piv)], mat[static_cast<size_t>(col)]);
                det = -det;
            }
            det *= mat[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int r = col + 1; r < k; ++r) {
                if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
                Rat factor = mat[static_cast<size_t>(r)][static_cast<size_t>(col)] / mat[static_cast<size_t>(col)][static_cast<size_t>(col)];
                for (int c = col; c < k; ++c)
                    mat[static_cast<size_t>(r)][static_cast<size_t>(c)] -= factor * mat[static_cast<size_t>(col)][static_cast<size_t>(c)];
            }
        }
        out.push_back(zero ? Rat(0) : det);
    }
    return out;
}

}  // namespace yf
