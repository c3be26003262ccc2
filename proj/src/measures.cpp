#include "yf/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "yf/clone.hpp"

namespace yf {

CoherentMeasure measure_level(const Specialization& s, int n) {
    if (n < 0 || n > 14) throw std::invalid_argument("measure_level: 0 <= n <= 14 for materialization");
    CoherentMeasure out;
    out.n = n;
    out.level = enumerate_level(n);
    Rat denom(1);
    for (long i = 1; i <= n; ++i) {
        Rat xi = s.x(i);
        if (xi == 0) throw std::domain_error("measure_level: x_" + std::to_string(i) + " = 0");
        denom *= xi;
    }
    for (const auto& w : out.level) out.weight.push_back(Rat(dim(w)) * clone_schur(w, s) / denom);
    return out;
}

bool verify_coherence(const Specialization& s, int n) {
    auto mn = measure_level(s, n);
    auto mn1 = measure_level(s, n + 1);
    for (size_t i = 0; i < mn.level.size(); ++i) {
        const auto& w = mn.level[i];
        Rat sum(0);
        BigInt dw = dim(w);
        for (const auto& wp : covers_up(w)) {
            size_t j = static_cast<size_t>(level_index(wp));
            sum += mn1.weight[j] * Rat(dw) / Rat(dim(wp));
        }
        if (sum != mn.weight[i]) return false;
    }
    return true;
}

Rat runs_law(const Specialization& s, int n, const std::vector<int>& rs) {
    int consumed = 0;
    Rat prob(1);
    int nj = n;
    for (size_t j = 0; j < rs.size(); ++j) {
        int r = rs[j];
        if (r < 0) throw std::invalid_argument("runs_law: runs must be nonnegative");
        consumed += r + 2;
        if (consumed > n) throw std::invalid_argument("runs_law: n < r~_{[1,k]}");
        Rat denom(1);
        for (long i = nj - r - 1; i <= nj; ++i) denom *= s.x(i);
        prob *= Rat(nj - r - 1) * det_B(r, s, nj - r - 2) / denom;
        nj -= r + 2;
    }
    return prob;
}

HikesDC hikes_dc(int n, const std::vector<int>& hs) {
    int k = static_cast<int>(hs.size());
    HikesDC out;
    out.d.assign(static_cast<size_t>(k) + 2, 0);
    out.c.assign(static_cast<size_t>(k) + 2, 0);
    out.d[0] = n;
    int acc = 0;
    for (int j = 1; j <= k + 1; ++j) {
        out.d[static_cast<size_t>(j)] = n - acc;
        if (j <= k) acc += 2 * hs[static_cast<size_t>(j - 1)] + 1;
    }
    out.c[1] = 0;
    for (int j = 2; j <= k + 1; ++j)
        out.c[static_cast<size_t>(j)] =
            (out.d[static_cast<size_t>(j)] == out.d[static_cast<size_t>(j - 1)] - 1) ? out.c[static_cast<size_t>(j - 1)] + 1
                                                                                     : 1;
    return out;
}

Rat hikes_law(const Specialization& s, int n, const std::vector<int>& hs) {
    int k = static_cast<int>(hs.size());
    if (k < 1) throw std::invalid_argument("hikes_law: need at least one hike");
    int htilde = 0;
    for (int h : hs) {
        if (h < 0) throw std::invalid_argument("hikes_law: hikes must be nonnegative");
        htilde += 2 * h + 1;
    }
    if (n < htilde + 2) throw std::invalid_argument("hikes_law: n < h~_{[1,k]} + 2");
    // d_j = n - h~_{[1,j)} for j = 1..k+1 (with d_0 = d_1 = n); c_j resets to
    // 1 after a positive hike and increments along runs of zero hikes.
    auto dc = hikes_dc(n, hs);
    const auto& d = dc.d;
    const auto& c = dc.c;
    Rat prob(1);
    for (int i = 0; i <= htilde + 1; ++i) prob /= s.x(n - i);
    for (int i = 1; i <= k; ++i)
        for (int j = 2; j <= hs[static_cast<size_t>(i - 1)]; ++j) {
            long idx = d[static_cast<size_t>(i)] - 2 * j + 1;
            prob *= Rat(idx) * s.y(idx);
        }
    for (int j = 1; j <= k + 1; ++j) {
        int dj = d[static_cast<size_t>(j)];
        prob *= Rat(dj - 1) * det_B(c[static_cast<size_t>(j)], s, dj - 2);
        if (j >= 2 && dj == d[static_cast<size_t>(j - 1)] - 1)
            prob /= Rat(dj) * det_B(c[static_cast<size_t>(j - 1)], s, dj - 1);
    }
    return prob;
}

Rat first_hike_zero(const Specialization& s, int n) {
    if (n < 2) throw std::invalid_argument("first_hike_zero: n >= 2");
    return Rat(1) - Rat(n - 1) * s.y(n - 1) / (s.x(n - 1) * s.x(n));
}

// Samplers -------------------------------------------------------------------

namespace {

double log_det_B_num(const Specialization& s, int k, int m) {
    double b2 = s.yd(m + 1);
    long e = 0;
    if (k == 0) return std::log(b2);
    double b1 = s.xd(m + 3) * s.yd(m + 1) - s.xd(m + 1) * s.yd(m + 2);
    for (int j = 2; j <= k; ++j) {
        double cur = s.xd(m + j + 2) * b1 - s.yd(m + j + 1) * b2;
        b2 = b1;
        b1 = cur;
        if (std::abs(b1) > 1e250) {
            b1 = std::ldexp(b1, -1000);
            b2 = std::ldexp(b2, -1000);
            e += 1000;
        }
    }
    if (b1 <= 0) throw std::domain_error("log_det_B_num: nonpositive determinant (specialization not positive?)");
    return std::log(b1) + static_cast<double>(e) * std::log(2.0);
}

double log_det_A_num(const Specialization& s, int l) {
    double a2 = 1, a1 = 1;
    long e = 0;
    for (int j = 1; j <= l; ++j) {
        double cur = s.xd(j) * a1 - (j >= 2 ? s.yd(j - 1) * a2 : 0.0);
        a2 = a1;
        a1 = cur;
        if (std::abs(a1) > 1e250) {
            a1 = std::ldexp(a1, -1000);
            a2 = std::ldexp(a2, -1000);
            e += 1000;
        }
    }
    if (a1 <= 0) throw std::domain_error("log_det_A_num: nonpositive determinant");
    return std::log(a1) + static_cast<double>(e) * std::log(2.0);
}

// log s_w via the prefix product of B determinants and the trailing A.
double log_schur_num(const Specialization& s, const FibWord& w) {
    double acc = 0.0;
    int i = 0;
    const int len = w.length();
    int remaining = w.weight();
    while (i < len) {
        int k = 0;
        while (i < len && w.digit(i) == 1) ++k, ++i;
        if (i == len) return acc + log_det_A_num(s, k);
        ++i;
        remaining -= k + 2;
        acc += log_det_B_num(s, k, remaining);
    }
    return acc;
}

}  // namespace

FibWord sample_word_walk(const Specialization& s, int n, Rng& rng) {
    if (n > 500) throw std::invalid_argument("sample_word_walk: n capped at 500 (O(n^3) walk); use sample_word_blocks");
    FibWord w;
    double logs_w = 0.0;
    for (int m = 0; m < n; ++m) {
        auto ups = covers_up(w);
        std::vector<double> p(ups.size());
        double total = 0.0;
        double lx = std::log(s.xd(m + 1));
        for (size_t i = 0; i < ups.size(); ++i) {
            p[i] = std::exp(log_schur_num(s, ups[i]) - lx - logs_w);
            total += p[i];
        }
        double u = rng.uniform() * total;  // normalize away roundoff
        size_t pick = ups.size() - 1;
        double cum = 0.0;
        for (size_t i = 0; i < ups.size(); ++i) {
            cum += p[i];
            if (u < cum) {
                pick = i;
                break;
            }
        }
        w = ups[pick];
        logs_w = log_schur_num(s, w);
    }
    return w;
}

namespace {

// Dense x/y tables so the samplers avoid per-access closure (and exact
// arithmetic) costs; index 1-based.
struct XYTable {
    std::vector<double> x, y;
};

XYTable make_xy_table(const Specialization& s, int n) {
    XYTable t;
    t.x.assign(static_cast<size_t>(n) + 3, 0.0);
    t.y.assign(static_cast<size_t>(n) + 3, 0.0);
    for (long k = 1; k <= n + 2; ++k) {
        t.x[static_cast<size_t>(k)] = s.xd(k);
        t.y[static_cast<size_t>(k)] = s.yd(k);
    }
    return t;
}

RunSample sample_runs_impl(const XYTable& tab, int n, Rng& rng, int max_blocks) {
    RunSample out;
    int m = n;
    auto x = [&](long k) { return tab.x[static_cast<size_t>(k)]; };
    auto y = [&](long k) { return tab.y[static_cast<size_t>(k)]; };
    while (true) {
        if (max_blocks >= 0 && static_cast<int>(out.blocks.size()) >= max_blocks) return out;  // truncated
        if (m <= 0) {
            out.tail = 0;  // the word ended with a 2
            return out;
        }
        double u = rng.uniform();
        double cum = 0.0;
        bool chosen = false;
        int chosen_r = 0;
        // Anti-diagonal values D_j = A_j(m - j), so that
        // B_r(m-r-2) = y_{m-r-1} D_r - x_{m-r-1} y_{m-r} D_{r-1}, and the
        // running denominator prod_{i=m-r-1}^m x_i.  Values carry explicit
        // powers of two; the block probability itself is O(1).
        double dprev = 0.0, dcur = 1.0;  // D_{-1}, D_0
        long de = 0;
        double px = x(m - 1) * x(m);
        long pxe = 0;
        for (int r = 0; r + 2 <= m; ++r) {
            double b = y(m - r - 1) * dcur - x(m - r - 1) * y(m - r) * dprev;
            double pr = (m - r - 1) * std::ldexp(b / px, static_cast<int>(de - pxe));
            if (pr > 0) cum += pr;
            if (u < cum) {
                chosen = true;
                chosen_r = r;
                break;
            }
            double dnext = x(m - r) * dcur - y(m - r) * dprev;
            dprev = dcur;
            dcur = dnext;
            if (std::abs(dcur) > 1e250) {
                dcur = std::ldexp(dcur, -1000);
                dprev = std::ldexp(dprev, -1000);
                de += 1000;
            }
            if (r + 3 <= m) {
                px *= x(m - r - 2);
                if (px > 1e250) {
                    px = std::ldexp(px, -1000);
                    pxe += 1000;
                }
            }
        }
        if (!chosen) {
            out.tail = m;  // residual all-ones tail
            return out;
        }
        out.blocks.push_back(chosen_r);
        m -= chosen_r + 2;
    }
}

}  // namespace

RunSample sample_runs(const Specialization& s, int n, Rng& rng, int max_blocks) {
    auto tab = make_xy_table(s, n);
    return sample_runs_impl(tab, n, rng, max_blocks);
}

FibWord word_from_runs(const RunSample& runs, int n) {
    if (!runs.tail) throw std::invalid_argument("word_from_runs: truncated sample has no full word");
    std::vector<uint8_t> ds;
    ds.reserve(static_cast<size_t>(n));
    for (int r : runs.blocks) {
        for (int i = 0; i < r; ++i) ds.push_back(1);
        ds.push_back(2);
    }
    for (int i = 0; i < *runs.tail; ++i) ds.push_back(1);
    FibWord w{std::move(ds)};
    if (w.weight() != n) throw std::logic_error("word_from_runs: weight mismatch");
    return w;
}

FibWord sample_word_blocks(const Specialization& s, int n, Rng& rng) {
    return word_from_runs(sample_runs(s, n, rng), n);
}

RunSample sample_runs_charlier(const Rat& rho, int n, Rng& rng, int max_blocks) {
    auto s = spec_charlier(rho);
    return sample_runs(s, n, rng, max_blocks);
}

std::vector<int> sample_hikes_shifted_plancherel(const Rat& sigma, int n, Rng& rng, int max_hikes) {
    auto s = spec_shifted_plancherel(sigma);
    auto w = sample_word_blocks(s, n, rng);
    auto hikes = runs_hikes(w).hikes;
    if (max_hikes >= 0 && static_cast<int>(hikes.size()) > max_hikes) hikes.resize(static_cast<size_t>(max_hikes));
    return hikes;
}

// Limit laws ------------------------------------------------------------

double beta_1_theta_sample(double theta, Rng& rng) { return 1.0 - std::pow(1.0 - rng.uniform(), 1.0 / theta); }

double eta_rho_sample(double rho, Rng& rng) {
    if (rng.uniform() < rho) return 0.0;
    return beta_1_theta_sample(rho, rng);
}

double beta_1_theta_cdf(double theta, double x) {
    if (x <= 0) return 0.0;
    if (x >= 1) return 1.0;
    return 1.0 - std::pow(1.0 - x, theta);
}

double eta_rho_cdf(double rho, double x) {
    if (x < 0) return 0.0;
    return rho + (1.0 - rho) * beta_1_theta_cdf(rho, x);
}

std::vector<double> gem_sticks(double theta, int count, Rng& rng) {
    std::vector<double> u(static_cast<size_t>(count));
    for (auto& v : u) v = beta_1_theta_sample(theta, rng);
    return u;
}

std::vector<double> xi_sigma_sticks(double sigma, int count, Rng& rng) {
    // Coins with success probabilities 1, 1/sigma, 1/sigma^2, ...; N counts
    // the successes before the first failure.
    int N = 0;
    double p = 1.0;
    while (N < count) {
        if (rng.uniform() >= p) break;
        ++N;
        p /= sigma;
    }
    std::vector<double> u(static_cast<size_t>(count), 0.0);
    for (int j = 0; j < N; ++j) u[static_cast<size_t>(j)] = beta_1_theta_sample(sigma / 2.0, rng);
    return u;
}

double xi_sigma_n_law(double sigma, int n) {
    return std::pow(sigma, -0.5 * n * (n - 1)) * (1.0 - std::pow(sigma, -n));
}

std::vector<double> stick_masses(const std::vector<double>& fractions) {
    std::vector<double> x(fractions.size());
    double rest = 1.0;
    for (size_t j = 0; j < fractions.size(); ++j) {
        x[j] = rest * fractions[j];
        rest *= 1.0 - fractions[j];
    }
    return x;
}

ExpectationCompare expectation_compare(double sigma) {
    // E[prod (1 - xi_j)] = sum_m P(N = m) (sigma/(2+sigma))^m.
    double mean = sigma / (2.0 + sigma);
    double s = 0.0;
    for (int m = 1; m <= 400; ++m) {
        double term = xi_sigma_n_law(sigma, m) * std::pow(mean, m);
        s += term;
        if (term < 1e-18 && m > 4) break;
    }
    ExpectationCompare out;
    out.half_expected_mass = 0.5 * (1.0 - s);
    out.inverse_sigma_plus_one = 1.0 / (sigma + 1.0);
    return out;
}

// Scaling verification ----------------------------------------------------

namespace {

// Sup distance between the empirical CDF and a mixed reference CDF; the
// atom at zero enters through the left limit.
double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf,
                   const std::function<double(double)>& cdf_left) {
    std::sort(xs.begin(), xs.end());
    double n = static_cast<double>(xs.size());
    double d = 0.0;
    size_t i = 0;
    while (i < xs.size()) {
        size_t j = i;
        while (j < xs.size() && xs[j] == xs[i]) ++j;  // tie group [i, j)
        double below = static_cast<double>(i) / n;    // F_n(x-)
        double through = static_cast<double>(j) / n;  // F_n(x)
        d = std::max(d, std::abs(through - cdf(xs[i])));
        d = std::max(d, std::abs(below - cdf_left(xs[i])));
        i = j;
    }
    return d;
}

double dkw_epsilon(long samples, double delta) { return std::sqrt(std::log(2.0 / delta) / (2.0 * samples)); }

}  // namespace

ScalingReport verify_scaling_charlier(const Rat& rho, int n, long samples, uint64_t seed, int streams) {
    auto s = spec_charlier(rho);
    double rho_d = to_double(rho);
    ScalingReport rep;
    rep.family = "charlier";
    rep.params["rho"] = rat_to_string(rho);
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    rep.streams = static_cast<uint64_t>(streams);
    rep.dkw_delta = 1e-6;
    rep.dkw_epsilon = dkw_epsilon(samples, rep.dkw_delta);

    std::vector<double> r1_scaled, r2_scaled, r3_scaled;
    long r1_zero = 0, truncated = 0;
    auto tab = make_xy_table(s, n);
    for (int st = 0; st < streams; ++st) {
        Rng rng(seed, static_cast<uint64_t>(st));
        long per = samples / streams + (st < samples % streams ? 1 : 0);
        for (long it = 0; it < per; ++it) {
            auto runs = sample_runs_impl(tab, n, rng, 3);
            if (runs.blocks.empty()) {
                ++truncated;  // all-ones word: no first run of the 1^r 2 form
                continue;
            }
            r1_zero += runs.blocks[0] == 0;
            int m = n;
            for (size_t j = 0; j < runs.blocks.size(); ++j) {
                double scaled = static_cast<double>(runs.blocks[j]) / m;
                if (j == 0) r1_scaled.push_back(scaled);
                if (j == 1) r2_scaled.push_back(scaled);
                if (j == 2) r3_scaled.push_back(scaled);
                m -= runs.blocks[j] + 2;
            }
        }
    }
    auto cdf = [&](double v) { return eta_rho_cdf(rho_d, v); };
    auto cdf_left = [&](double v) { return v <= 0 ? 0.0 : eta_rho_cdf(rho_d, v); };
    rep.stats["p_r1_zero"] = static_cast<double>(r1_zero) / samples;
    rep.stats["p_r1_zero_expected"] = rho_d;
    rep.stats["all_ones_words"] = static_cast<double>(truncated);
    rep.stats["sup_dist_r1"] = ks_distance(r1_scaled, cdf, cdf_left);
    if (!r2_scaled.empty()) rep.stats["sup_dist_r2"] = ks_distance(r2_scaled, cdf, cdf_left);
    if (!r3_scaled.empty()) rep.stats["sup_dist_r3"] = ks_distance(r3_scaled, cdf, cdf_left);
    return rep;
}

ScalingReport verify_scaling_shifted_plancherel(const Rat& sigma, int n, long samples, uint64_t seed, int streams) {
    double sig = to_double(sigma);
    ScalingReport rep;
    rep.family = "shifted-plancherel";
    rep.params["sigma"] = rat_to_string(sigma);
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    rep.streams = static_cast<uint64_t>(streams);
    rep.dkw_delta = 1e-6;
    rep.dkw_epsilon = dkw_epsilon(samples, rep.dkw_delta);

    long h1_pos = 0, h12_pos = 0, h123_pos = 0;
    std::vector<double> h1_scaled;
    auto s = spec_shifted_plancherel(sigma);
    auto tab = make_xy_table(s, n);
    for (int st = 0; st < streams; ++st) {
        Rng rng(seed, static_cast<uint64_t>(st));
        long per = samples / streams + (st < samples % streams ? 1 : 0);
        for (long it = 0; it < per; ++it) {
            auto w = word_from_runs(sample_runs_impl(tab, n, rng, -1), n);
            auto rh = runs_hikes(w);
            const auto& h = rh.hikes;
            const auto& ht = rh.hikes_tilde;
            bool h1 = !h.empty() && h[0] > 0;
            bool h2 = h.size() > 1 && h[1] > 0;
            bool h3 = h.size() > 2 && h[2] > 0;
            h1_pos += h1;
            h12_pos += h1 && h2;
            h123_pos += h1 && h2 && h3;
            h1_scaled.push_back(ht.empty() ? 0.0 : static_cast<double>(ht[0]) / n);
        }
    }
    rep.stats["p_h1_pos"] = static_cast<double>(h1_pos) / samples;
    rep.stats["p_h1_h2_pos"] = static_cast<double>(h12_pos) / samples;
    rep.stats["p_h1_h2_pos_expected"] = 1.0 / sig;  // k+1 = 2 positive hikes
    rep.stats["p_h1_h2_h3_pos"] = static_cast<double>(h123_pos) / samples;
    rep.stats["p_h1_h2_h3_pos_expected"] = 1.0 / (sig * sig);
    auto cdf = [&](double v) { return beta_1_theta_cdf(sig / 2.0, v); };
    rep.stats["sup_dist_htilde1"] = ks_distance(h1_scaled, cdf, cdf);
    return rep;
}

ScalingReport verify_scaling_plancherel(int n, long samples, uint64_t seed, int streams) {
    // GEM(1/2): the first stick fraction is beta(1, 1/2) = the sigma = 1
    // marginal of the shifted Plancherel limit.
    auto rep = verify_scaling_shifted_plancherel(Rat(1), n, samples, seed, streams);
    rep.family = "plancherel";
    rep.params.clear();
    return rep;
}

// Type-I masses -----------------------------------------------------------

namespace {

struct LogProduct {
    double total = 0.0;          // log prod_{k>=1} (1 + t_k)
    double error = 0.0;          // additive error estimate on total
    std::vector<double> prefix;  // prefix[m] = log prod_{k<m} (1+t_k)
    bool divergent = false;
};

LogProduct log_product_one_plus_t(const Specialization& s, int cap) {
    const long K = 200000;
    LogProduct lp;
    std::vector<double> t;
    t.reserve(static_cast<size_t>(K));
    if (s.t_closed_num) {
        for (long k = 1; k <= K; ++k) t.push_back(s.t_closed_num(k));
    } else if (s.t_closed) {
        for (long k = 1; k <= K; ++k) t.push_back(to_double(s.t_closed(k)));
    } else {
        t = ct_from_xy_num(s, static_cast<int>(K)).t;
    }
    lp.prefix.assign(static_cast<size_t>(cap) + 3, 0.0);
    double acc = 0.0;
    for (long k = 1; k <= K; ++k) {
        if (k <= cap + 2) lp.prefix[static_cast<size_t>(k)] = acc;  // log prod_{i<k}
        acc += std::log1p(t[static_cast<size_t>(k - 1)]);
        if (acc > 700.0) {
            lp.divergent = true;
            return lp;
        }
    }
    lp.total = acc;
    if (s.name == "power" && s.params.count("alpha") && s.params.at("alpha") == "2") {
        // Midpoint-rule tail for sum_{k>K} log(1 + kappa/k^2); the error is
        // O(kappa/K^3).
        double kappa = to_double(parse_rat(s.params.at("kappa")));
        double X = static_cast<double>(K) + 0.5;
        lp.total += 2.0 * std::sqrt(kappa) * std::atan(std::sqrt(kappa) / X) - X * std::log1p(kappa / (X * X));
        lp.error = kappa / (X * X * X);
    } else if (s.name == "power") {
        lp.divergent = true;  // alpha = 1: sum kappa/k is harmonic
    } else {
        // K t_K -> 0 is necessary for sum t_k < infinity at ~1/k^2 decay;
        // a sizeable K t_K (e.g. t_k ~ c/k) means the product diverges.
        double ktk = t.back() * static_cast<double>(K);
        if (ktk > 1e-4) {
            lp.divergent = true;
        } else {
            lp.total += ktk;  // integral tail for ~ c/k^2 decay
            lp.error = ktk;
        }
    }
    return lp;
}

}  // namespace

TypeIMassReport type_one_masses(const Specialization& s, int weight_cap) {
    TypeIMassReport rep;
    {
        auto tnum = t_sequence_num(s, 64);
        bool divergent_type = true;
        double prev = 0.0;
        for (double tk : tnum) {
            if (tk - prev - 1.0 < -1e-12) {
                divergent_type = false;
                break;
            }
            prev = tk;
        }
        if (divergent_type) {
            rep.divergent = true;
            rep.note = "divergent type (t_{m+1} >= 1 + t_m for m <= 64): mu_I vanishes identically";
            rep.level_mass.assign(static_cast<size_t>(weight_cap) + 1, 0.0);
            return rep;
        }
    }
    auto lp = log_product_one_plus_t(s, weight_cap);
    if (lp.divergent) {
        rep.mu_one_infinity = 0.0;
        rep.note = "prod (1+t_k) diverges: mu_I(1^inf) = 0, no Type-I support";
        rep.level_mass.assign(static_cast<size_t>(weight_cap) + 1, 0.0);
        return rep;
    }
    rep.mu_one_infinity = std::exp(-lp.total);
    rep.mu_one_infinity_error = rep.mu_one_infinity * lp.error;
    rep.partial_sum = rep.mu_one_infinity;
    for (int m = 0; m <= weight_cap; ++m) {
        auto b = b_inf(m, s, 256, 1e-16);
        // Sum over |u| = m of mu_I(1^inf 2u) = (m+1) B_inf(m) prod_{i>=m} (1+t_i)^{-1}.
        double log_tail_inv = -(lp.total - lp.prefix[static_cast<size_t>(m)]);
        double mass = (m + 1) * b.value * std::exp(log_tail_inv);
        rep.level_mass.push_back(mass);
        rep.partial_sum += mass;
    }
    rep.note = "partial sums increase to 1 (full Type-I support)";
    return rep;
}

double type_one_mass_of(const Specialization& s, const FibWord& u) {
    int m = u.weight();
    auto lp = log_product_one_plus_t(s, m + 2);
    if (lp.divergent) return 0.0;
    auto b = b_inf(m, s, 256, 1e-16);
    auto mm = measure_level(s, m);
    double mu = to_double(mm.weight[static_cast<size_t>(level_index(u))]);
    return std::exp(lp.prefix[static_cast<size_t>(m)]) * (m + 1) * mu * b.value * std::exp(-lp.total);
}

std::vector<double> asch_type_one_limit_masses(double q, int mmax) {
    std::vector<double> out;
    for (int m = 0; m <= mmax; ++m) out.push_back((m + 1) * q * (q - 1) * (q - 1) * std::pow(q, -m - 3));
    return out;
}

}  // namespace yf
