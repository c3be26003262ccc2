#include "yf/specs.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "yf/clone.hpp"

namespace yf {

std::string to_string(SpecType t) {
    switch (t) {
        case SpecType::divergent: return "divergent";
        case SpecType::convergent: return "convergent";
        case SpecType::rejected: return "rejected";
        default: return "unknown";
    }
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::divergent: return "divergent";
        case Verdict::convergent: return "convergent";
        case Verdict::rejected: return "rejected";
        default: return "inconclusive";
    }
}

Rat Specialization::x(long k) const {
    if (!exact) throw std::domain_error("specialization '" + name + "' has no exact closures");
    return x_exact(k);
}

Rat Specialization::y(long k) const {
    if (!exact) throw std::domain_error("specialization '" + name + "' has no exact closures");
    return y_exact(k);
}

namespace {

// q-integer [k]_q = 1 + q + ... + q^{k-1}.
Rat qint(const Rat& q, long k) {
    Rat s(0), p(1);
    for (long i = 0; i < k; ++i) {
        s += p;
        p *= q;
    }
    return s;
}

void attach_num_from_exact(Specialization& s) {
    auto xe = s.x_exact;
    auto ye = s.y_exact;
    s.x_num = [xe](long k) { return to_double(xe(k)); };
    s.y_num = [ye](long k) { return to_double(ye(k)); };
    if (s.t_closed) {
        auto tc = s.t_closed;
        s.t_closed_num = [tc](long k) { return to_double(tc(k)); };
    }
}

std::string param_str(const Rat& r) { return rat_to_string(r); }

}  // namespace

Specialization spec_plancherel() {
    Specialization s;
    s.name = "plancherel";
    s.exact = true;
    s.x_exact = [](long k) -> Rat { return Rat(k); };
    s.y_exact = [](long k) -> Rat { return Rat(k); };
    s.c_closed = [](long) -> Rat { return Rat(1); };
    s.t_closed = [](long k) -> Rat { return Rat(k); };
    s.declared = SpecType::divergent;
    s.declared_note = "t_k = k, so t_{k+1} - t_k = 1";
    attach_num_from_exact(s);
    return s;
}

Specialization spec_charlier(const Rat& rho) {
    Specialization s;
    s.name = "charlier";
    s.params["rho"] = param_str(rho);
    s.exact = true;
    s.x_exact = [rho](long k) -> Rat { return Rat(k) + rho - 1; };
    s.y_exact = [rho](long k) -> Rat { return Rat(k) * rho; };
    s.c_closed = [rho](long) -> Rat { return rho; };
    s.t_closed = [rho](long k) -> Rat { return Rat(k) / rho; };
    s.declared = SpecType::divergent;
    s.declared_note = "t_k = k/rho, so t_{k+1} - t_k = 1/rho >= 1 for rho <= 1";
    if (!(rho > 0 && rho <= 1)) {
        s.params_in_range = false;
        s.range_note = "rho must lie in (0,1]";
        s.declared = SpecType::unknown;
    }
    attach_num_from_exact(s);
    return s;
}

Specialization spec_al_salam_carlitz1(const Rat& rho, const Rat& q) {
    Specialization s;
    s.name = "al-salam-carlitz";
    s.params["rho"] = param_str(rho);
    s.params["q"] = param_str(q);
    s.exact = true;
    s.x_exact = [rho, q](long k) -> Rat { return rho * rat_pow(q, k - 1) + qint(q, k - 1); };
    s.y_exact = [rho, q](long k) -> Rat { return rho * rat_pow(q, k - 1) * qint(q, k); };
    s.c_closed = [rho, q](long k) -> Rat { return rho * rat_pow(q, k - 1); };
    s.t_closed = [rho, q](long k) -> Rat { return qint(q, k) / (rho * rat_pow(q, k)); };
    s.declared = SpecType::divergent;
    s.declared_note = "t_{k+1} - t_k = 1/(rho q^{k+1}) >= 1 for rho <= 1, q < 1";
    if (!(rho > 0 && rho <= 1 && q > 0 && q < 1)) {
        s.params_in_range = false;
        s.range_note = "requires rho in (0,1], q in (0,1)";
        s.declared = SpecType::unknown;
    }
    attach_num_from_exact(s);
    return s;
}

Specialization spec_al_salam_chihara(const Rat& rho, const Rat& q) {
    Specialization s;
    s.name = "al-salam-chihara";
    s.params["rho"] = param_str(rho);
    s.params["q"] = param_str(q);
    s.exact = true;
    s.x_exact = [rho, q](long k) -> Rat { return rho + qint(q, k - 1); };
    s.y_exact = [rho, q](long k) -> Rat { return rho * qint(q, k); };
    s.c_closed = [rho](long) -> Rat { return rho; };
    s.t_closed = [rho, q](long k) -> Rat { return qint(q, k) / rho; };
    s.declared = SpecType::divergent;
    s.declared_note = "t_{k+1} - t_k = q^k/rho >= 1 for rho <= 1, q >= 1";
    if (!(rho > 0 && rho <= 1 && q >= 1)) {
        s.params_in_range = false;
        s.range_note = "requires rho in (0,1], q >= 1";
        s.declared = SpecType::unknown;
    }
    attach_num_from_exact(s);
    return s;
}

Specialization spec_q_charlier(const Rat& rho, const Rat& q) {
    Specialization s;
    s.name = "q-charlier";
    s.params["rho"] = param_str(rho);
    s.params["q"] = param_str(q);
    s.exact = true;
    s.x_exact = [rho, q](long k) -> Rat {
        return rho * rat_pow(q, 2 * k - 2) + qint(q, k - 1) * (Rat(1) + rho * (q - 1) * rat_pow(q, k - 2));
    };
    s.y_exact = [rho, q](long k) -> Rat {
        return rho * rat_pow(q, 2 * k - 2) * qint(q, k) * (Rat(1) + rho * (q - 1) * rat_pow(q, k - 1));
    };
    s.c_closed = [rho, q](long k) -> Rat { return rho * rat_pow(q, 2 * k - 2); };
    s.t_closed = [rho, q](long k) -> Rat {
        return qint(q, k) * (Rat(1) + rho * (q - 1) * rat_pow(q, k - 1)) / (rho * rat_pow(q, 2 * k));
    };
    s.declared = SpecType::divergent;
    s.declared_note = "t_{k+1} - t_k = ((rho-1)q^{k+1} - rho q^k + q + 1)/(rho q^{2k+2}) >= 1 for rho, q in (0,1]";
    if (!(rho > 0 && rho <= 1 && q > 0 && q <= 1)) {
        s.params_in_range = false;
        s.range_note = "requires rho, q in (0,1]";
        s.declared = SpecType::unknown;
    }
    attach_num_from_exact(s);
    return s;
}

Specialization spec_cigler_zeng(const Rat& q, const Rat& rho) {
    Specialization s;
    s.name = "cigler-zeng";
    s.params["q"] = param_str(q);
    if (rho != 1) s.params["rho"] = param_str(rho);
    s.exact = true;
    s.x_exact = [rho, q](long k) -> Rat { return rat_pow(q, k - 1) + rho - 1; };
    s.y_exact = [rho, q](long k) -> Rat { return rho * (rat_pow(q, k) - 1); };
    s.c_closed = [rho](long) -> Rat { return rho; };
    s.t_closed = [rho, q](long k) -> Rat { return (rat_pow(q, k) - 1) / rho; };
    if (q >= rho + 1 && rho > 0 && rho <= 1) {
        s.declared = SpecType::divergent;
        s.declared_note = "t_1 = (q-1)/rho >= 1 and t_{k+1} - t_k = q^k(q-1)/rho >= 1 for q >= 1 + rho";
    } else if (q > 1 && rho > 0 && rho <= 1) {
        // The paper's stated bound q >= q0 (root of z^3 = z^2 + 1) fails the
        // m = 0 divergence inequality: t_1 = (q-1)/rho < 1 for q < 1 + rho,
        // which forces B_l(0) < 0 for large l.
        s.declared = SpecType::rejected;
        s.params_in_range = false;
        s.range_note = "divergent type requires q >= 1 + rho; below that t_1 < 1 and some B_l(0) < 0";
    } else {
        s.declared = SpecType::unknown;
        s.params_in_range = false;
        s.range_note = "requires q > 1, rho in (0,1]";
    }
    attach_num_from_exact(s);
    return s;
}

Specialization spec_cigler_zeng_num(double q) {
    Specialization s;
    s.name = "cigler-zeng";
    std::ostringstream os;
    os << q;
    s.params["q"] = os.str();
    s.exact = false;
    s.x_num = [q](long k) { return std::pow(q, static_cast<double>(k - 1)); };
    s.y_num = [q](long k) { return std::pow(q, static_cast<double>(k)) - 1.0; };
    s.t_closed_num = [q](long k) { return std::pow(q, static_cast<double>(k)) - 1.0; };
    s.declared = q >= 2.0 ? SpecType::divergent : SpecType::rejected;
    if (q < 2.0) {
        s.params_in_range = false;
        s.range_note = "divergent type requires q >= 2 when rho = 1";
    }
    return s;
}

Specialization spec_fake_shifted_charlier(const Rat& rho, const Rat& sigma) {
    Specialization s;
    s.name = "fake-shifted-charlier";
    s.params["rho"] = param_str(rho);
    s.params["sigma"] = param_str(sigma);
    s.exact = true;
    s.x_exact = [rho, sigma](long k) -> Rat { return k == 1 ? rho : Rat(k) + rho + sigma - 2; };
    s.y_exact = [rho, sigma](long k) -> Rat { return rho * (Rat(k) + sigma - 1); };
    s.c_closed = [rho](long) -> Rat { return rho; };
    s.t_closed = [rho, sigma](long k) -> Rat { return (sigma + k - 1) / rho; };
    s.declared = SpecType::divergent;
    s.declared_note = "t_k = (sigma+k-1)/rho with t_1 >= 1 and increments 1/rho >= 1";
    if (!(rho > 0 && rho <= 1 && sigma >= 1)) {
        s.params_in_range = false;
        s.range_note = "requires rho in (0,1], sigma >= 1";
        s.declared = SpecType::unknown;
    }
    attach_num_from_exact(s);
    return s;
}

Specialization spec_shifted_charlier(const Rat& rho, const Rat& sigma) {
    Specialization s;
    s.name = "shifted-charlier";
    s.params["rho"] = param_str(rho);
    s.params["sigma"] = param_str(sigma);
    s.exact = true;
    s.x_exact = [rho, sigma](long k) -> Rat { return Rat(k) + rho + sigma - 2; };
    s.y_exact = [rho, sigma](long k) -> Rat { return (Rat(k) + sigma - 1) * rho; };
    s.declared = sigma > 1 ? SpecType::convergent : SpecType::divergent;
    if (!(rho > 0 && rho <= 1 && sigma >= 1)) {
        s.params_in_range = false;
        s.range_note = "requires rho in (0,1], sigma >= 1";
        s.declared = SpecType::unknown;
    }
    attach_num_from_exact(s);
    return s;
}

Specialization spec_shifted_plancherel(const Rat& sigma) {
    Specialization s = spec_shifted_charlier(Rat(1), sigma);
    s.name = "shifted-plancherel";
    s.params.erase("rho");
    return s;
}

Specialization spec_power(int alpha, const Rat& kappa) {
    if (alpha != 1 && alpha != 2) throw std::invalid_argument("spec_power: alpha must be 1 or 2");
    Specialization s;
    s.name = "power";
    s.params["alpha"] = std::to_string(alpha);
    s.params["kappa"] = param_str(kappa);
    s.exact = true;
    auto t = [alpha, kappa](long k) -> Rat {
        if (k <= 0) return Rat(0);
        return kappa / rat_pow(Rat(k), alpha);
    };
    s.t_closed = t;
    s.c_closed = [](long) -> Rat { return Rat(1); };
    s.x_exact = [t](long k) -> Rat { return Rat(1) + t(k - 1); };
    s.y_exact = [t](long k) -> Rat { return t(k); };
    double thr = power_kappa_threshold(alpha);
    if (kappa > 0 && to_double(kappa) <= thr) {
        s.declared = SpecType::convergent;
    } else if (kappa > 0) {
        s.declared = SpecType::rejected;
        s.params_in_range = false;
        std::ostringstream os;
        os << "kappa exceeds the positivity threshold ~" << thr << " (root of B_inf(1))";
        s.range_note = os.str();
    } else {
        s.declared = SpecType::unknown;
        s.params_in_range = false;
        s.range_note = "kappa must be positive";
    }
    attach_num_from_exact(s);
    return s;
}

Specialization spec_alt_q_charlier(const Rat& rho, const Rat& q) {
    Specialization s;
    s.name = "alt-q-charlier";
    s.params["rho"] = param_str(rho);
    s.params["q"] = param_str(q);
    s.exact = true;
    s.x_exact = [rho, q](long k) -> Rat {
        Rat num = rat_pow(q, k - 1) * (Rat(1) + rho * rat_pow(q, k - 2) + rho * rat_pow(q, k - 1) - rho * rat_pow(q, 2 * k - 2));
        Rat den = (Rat(1) + rho * rat_pow(q, 2 * k - 3)) * (Rat(1) + rho * rat_pow(q, 2 * k - 1));
        return num / den;
    };
    s.y_exact = [rho, q](long k) -> Rat {
        Rat num = rho * rat_pow(q, 3 * k - 2) * (Rat(1) - rat_pow(q, k)) * (Rat(1) + rho * rat_pow(q, k - 1));
        Rat den = (Rat(1) + rho * rat_pow(q, 2 * k)) * rat_pow(Rat(1) + rho * rat_pow(q, 2 * k - 1), 2) *
                  (Rat(1) + rho * rat_pow(q, 2 * k - 2));
        return num / den;
    };
    s.c_closed = [rho, q](long k) -> Rat {
        return rat_pow(q, k - 1) * (Rat(1) + rho * rat_pow(q, k - 1)) /
               ((Rat(1) + rho * rat_pow(q, 2 * k - 1)) * (Rat(1) + rho * rat_pow(q, 2 * k - 2)));
    };
    s.t_closed = [rho, q](long k) -> Rat {
        return rho * rat_pow(q, k - 1) * (Rat(1) - rat_pow(q, k)) * (Rat(1) + rho * rat_pow(q, 2 * k + 1)) /
               ((Rat(1) + rho * rat_pow(q, k)) * (Rat(1) + rho * rat_pow(q, 2 * k - 1)));
    };
    s.probe_only = true;
    s.declared = SpecType::unknown;
    s.declared_note = "conjectural family: classifier output is reported, never asserted";
    attach_num_from_exact(s);
    return s;
}

Specialization spec_laguerre(const Rat& alpha) {
    Specialization s;
    s.name = "laguerre";
    s.params["alpha"] = param_str(alpha);
    s.exact = true;
    s.x_exact = [alpha](long k) -> Rat { return Rat(2 * k) + alpha - 1; };
    s.y_exact = [alpha](long k) -> Rat { return Rat(k) * (Rat(k) + alpha); };
    s.declared = SpecType::rejected;
    s.declared_note = "B_2(1) = -(55 + 47 alpha + 17 alpha^2 + alpha^3) < 0 for alpha > -1";
    attach_num_from_exact(s);
    return s;
}

Specialization spec_meixner(const Rat& beta, const Rat& c) {
    Specialization s;
    s.name = "meixner";
    s.params["beta"] = param_str(beta);
    s.params["c"] = param_str(c);
    if (c == 1) throw std::invalid_argument("spec_meixner: c must differ from 1");
    s.exact = true;
    s.x_exact = [beta, c](long k) -> Rat { return (beta * c + (k - 1) * (c + 1)) / (Rat(1) - c); };
    s.y_exact = [beta, c](long k) -> Rat { return Rat(k) * (Rat(k) + beta - 1) * c / rat_pow(Rat(1) - c, 2); };
    s.declared = SpecType::rejected;
    s.declared_note = "t_{k+1} - t_k - 1 >= 0 would force c = 0";
    attach_num_from_exact(s);
    return s;
}

Specialization spec_from_xy_lists(std::vector<Rat> xs, std::vector<Rat> ys) {
    Specialization s;
    s.name = "explicit";
    s.exact = true;
    auto xv = std::make_shared<std::vector<Rat>>(std::move(xs));
    auto yv = std::make_shared<std::vector<Rat>>(std::move(ys));
    s.x_exact = [xv](long k) -> Rat {
        if (k < 1 || k > static_cast<long>(xv->size()))
            throw std::out_of_range("explicit specialization: x_" + std::to_string(k) + " beyond supplied prefix");
        return (*xv)[static_cast<size_t>(k - 1)];
    };
    s.y_exact = [yv](long k) -> Rat {
        if (k < 1 || k > static_cast<long>(yv->size()))
            throw std::out_of_range("explicit specialization: y_" + std::to_string(k) + " beyond supplied prefix");
        return (*yv)[static_cast<size_t>(k - 1)];
    };
    s.max_index = static_cast<long>(std::min(xv->size(), yv->size()));
    attach_num_from_exact(s);
    return s;
}

Specialization spec_from_ct_lists(std::vector<Rat> cs, std::vector<Rat> ts) {
    for (const Rat& c : cs)
        if (!(c > 0)) throw std::invalid_argument("spec_from_ct_lists: c_k must be positive");
    for (const Rat& t : ts)
        if (!(t > 0)) throw std::invalid_argument("spec_from_ct_lists: t_k must be positive");
    Specialization s;
    s.name = "explicit-ct";
    s.exact = true;
    auto cv = std::make_shared<std::vector<Rat>>(std::move(cs));
    auto tv = std::make_shared<std::vector<Rat>>(std::move(ts));
    auto cat = [](const std::shared_ptr<std::vector<Rat>>& v, long k, const char* what) {
        if (k < 1 || k > static_cast<long>(v->size()))
            throw std::out_of_range(std::string("explicit-ct: ") + what + "_" + std::to_string(k) + " beyond supplied prefix");
        return (*v)[static_cast<size_t>(k - 1)];
    };
    auto tt = [tv, cat](long k) -> Rat { return k == 0 ? Rat(0) : cat(tv, k, "t"); };
    s.x_exact = [cv, tt, cat](long k) -> Rat { return cat(cv, k, "c") * (Rat(1) + tt(k - 1)); };
    s.y_exact = [cv, tt, cat](long k) -> Rat { return cat(cv, k, "c") * cat(cv, k + 1, "c") * tt(k); };
    s.c_closed = [cv, cat](long k) -> Rat { return cat(cv, k, "c"); };
    s.t_closed = tt;
    s.max_index = std::max<long>(0, static_cast<long>(std::min(cv->size() - 1, tv->size())));
    attach_num_from_exact(s);
    return s;
}

Specialization spec_from_t_closure(std::function<Rat(long)> t, std::string name) {
    Specialization s;
    s.name = std::move(name);
    s.exact = true;
    auto tt = [t](long k) -> Rat { return k <= 0 ? Rat(0) : t(k); };
    s.x_exact = [tt](long k) -> Rat { return Rat(1) + tt(k - 1); };
    s.y_exact = [tt](long k) -> Rat { return tt(k); };
    s.c_closed = [](long) -> Rat { return Rat(1); };
    s.t_closed = tt;
    attach_num_from_exact(s);
    return s;
}

Specialization left_shift(const Specialization& s, long r) {
    Specialization out = s;
    out.name = s.name + "+shift" + std::to_string(r);
    out.t_closed = nullptr;
    out.c_closed = nullptr;
    out.t_closed_num = nullptr;
    out.declared = r >= 1 ? SpecType::convergent : s.declared;
    out.declared_note = "left shift of " + s.name;
    if (s.exact) {
        auto xe = s.x_exact, ye = s.y_exact;
        out.x_exact = [xe, r](long k) -> Rat { return xe(k + r); };
        out.y_exact = [ye, r](long k) -> Rat { return ye(k + r); };
        attach_num_from_exact(out);
    } else {
        auto xn = s.x_num, yn = s.y_num;
        out.x_num = [xn, r](long k) { return xn(k + r); };
        out.y_num = [yn, r](long k) { return yn(k + r); };
    }
    return out;
}

Specialization divergent_right_shift(const Specialization& s, const Rat& sigma, const Rat& T1) {
    if (!s.t_closed) throw std::invalid_argument("divergent_right_shift: needs a closed t-sequence");
    if (!(T1 > 0)) throw std::invalid_argument("divergent_right_shift: T1 must be positive");
    auto t = s.t_closed;
    Rat bound = t(1) + sigma - 1;
    Specialization out = spec_from_t_closure(
        [t, sigma, T1](long k) { return k == 1 ? T1 : sigma + t(k - 1); }, s.name + "+right-shift");
    out.declared = (T1 <= bound) ? SpecType::divergent : SpecType::unknown;
    if (T1 > bound) {
        out.params_in_range = false;
        out.range_note = "requires 0 < T1 <= t_1 + sigma - 1";
    }
    return out;
}

Specialization rho_scaled_divergent(const Specialization& s, const Rat& rho) {
    if (!s.t_closed) throw std::invalid_argument("rho_scaled_divergent: needs a closed t-sequence");
    if (!(rho > 0 && rho <= 1)) throw std::invalid_argument("rho_scaled_divergent: rho must be in (0,1]");
    auto t = s.t_closed;
    Specialization out;
    out.name = s.name + "*rho-scaled";
    out.params["rho"] = param_str(rho);
    out.exact = true;
    auto tt = [t](long k) -> Rat { return k <= 0 ? Rat(0) : t(k); };
    out.x_exact = [tt, rho](long k) -> Rat { return rho + tt(k - 1); };
    out.y_exact = [tt, rho](long k) -> Rat { return rho * tt(k); };
    out.c_closed = [rho](long) -> Rat { return rho; };
    out.t_closed = [tt, rho](long k) -> Rat { return tt(k) / rho; };
    out.declared = s.declared == SpecType::divergent ? SpecType::divergent : SpecType::unknown;
    attach_num_from_exact(out);
    return out;
}

CtSequences ct_from_xy(const Specialization& s, int K) {
    if (!s.exact) throw std::domain_error("ct_from_xy: exact closures required (use ct_from_xy_num)");
    std::vector<Rat> A(static_cast<size_t>(K) + 2);
    A[0] = 1;
    for (int k = 1; k <= K + 1; ++k) {
        Rat v = s.x(k) * A[static_cast<size_t>(k - 1)];
        if (k >= 2) v -= s.y(k - 1) * A[static_cast<size_t>(k - 2)];
        if (v == 0) throw std::domain_error("ct_from_xy: A_" + std::to_string(k) + " vanishes (not totally positive)");
        A[static_cast<size_t>(k)] = v;
    }
    CtSequences out;
    out.c.reserve(static_cast<size_t>(K));
    out.t.reserve(static_cast<size_t>(K));
    for (int k = 1; k <= K; ++k) {
        out.c.push_back(A[static_cast<size_t>(k)] / A[static_cast<size_t>(k - 1)]);
        out.t.push_back(s.y(k) * A[static_cast<size_t>(k - 1)] / A[static_cast<size_t>(k + 1)]);
    }
    return out;
}

CtSequencesNum ct_from_xy_num(const Specialization& s, int K) {
    // Work with the ratios rho_k = A_k / A_{k-1} (no overflow): then
    // c_k = rho_k and t_k = y_k / (rho_k rho_{k+1}).
    std::vector<double> rho(static_cast<size_t>(K) + 2);
    rho[1] = s.xd(1);
    for (int k = 2; k <= K + 1; ++k) {
        double prev = rho[static_cast<size_t>(k - 1)];
        if (prev == 0) throw std::domain_error("ct_from_xy_num: A_" + std::to_string(k - 1) + " vanishes");
        rho[static_cast<size_t>(k)] = s.xd(k) - s.yd(k - 1) / prev;
    }
    CtSequencesNum out;
    for (int k = 1; k <= K; ++k) {
        out.c.push_back(rho[static_cast<size_t>(k)]);
        out.t.push_back(s.yd(k) / (rho[static_cast<size_t>(k)] * rho[static_cast<size_t>(k + 1)]));
    }
    return out;
}

Specialization spec_from_ct(const CtSequences& ct) { return spec_from_ct_lists(ct.c, ct.t); }

std::vector<double> t_sequence_num(const Specialization& s, int K) {
    std::vector<double> t;
    t.reserve(static_cast<size_t>(K));
    if (s.t_closed_num) {
        for (int k = 1; k <= K; ++k) t.push_back(s.t_closed_num(k));
    } else if (s.t_closed) {
        for (int k = 1; k <= K; ++k) t.push_back(to_double(s.t_closed(k)));
    } else {
        t = ct_from_xy_num(s, K).t;
    }
    return t;
}

namespace {

struct AInfResult {
    bool converged = false;
    double value = 0.0;
    double tail_bound = 0.0;
    int terms = 0;
};

// Partial sums of A_inf(m) = 1 + sum_r t_m ... t_{m+r-1} with the stopping
// rule: last term < tol * partial sum and the next t < 1 (geometric tail).
AInfResult a_inf_impl(int m, const std::function<double(long)>& t, int max_terms, double tol) {
    AInfResult res;
    double partial = 1.0, term = 1.0;
    for (int r = 1; r <= max_terms; ++r) {
        term *= t(m + r - 1);
        partial += term;
        res.terms = r;
        if (term == 0.0) {  // exact zero tail (t_0 = 0 convention)
            res.converged = true;
            res.value = partial;
            res.tail_bound = 0.0;
            return res;
        }
        if (!std::isfinite(partial) || partial > 1e120) return res;  // diverged
        double tnext = t(m + r);
        if (term < tol * partial && tnext < 1.0) {
            res.converged = true;
            res.value = partial;
            res.tail_bound = term * tnext / (1.0 - tnext);
            return res;
        }
    }
    return res;
}

}  // namespace

SeriesValue a_inf(int m, const Specialization& s, int horizon, double tol) {
    int K = std::max(4 * horizon, 256);
    auto tv = t_sequence_num(s, m + K + 2);
    auto t = [&](long k) { return k <= 0 ? 0.0 : tv[static_cast<size_t>(k - 1)]; };
    auto res = a_inf_impl(m, t, K, tol);
    if (!res.converged) throw std::domain_error("a_inf: series A_inf(" + std::to_string(m) + ") did not stabilize (divergent?)");
    return SeriesValue{res.value, res.tail_bound, res.terms};
}

SeriesValue b_inf(int m, const Specialization& s, int horizon, double tol) {
    SeriesValue a = a_inf(m + 3, s, horizon, tol);
    auto tv = t_sequence_num(s, m + 3);
    auto t = [&](long k) { return k <= 0 ? 0.0 : tv[static_cast<size_t>(k - 1)]; };
    double v = t(m + 1) + (t(m + 1) - t(m) - 1.0) * t(m + 2) * a.value;
    SeriesValue out;
    out.value = v;
    out.tail_bound = std::abs((t(m + 1) - t(m) - 1.0) * t(m + 2)) * a.tail_bound;
    out.terms = a.terms;
    return out;
}

double power_kappa_threshold(int alpha) {
    // Root of B_inf(1)(kappa) = 0 for t_k = kappa / k^alpha, by bisection.
    auto binf1 = [alpha](double kappa) {
        auto t = [alpha, kappa](long k) { return k <= 0 ? 0.0 : kappa / std::pow(static_cast<double>(k), alpha); };
        auto a = a_inf_impl(4, t, 400, 1e-16);
        return t(2) - (1.0 + t(1) - t(2)) * t(3) * a.value;
    };
    double lo = 1e-6, hi = 8.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (binf1(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

PositivityVerdict classify(const Specialization& s, int horizon, double tol) {
    if (horizon < 8) throw std::invalid_argument("classify: horizon must be >= 8");
    PositivityVerdict out;
    int H = horizon;
    if (s.max_index > 0) H = std::min<long>(H, s.max_index - 4);
    if (H < 8) throw std::invalid_argument("classify: explicit prefix too short for the horizon");
    out.horizon = H;
    out.tolerance = tol;
    const bool exact = s.exact;

    auto reject = [&](const std::string& witness) {
        out.verdict = Verdict::rejected;
        out.witness = witness;
        return out;
    };

    // x_k, y_k must be positive (they are s-values of 1^k / 1^{k-1}2 words).
    for (int k = 1; k <= H + 3; ++k) {
        if (exact) {
            if (s.x(k) <= 0) return reject("x_" + std::to_string(k) + " = " + rat_to_string(s.x(k)) + " <= 0");
            if (s.y(k) <= 0) return reject("y_" + std::to_string(k) + " = " + rat_to_string(s.y(k)) + " <= 0");
        } else {
            if (s.xd(k) <= 0) return reject("x_" + std::to_string(k) + " <= 0");
            if (s.yd(k) <= 0) return reject("y_" + std::to_string(k) + " <= 0");
        }
    }

    // Determinants A_k = s_{1^k} must be positive; compute t_k from them.
    std::vector<double> t(static_cast<size_t>(H) + 3, 0.0);  // t[0] = 0
    std::vector<Rat> t_exact(static_cast<size_t>(H) + 3, Rat(0));
    if (exact) {
        std::vector<Rat> A(static_cast<size_t>(H) + 4);
        A[0] = 1;
        for (int k = 1; k <= H + 3; ++k) {
            Rat v = s.x(k) * A[static_cast<size_t>(k - 1)];
            if (k >= 2) v -= s.y(k - 1) * A[static_cast<size_t>(k - 2)];
            if (v <= 0) return reject("A_" + std::to_string(k) + " = " + rat_to_string(v) + " <= 0");
            A[static_cast<size_t>(k)] = v;
        }
        for (int k = 1; k <= H + 2; ++k) {
            t_exact[static_cast<size_t>(k)] = s.y(k) * A[static_cast<size_t>(k - 1)] / A[static_cast<size_t>(k + 1)];
            t[static_cast<size_t>(k)] = to_double(t_exact[static_cast<size_t>(k)]);
        }
    } else {
        std::vector<double> rho(static_cast<size_t>(H) + 5, 0.0);
        rho[1] = s.xd(1);
        if (rho[1] <= 0) return reject("A_1 <= 0");
        for (int k = 2; k <= H + 4; ++k) {
            rho[static_cast<size_t>(k)] = s.xd(k) - s.yd(k - 1) / rho[static_cast<size_t>(k - 1)];
            if (rho[static_cast<size_t>(k)] <= 0) return reject("A_" + std::to_string(k) + "/A_" + std::to_string(k - 1) + " <= 0");
        }
        for (int k = 1; k <= H + 2; ++k) t[static_cast<size_t>(k)] = s.yd(k) / (rho[static_cast<size_t>(k)] * rho[static_cast<size_t>(k + 1)]);
    }

    // Divergent type: t_{m+1} >= 1 + t_m for all m <= H.
    {
        bool divergent = true;
        for (int m = 0; m <= H && divergent; ++m) {
            if (exact)
                divergent = t_exact[static_cast<size_t>(m + 1)] - t_exact[static_cast<size_t>(m)] - 1 >= 0;
            else
                divergent = t[static_cast<size_t>(m + 1)] - t[static_cast<size_t>(m)] - 1.0 >= -tol;
        }
        if (divergent) {
            out.verdict = Verdict::divergent;
            out.witness = "t_{m+1} - t_m >= 1 for all m <= " + std::to_string(H) +
                          (s.declared == SpecType::divergent && !s.declared_note.empty() ? "; structural: " + s.declared_note : "");
            return out;
        }
    }

    // Necessary conditions (Fibonacci positivity regardless of type).
    // Valleys t_m >= t_{m+1} <= t_{m+2} are forbidden for m >= 1.
    for (int m = 1; m + 2 <= H + 2; ++m) {
        bool valley = exact ? (t_exact[static_cast<size_t>(m)] >= t_exact[static_cast<size_t>(m + 1)] &&
                               t_exact[static_cast<size_t>(m + 1)] <= t_exact[static_cast<size_t>(m + 2)])
                            : (t[static_cast<size_t>(m)] >= t[static_cast<size_t>(m + 1)] - tol &&
                               t[static_cast<size_t>(m + 1)] <= t[static_cast<size_t>(m + 2)] + tol);
        if (valley) {
            std::string bw = exact ? rat_to_string(det_B(1, s, m)) : std::to_string(det_B_num(1, s, m));
            return reject("valley t_" + std::to_string(m) + " >= t_" + std::to_string(m + 1) + " <= t_" +
                          std::to_string(m + 2) + "; B_1(" + std::to_string(m) + ") = " + bw);
        }
    }

    // Scan the finite determinants B_k(m), k, m <= H.
    for (int m = 0; m <= H; ++m) {
        if (exact) {
            Rat b2 = s.y(m + 1);
            Rat b1 = s.x(m + 3) * s.y(m + 1) - s.x(m + 1) * s.y(m + 2);
            if (b1 <= 0) return reject("B_1(" + std::to_string(m) + ") = " + rat_to_string(b1));
            for (int k = 2; k <= H; ++k) {
                Rat cur = s.x(m + k + 2) * b1 - s.y(m + k + 1) * b2;
                if (cur <= 0) return reject("B_" + std::to_string(k) + "(" + std::to_string(m) + ") = " + rat_to_string(cur));
                b2 = b1;
                b1 = cur;
            }
        } else {
            double b2 = s.yd(m + 1);
            double b1 = s.xd(m + 3) * s.yd(m + 1) - s.xd(m + 1) * s.yd(m + 2);
            double scale = std::max(1.0, std::abs(b2));
            if (b1 < -tol * scale) return reject("B_1(" + std::to_string(m) + ") = " + std::to_string(b1));
            for (int k = 2; k <= H; ++k) {
                double cur = s.xd(m + k + 2) * b1 - s.yd(m + k + 1) * b2;
                scale = std::max({1.0, std::abs(b1), std::abs(b2)});
                if (cur < -tol * scale) return reject("B_" + std::to_string(k) + "(" + std::to_string(m) + ") = " + std::to_string(cur));
                b2 = b1;
                b1 = cur;
                if (!std::isfinite(b1)) break;
            }
        }
    }

    // Convergent type: A_inf(m) stabilizes and B_inf(m) >= -tol for m <= H.
    auto td = [&](long k) { return k <= 0 ? 0.0 : t[static_cast<size_t>(k)]; };
    {
        // Extend t far enough for the series tails.
        int K = std::max(4 * H, 256);
        std::vector<double> text;
        try {
            text = t_sequence_num(s, H + K + 4);
        } catch (const std::exception&) {
            text.assign(t.begin() + 1, t.end());
        }
        auto tlong = [&](long k) -> double {
            if (k <= 0) return 0.0;
            if (k <= static_cast<long>(text.size())) return text[static_cast<size_t>(k - 1)];
            return text.empty() ? 0.0 : text.back();
        };
        bool all_converged = true;
        bool any_diverged = false;
        double min_binf = 0.0;
        int min_binf_m = -1;
        for (int m = 0; m <= H; ++m) {
            auto ar = a_inf_impl(m + 3, tlong, K, 1e-14);
            if (!ar.converged) {
                all_converged = false;
                any_diverged = true;
                break;
            }
            double bv = td(m + 1) + (td(m + 1) - td(m) - 1.0) * td(m + 2) * ar.value;
            if (min_binf_m < 0 || bv < min_binf) {
                min_binf = bv;
                min_binf_m = m;
            }
        }
        if (all_converged) {
            if (min_binf >= -tol) {
                out.verdict = Verdict::convergent;
                out.witness = "A_inf(m) stabilized and B_inf(m) >= -tol for m <= " + std::to_string(H) +
                              "; min B_inf(" + std::to_string(min_binf_m) + ") = " + std::to_string(min_binf);
                return out;
            }
            // B_inf(m0) < 0: exhibit a concrete finite determinant.
            int m0 = min_binf_m;
            if (exact) {
                Rat b2 = s.y(m0 + 1);
                Rat b1 = s.x(m0 + 3) * s.y(m0 + 1) - s.x(m0 + 1) * s.y(m0 + 2);
                for (int k = 2; k <= 64 * H; ++k) {
                    Rat cur = s.x(m0 + k + 2) * b1 - s.y(m0 + k + 1) * b2;
                    if (cur <= 0) return reject("B_" + std::to_string(k) + "(" + std::to_string(m0) + ") = " + rat_to_string(cur));
                    b2 = b1;
                    b1 = cur;
                }
            }
            return reject("B_inf(" + std::to_string(m0) + ") = " + std::to_string(min_binf) + " < 0");
        }
        if (any_diverged) {
            // Divergent series but the t-inequality failed at some m0:
            // B_l(m0) < 0 for large l.  Find a concrete witness.
            int m0 = -1;
            for (int m = 0; m <= H; ++m) {
                bool ok = exact ? (t_exact[static_cast<size_t>(m + 1)] - t_exact[static_cast<size_t>(m)] - 1 >= 0)
                                : (t[static_cast<size_t>(m + 1)] - t[static_cast<size_t>(m)] - 1.0 >= -tol);
                if (!ok) {
                    m0 = m;
                    break;
                }
            }
            if (m0 >= 0) {
                if (exact) {
                    Rat b2 = s.y(m0 + 1);
                    Rat b1 = s.x(m0 + 3) * s.y(m0 + 1) - s.x(m0 + 1) * s.y(m0 + 2);
                    if (b1 <= 0) return reject("B_1(" + std::to_string(m0) + ") = " + rat_to_string(b1));
                    for (int k = 2; k <= 64 * H; ++k) {
                        Rat cur = s.x(m0 + k + 2) * b1 - s.y(m0 + k + 1) * b2;
                        if (cur <= 0) return reject("B_" + std::to_string(k) + "(" + std::to_string(m0) + ") = " + rat_to_string(cur));
                        b2 = b1;
                        b1 = cur;
                    }
                } else {
                    double b2 = s.yd(m0 + 1);
                    double b1 = s.xd(m0 + 3) * s.yd(m0 + 1) - s.xd(m0 + 1) * s.yd(m0 + 2);
                    if (b1 < 0) return reject("B_1(" + std::to_string(m0) + ") = " + std::to_string(b1));
                    for (int k = 2; k <= 64 * H; ++k) {
                        double cur = s.xd(m0 + k + 2) * b1 - s.yd(m0 + k + 1) * b2;
                        if (cur < 0) return reject("B_" + std::to_string(k) + "(" + std::to_string(m0) + ") = " + std::to_string(cur));
                        b2 = b1;
                        b1 = cur;
                        if (!std::isfinite(b1)) break;
                    }
                }
                return reject("A_inf diverges but t_" + std::to_string(m0 + 1) + " < 1 + t_" + std::to_string(m0));
            }
        }
    }

    out.verdict = Verdict::inconclusive;
    out.witness = "series not stabilized at horizon " + std::to_string(H) + "; raise the horizon";
    return out;
}

namespace {

Rat parse_param_value(const std::string& v) {
    auto dot = v.find('.');
    if (dot == std::string::npos) return parse_rat(v);
    // Decimal literal -> exact rational.
    std::string digits = v.substr(0, dot) + v.substr(dot + 1);
    size_t frac_len = v.size() - dot - 1;
    Rat num = parse_rat(digits.empty() ? "0" : digits);
    return num / rat_pow(Rat(10), static_cast<long>(frac_len));
}

Specialization make_builtin(const std::string& name, const std::map<std::string, Rat>& p) {
    auto get = [&](const std::string& key, const char* def = nullptr) -> Rat {
        auto it = p.find(key);
        if (it != p.end()) return it->second;
        if (def) return parse_rat(def);
        throw std::invalid_argument("specialization '" + name + "' needs parameter '" + key + "'");
    };
    if (name == "plancherel") return spec_plancherel();
    if (name == "charlier") return spec_charlier(get("rho"));
    if (name == "al-salam-carlitz" || name == "asc1") return spec_al_salam_carlitz1(get("rho"), get("q"));
    if (name == "al-salam-chihara" || name == "asch") return spec_al_salam_chihara(get("rho"), get("q"));
    if (name == "q-charlier") return spec_q_charlier(get("rho"), get("q"));
    if (name == "cigler-zeng") return spec_cigler_zeng(get("q"), get("rho", "1"));
    if (name == "fake-shifted-charlier") return spec_fake_shifted_charlier(get("rho"), get("sigma"));
    if (name == "shifted-charlier") return spec_shifted_charlier(get("rho"), get("sigma"));
    if (name == "shifted-plancherel") return spec_shifted_plancherel(get("sigma"));
    if (name == "power") return spec_power(static_cast<int>(get("alpha").get_num().get_si()), get("kappa"));
    if (name == "alt-q-charlier") return spec_alt_q_charlier(get("rho"), get("q"));
    if (name == "laguerre") return spec_laguerre(get("alpha"));
    if (name == "meixner") return spec_meixner(get("beta"), get("c"));
    std::string msg = "unknown specialization '" + name + "'; known names:";
    for (const auto& n : builtin_names()) msg += " " + n;
    throw std::invalid_argument(msg);
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"plancherel",      "charlier",         "al-salam-carlitz", "al-salam-chihara",
            "q-charlier",      "cigler-zeng",      "fake-shifted-charlier", "shifted-charlier",
            "shifted-plancherel", "power",         "alt-q-charlier",   "laguerre",
            "meixner"};
}

Specialization spec_from_string(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::map<std::string, Rat> params;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::istringstream is(rest);
        std::string item;
        while (std::getline(is, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("spec_from_string: expected key=value in '" + item + "'");
            params[item.substr(0, eq)] = parse_param_value(item.substr(eq + 1));
        }
    }
    return make_builtin(name, params);
}

Specialization spec_from_json_text(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    auto parse_list = [](const nlohmann::json& arr) {
        std::vector<Rat> v;
        for (const auto& e : arr) {
            if (e.is_string())
                v.push_back(parse_param_value(e.get<std::string>()));
            else if (e.is_number_integer())
                v.push_back(Rat(e.get<long>()));
            else
                v.push_back(parse_param_value(nlohmann::to_string(e)));
        }
        return v;
    };
    if (j.contains("name")) {
        std::map<std::string, Rat> params;
        if (j.contains("params"))
            for (auto& [k, v] : j["params"].items())
                params[k] = v.is_string() ? parse_param_value(v.get<std::string>())
                                          : parse_param_value(nlohmann::to_string(v));
        return make_builtin(j["name"].get<std::string>(), params);
    }
    if (j.contains("x") && j.contains("y")) return spec_from_xy_lists(parse_list(j["x"]), parse_list(j["y"]));
    if (j.contains("c") && j.contains("t")) return spec_from_ct_lists(parse_list(j["c"]), parse_list(j["t"]));
    throw std::invalid_argument("spec config must contain {name,params}, {x,y} or {c,t}");
}

}  // namespace yf
