#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

enum class SpecType { divergent, convergent, rejected, unknown };

std::string to_string(SpecType t);

// A specialization of the parameter sequences (x_k, y_k), k >= 1.
// Exact closures are present whenever all parameters are rational; numeric
// closures always work.
class Specialization {
  public:
    std::string name;                  // builtin name or "explicit"
    std::map<std::string, std::string> params;  // echoed into reports

    bool exact = false;
    std::function<Rat(long)> x_exact;  // 1-indexed; only valid if exact
    std::function<Rat(long)> y_exact;
    std::function<double(long)> x_num;
    std::function<double(long)> y_num;

    // Closed-form (c, t) parameters, when the family provides them.
    std::function<Rat(long)> t_closed;       // may be empty
    std::function<Rat(long)> c_closed;       // may be empty
    std::function<double(long)> t_closed_num;  // may be empty

    SpecType declared = SpecType::unknown;
    std::string declared_note;  // e.g. structural divergence certificate
    bool params_in_range = true;
    std::string range_note;
    bool probe_only = false;  // conjectural families: report, never assert
    long max_index = 0;       // nonzero for finite explicit prefixes

    Rat x(long k) const;
    Rat y(long k) const;
    double xd(long k) const { return x_num(k); }
    double yd(long k) const { return y_num(k); }
};

// Builtin catalog -------------------------------------------------------

Specialization spec_plancherel();
Specialization spec_charlier(const Rat& rho);
Specialization spec_al_salam_carlitz1(const Rat& rho, const Rat& q);
Specialization spec_al_salam_chihara(const Rat& rho, const Rat& q);
Specialization spec_q_charlier(const Rat& rho, const Rat& q);
Specialization spec_cigler_zeng(const Rat& q, const Rat& rho = Rat(1));
Specialization spec_cigler_zeng_num(double q);  // irrational q (e.g. the cubic root)
Specialization spec_fake_shifted_charlier(const Rat& rho, const Rat& sigma);
Specialization spec_shifted_charlier(const Rat& rho, const Rat& sigma);
Specialization spec_shifted_plancherel(const Rat& sigma);
Specialization spec_power(int alpha, const Rat& kappa);
Specialization spec_alt_q_charlier(const Rat& rho, const Rat& q);
Specialization spec_laguerre(const Rat& alpha);
Specialization spec_meixner(const Rat& beta, const Rat& c);
Specialization spec_from_xy_lists(std::vector<Rat> xs, std::vector<Rat> ys);
Specialization spec_from_ct_lists(std::vector<Rat> cs, std::vector<Rat> ts);
Specialization spec_from_t_closure(std::function<Rat(long)> t, std::string name);

// Parses "charlier:rho=1/2" / "power:alpha=2,kappa=1" / "plancherel".
Specialization spec_from_string(const std::string& text);
// Builds from config JSON text: {"name":..., "params":{...}} or
// {"x":[...], "y":[...]} or {"c":[...], "t":[...]}.
Specialization spec_from_json_text(const std::string& json_text);
std::vector<std::string> builtin_names();

// Positivity-preserving constructions, used as test generators.
Specialization left_shift(const Specialization& s, long r);
Specialization divergent_right_shift(const Specialization& s, const Rat& sigma, const Rat& T1);
Specialization rho_scaled_divergent(const Specialization& s, const Rat& rho);

// (c, t) reparametrization ----------------------------------------------

struct CtSequences {
    std::vector<Rat> c;  // c_1..c_K
    std::vector<Rat> t;  // t_1..t_K
};
// c_k = A_k/A_{k-1}, t_k = y_k A_{k-1}/A_{k+1}; throws if some A_k vanishes.
CtSequences ct_from_xy(const Specialization& s, int K);

struct CtSequencesNum {
    std::vector<double> c;
    std::vector<double> t;
};
CtSequencesNum ct_from_xy_num(const Specialization& s, int K);

// Round-trip: x_k = c_k (1 + t_{k-1}), y_k = c_k c_{k+1} t_k, t_0 = 0.
Specialization spec_from_ct(const CtSequences& ct);

// Classifier --------------------------------------------------------------

enum class Verdict { divergent, convergent, rejected, inconclusive };

std::string to_string(Verdict v);

struct PositivityVerdict {
    Verdict verdict = Verdict::inconclusive;
    std::string witness;  // failing inequality / determinant, or horizon note
    int horizon = 0;
    double tolerance = 0.0;
};

PositivityVerdict classify(const Specialization& s, int horizon = 64, double tol = 1e-10);

// Truncated series A_inf(m), B_inf(m) for convergent-type sequences.
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    int terms = 0;
};
SeriesValue a_inf(int m, const Specialization& s, int horizon = 64, double tol = 1e-14);
SeriesValue b_inf(int m, const Specialization& s, int horizon = 64, double tol = 1e-14);

// Positivity threshold for the power family t_k = kappa / k^alpha,
// re-derived as the root of B_inf(1)(kappa) by bisection.
double power_kappa_threshold(int alpha);

// t_k as doubles, via closed form when available, else via ct_from_xy_num.
std::vector<double> t_sequence_num(const Specialization& s, int K);

}  // namespace yf
