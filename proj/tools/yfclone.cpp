// yfclone: exact Young--Fibonacci / clone Schur toolbox.
//
// Subcommands: eval, classify, verify, moments, sample, typeI, rs.
// Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "yf/cauchy.hpp"
#include "yf/clone.hpp"
#include "yf/measures.hpp"
#include "yf/moments.hpp"
#include "yf/partitions.hpp"
#include "yf/rs.hpp"
#include "yf/specs.hpp"
#include "yf/words.hpp"

using json = nlohmann::json;
using namespace yf;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string spec_text;
    std::string config_path;
    int n = 6;
    int level = -1;
    std::string word;
    std::string what = "dim";
    long samples = 10000;
    uint64_t seed = 1;
    bool seed_set = false;
    int streams = 1;
    int horizon = 64;
    double tol = 1e-10;
    std::string format = "json";
    std::string out;
    std::string suite;
    int trials = 3;
    std::string family;
    int cap = 25;
    std::string perm;
    int random_perms = 0;
};

uint64_t default_seed() {
    if (const char* env = std::getenv("YFCLONE_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

Specialization load_spec(const Options& opt) {
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw std::invalid_argument("cannot open config file " + opt.config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        return spec_from_json_text(ss.str());
    }
    if (opt.spec_text.empty()) throw std::invalid_argument("need --spec or --config");
    return spec_from_string(opt.spec_text);
}

json spec_echo(const Specialization& s) {
    json j;
    j["name"] = s.name;
    j["params"] = s.params;
    j["exact"] = s.exact;
    if (!s.params_in_range) j["range_note"] = s.range_note;
    if (s.probe_only) j["probe_only"] = true;
    return j;
}

json base_report(const std::string& command, const Options& opt) {
    json j;
    j["artifact"] = {{"name", "yfclone"}, {"version", kVersion}};
    j["command"] = command;
    j["rng"] = Rng::name();
    j["seed"] = opt.seed;
    j["streams"] = opt.streams;
    return j;
}

void emit(const json& j, const Options& opt) {
    std::string text = j.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out);
        f << text;
    }
}

void emit_text(const std::string& text, const Options& opt) {
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out);
        f << text;
    }
}

int cmd_eval(const Options& opt) {
    auto s = load_spec(opt);
    json rep = base_report("eval", opt);
    rep["spec"] = spec_echo(s);
    if (opt.level >= 0) {
        if (opt.what == "measure") {
            auto m = measure_level(s, opt.level);
            json arr = json::array();
            for (size_t i = 0; i < m.level.size(); ++i)
                arr.push_back({{"word", m.level[i].empty() ? "empty" : m.level[i].to_string()},
                               {"weight", rat_to_string(m.weight[i])}});
            rep["result"] = {{"level", opt.level}, {"measure", arr}};
        } else {
            json arr = json::array();
            for (const auto& w : enumerate_level(opt.level)) arr.push_back(w.empty() ? "empty" : w.to_string());
            rep["result"] = {{"level", opt.level}, {"words", arr}};
        }
    } else {
        FibWord w = FibWord::parse(opt.word);
        json r;
        r["word"] = w.empty() ? "empty" : w.to_string();
        if (opt.what == "dim") {
            r["dim"] = dim(w).get_str();
        } else if (opt.what == "schur") {
            r["schur"] = rat_to_string(clone_schur(w, s));
        } else if (opt.what == "phi") {
            r["phi"] = rat_to_string(harmonic_phi(w, s));
        } else if (opt.what == "homogeneous") {
            r["homogeneous"] = rat_to_string(clone_homogeneous(w, s));
        } else if (opt.what == "runs-hikes") {
            auto rh = runs_hikes(w);
            r["runs"] = rh.runs;
            r["runs_tilde"] = rh.runs_tilde;
            r["hikes"] = rh.hikes;
            r["hikes_tilde"] = rh.hikes_tilde;
            r["ribbon"] = ribbon(w);
        } else {
            throw std::invalid_argument("--what must be dim|schur|phi|homogeneous|runs-hikes|measure");
        }
        rep["result"] = r;
    }
    emit(rep, opt);
    return 0;
}

int cmd_classify(const Options& opt) {
    auto s = load_spec(opt);
    auto v = classify(s, opt.horizon, opt.tol);
    json rep = base_report("classify", opt);
    rep["spec"] = spec_echo(s);
    rep["result"] = {{"verdict", to_string(v.verdict)},
                     {"witness", v.witness},
                     {"horizon", v.horizon},
                     {"tolerance", v.tolerance}};
    if (s.probe_only) rep["result"]["note"] = "conjectural family: reported, not asserted";
    emit(rep, opt);
    return 0;
}

int cmd_moments(const Options& opt) {
    auto s = load_spec(opt);
    int N = opt.n;
    auto m = moments_motzkin(s, N);
    if (opt.format == "csv") {
        std::string csv = "n,a_n\n";
        for (int i = 0; i <= N; ++i) csv += std::to_string(i) + "," + rat_to_string(m.a[static_cast<size_t>(i)]) + "\n";
        emit_text(csv, opt);
        return 0;
    }
    json rep = base_report("moments", opt);
    rep["spec"] = spec_echo(s);
    json arr = json::array();
    for (int i = 0; i <= N; ++i) arr.push_back(rat_to_string(m.a[static_cast<size_t>(i)]));
    rep["result"] = {{"N", N}, {"provenance", m.provenance}, {"a", arr}};
    emit(rep, opt);
    return 0;
}

int cmd_sample(const Options& opt) {
    json rep = base_report("sample", opt);
    auto fam = spec_from_string(opt.family.empty() ? opt.spec_text : opt.family);
    rep["spec"] = spec_echo(fam);
    ScalingReport sr;
    if (fam.name == "charlier") {
        sr = verify_scaling_charlier(parse_rat(fam.params.at("rho")), opt.n, opt.samples, opt.seed, opt.streams);
    } else if (fam.name == "shifted-plancherel") {
        sr = verify_scaling_shifted_plancherel(parse_rat(fam.params.at("sigma")), opt.n, opt.samples, opt.seed,
                                               opt.streams);
    } else if (fam.name == "plancherel") {
        sr = verify_scaling_plancherel(opt.n, opt.samples, opt.seed, opt.streams);
    } else {
        // Generic family: sample words and report the first-run histogram.
        Rng rng(opt.seed, 0);
        std::map<int, long> hist;
        for (long i = 0; i < opt.samples; ++i) {
            auto runs = sample_runs(fam, opt.n, rng, 1);
            hist[runs.blocks.empty() ? opt.n : runs.blocks[0]]++;
        }
        json h;
        for (auto& [k, v] : hist) h[std::to_string(k)] = v;
        rep["result"] = {{"n", opt.n}, {"samples", opt.samples}, {"r1_histogram", h}};
        emit(rep, opt);
        return 0;
    }
    rep["result"] = {{"family", sr.family}, {"params", sr.params},       {"n", sr.n},
                     {"samples", sr.samples}, {"dkw_epsilon", sr.dkw_epsilon}, {"dkw_delta", sr.dkw_delta},
                     {"stats", sr.stats}};
    emit(rep, opt);
    return 0;
}

int cmd_type_one(const Options& opt) {
    auto s = load_spec(opt);
    auto rep0 = type_one_masses(s, opt.cap);
    json rep = base_report("typeI", opt);
    rep["spec"] = spec_echo(s);
    json r;
    r["mu_one_infinity"] = rep0.mu_one_infinity;
    r["mu_one_infinity_error"] = rep0.mu_one_infinity_error;
    r["level_mass"] = rep0.level_mass;
    r["partial_sum"] = rep0.partial_sum;
    r["divergent"] = rep0.divergent;
    r["note"] = rep0.note;
    rep["result"] = r;
    emit(rep, opt);
    return 0;
}

int cmd_rs(const Options& opt) {
    json rep = base_report("rs", opt);
    if (!opt.perm.empty()) {
        Perm sigma = perm_parse(opt.perm);
        auto [p, q] = rs(sigma);
        rep["result"] = {{"perm", perm_to_string(sigma)},
                         {"P", p.to_string()},
                         {"Q", q.to_string()},
                         {"shape", p.shape().to_string()},
                         {"involution", is_involution(sigma)},
                         {"chain_of_Q", chain_to_string(chain_of_q(sigma))}};
        emit(rep, opt);
        return 0;
    }
    if (opt.random_perms > 0) {
        auto s = load_spec(opt);
        auto phi = Harmonic::clone(s);
        auto psi = Harmonic::plancherel();
        Rng rng(opt.seed, 0);
        json arr = json::array();
        for (int i = 0; i < opt.random_perms; ++i) {
            auto sigma = random_permutation(opt.n, s, phi, psi, rng);
            auto [p, q] = rs(sigma);
            arr.push_back({{"perm", perm_to_string(sigma)}, {"shape", p.shape().to_string()}});
        }
        rep["spec"] = spec_echo(s);
        rep["result"] = {{"n", opt.n}, {"random_permutations", arr}};
        emit(rep, opt);
        return 0;
    }
    throw std::invalid_argument("rs: need --perm or --random-perms");
}

// verify suites -------------------------------------------------------------

Specialization random_rational_spec(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 9), den(1, 6);
    std::vector<Rat> xs, ys;
    for (int i = 0; i < 32; ++i) {
        xs.push_back(rat(num(rng), den(rng)));
        ys.push_back(rat(num(rng), den(rng)));
    }
    return spec_from_xy_lists(xs, ys);
}

struct SuiteResult {
    bool pass = true;
    json details;
    void record(const std::string& name, bool ok) {
        details[name] = ok ? "pass" : "FAIL";
        pass = pass && ok;
    }
};

SuiteResult suite_pieri(int nmax, int trials) {
    SuiteResult r;
    for (int t = 0; t < trials; ++t) {
        auto s = random_rational_spec(100 + static_cast<unsigned>(t));
        bool ok = true;
        for (int n = 0; n <= nmax && ok; ++n)
            for (const auto& w : enumerate_level(n)) {
                Rat lhs = s.x(n + 1) * clone_schur(w, s);
                Rat rhs(0);
                for (const auto& wp : covers_up(w)) rhs += clone_schur(wp, s);
                if (lhs != rhs) {
                    ok = false;
                    break;
                }
            }
        r.record("pieri_trial_" + std::to_string(t), ok);
    }
    return r;
}

SuiteResult suite_cauchy(int nmax, int trials, bool second) {
    SuiteResult r;
    for (int t = 0; t < trials; ++t) {
        auto pq = random_rational_spec(200 + static_cast<unsigned>(2 * t));
        auto xy = random_rational_spec(201 + static_cast<unsigned>(2 * t));
        bool ok = true;
        for (int n = 0; n <= nmax && ok; ++n) {
            Rat det = second ? cauchy_second(n, pq, xy) : cauchy_first(n, pq, xy);
            Rat brute = second ? cauchy_second_bruteforce(n, pq, xy) : cauchy_first_bruteforce(n, pq, xy);
            ok = det == brute;
        }
        r.record(std::string(second ? "cauchy2" : "cauchy1") + "_trial_" + std::to_string(t), ok);
    }
    return r;
}

SuiteResult suite_kostka(int nmax) {
    SuiteResult r;
    for (int n = 0; n <= nmax; ++n) {
        const auto& K = kostka(n);
        auto inv = kostka_inverse(n);
        size_t sz = K.level.size();
        bool ok = true;
        for (size_t i = 0; i < sz && ok; ++i) {
            if (K.k[i][sz - 1] != dim(K.level[i])) ok = false;
            for (size_t j = 0; j < sz && ok; ++j) {
                Rat dot(0);
                for (size_t k = 0; k < sz; ++k)
                    if (K.k[i][k] != 0) dot += Rat(K.k[i][k]) * inv[k][j];
                ok = dot == (i == j ? Rat(1) : Rat(0));
            }
        }
        r.record("kostka_n" + std::to_string(n), ok);
    }
    return r;
}

SuiteResult suite_moments5way(int nmax) {
    SuiteResult r;
    for (const auto& s : {spec_charlier(rat(1, 2)), spec_al_salam_chihara(rat(1, 2), Rat(2)),
                          spec_cigler_zeng(Rat(3))}) {
        auto m = moments_motzkin(s, nmax);
        bool ok = moments_jfraction(s, nmax).a == m.a && moments_nc(s, nmax).a == m.a &&
                  moments_compressed(s, nmax).a == m.a && moments_all_partitions(s, nmax).a == m.a;
        r.record("divergent_" + s.name, ok);
    }
    for (const auto& s : {spec_shifted_charlier(rat(1, 2), Rat(2)), spec_power(2, Rat(1))}) {
        auto m = moments_motzkin(s, nmax);
        bool ok = moments_jfraction(s, nmax).a == m.a && moments_nc(s, nmax).a == m.a &&
                  moments_compressed(s, nmax).a == m.a;
        r.record("totally_positive_" + s.name, ok);
    }
    return r;
}

SuiteResult suite_coherence(int nmax) {
    SuiteResult r;
    for (const auto& s : {spec_charlier(rat(2, 3)), spec_shifted_plancherel(Rat(2)), spec_power(2, Rat(1))}) {
        bool ok = true;
        for (int n = 0; n <= nmax && ok; ++n) ok = verify_coherence(s, n);
        r.record("coherence_" + s.name, ok);
    }
    return r;
}

SuiteResult suite_scaling(int n, long samples, uint64_t seed, int streams) {
    SuiteResult r;
    auto c = verify_scaling_charlier(rat(1, 2), n, samples, seed, streams);
    r.record("charlier_p_r1_zero", std::abs(c.stats["p_r1_zero"] - 0.5) <= 0.01);
    r.record("charlier_sup_dist_r1", c.stats["sup_dist_r1"] <= 0.02);
    auto sp = verify_scaling_shifted_plancherel(Rat(2), n, samples, seed, streams);
    r.record("shifted_plancherel_two_hikes", std::abs(sp.stats["p_h1_h2_pos"] - 0.5) <= 0.01);
    r.record("shifted_plancherel_sup_dist", sp.stats["sup_dist_htilde1"] <= 0.02);
    auto pl = verify_scaling_plancherel(n, samples, seed, streams);
    r.record("plancherel_gem_first_stick", pl.stats["sup_dist_htilde1"] <= 0.02);
    r.details["charlier"] = c.stats;
    r.details["shifted_plancherel"] = sp.stats;
    r.details["plancherel"] = pl.stats;
    return r;
}

SuiteResult suite_type_one(int cap) {
    SuiteResult r;
    auto rep = type_one_masses(spec_power(2, Rat(1)), cap);
    double target = 2.0 * std::acos(0.0) / std::sinh(2.0 * std::acos(0.0));
    r.record("power2_mu_one_inf", std::abs(rep.mu_one_infinity - target) <= 1e-8);
    r.record("power2_partial_monotone", rep.partial_sum > rep.mu_one_infinity && rep.partial_sum <= 1.0 + 1e-9);
    auto masses = asch_type_one_limit_masses(2.0, 60);
    double total = 0;
    for (double v : masses) total += v;
    r.record("asch_limit_masses_sum", std::abs(total - 1.0) <= 1e-6);
    r.details["power2_partial_sum"] = rep.partial_sum;
    return r;
}

int cmd_verify(const Options& opt) {
    json rep = base_report("verify", opt);
    SuiteResult r;
    if (opt.suite == "pieri") {
        r = suite_pieri(std::min(opt.n, 8), opt.trials);
    } else if (opt.suite == "cauchy1") {
        r = suite_cauchy(std::min(opt.n, 9), opt.trials, false);
    } else if (opt.suite == "cauchy2") {
        r = suite_cauchy(std::min(opt.n, 9), opt.trials, true);
    } else if (opt.suite == "kostka") {
        r = suite_kostka(std::min(opt.n, 8));
    } else if (opt.suite == "moments5way") {
        r = suite_moments5way(std::min(opt.n, 9));
    } else if (opt.suite == "coherence") {
        r = suite_coherence(std::min(opt.n, 9));
    } else if (opt.suite == "scaling") {
        r = suite_scaling(opt.n, opt.samples, opt.seed, opt.streams);
    } else if (opt.suite == "typeI-normalization") {
        r = suite_type_one(opt.cap);
    } else {
        throw std::invalid_argument(
            "--suite must be one of pieri, cauchy1, cauchy2, kostka, moments5way, coherence, scaling, "
            "typeI-normalization");
    }
    rep["result"] = {{"suite", opt.suite}, {"pass", r.pass}, {"checks", r.details}};
    emit(rep, opt);
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Young--Fibonacci lattice, clone Schur functions, and their random-word models"};
    app.set_version_flag("--version", std::string("yfclone ") + kVersion);
    app.require_subcommand(0, 1);

    Options opt;
    opt.seed = default_seed();
    app.add_option("--spec", opt.spec_text, "builtin spec, e.g. charlier:rho=1/2");
    app.add_option("--config", opt.config_path, "JSON spec config file");
    app.add_option("--n", opt.n, "weight / truncation order");
    app.add_option("--level", opt.level, "lattice level to materialize");
    app.add_option("--word", opt.word, "Fibonacci word, e.g. 22121");
    app.add_option("--what", opt.what, "eval target: dim|schur|phi|homogeneous|runs-hikes|measure");
    app.add_option("--samples", opt.samples, "Monte Carlo sample count");
    app.add_option("--seed", opt.seed, "RNG seed (default: YFCLONE_SEED or 1)");
    app.add_option("--streams", opt.streams, "independent RNG streams");
    app.add_option("--horizon", opt.horizon, "classifier horizon");
    app.add_option("--tol", opt.tol, "float-mode tolerance");
    app.add_option("--format", opt.format, "json|csv");
    app.add_option("--out", opt.out, "output path (default stdout)");
    app.add_option("--suite", opt.suite, "verify suite name");
    app.add_option("--trials", opt.trials, "random specializations per identity");
    app.add_option("--family", opt.family, "sampling family, e.g. shifted-plancherel:sigma=2");
    app.add_option("--cap", opt.cap, "type-I suffix weight cap");
    app.add_option("--perm", opt.perm, "permutation in one-line notation");
    app.add_option("--random-perms", opt.random_perms, "number of random permutations to draw");

    auto* c_eval = app.add_subcommand("eval", "evaluate dim/schur/phi/measure");
    auto* c_classify = app.add_subcommand("classify", "Fibonacci positivity classifier");
    auto* c_verify = app.add_subcommand("verify", "run a named identity suite");
    auto* c_moments = app.add_subcommand("moments", "moment table");
    auto* c_sample = app.add_subcommand("sample", "Monte Carlo sampling reports");
    auto* c_typeI = app.add_subcommand("typeI", "type-I boundary masses");
    auto* c_rs = app.add_subcommand("rs", "RS correspondence demos");
    for (auto* sub : {c_eval, c_classify, c_verify, c_moments, c_sample, c_typeI, c_rs}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_eval->parsed()) return cmd_eval(opt);
        if (c_classify->parsed()) return cmd_classify(opt);
        if (c_verify->parsed()) return cmd_verify(opt);
        if (c_moments->parsed()) return cmd_moments(opt);
        if (c_sample->parsed()) return cmd_sample(opt);
        if (c_typeI->parsed()) return cmd_type_one(opt);
        if (c_rs->parsed()) return cmd_rs(opt);
        std::cout << app.help();
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
