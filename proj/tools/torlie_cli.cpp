// Command-line front end: property-verification suites, representation
// building, and truncated submodule scans, with deterministic seeded
// sampling and JSON reports on stdout.

#include "torlie/gl_rep.hpp"
#include "torlie/json_out.hpp"
#include "torlie/t_calculus.hpp"
#include "torlie/tensor_field.hpp"
#include "torlie/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunConfig {
    std::size_t d = 2;
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::int64_t box = 3;
    std::size_t k_max = 4;
    std::size_t word_length = 6;
    std::int64_t window = 3;
    std::vector<unsigned> weights;
    std::string b = "0";
    std::string alpha;
    std::string mode = "der";
    std::string algebra_file;
    bool fault_inject = false;
};

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    auto end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string{} : s.substr(begin, end - begin + 1);
}

// Flat "key = value" file; exact fractions are written as p/q. Flags given
// on the command line override file values.
void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "d") cfg.d = std::stoul(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "trials") cfg.trials = std::stoul(value);
        else if (key == "box") cfg.box = std::stol(value);
        else if (key == "k_max") cfg.k_max = std::stoul(value);
        else if (key == "word_length") cfg.word_length = std::stoul(value);
        else if (key == "window") cfg.window = std::stol(value);
        else if (key == "b") cfg.b = value;
        else if (key == "alpha") cfg.alpha = value;
        else if (key == "mode") cfg.mode = value;
        else if (key == "algebra_file") cfg.algebra_file = value;
        else if (key == "weights") {
            cfg.weights.clear();
            std::istringstream ws(value);
            std::string tok;
            while (std::getline(ws, tok, ',')) cfg.weights.push_back(std::stoul(trim(tok)));
        } else {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key " + key);
        }
    }
}

int config_error(const std::string& what) {
    std::cerr << "configuration error: " << what << "\n";
    return 2;
}

torlie::RationalVector parse_alpha(const RunConfig& cfg) {
    torlie::RationalVector alpha(cfg.d);
    if (cfg.alpha.empty()) return alpha;
    std::istringstream as(cfg.alpha);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(as, tok, ',')) {
        if (i >= cfg.d) throw std::runtime_error("alpha has more than d entries");
        alpha[i++] = torlie::Rational::parse(trim(tok));
    }
    if (i != cfg.d) throw std::runtime_error("alpha must have exactly d entries");
    return alpha;
}

torlie::DominantWeight parse_weight(const RunConfig& cfg) {
    std::vector<unsigned> a = cfg.weights;
    if (a.empty()) a.assign(cfg.d - 1, 0);
    if (a.size() != cfg.d - 1)
        throw std::runtime_error("weights must list exactly d-1 fundamental coefficients");
    return torlie::DominantWeight(a, torlie::Rational::parse(cfg.b));
}

torlie::Sampler suite_sampler(const RunConfig& cfg, const std::string& suite) {
    return torlie::Sampler(torlie::SplitMix64::stream(cfg.seed, suite), cfg.d, cfg.box);
}

int run_verify(const RunConfig& cfg) {
    using namespace torlie;
    SimpleAlgebraSpec g = SimpleAlgebraSpec::sl2();
    if (!cfg.algebra_file.empty()) {
        std::ifstream in(cfg.algebra_file);
        if (!in) return config_error("cannot open algebra file " + cfg.algebra_file);
        g = SimpleAlgebraSpec::load(in);
    }
    if (cfg.fault_inject) {
        // deliberately break one structure constant after load-validation
        std::size_t b = std::min<std::size_t>(2, g.dim() - 1);
        std::size_t e = std::min<std::size_t>(1, g.dim() - 1);
        g.c(0, b, e) += Rational(1);
        std::cerr << "fault injection: structure constant perturbed\n";
    }

    // suites run in a small worker pool: each draws from its own named
    // stream, so the assembled report is identical to a serial run
    using Suite = std::function<std::vector<IdentityReport>()>;
    auto single = [](IdentityReport r) { return std::vector<IdentityReport>{std::move(r)}; };
    std::vector<Suite> tasks{
        [&, single] {
            Sampler s = suite_sampler(cfg, "jacobi_der");
            return single(verify_jacobi_der(s, cfg.trials));
        },
        [&, single] {
            Sampler s = suite_sampler(cfg, "jacobi_a_der");
            return single(verify_jacobi_a_der(s, cfg.trials));
        },
        [&, single] {
            Sampler s = suite_sampler(cfg, "jacobi_tau");
            return single(verify_jacobi_tau(s, g, cfg.trials));
        },
        [&, single] {
            Sampler s = suite_sampler(cfg, "der_action");
            return single(verify_der_action(s, cfg.trials));
        },
        [&, single] {
            Sampler s = suite_sampler(cfg, "module_axiom");
            RationalVector alpha(cfg.d);
            alpha[0] = Rational(BigInt(1), BigInt(3));
            ModuleParams p(DominantWeight::fundamental(cfg.d, 1, Rational(BigInt(5), BigInt(7))),
                           alpha, cfg.d);
            auto rep = check_module_axiom(p, cfg.trials, s);
            const char* law = "[x,y].v = x.(y.v) - y.(x.v) on F(psi,b)";
            return single(rep.ok
                              ? IdentityReport::pass("module_axiom", law, rep.trials)
                              : IdentityReport::fail("module_axiom", law, rep.trials, rep.witness));
        },
        [&] {
            Sampler s = suite_sampler(cfg, "tk_structure");
            return verify_tk_structure(s, cfg.trials, std::max<std::size_t>(cfg.k_max, 2));
        },
        [&] {
            Sampler s = suite_sampler(cfg, "tk_separation");
            return verify_tk_separation(s, cfg.trials, cfg.k_max);
        },
        [&, single] { return single(verify_gl_quotient(cfg.d)); },
        [&, single] {
            Sampler s = suite_sampler(cfg, "central_eigenvalue");
            return single(verify_central_eigenvalue(s, cfg.trials, cfg.k_max));
        },
        [&, single] {
            Sampler s = suite_sampler(cfg, "filtration");
            auto layers = filtration_dims(cfg.d, cfg.k_max, &s);
            bool ok = true;
            std::ostringstream os;
            for (const auto& layer : layers) {
                ok = ok && layer.within_bound;
                os << "k=" << layer.k << ": total " << layer.total << " (bound " << layer.bound
                   << "); ";
            }
            const char* law = "dim(I_k/I_(k+1)) <= d^(k+1)";
            auto rep = ok ? IdentityReport::pass("filtration_layer_dims", law, layers.size())
                          : IdentityReport::fail("filtration_layer_dims", law, layers.size(), "");
            rep.witness = os.str();
            return single(rep);
        },
    };

    std::vector<std::future<std::vector<IdentityReport>>> futures;
    futures.reserve(tasks.size());
    for (auto& task : tasks) futures.push_back(std::async(std::launch::async, task));
    std::vector<IdentityReport> suites;
    for (auto& future : futures)
        for (auto& r : future.get()) suites.push_back(std::move(r));

    bool passed = all_ok(suites);
    nlohmann::json out{{"command", "verify"},
                       {"config",
                        {{"d", cfg.d},
                         {"seed", cfg.seed},
                         {"trials", cfg.trials},
                         {"box", cfg.box},
                         {"k_max", cfg.k_max}}},
                       {"suites", to_json(suites)},
                       {"all_passed", passed}};
    std::cout << out.dump(2) << "\n";
    return passed ? 0 : 1;
}

int run_rep(const RunConfig& cfg) {
    using namespace torlie;
    DominantWeight psi = parse_weight(cfg);
    GlRep rep = build_irrep(psi, cfg.d);
    BigInt oracle = weyl_dim(psi, cfg.d);
    std::cout << "dim " << rep.dim << "\n";
    std::cout << "weyl_dim " << oracle.str() << "\n";
    rep.dump(std::cout);
    auto check = check_rep(rep);
    if (!check.ok) std::cerr << "representation check failed: " << check.where << "\n";
    bool dims_agree = BigInt(rep.dim) == oracle;
    if (!dims_agree)
        std::cerr << "dimension mismatch: built " << rep.dim << ", formula " << oracle.str()
                  << "\n";
    return check.ok && dims_agree ? 0 : 1;
}

int run_scan(const RunConfig& cfg) {
    using namespace torlie;
    ModuleParams p(parse_weight(cfg), parse_alpha(cfg), cfg.d);
    ScanMode mode;
    if (cfg.mode == "der") mode = ScanMode::DerOnly;
    else if (cfg.mode == "ader") mode = ScanMode::ADer;
    else throw std::runtime_error("mode must be 'der' or 'ader'");
    TensorFieldVector start = TensorFieldVector::basis(p, 0, LatticeVector(cfg.d));
    ScanReport report = submodule_scan(p, start, cfg.word_length, cfg.window, mode);
    nlohmann::json out = scan_to_json(p, report);
    out["command"] = "scan";
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // apply a config file first so that explicit flags override it
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") {
            try {
                load_config_file(argv[i + 1], cfg);
            } catch (const std::exception& e) {
                return config_error(e.what());
            }
        }

    CLI::App app{"exact verification of torus vector-field algebras and their tensor modules"};
    app.require_subcommand(1);
    std::string config_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "flat key = value config file");
        sub->add_option("--d", cfg.d, "number of torus variables (>= 2)");
        sub->add_option("--seed", cfg.seed, "64-bit sampling seed");
        sub->add_option("--trials", cfg.trials, "instances per randomized suite");
        sub->add_option("--box", cfg.box, "exponent box radius for sampling");
        sub->add_option("--k-max", cfg.k_max, "deepest filtration level exercised");
    };

    CLI::App* verify = app.add_subcommand("verify", "run every identity suite, report JSON");
    add_common(verify);
    verify->add_flag("--fault-inject", cfg.fault_inject,
                     "perturb one structure constant to prove the suites can fail");
    verify->add_option("--algebra", cfg.algebra_file, "structure-constant file (default sl2)");

    CLI::App* rep = app.add_subcommand("rep", "build an irreducible gl_d module and dump it");
    add_common(rep);
    rep->add_option("--weights", cfg.weights, "fundamental coefficients a_1,..,a_(d-1)")
        ->delimiter(',');
    rep->add_option("--b", cfg.b, "scalar action of the identity, as p/q");

    CLI::App* scan = app.add_subcommand("scan", "truncated submodule scan of a tensor module");
    add_common(scan);
    scan->add_option("--weights", cfg.weights, "fundamental coefficients a_1,..,a_(d-1)")
        ->delimiter(',');
    scan->add_option("--b", cfg.b, "scalar action of the identity, as p/q");
    scan->add_option("--alpha", cfg.alpha, "shift vector, comma-separated fractions");
    scan->add_option("--mode", cfg.mode, "generator set: der | ader");
    scan->add_option("--word-length", cfg.word_length, "maximum generator word length");
    scan->add_option("--window", cfg.window, "weight window box radius");

    CLI11_PARSE(app, argc, argv);

    if (cfg.d < 2) return config_error("d must be at least 2");
    if (cfg.trials < 1 || cfg.k_max < 1 || cfg.word_length < 1 || cfg.window < 0 || cfg.box < 1)
        return config_error("all bounds must be positive");

    try {
        if (app.got_subcommand("verify")) return run_verify(cfg);
        if (app.got_subcommand("rep")) return run_rep(cfg);
        if (app.got_subcommand("scan")) return run_scan(cfg);
    } catch (const std::exception& e) {
        return config_error(e.what());
    }
    return config_error("no subcommand");
}
