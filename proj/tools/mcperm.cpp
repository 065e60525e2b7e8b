#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mcperm/apolarity.hpp"
#include "mcperm/combinatorics.hpp"
#include "mcperm/matrix_io.hpp"
#include "mcperm/permanent.hpp"
#include "mcperm/stability.hpp"
#include "mcperm/verify.hpp"

namespace {

using namespace mcperm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailures = 2;
constexpr int kExitProbeRefutation = 3;

struct GlobalConfig {
    uint64_t seed = 0;
    int trials = 64;
    int jobs = 1;
    std::string report_path;
    int cap_enumeration = 10;
    int cap_factorial = 9;
    int cap_symbolic = 12;
};

NumericMatrix numeric_from_input(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") return load_numeric_csv(path);
    const MatrixInput input = load_matrix(path);
    if (std::holds_alternative<FerrersMatrix>(input))
        return to_monotone(std::get<FerrersMatrix>(input)).matrix();
    return std::get<MonotoneColumnMatrix>(input).matrix();
}

MonotoneColumnMatrix monotone_from_input(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        return MonotoneColumnMatrix(load_numeric_csv(path));
    const MatrixInput input = load_matrix(path);
    if (std::holds_alternative<FerrersMatrix>(input))
        return to_monotone(std::get<FerrersMatrix>(input));
    return std::get<MonotoneColumnMatrix>(input);
}

PermanentEngine parse_engine(const std::string& name) {
    if (name == "auto") return PermanentEngine::Auto;
    if (name == "enumerate") return PermanentEngine::Enumerate;
    if (name == "subset-dp") return PermanentEngine::SubsetDp;
    if (name == "inclusion-exclusion") return PermanentEngine::InclusionExclusion;
    throw CLI::ValidationError("--engine", "unknown engine '" + name + "'");
}

void write_report(const GlobalConfig& cfg, const nlohmann::ordered_json& j) {
    if (cfg.report_path.empty()) return;
    std::ofstream out(cfg.report_path);
    if (!out) throw std::runtime_error("cannot write report: " + cfg.report_path);
    out << j.dump(2) << "\n";
}

int finish_suites(const GlobalConfig& cfg, const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchemaVersion;
    j["seed"] = cfg.seed;
    auto arr = nlohmann::ordered_json::array();
    bool hard_failure = false, probe_refutation = false;
    for (const auto& r : reports) {
        std::cout << r.summary_line() << "\n";
        for (const auto& f : r.failures) {
            std::cout << "  " << (f.conjecture_probe ? "PROBE-REFUTED " : "FAILED ") << f.case_id
                      << "\n    inputs:   " << f.inputs << "\n    expected: " << f.expected
                      << "\n    got:      " << f.got << "\n";
        }
        hard_failure = hard_failure || r.has_hard_failure();
        probe_refutation = probe_refutation || r.has_probe_refutation();
        arr.push_back(r.to_json());
    }
    j["suites"] = std::move(arr);
    write_report(cfg, j);
    if (hard_failure) return kExitFailures;
    if (probe_refutation) return kExitProbeRefutation;
    return kExitOk;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_int_csv(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int cmd_perm(const GlobalConfig& cfg, const std::string& input, int k, bool alpha,
             const std::string& engine_name) {
    const NumericMatrix m = numeric_from_input(input);
    const PermanentEngine engine = parse_engine(engine_name);
    PermanentCaps caps;
    caps.enumerate = cfg.cap_enumeration;
    caps.symbolic_dp = cfg.cap_symbolic;
    if (alpha) {
        const Polynomial p =
            alpha_permanent(to_symbolic(m), Polynomial::variable(alphavar()), caps);
        std::cout << p.str() << "\n";
        return kExitOk;
    }
    if (k >= 0) {
        std::cout << k_permanent(m, k, caps).get_str() << "\n";
        return kExitOk;
    }
    std::cout << permanent_numeric(m, engine, caps).get_str() << "\n";
    return kExitOk;
}

int cmd_mcp_poly(const GlobalConfig& cfg, const std::string& input, int k, bool diagonal) {
    const MonotoneColumnMatrix a = monotone_from_input(input);
    PermanentCaps caps;
    caps.enumerate = cfg.cap_enumeration;
    caps.symbolic_dp = cfg.cap_symbolic;
    const Polynomial p = k >= 0 ? k_sub_mcp_polynomial(a, k, caps) : mcp_polynomial(a, caps);
    if (!diagonal) {
        std::cout << p.str() << "\n";
        return kExitOk;
    }
    const Polynomial diag = p.diagonalize_all(zvar(1));
    std::cout << diag.str() << "\n";
    std::cout << "real_rooted: " << (real_rooted(to_univariate(diag, zvar(1))) ? "true" : "false")
              << "\n";
    return kExitOk;
}

int cmd_check_stability(const GlobalConfig& cfg, const std::string& input,
                        const std::string& rayleigh_pair, int points) {
    const Polynomial p = Polynomial::parse(read_text_file(input));
    nlohmann::ordered_json j;
    j["schema"] = kReportSchemaVersion;
    j["input"] = p.str();
    j["seed"] = cfg.seed;
    bool refuted = false;

    SamplingParams sp;
    sp.trials = cfg.trials;
    sp.seed = cfg.seed;
    sp.jobs = cfg.jobs;
    const StabilityVerdict verdict = stability_sample_test(p, sp);
    j["trials"] = verdict.trials;
    j["verdict"] = verdict.str();
    if (verdict.failed()) {
        refuted = true;
        if (verdict.witness) {
            auto base = nlohmann::ordered_json::array(), dir = nlohmann::ordered_json::array();
            for (const auto& x : verdict.witness->base) base.push_back(x.get_str());
            for (const auto& x : verdict.witness->direction) dir.push_back(x.get_str());
            j["witness"] = {{"trial", verdict.witness->trial}, {"base", base}, {"direction", dir}};
        }
    }
    std::cout << "stability: " << verdict.str() << "\n";

    if (!rayleigh_pair.empty()) {
        const auto comma = rayleigh_pair.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--rayleigh", "expected two variables, e.g. z1,z2");
        const auto vi = VariableId::parse(rayleigh_pair.substr(0, comma));
        const auto vj = VariableId::parse(rayleigh_pair.substr(comma + 1));
        if (!vi || !vj)
            throw CLI::ValidationError("--rayleigh", "bad variable name in '" + rayleigh_pair + "'");
        const RayleighResult res = rayleigh_check(p, *vi, *vj, points, cfg.seed);
        nlohmann::ordered_json rj;
        rj["pair"] = rayleigh_pair;
        rj["points"] = res.points;
        rj["pass"] = res.pass;
        if (!res.pass && res.witness) {
            auto pt = nlohmann::ordered_json::array();
            for (const auto& x : res.witness->point) pt.push_back(x.get_str());
            rj["witness"] = {{"point", pt}, {"value", res.witness->value.get_str()}};
            refuted = true;
        }
        j["rayleigh"] = std::move(rj);
        std::cout << "rayleigh " << rayleigh_pair << ": " << (res.pass ? "pass" : "fail") << "\n";
    }
    write_report(cfg, j);
    return refuted ? kExitFailures : kExitOk;
}

int cmd_stats(const std::string& word) {
    const Permutation sigma = word.find(',') == std::string::npos
                                  ? Permutation::from_digits(word)
                                  : Permutation(parse_int_csv(word));
    const PermutationStats st = stats(sigma);
    std::cout << "perm: " << sigma.str() << "\n";
    std::cout << "exc: " << st.exc << "\n";
    std::cout << "des: " << st.des << "\n";
    std::cout << "cyc: " << st.cyc << "\n";
    std::cout << "lr_minima: " << st.lr_minima << "\n";
    std::cout << "rl_minima: " << st.rl_minima << "\n";
    std::cout << "descent_tops:";
    for (int v : st.descent_tops) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "linear_map: " << riordan_linear_map(sigma).str() << "\n";
    if (sigma.size() >= 2) std::cout << "pi_map: " << pi_map(sigma).str() << "\n";
    return kExitOk;
}

int cmd_eulerian(const GlobalConfig& cfg, int n, const std::string& multiset, int shift) {
    if (!multiset.empty()) {
        std::cout << multiset_descent_poly_direct(parse_int_csv(multiset), cfg.cap_factorial).str()
                  << "\n";
        return kExitOk;
    }
    if (shift > 1) {
        std::cout << shifted_descent_poly_direct(n, shift, cfg.cap_factorial).str() << "\n";
        return kExitOk;
    }
    std::cout << descent_top_poly_direct(n, cfg.cap_factorial).str() << "\n";
    return kExitOk;
}

UnivariatePolynomial univariate_from_json(const nlohmann::json& j, const std::string& key) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at(key)) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return UnivariatePolynomial(std::move(coeffs));
}

int cmd_apolar(const GlobalConfig& cfg, const std::string& mode, const std::string& input) {
    nlohmann::json j;
    {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open file: " + input);
        in >> j;
    }
    if (mode == "form") {
        const auto f = univariate_from_json(j, "f");
        const auto g = univariate_from_json(j, "g");
        std::cout << apolarity_form(f, g).get_str() << "\n";
        return kExitOk;
    }
    if (mode == "complement") {
        const auto g = univariate_from_json(j, "g");
        std::vector<Rational> params;
        for (const auto& c : j.at("free")) params.push_back(rational_from_string(c.get<std::string>()));
        const int n = j.value("n", g.degree());
        std::cout << apolar_complement(g, n, params).str() << "\n";
        return kExitOk;
    }
    if (mode == "mobius") {
        const auto f = univariate_from_json(j, "f");
        const auto& m = j.at("map");
        const MobiusMap phi(rational_from_string(m.at(0).get<std::string>()),
                            rational_from_string(m.at(1).get<std::string>()),
                            rational_from_string(m.at(2).get<std::string>()),
                            rational_from_string(m.at(3).get<std::string>()));
        std::cout << mobius_transform(f, phi).str() << "\n";
        return kExitOk;
    }
    if (mode == "grace-demo") {
        std::vector<std::complex<double>> roots;
        for (const auto& root : j.at("roots"))
            roots.emplace_back(root.at(0).get<double>(), root.at(1).get<double>());
        GraceDemoParams params;
        params.center = {j.value("center_re", 0.0), j.value("center_im", 0.0)};
        params.radius = j.value("radius", 1.0);
        params.trials = j.value("trials", 100);
        params.tol = j.value("tol", 1e-8);
        params.seed = cfg.seed;
        const GraceDemoReport report = grace_demo(roots, params);
        std::cout << "trials: " << report.trials << "\nviolations: " << report.violations
                  << "\nskipped: " << report.skipped << "\n";
        return report.violations == 0 ? kExitOk : kExitFailures;
    }
    throw CLI::ValidationError("apolar", "unknown mode '" + mode + "'");
}

int cmd_verify(const GlobalConfig& cfg, const std::string& suite, int n, const std::string& v_csv,
               const std::string& input) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.trials = cfg.trials;
    opt.jobs = cfg.jobs;
    std::vector<SuiteReport> reports;

    auto ferrers_input = [&]() {
        const MatrixInput mi = load_matrix(input);
        if (!std::holds_alternative<FerrersMatrix>(mi))
            throw std::runtime_error("suite '" + suite + "' expects a Ferrers matrix input");
        return std::get<FerrersMatrix>(mi);
    };

    if (suite == "recurrence") {
        reports.push_back(input.empty() ? run_recurrence_suite(n > 0 ? n : 5, opt)
                                        : verify_recurrence(ferrers_input()));
    } else if (suite == "alpha-recurrence") {
        reports.push_back(input.empty() ? run_alpha_recurrence_suite(n > 0 ? n : 4, opt)
                                        : verify_alpha_recurrence(ferrers_input()));
    } else if (suite == "duality") {
        reports.push_back(input.empty() ? run_duality_suite(n > 0 ? n : 4, opt)
                                        : verify_duality(ferrers_input()));
    } else if (suite == "z-to-y") {
        reports.push_back(input.empty() ? run_z_to_y_suite(n > 0 ? n : 4, opt)
                                        : verify_z_to_y(ferrers_input()));
    } else if (suite == "mcpc") {
        reports.push_back(run_mcpc_suite(n > 0 ? n : 5, 100, opt));
    } else if (suite == "mmcpc") {
        reports.push_back(input.empty() ? run_mmcpc_suite(n > 0 ? n : 5, 100, opt)
                                        : verify_mmcpc(monotone_from_input(input), opt));
    } else if (suite == "k-identities") {
        if (input.empty()) {
            reports.push_back(run_k_identities_suite(n > 0 ? n : 4, opt));
        } else {
            const MatrixInput mi = load_matrix(input);
            reports.push_back(std::holds_alternative<FerrersMatrix>(mi)
                                  ? verify_k_identities(std::get<FerrersMatrix>(mi), opt)
                                  : verify_k_identities(std::get<MonotoneColumnMatrix>(mi), opt));
        }
    } else if (suite == "eulerian") {
        reports.push_back(run_eulerian_suite(n > 0 ? n : 7, opt));
    } else if (suite == "multiset-eulerian") {
        reports.push_back(v_csv.empty() ? run_multiset_eulerian_suite(n > 0 ? n : 6, opt)
                                        : verify_multiset_eulerian(parse_int_csv(v_csv), opt));
    } else if (suite == "top-inequality") {
        reports.push_back(run_top_inequality_suite(n > 0 ? n : 7));
    } else if (suite == "inequalities") {
        reports.push_back(input.empty()
                              ? run_inequalities_suite(200, 200, 1000, 50, opt)
                              : verify_inequalities(monotone_from_input(input), opt));
    } else if (suite == "apolarity") {
        reports.push_back(run_apolarity_suite(200, opt));
    } else if (suite == "engines") {
        reports.push_back(run_engine_crossvalidation_suite(100, 100, opt));
    } else if (suite == "all") {
        reports = run_all_suites(opt);
    } else {
        throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");
    }
    return finish_suites(cfg, reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact permanents of polynomial matrices, stability certification, and identity "
                 "verification suites",
                 "mcperm"};
    app.set_help_all_flag("--help-all", "Expand help for every subcommand");
    app.require_subcommand(1);

    GlobalConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for every randomized component (echoed into reports)");
    app.add_option("--trials", cfg.trials, "Sampling trials per stability test");
    app.add_option("--jobs", cfg.jobs, "Worker threads; results are independent of the job count");
    app.add_option("--report", cfg.report_path, "Write a JSON report to this path");
    app.add_option("--cap-enumeration", cfg.cap_enumeration, "Max n for n! permanent enumeration");
    app.add_option("--cap-factorial", cfg.cap_factorial, "Max n for S_n statistics enumeration");
    app.add_option("--cap-symbolic", cfg.cap_symbolic, "Max n for 2^n symbolic permanent cells");

    auto* perm = app.add_subcommand("perm", "Permanent of a rational matrix (exact)");
    perm->fallthrough();
    std::string perm_input, perm_engine = "auto";
    int perm_k = -1;
    bool perm_alpha = false;
    perm->add_option("--input", perm_input, "Matrix file (.json or .csv)")->required();
    perm->add_option("--k", perm_k, "k-permanent instead of the full permanent");
    perm->add_flag("--alpha", perm_alpha, "Cycle-weighted permanent with symbolic alpha");
    perm->add_option("--engine", perm_engine, "auto|enumerate|subset-dp|inclusion-exclusion");

    auto* mcp = app.add_subcommand("mcp-poly", "per(JZ + A) for a monotone column matrix");
    mcp->fallthrough();
    std::string mcp_input;
    int mcp_k = -1;
    bool mcp_diag = false;
    mcp->add_option("--input", mcp_input, "Matrix file (.json or .csv)")->required();
    mcp->add_option("--k", mcp_k, "k-permanent variant");
    mcp->add_flag("--diagonal", mcp_diag, "Set all z_j = z and certify real-rootedness");

    auto* chk = app.add_subcommand("check-stability", "Sampling stability test of a polynomial");
    chk->fallthrough();
    std::string chk_input, chk_rayleigh;
    int chk_points = 1000;
    chk->add_option("--input", chk_input, "Text file with a polynomial in canonical grammar")
        ->required();
    chk->add_option("--rayleigh", chk_rayleigh,
                    "Also run the Rayleigh difference on a pair, e.g. z1,z2");
    chk->add_option("--points", chk_points, "Evaluation points for --rayleigh");

    auto* st = app.add_subcommand("stats", "Permutation statistics");
    st->fallthrough();
    std::string st_perm;
    st->add_option("--perm", st_perm, "Permutation word, digits (341526978) or comma list")
        ->required();

    auto* eu = app.add_subcommand("eulerian", "Descent-top generating polynomials by enumeration");
    eu->fallthrough();
    int eu_n = 5, eu_shift = 1;
    std::string eu_multiset;
    eu->add_option("--n", eu_n, "Symmetric group size");
    eu->add_option("--multiset", eu_multiset, "Content vector for multiset words, e.g. 2,1,2");
    eu->add_option("--shift", eu_shift, "Relaxed descent condition sigma(i) > sigma(i+1)+shift-1");

    auto* ap = app.add_subcommand("apolar", "Apolarity form, complements, Moebius maps, Grace demo");
    ap->fallthrough();
    std::string ap_mode, ap_input;
    ap->add_option("mode", ap_mode, "form|complement|mobius|grace-demo")->required();
    ap->add_option("--input", ap_input, "JSON input file")->required();

    auto* ver = app.add_subcommand("verify", "Identity and inequality verification suites");
    ver->fallthrough();
    std::string ver_suite, ver_v, ver_input;
    int ver_n = 0;
    ver->add_option("suite", ver_suite,
                    "recurrence|alpha-recurrence|duality|z-to-y|mcpc|mmcpc|k-identities|eulerian|"
                    "multiset-eulerian|top-inequality|inequalities|apolarity|engines|all")
        ->required();
    ver->add_option("--n", ver_n, "Size parameter for the suite");
    ver->add_option("--v", ver_v, "Composition for multiset suites, e.g. 2,1,2");
    ver->add_option("--input", ver_input, "Run the suite on one matrix from a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (perm->parsed()) return cmd_perm(cfg, perm_input, perm_k, perm_alpha, perm_engine);
        if (mcp->parsed()) return cmd_mcp_poly(cfg, mcp_input, mcp_k, mcp_diag);
        if (chk->parsed()) return cmd_check_stability(cfg, chk_input, chk_rayleigh, chk_points);
        if (st->parsed()) return cmd_stats(st_perm);
        if (eu->parsed()) return cmd_eulerian(cfg, eu_n, eu_multiset, eu_shift);
        if (ap->parsed()) return cmd_apolar(cfg, ap_mode, ap_input);
        if (ver->parsed()) return cmd_verify(cfg, ver_suite, ver_n, ver_v, ver_input);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
