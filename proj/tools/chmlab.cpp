// chmlab: construct, verify, search and scan complex Hadamard matrices
// with duality and multi-unitarity structure.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chm/butson.hpp"
#include "chm/catalog.hpp"
#include "chm/classify.hpp"
#include "chm/entropy.hpp"
#include "chm/io.hpp"
#include "chm/rearrange.hpp"
#include "chm/search.hpp"

namespace {

using namespace chm;

constexpr int kExitHit = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_params(const std::string& csv) {
    std::vector<double> out;
    if (csv.empty()) return out;
    std::stringstream s(csv);
    std::string tok;
    while (std::getline(s, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

CMatrix input_matrix(const std::string& path) {
    if (path.empty() || path == "-") return read_matrix(std::cin);
    return read_matrix_file(path);
}

int run_construct(const std::string& name, const std::string& params_csv, std::size_t n,
                  const std::string& zeta, bool log_form) {
    const std::vector<double> params = parse_params(params_csv);
    std::optional<LogMatrix> log;
    CMatrix m;
    if (name == "fourier") {
        m = fourier(n);
        LogMatrix l;
        l.n = n;
        l.q = static_cast<unsigned>(n);
        l.exps.resize(n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) l.at(j, k) = static_cast<int>((j * k) % n);
        log = l;
    } else if (name == "f4") {
        if (params.size() != 1) fail(ErrorKind::ArityMismatch, "f4 takes one phase");
        m = fourier_f4(params[0]);
    } else if (name == "f9_4") {
        if (params.size() != 4) fail(ErrorKind::ArityMismatch, "f9_4 takes four phases");
        m = fourier_f9_4(params[0], params[1], params[2], params[3]);
    } else if (name == "catmap") {
        if (params.size() != 3) fail(ErrorKind::ArityMismatch, "catmap takes a,b,c");
        m = cat_map(CatMapParams(n, params[0], params[1], params[2]));
    } else if (name == "karlsson") {
        m = karlsson(KarlssonParam(parse_complex(zeta)));
    } else {
        m = named_matrix(name, params);
        log = named_log_matrix(name);
    }
    if (log_form) {
        if (!log) fail(ErrorKind::DomainError, "'" + name + "' has no exact logarithmic form");
        std::cout << emit_log(*log);
    } else {
        write_matrix(std::cout, m);
    }
    return kExitHit;
}

int run_verify(const std::string& file, std::size_t d, const std::string& target, std::size_t k,
               double tol_eps, bool json) {
    const CMatrix m = input_matrix(file);
    const Tolerance tol(tol_eps);

    const bool has_target = !target.empty();
    bool ok = true;
    if (target == "ku") {
        const TensorShape shape(d, k);
        ok = is_k_unitary(m, shape, tol);
        if (json) {
            nlohmann::json j;
            j["n"] = m.order();
            j["d"] = d;
            j["k"] = k;
            j["k_unitary"] = ok;
            std::cout << j.dump() << '\n';
        } else {
            std::cerr << (ok ? "k-unitary" : "not k-unitary") << '\n';
        }
        return ok ? kExitHit : kExitNegative;
    }

    const ClassReport report = classify(m, d, tol);
    if (has_target) {
        if (target == "chm") ok = report.chm;
        else if (target == "dual") ok = report.r_dual;
        else if (target == "gamma-dual") ok = report.gamma_dual;
        else if (target == "self-dual") ok = report.self_r_dual;
        else if (target == "self-gamma-dual") ok = report.self_gamma_dual;
        else if (target == "2u") ok = report.two_unitary;
        else fail(ErrorKind::DomainError, "unknown target '" + target + "'");
    }
    if (json) {
        std::cout << to_json(report) << '\n';
    } else {
        std::cerr << "triple = (" << report.triple.s << ", " << report.triple.s_r << ", "
                  << report.triple.s_g << ")\n"
                  << "chm=" << report.chm << " 2u=" << report.two_unitary
                  << " dual=" << report.r_dual << " gamma-dual=" << report.gamma_dual
                  << " self-dual=" << report.self_r_dual
                  << " self-gamma-dual=" << report.self_gamma_dual << '\n';
        if (has_target) std::cerr << "target '" << target << "': " << (ok ? "yes" : "no") << '\n';
    }
    return ok ? kExitHit : kExitNegative;
}

std::string result_json(const SearchResult& r, const std::string& matrix_file) {
    nlohmann::json j;
    j["converged"] = r.converged;
    j["chi"] = r.objective;
    j["iters"] = r.iterations;
    j["seed"] = r.seed;
    if (matrix_file.empty())
        j["matrix_file"] = nullptr;
    else
        j["matrix_file"] = matrix_file;
    return j.dump();
}

int run_search(const std::string& kind, std::size_t n, const std::string& file,
               const std::string& target, std::uint64_t seed, std::size_t seeds,
               std::size_t max_iters, std::size_t restarts, double chi_tol,
               const std::string& freeze, const std::string& out_dir, unsigned jobs) {
    CMatrix x;
    if (kind == "phasewalk") {
        x = input_matrix(file);
        n = x.order();
    }
    std::size_t d = 0;
    for (std::size_t c = 2; c * c <= n; ++c)
        if (c * c == n) d = c;
    if (d == 0) fail(ErrorKind::ShapeMismatch, "order must be a perfect square");

    SearchConfig base;
    base.target = target_from_string(target);
    base.max_iters = max_iters;
    base.restarts = restarts;
    base.chi_tol = chi_tol;
    if (!freeze.empty()) {
        if (freeze.size() != 2 * n)
            fail(ErrorKind::ShapeMismatch,
                 "freeze mask needs 2n = " + std::to_string(2 * n) + " characters of 0/1");
        base.frozen.resize(2 * n);
        for (std::size_t i = 0; i < freeze.size(); ++i) base.frozen[i] = freeze[i] == '1';
    }

    std::vector<SearchResult> results(seeds);
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds) return;
            SearchConfig cfg = base;
            cfg.seed = (seeds == 1) ? seed : Rng::derive(seed, i).next_u64();
            results[i] = (kind == "sinkhorn") ? sinkhorn_search(n, cfg) : phase_walk(x, d, cfg);
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    bool any = false;
    for (std::size_t i = 0; i < seeds; ++i) {
        std::string path;
        if (results[i].converged && !out_dir.empty()) {
            path = out_dir + "/" + kind + "-n" + std::to_string(n) + "-" + std::to_string(i) +
                   ".txt";
            std::ofstream f(path);
            write_matrix(f, results[i].matrix);
        }
        std::cout << result_json(results[i], path) << '\n';
        any = any || results[i].converged;
    }
    return any ? kExitHit : kExitNegative;
}

int run_scan(const std::string& file, std::size_t d, const std::string& strategy_path,
             unsigned jobs) {
    std::ifstream s(strategy_path);
    if (!s) fail(ErrorKind::ParseError, "cannot open strategy '" + strategy_path + "'");
    std::stringstream buf;
    buf << s.rdbuf();
    const ScanStrategy strategy = scan_strategy_from_json(buf.str());
    const std::vector<LogMatrix> records = parse_log_file(file);
    const auto results = scan(records, d, strategy, jobs);
    bool any = false;
    for (const auto& r : results) {
        std::cout << to_json_line(r) << '\n';
        any = any || r.hit;
    }
    return any ? kExitHit : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex Hadamard matrices with duality and multi-unitarity structure"};
    app.require_subcommand(1);

    std::string c_name, c_params, c_zeta;
    std::size_t c_n = 2;
    bool c_log = false, c_complex = false;
    auto* construct = app.add_subcommand("construct", "emit a catalog matrix");
    construct->add_option("name", c_name, "catalog name, or fourier|f4|f9_4|catmap|karlsson")
        ->required();
    construct->add_option("--params", c_params, "comma-separated parameters");
    construct->add_option("--n", c_n, "order for fourier/catmap");
    construct->add_option("--zeta", c_zeta, "complex parameter for karlsson, e.g. 0.3+0.1j");
    construct->add_flag("--log", c_log, "emit the exact logarithmic form");
    construct->add_flag("--complex", c_complex, "emit the complex text form (default)");

    std::string v_file, v_target;
    std::size_t v_d = 3, v_k = 2;
    double v_tol = 1e-10;
    bool v_json = false;
    auto* verify = app.add_subcommand("verify", "classify a matrix or check a target property");
    verify->add_option("--file", v_file, "matrix file ('-' or omitted: standard input)");
    verify->add_option("--d", v_d, "local dimension")->required();
    verify->add_option("--target", v_target, "chm|dual|gamma-dual|self-dual|self-gamma-dual|2u|ku");
    verify->add_option("--k", v_k, "half-party count for --target ku");
    verify->add_option("--tol", v_tol, "predicate tolerance");
    verify->add_flag("--json", v_json, "machine-readable report on standard output");

    std::string s_kind, s_file, s_target = "2u", s_freeze, s_out;
    std::size_t s_n = 9, s_seeds = 1, s_max_iters = 1000000, s_restarts = 8;
    std::uint64_t s_seed = 0;
    double s_tol = 1e-12;
    unsigned s_jobs = 1;
    auto* search = app.add_subcommand("search", "run a dressing walk or the alternating map");
    search->add_option("kind", s_kind, "sinkhorn|phasewalk")
        ->required()
        ->check(CLI::IsMember({"sinkhorn", "phasewalk"}));
    search->add_option("--n", s_n, "order (sinkhorn)");
    search->add_option("--file", s_file, "input matrix (phasewalk; '-' for stdin)");
    search->add_option("--target", s_target, "2u|dual|gamma-dual|self-dual|self-gamma-dual");
    search->add_option("--seed", s_seed, "master seed (derived seeds are recorded in the output)");
    search->add_option("--seeds", s_seeds, "number of independent runs");
    search->add_option("--max-iters", s_max_iters, "step budget per run");
    search->add_option("--restarts", s_restarts, "restarts per run");
    search->add_option("--tol", s_tol, "convergence tolerance");
    search->add_option("--freeze", s_freeze, "0/1 mask of length 2n fixing phases");
    search->add_option("--out", s_out, "directory for converged matrices");
    search->add_option("--jobs", s_jobs, "worker threads");

    std::string sc_file, sc_strategy;
    std::size_t sc_d = 4;
    unsigned sc_jobs = 1;
    auto* scan_cmd = app.add_subcommand("scan", "apply a dressing strategy to a Butson catalog");
    scan_cmd->add_option("--file", sc_file, "logarithmic-form catalog file")->required();
    scan_cmd->add_option("--d", sc_d, "local dimension")->required();
    scan_cmd->add_option("--strategy", sc_strategy, "strategy JSON file")->required();
    scan_cmd->add_option("--jobs", sc_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(c_name, c_params, c_n, c_zeta, c_log);
        if (verify->parsed()) return run_verify(v_file, v_d, v_target, v_k, v_tol, v_json);
        if (search->parsed())
            return run_search(s_kind, s_n, s_file, s_target, s_seed, s_seeds, s_max_iters,
                              s_restarts, s_tol, s_freeze, s_out, s_jobs);
        if (scan_cmd->parsed()) return run_scan(sc_file, sc_d, sc_strategy, sc_jobs);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool usage = e.kind() == ErrorKind::ParseError ||
                           e.kind() == ErrorKind::UnknownName ||
                           e.kind() == ErrorKind::ArityMismatch;
        return usage ? kExitUsage : kExitNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
