#include "chm/butson.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "chm/catalog.hpp"
#include "chm/search.hpp"

namespace chm {

namespace {

struct Cursor {
    std::istream& in;
    std::size_t line = 0;

    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++line;
            const std::size_t hash = out.find('#');
            if (hash != std::string::npos) out.erase(hash);
            if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    }
};

LogMatrix parse_one(Cursor& cur, const std::string& header) {
    std::istringstream hs(header);
    std::string tag;
    long long n = 0, q = 0;
    if (!(hs >> tag >> n >> q) || tag != "BH" || n <= 0 || q < 2)
        fail(ErrorKind::ParseError,
             "line " + std::to_string(cur.line) + ": expected header 'BH n q'");
    LogMatrix l;
    l.n = static_cast<std::size_t>(n);
    l.q = static_cast<unsigned>(q);
    l.exps.reserve(l.n * l.n);
    std::string row;
    for (std::size_t r = 0; r < l.n; ++r) {
        if (!cur.next(row))
            fail(ErrorKind::ParseError, "line " + std::to_string(cur.line) +
                                            ": record ends after " + std::to_string(r) + " rows");
        std::istringstream rs(row);
        long long e = 0;
        for (std::size_t c = 0; c < l.n; ++c) {
            if (!(rs >> e))
                fail(ErrorKind::ParseError, "line " + std::to_string(cur.line) + ", column " +
                                                std::to_string(c + 1) + ": expected an integer");
            if (e < 0 || e >= q)
                fail(ErrorKind::RangeError, "line " + std::to_string(cur.line) + ": exponent " +
                                                std::to_string(e) + " outside [0, " +
                                                std::to_string(q) + ")");
            l.exps.push_back(static_cast<int>(e));
        }
        long long extra;
        if (rs >> extra)
            fail(ErrorKind::ParseError,
                 "line " + std::to_string(cur.line) + ": row has extra entries");
    }
    return l;
}

}  // namespace

LogMatrix parse_log(const std::string& text) {
    std::istringstream in(text);
    Cursor cur{in};
    std::string header;
    if (!cur.next(header)) fail(ErrorKind::ParseError, "empty input");
    return parse_one(cur, header);
}

std::vector<LogMatrix> parse_log_stream(std::istream& in) {
    Cursor cur{in};
    std::vector<LogMatrix> out;
    std::string header;
    while (cur.next(header)) out.push_back(parse_one(cur, header));
    return out;
}

std::vector<LogMatrix> parse_log_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    return parse_log_stream(in);
}

std::string emit_log(const LogMatrix& l) {
    std::ostringstream os;
    os << "BH " << l.n << ' ' << l.q << '\n';
    for (std::size_t r = 0; r < l.n; ++r) {
        for (std::size_t c = 0; c < l.n; ++c) {
            if (c) os << ' ';
            os << l.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

cd unit_root(long e, unsigned q) {
    long r = e % static_cast<long>(q);
    if (r < 0) r += q;
    const long quads = 4 * r;
    if (quads % q == 0) {
        switch ((quads / q) % 4) {
            case 0: return cd(1.0, 0.0);
            case 1: return cd(0.0, 1.0);
            case 2: return cd(-1.0, 0.0);
            case 3: return cd(0.0, -1.0);
        }
    }
    return std::polar(1.0, 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(q));
}

CMatrix to_complex(const LogMatrix& l) {
    CMatrix m(l.n);
    for (std::size_t r = 0; r < l.n; ++r)
        for (std::size_t c = 0; c < l.n; ++c) m(r, c) = unit_root(l.at(r, c), l.q);
    return m;
}

bool is_butson(const CMatrix& x, unsigned q, Tolerance tol) {
    const std::size_t n = x.order();
    if (!is_unimodular(x, tol) || !is_unitary(x, static_cast<double>(n), tol)) return false;
    for (const cd& z : x.entries()) {
        double turns = std::arg(z) / (2.0 * M_PI) * q;
        double nearest = std::round(turns);
        // arc distance between z and the nearest q-th root
        if (std::abs(z - std::polar(1.0, 2.0 * M_PI * nearest / q)) > tol.eps) return false;
    }
    return true;
}

namespace {

// integer polynomials, coefficient vectors with c[i] for x^i
using Poly = std::vector<long long>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division assuming divisor is monic and divides evenly
Poly divide_monic(Poly num, const Poly& den) {
    Poly quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, 0);
    for (std::size_t i = num.size(); i-- >= den.size() && i + 1 >= den.size();) {
        const long long f = num[i];
        if (f == 0) {
            if (i + 1 == den.size()) break;
            continue;
        }
        quot[i - (den.size() - 1)] = f;
        for (std::size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= f * den[j];
        if (i + 1 == den.size()) break;
    }
    trim(num);
    return quot;
}

Poly cyclotomic(unsigned q) {
    // Phi_q = (x^q - 1) / prod_{d | q, d < q} Phi_d
    Poly num(q + 1, 0);
    num[0] = -1;
    num[q] = 1;
    for (unsigned d = 1; d < q; ++d) {
        if (q % d) continue;
        Poly phi_d = cyclotomic(d);
        num = divide_monic(std::move(num), phi_d);
    }
    return num;
}

// remainder of p modulo the monic divisor
bool reduces_to_zero(Poly p, const Poly& den) {
    for (std::size_t i = p.size(); i-- + 1 >= den.size() + 1 && i + 1 >= den.size();) {
        const long long f = p[i];
        if (f != 0)
            for (std::size_t j = 0; j < den.size(); ++j) p[i - (den.size() - 1) + j] -= f * den[j];
        if (i + 1 == den.size()) break;
    }
    trim(p);
    return p.empty();
}

}  // namespace

bool log_is_hadamard(const LogMatrix& l) {
    if (l.q > 64) {
        return is_unitary(to_complex(l), static_cast<double>(l.n), Tolerance(1e-9));
    }
    const Poly phi = cyclotomic(l.q);
    for (std::size_t i = 0; i < l.n; ++i) {
        for (std::size_t j = i + 1; j < l.n; ++j) {
            Poly counts(l.q, 0);
            for (std::size_t k = 0; k < l.n; ++k) {
                int delta = l.at(i, k) - l.at(j, k);
                if (delta < 0) delta += static_cast<int>(l.q);
                ++counts[static_cast<std::size_t>(delta)];
            }
            if (!reduces_to_zero(std::move(counts), phi)) return false;
        }
    }
    return true;
}

ScanStrategy scan_strategy_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, std::string("strategy JSON: ") + e.what());
    }
    ScanStrategy s;
    try {
        s.target = target_from_string(j.value("target", "2u"));
        s.right_perm = j.value("right_permutation", "");
        if (!s.right_perm.empty() && s.right_perm != "p9" && s.right_perm != "p16" &&
            s.right_perm != "none")
            fail(ErrorKind::DomainError, "right_permutation must be p9, p16 or none");
        if (s.right_perm == "none") s.right_perm.clear();
        s.seed = j.value("seed", 0ull);
        if (j.contains("phase_walk") && !j["phase_walk"].is_null()) {
            const auto& w = j["phase_walk"];
            ScanWalk walk;
            walk.max_iters = w.value("max_iters", walk.max_iters);
            walk.restarts = w.value("restarts", walk.restarts);
            walk.tol = w.value("tol", walk.tol);
            walk.conjugate = w.value("conjugate", false);
            walk.step_init = w.value("step_init", walk.step_init);
            walk.step_decay = w.value("step_decay", walk.step_decay);
            walk.step_floor = w.value("step_floor", walk.step_floor);
            if (w.contains("grid") && !w["grid"].is_null()) walk.grid = w["grid"].get<double>();
            s.walk = walk;
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("strategy JSON: ") + e.what());
    }
    return s;
}

namespace {

ScanRecordResult scan_record(const LogMatrix& rec, std::size_t index, std::size_t d,
                             const ScanStrategy& strategy) {
    ScanRecordResult out;
    out.index = index;
    try {
        if (rec.n != d * d)
            fail(ErrorKind::ShapeMismatch, "record order " + std::to_string(rec.n) +
                                               " is not d^2 = " + std::to_string(d * d));
        CMatrix x = to_complex(rec);
        if (strategy.right_perm == "p9") x = x * perm_p9();
        if (strategy.right_perm == "p16") x = x * perm_p16();

        if (!strategy.walk) {
            std::vector<double> zeros(x.order(), 0.0);
            out.chi = objective_z(x, zeros, zeros, d, strategy.target);
            out.hit = out.chi <= 1e-10;
            return out;
        }
        SearchConfig cfg;
        cfg.target = strategy.target;
        cfg.max_iters = strategy.walk->max_iters;
        cfg.restarts = strategy.walk->restarts;
        cfg.chi_tol = strategy.walk->tol;
        cfg.step.initial = strategy.walk->step_init;
        cfg.step.decay = strategy.walk->step_decay;
        cfg.step.floor = strategy.walk->step_floor;
        if (strategy.walk->grid) {
            cfg.step.initial = *strategy.walk->grid;
            cfg.step.decay = 1.0;
            cfg.step.floor = *strategy.walk->grid;
        }
        cfg.conjugate_dressing = strategy.walk->conjugate;
        cfg.seed = Rng::derive(strategy.seed, index).next_u64();
        SearchResult res = phase_walk(x, d, cfg);
        out.hit = res.converged;
        out.chi = res.objective;
        out.alpha = res.alpha;
        out.beta = res.beta;
    } catch (const Error& e) {
        out.error = e.what();
        out.hit = false;
    }
    return out;
}

}  // namespace

std::vector<ScanRecordResult> scan(const std::vector<LogMatrix>& records, std::size_t d,
                                   const ScanStrategy& strategy, unsigned jobs) {
    std::vector<ScanRecordResult> results(records.size());
    if (jobs < 1) jobs = 1;
    const unsigned workers = std::min<unsigned>(jobs, std::max<std::size_t>(records.size(), 1));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= records.size()) return;
            results[i] = scan_record(records[i], i + 1, d, strategy);
        }
    };
    if (workers == 1) {
        work();
    } else {
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return results;
}

std::string to_json_line(const ScanRecordResult& r) {
    nlohmann::json j;
    j["index"] = r.index;
    j["hit"] = r.hit;
    j["chi"] = r.chi;
    if (!r.alpha.empty())
        j["dressing"] = {{"alpha", r.alpha}, {"beta", r.beta}};
    else
        j["dressing"] = nullptr;
    if (!r.error.empty()) j["error"] = r.error;
    return j.dump();
}

}  // namespace chm
