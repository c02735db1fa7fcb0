#ifndef CHM_BUTSON_HPP
#define CHM_BUTSON_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chm/entropy.hpp"
#include "chm/matrix.hpp"

namespace chm {

/// Butson matrix in logarithmic form: entries are exp(2 pi i e / q) for an
/// integer exponent table e reduced mod q.
struct LogMatrix {
    std::size_t n = 0;
    unsigned q = 2;
    std::vector<int> exps;   // row-major, values in [0, q)

    int& at(std::size_t r, std::size_t c) { return exps[r * n + c]; }
    int at(std::size_t r, std::size_t c) const { return exps[r * n + c]; }
};

/// File format: header "BH n q", then n lines of n integers in [0, q).
/// Records in a stream are separated by blank lines; '#' starts a comment.
LogMatrix parse_log(const std::string& text);
std::vector<LogMatrix> parse_log_stream(std::istream& in);
std::vector<LogMatrix> parse_log_file(const std::string& path);
std::string emit_log(const LogMatrix& l);

/// exp(2 pi i e / q); quarter-turn roots (+-1, +-i) are returned exactly.
cd unit_root(long e, unsigned q);

CMatrix to_complex(const LogMatrix& l);

/// true iff X is Hadamard and every entry is within eps of a q-th root of unity.
bool is_butson(const CMatrix& x, unsigned q, Tolerance tol = {});

/// Exact Hadamard check on the exponent table: for every row pair the sum
/// of omega^{delta} vanishes, decided by reducing the difference-count
/// polynomial modulo the q-th cyclotomic polynomial in integer arithmetic
/// (q <= 64; beyond that falls back to floating point).
bool log_is_hadamard(const LogMatrix& l);

/// Phase-walk settings for the scan dressing search (subset of SearchConfig,
/// kept declarative so a strategy is a plain JSON object).
struct ScanWalk {
    std::size_t max_iters = 100000;
    std::size_t restarts = 4;
    double tol = 1e-12;
    bool conjugate = false;        // force beta = -alpha (D_R = D_L^dag)
    double step_init = M_PI / 8;
    double step_decay = 0.95;
    double step_floor = 1e-7;
    std::optional<double> grid;    // fixed step size, no decay
};

struct ScanStrategy {
    Target target = Target::TwoUnitary;
    std::string right_perm;        // "", "p9" or "p16"
    std::optional<ScanWalk> walk;  // absent: evaluate the record directly
    std::uint64_t seed = 0;
};

ScanStrategy scan_strategy_from_json(const std::string& json_text);

struct ScanRecordResult {
    std::size_t index = 0;         // 1-based record offset, paper's B_[k]
    bool hit = false;
    double chi = 0.0;              // achieved objective
    std::vector<double> alpha, beta;   // dressing found (empty if none searched)
    std::string error;             // per-record failure, never aborts the scan
};

/// Applies the strategy to every record (order d^2 required) and reports
/// whether the target was met. Deterministic given strategy.seed; records
/// are independent and evaluated on `jobs` threads.
std::vector<ScanRecordResult> scan(const std::vector<LogMatrix>& records, std::size_t d,
                                   const ScanStrategy& strategy, unsigned jobs = 1);

std::string to_json_line(const ScanRecordResult& r);

}  // namespace chm

#endif
