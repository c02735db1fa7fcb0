#ifndef CHM_SEARCH_HPP
#define CHM_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "chm/entropy.hpp"
#include "chm/matrix.hpp"
#include "chm/rng.hpp"

namespace chm {

struct StepSchedule {
    double initial = M_PI / 8;   // shrunk by `decay` after every 64 rejections
    double decay = 0.95;
    double floor = 1e-7;
};

struct SearchConfig {
    Target target = Target::TwoUnitary;
    std::size_t max_iters = 1000000;   // total step budget across restarts
    std::size_t restarts = 8;
    double chi_tol = 1e-12;
    StepSchedule step;
    std::uint64_t seed = 0;
    std::vector<bool> frozen;          // 2n mask over (alpha, beta); empty = none
    bool conjugate_dressing = false;   // constrain beta = -alpha
};

struct SearchResult {
    CMatrix matrix;                    // dressed matrix / converged iterate
    std::vector<double> alpha, beta;   // phase-walk dressing (radians)
    double objective = 0.0;
    std::size_t iterations = 0;        // steps consumed in total
    bool converged = false;
    std::uint64_t seed = 0;
};

/// Greedy random walk over diagonal phases minimizing objective_z. One
/// randomly chosen unfrozen phase moves by +-step per proposal; moves are
/// kept only when the objective decreases; the step shrinks per the
/// schedule. Restart 0 starts from zero phases, later restarts from uniform
/// random ones; streams derive from (cfg.seed, restart). Deterministic.
SearchResult phase_walk(const CMatrix& x, std::size_t d, const SearchConfig& cfg);

/// One iteration of the alternating map: normalize entries to unit modulus,
/// polar-project to the nearest unitary, partial-transpose, reshuffle.
/// Throws ZeroEntry when an entry's modulus falls below eps.
CMatrix sinkhorn_step(const CMatrix& x, std::size_t d, Tolerance tol = {});

/// Iterate sinkhorn_step from a complex Gaussian seed; converged when the
/// entrywise-normalized iterate is unimodular, unitary at scale n and has
/// chi below chi_tol. Restarts on a degenerate iterate or when the best chi
/// fails to improve by 1e-14 within 500 steps. n must be a perfect square.
SearchResult sinkhorn_search(std::size_t n, const SearchConfig& cfg);

}  // namespace chm

#endif
