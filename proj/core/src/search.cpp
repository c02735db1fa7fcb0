#include "chm/search.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "chm/rearrange.hpp"

namespace chm {

namespace {

CMatrix dress(const CMatrix& x, const std::vector<double>& alpha,
              const std::vector<double>& beta) {
    const std::size_t n = x.order();
    CMatrix y(n);
    for (std::size_t r = 0; r < n; ++r) {
        const cd l = std::polar(1.0, alpha[r]);
        for (std::size_t c = 0; c < n; ++c) y(r, c) = l * x(r, c) * std::polar(1.0, beta[c]);
    }
    return y;
}

}  // namespace

SearchResult phase_walk(const CMatrix& x, std::size_t d, const SearchConfig& cfg) {
    const std::size_t n = x.order();
    if (n != d * d) fail(ErrorKind::ShapeMismatch, "order is not d^2");
    if (!cfg.frozen.empty() && cfg.frozen.size() != 2 * n)
        fail(ErrorKind::ShapeMismatch, "frozen mask must have 2n entries");

    std::vector<std::size_t> free;
    const std::size_t slots = cfg.conjugate_dressing ? n : 2 * n;
    for (std::size_t i = 0; i < slots; ++i)
        if (cfg.frozen.empty() || !cfg.frozen[i]) free.push_back(i);
    if (free.empty()) fail(ErrorKind::DomainError, "every phase is frozen");

    SearchResult out;
    out.seed = cfg.seed;
    out.objective = std::numeric_limits<double>::infinity();
    const std::size_t restarts = std::max<std::size_t>(cfg.restarts, 1);
    const std::size_t per_restart = std::max<std::size_t>(cfg.max_iters / restarts, 1);

    std::size_t used = 0;
    for (std::size_t restart = 0; restart < restarts; ++restart) {
        Rng rng = Rng::derive(cfg.seed, restart);
        std::vector<double> alpha(n, 0.0), beta(n, 0.0);
        if (restart > 0) {
            for (std::size_t i = 0; i < n; ++i) alpha[i] = 2.0 * M_PI * rng.uniform();
            if (cfg.conjugate_dressing) {
                for (std::size_t i = 0; i < n; ++i) beta[i] = -alpha[i];
            } else {
                for (std::size_t i = 0; i < n; ++i) beta[i] = 2.0 * M_PI * rng.uniform();
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (!cfg.frozen.empty() && cfg.frozen[i]) alpha[i] = 0.0;
                if (!cfg.frozen.empty() && cfg.frozen[n + i] && !cfg.conjugate_dressing)
                    beta[i] = 0.0;
            }
            if (cfg.conjugate_dressing)
                for (std::size_t i = 0; i < n; ++i) beta[i] = -alpha[i];
        }

        double step = cfg.step.initial;
        double best = objective_z(x, alpha, beta, d, cfg.target);
        std::size_t rejects = 0;

        for (std::size_t it = 0; it < per_restart && used < cfg.max_iters; ++it, ++used) {
            if (best <= cfg.chi_tol) break;
            const std::size_t k = free[rng.index(free.size())];
            const double s = rng.coin() ? step : -step;
            if (k < n) {
                alpha[k] += s;
                if (cfg.conjugate_dressing) beta[k] -= s;
            } else {
                beta[k - n] += s;
            }
            const double v = objective_z(x, alpha, beta, d, cfg.target);
            if (v < best) {
                best = v;
                rejects = 0;
            } else {
                if (k < n) {
                    alpha[k] -= s;
                    if (cfg.conjugate_dressing) beta[k] += s;
                } else {
                    beta[k - n] -= s;
                }
                if (++rejects >= 64) {
                    step = std::max(step * cfg.step.decay, cfg.step.floor);
                    rejects = 0;
                }
            }
        }

        if (best < out.objective) {
            out.objective = best;
            out.alpha = alpha;
            out.beta = beta;
        }
        if (out.objective <= cfg.chi_tol) break;
    }

    out.iterations = used;
    out.converged = out.objective <= cfg.chi_tol;
    out.matrix = dress(x, out.alpha, out.beta);
    return out;
}

CMatrix sinkhorn_step(const CMatrix& x, std::size_t d, Tolerance tol) {
    const std::size_t n = x.order();
    if (n != d * d) fail(ErrorKind::ShapeMismatch, "order is not d^2");
    CMatrix t(n);
    for (std::size_t i = 0; i < n * n; ++i) {
        const double m = std::abs(x.entries()[i]);
        if (m < tol.eps) fail(ErrorKind::ZeroEntry, "degenerate iterate");
        t.entries()[i] = x.entries()[i] / m;
    }
    return reshuffle(partial_transpose(polar_unitary(t, tol), d), d);
}

SearchResult sinkhorn_search(std::size_t n, const SearchConfig& cfg) {
    std::size_t d = 0;
    for (std::size_t c = 2; c * c <= n; ++c)
        if (c * c == n) d = c;
    if (d == 0) fail(ErrorKind::ShapeMismatch, "n must be a perfect square");

    constexpr std::size_t kStagnationWindow = 500;
    constexpr double kStagnationEps = 1e-14;

    SearchResult out;
    out.seed = cfg.seed;
    out.objective = std::numeric_limits<double>::infinity();
    const std::size_t restarts = std::max<std::size_t>(cfg.restarts, 1);
    const std::size_t per_restart = std::max<std::size_t>(cfg.max_iters / restarts, 1);
    std::size_t used = 0;

    for (std::size_t restart = 0; restart < restarts; ++restart) {
        Rng rng = Rng::derive(cfg.seed, restart);
        CMatrix x(n);
        for (cd& z : x.entries()) z = cd(rng.normal(), rng.normal());

        double best = std::numeric_limits<double>::infinity();
        std::size_t best_it = 0;
        for (std::size_t it = 0; it < per_restart && used < cfg.max_iters; ++it, ++used) {
            CMatrix t(n);
            bool degenerate = false;
            for (std::size_t i = 0; i < n * n; ++i) {
                const double m = std::abs(x.entries()[i]);
                if (m < 1e-10) {
                    degenerate = true;
                    break;
                }
                t.entries()[i] = x.entries()[i] / m;
            }
            if (degenerate) break;
            const double c = chi(t, d);
            if (c < out.objective) {
                out.objective = c;
                out.matrix = t;
            }
            if (c <= cfg.chi_tol && is_unimodular(t) && is_unitary(t, static_cast<double>(n))) {
                out.objective = c;
                out.matrix = t;
                out.converged = true;
                out.iterations = used;
                return out;
            }
            if (c < best - kStagnationEps) {
                best = c;
                best_it = it;
            } else if (it - best_it >= kStagnationWindow) {
                break;   // stagnated, next restart
            }
            try {
                x = reshuffle(partial_transpose(polar_unitary(t), d), d);
            } catch (const Error&) {
                break;   // rank-deficient polar factor, next restart
            }
        }
    }

    out.iterations = used;
    out.converged = false;
    return out;
}

}  // namespace chm
