#include <doctest.h>

#include "chm/butson.hpp"
#include "chm/catalog.hpp"
#include "chm/classify.hpp"
#include "chm/entropy.hpp"
#include "chm/rearrange.hpp"
#include "chm/search.hpp"

using namespace chm;

TEST_CASE("phase walk on the grid recovers the 2-unitary dressing of B") {
    SearchConfig cfg;
    cfg.target = Target::TwoUnitary;
    cfg.max_iters = 60000;
    cfg.restarts = 4;
    cfg.seed = 5;
    cfg.conjugate_dressing = true;
    cfg.step.initial = 2.0 * M_PI / 3.0;   // stay on the third-root grid
    cfg.step.decay = 1.0;
    cfg.step.floor = cfg.step.initial;
    const SearchResult res = phase_walk(named_matrix("b9_selfdual"), 3, cfg);
    CHECK(res.converged);
    CHECK(res.objective <= cfg.chi_tol);
    // the dressed matrix shares the triple of the printed C
    const EntropyTriple t = entropy_triple(res.matrix, 3);
    CHECK(t.s == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(t.s_r == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(t.s_g == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("phase walk drives the isolated matrix to its gamma-dual point") {
    SearchConfig cfg;
    cfg.target = Target::GammaDual;
    cfg.max_iters = 300000;
    cfg.restarts = 4;
    cfg.seed = 0;
    const SearchResult res = phase_walk(named_matrix("b9_0"), 3, cfg);
    REQUIRE(res.converged);
    const EntropyTriple t = entropy_triple(res.matrix, 3);
    CHECK(std::abs(t.s - 1.0) < 1e-9);
    CHECK(std::abs(t.s_g - 1.0) < 1e-9);
    CHECK(t.s_r == doctest::Approx(20.0 / 27.0).epsilon(1e-5));
}

TEST_CASE("phase walk with a 2-unitary target fails on the isolated matrix") {
    SearchConfig cfg;
    cfg.target = Target::TwoUnitary;
    cfg.max_iters = 50000;
    cfg.restarts = 4;
    cfg.seed = 0;
    const SearchResult res = phase_walk(named_matrix("b9_0"), 3, cfg);
    CHECK_FALSE(res.converged);
    CHECK(res.objective > 1e-3);
}

TEST_CASE("phase walk objective never increases and zero budget returns the input") {
    SearchConfig cfg;
    cfg.target = Target::TwoUnitary;
    cfg.max_iters = 1;
    cfg.restarts = 1;
    const CMatrix x = named_matrix("b9_selfdual");
    const SearchResult res = phase_walk(x, 3, cfg);
    std::vector<double> zeros(9, 0.0);
    CHECK(res.objective <= objective_z(x, zeros, zeros, 3, Target::TwoUnitary) + 1e-15);
}

TEST_CASE("phase walk honours frozen phase masks") {
    SearchConfig cfg;
    cfg.target = Target::GammaDual;
    cfg.max_iters = 5000;
    cfg.restarts = 2;
    cfg.frozen.assign(18, false);
    for (std::size_t i = 0; i < 4; ++i) cfg.frozen[i] = true;         // alpha 0..3
    for (std::size_t i = 18 - 4; i < 18; ++i) cfg.frozen[i] = true;   // beta 5..8
    const SearchResult res = phase_walk(named_matrix("b9_0"), 3, cfg);
    for (std::size_t i = 0; i < 4; ++i) CHECK(res.alpha[i] == 0.0);
    for (std::size_t i = 5; i < 9; ++i) CHECK(res.beta[i] == 0.0);
}

TEST_CASE("sinkhorn step is the advertised composition") {
    Rng rng(3);
    CMatrix x(9);
    for (cd& z : x.entries()) z = cd(rng.normal(), rng.normal());
    CMatrix t(9);
    for (std::size_t i = 0; i < 81; ++i)
        t.entries()[i] = x.entries()[i] / std::abs(x.entries()[i]);
    const CMatrix expect = reshuffle(partial_transpose(polar_unitary(t), 3), 3);
    CHECK(sinkhorn_step(x, 3).max_abs_diff(expect) == 0.0);
}

TEST_CASE("a 2-unitary CHM is a fixed point of the sinkhorn step in chi") {
    const CMatrix c = cd(1.0 / 3.0, 0.0) * named_matrix("c9");
    const CMatrix next = sinkhorn_step(c, 3);
    CMatrix t(9);
    for (std::size_t i = 0; i < 81; ++i)
        t.entries()[i] = next.entries()[i] / std::abs(next.entries()[i]);
    CHECK(chi(t, 3) < 1e-12);
}

TEST_CASE("the all-ones seed dies in the polar step") {
    CHECK_THROWS_AS((void)sinkhorn_step(CMatrix::ones(9), 3), Error);
    CMatrix with_zero = CMatrix::ones(9);
    with_zero(4, 4) = 0.0;
    try {
        (void)sinkhorn_step(with_zero, 3);
        FAIL("expected ZeroEntry");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroEntry);
    }
}

TEST_CASE("sinkhorn search finds 2-unitary CHM of order 9") {
    int converged = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SearchConfig cfg;
        cfg.seed = seed;
        cfg.max_iters = 32000;
        cfg.restarts = 8;
        const SearchResult res = sinkhorn_search(9, cfg);
        if (!res.converged) continue;
        ++converged;
        CHECK(is_unimodular(res.matrix));
        CHECK(is_unitary(res.matrix, 9.0));
        CHECK(chi(res.matrix, 3) <= cfg.chi_tol);
        CHECK(classify(res.matrix, 3).two_unitary);
    }
    CHECK(converged >= 5);
}

TEST_CASE("sinkhorn search at order 4 never converges") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SearchConfig cfg;
        cfg.seed = seed;
        cfg.max_iters = 6000;
        cfg.restarts = 4;
        CHECK_FALSE(sinkhorn_search(4, cfg).converged);
    }
}

TEST_CASE("searches are deterministic in the seed") {
    SearchConfig cfg;
    cfg.seed = 42;
    cfg.max_iters = 4000;
    cfg.restarts = 2;
    const SearchResult a = sinkhorn_search(9, cfg);
    const SearchResult b = sinkhorn_search(9, cfg);
    CHECK(a.converged == b.converged);
    CHECK(a.iterations == b.iterations);
    CHECK(a.objective == b.objective);
    if (a.converged) CHECK(a.matrix.max_abs_diff(b.matrix) == 0.0);

    SearchConfig w;
    w.target = Target::GammaDual;
    w.seed = 42;
    w.max_iters = 20000;
    w.restarts = 2;
    const CMatrix x = named_matrix("b9_0");
    const SearchResult wa = phase_walk(x, 3, w);
    const SearchResult wb = phase_walk(x, 3, w);
    CHECK(wa.objective == wb.objective);
    CHECK(wa.alpha == wb.alpha);
    CHECK(wa.beta == wb.beta);
}
