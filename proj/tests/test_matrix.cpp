#include <doctest.h>

#include <sstream>

#include "chm/catalog.hpp"
#include "chm/io.hpp"
#include "chm/matrix.hpp"
#include "chm/rng.hpp"

using namespace chm;

namespace {

CMatrix random_full_rank(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    CMatrix m(n);
    for (cd& z : m.entries()) z = cd(rng.normal(), rng.normal());
    return m;
}

}  // namespace

TEST_CASE("unimodularity predicate") {
    CHECK(is_unimodular(CMatrix::ones(3)));
    CHECK_FALSE(is_unimodular(CMatrix::identity(9)));
    CHECK_FALSE(is_unimodular(ortho_o16()));   // zeros present
}

TEST_CASE("unitarity predicate at a scale") {
    CHECK(is_unitary(fourier(3), 3.0));
    CHECK(is_unitary(perm_p9(), 1.0));
    CHECK_FALSE(is_unitary(CMatrix::ones(3), 3.0));
}

TEST_CASE("polar factor is idempotent on unitaries") {
    const CMatrix p = perm_p9();
    CHECK(polar_unitary(p).max_abs_diff(p) < 1e-12);
}

TEST_CASE("polar factor strips positive scaling") {
    CMatrix twice = 2.0 * CMatrix::identity(4);
    CHECK(polar_unitary(twice).max_abs_diff(CMatrix::identity(4)) < 1e-12);
}

TEST_CASE("polar factor of a random full-rank matrix is unitary") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        CMatrix u = polar_unitary(random_full_rank(9, seed));
        CHECK(is_unitary(u, 1.0, Tolerance(1e-9)));
    }
}

TEST_CASE("polar factor rejects rank-deficient input") {
    try {
        (void)polar_unitary(CMatrix::ones(4));
        FAIL("expected RankDeficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RankDeficient);
    }
}

TEST_CASE("dephasing fixes first row and column and preserves Hadamard") {
    Rng rng(7);
    CMatrix h = fourier(5);
    std::vector<cd> dl(5), dr(5);
    for (auto& z : dl) z = std::polar(1.0, 2 * M_PI * rng.uniform());
    for (auto& z : dr) z = std::polar(1.0, 2 * M_PI * rng.uniform());
    CMatrix scrambled = diag_scale_cols(diag_scale_rows(dl, h), dr);
    CMatrix back = dephase(scrambled);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(std::abs(back(i, 0) - 1.0) < 1e-12);
        CHECK(std::abs(back(0, i) - 1.0) < 1e-12);
    }
    CHECK(is_unitary(back, 5.0));
    CHECK(is_unimodular(back));
}

TEST_CASE("dephasing is a fixed point on dephased input") {
    const CMatrix f = fourier(3);
    CHECK(dephase(f).max_abs_diff(f) < 1e-14);
}

TEST_CASE("dephasing rejects zero entries on the border") {
    CHECK_THROWS_AS((void)dephase(perm_p9()), Error);
}

TEST_CASE("core of the 3x3 Fourier matrix") {
    CMatrix c = core_of(fourier(3));
    const cd w = std::polar(1.0, 2.0 * M_PI / 3.0);
    REQUIRE(c.order() == 2);
    CHECK(std::abs(c(0, 0) - w) < 1e-14);
    CHECK(std::abs(c(0, 1) - w * w) < 1e-14);
    CHECK(std::abs(c(1, 0) - w * w) < 1e-14);
    CHECK(std::abs(c(1, 1) - w) < 1e-14);
}

TEST_CASE("core of a 1x1 matrix is empty") {
    CMatrix one(1, {cd(1.0)});
    CHECK(core_of(one).order() == 0);
}

TEST_CASE("core demands a dephased matrix") {
    CHECK_THROWS_AS((void)core_of(cat_map(CatMapParams(4, 1, 1, 1))), Error);
}

TEST_CASE("nullspace dimension on trivial cases") {
    RealMatrix zero(3, 3);
    CHECK(nullspace_dim(zero) == 3);

    RealMatrix eye(5, 5);
    for (std::size_t i = 0; i < 5; ++i) eye(i, i) = 1.0;
    CHECK(nullspace_dim(eye) == 0);

    RealMatrix outer(4, 4);   // rank-1
    const double v[4] = {1.0, 2.0, -1.0, 0.5};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) outer(r, c) = v[r] * v[c];
    CHECK(nullspace_dim(outer) == 3);
}

TEST_CASE("matrix text format round-trips") {
    const CMatrix m = fourier_f4(0.3217);
    std::stringstream s;
    write_matrix(s, m);
    CMatrix back = read_matrix(s);
    CHECK(back.order() == 4);
    CHECK(back.max_abs_diff(m) == 0.0);   // 17 significant digits reproduce doubles
}

TEST_CASE("matrix reader skips comments and rejects junk") {
    std::stringstream ok("# header comment\n2\n1+0j 0+1j\n# middle\n-1+0j 0-1j\n");
    CMatrix m = read_matrix(ok);
    CHECK(std::abs(m(0, 1) - cd(0, 1)) == 0.0);
    CHECK(std::abs(m(1, 1) - cd(0, -1)) == 0.0);

    std::stringstream bad("2\n1+0j\n1+0j 1+0j\n");
    CHECK_THROWS_AS((void)read_matrix(bad), Error);
    std::stringstream worse("2\n1+0j nope\n1+0j 1+0j\n");
    CHECK_THROWS_AS((void)read_matrix(worse), Error);
}

TEST_CASE("complex token forms") {
    CHECK(parse_complex("1.5") == cd(1.5, 0.0));
    CHECK(parse_complex("-2j") == cd(0.0, -2.0));
    CHECK(parse_complex("1e-3+2.5e+2j") == cd(1e-3, 250.0));
    CHECK_THROWS_AS((void)parse_complex("1+2"), Error);
}

TEST_CASE("Hadamard property survives permutations and diagonal dressing") {
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        CMatrix h = fourier(9);
        std::vector<cd> dl(9), dr(9);
        for (auto& z : dl) z = std::polar(1.0, 2 * M_PI * rng.uniform());
        for (auto& z : dr) z = std::polar(1.0, 2 * M_PI * rng.uniform());
        CMatrix m = diag_scale_cols(diag_scale_rows(dl, h), dr);
        CHECK(is_unimodular(m));
        CHECK(is_unitary(m, 9.0));
    }
}
