#include <doctest.h>

#include "chm/butson.hpp"
#include "chm/catalog.hpp"
#include "chm/entropy.hpp"
#include "chm/rearrange.hpp"
#include "chm/rng.hpp"

using namespace chm;

namespace {

CMatrix swap_qutrits() {
    CMatrix s(9);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) s(a * 3 + b, b * 3 + a) = 1.0;
    return s;
}

}  // namespace

TEST_CASE("linear entropy of unitaries is one") {
    CHECK(linear_entropy(perm_p9()) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(linear_entropy(fourier(9)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("linear entropy of rank-one matrices is zero") {
    CHECK(linear_entropy(CMatrix::ones(9)) == doctest::Approx(0.0).epsilon(1e-13));
    const CMatrix f3 = fourier(3);
    CHECK(linear_entropy(reshuffle(kron(f3, f3), 3)) == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("linear entropy is scale invariant") {
    const CMatrix x = named_matrix("b9_selfdual");
    CHECK(linear_entropy(cd(0.37, -2.1) * x) ==
          doctest::Approx(linear_entropy(x)).epsilon(1e-13));
}

TEST_CASE("linear entropy rejects the zero matrix") {
    CHECK_THROWS_AS((void)linear_entropy(CMatrix(4)), Error);
}

TEST_CASE("entropy triples of the reference matrices") {
    auto t = entropy_triple(perm_p9(), 3);
    CHECK(t.s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.s_r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.s_g == doctest::Approx(1.0).epsilon(1e-12));

    t = entropy_triple(swap_qutrits(), 3);
    CHECK(t.s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.s_r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.s_g == doctest::Approx(0.0).epsilon(1e-12));

    t = entropy_triple(named_matrix("b9_selfdual"), 3);
    CHECK(t.s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.s_r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.s_g == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("chi vanishes exactly on 2-unitary matrices") {
    CHECK(chi(perm_p9(), 3) < 1e-13);
    CHECK(chi(CMatrix::identity(9), 3) == doctest::Approx(1.0).epsilon(1e-12));
    const CMatrix f3 = fourier(3);
    CHECK(chi(kron(f3, f3), 3) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entropy invariance under scaled monomial factors") {
    Rng rng(3);
    const CMatrix x = named_matrix("c9");
    const double s0 = linear_entropy(x);
    for (int t = 0; t < 5; ++t) {
        std::vector<cd> dl(9), dr(9);
        for (auto& z : dl) z = 2.0 * std::polar(1.0, 2 * M_PI * rng.uniform());
        for (auto& z : dr) z = std::polar(1.0, 2 * M_PI * rng.uniform());
        const CMatrix y = diag_scale_cols(diag_scale_rows(dl, x), dr);
        CHECK(linear_entropy(y) == doctest::Approx(s0).epsilon(1e-12));
    }
}

TEST_CASE("objective on an undressed 2-unitary matrix is zero") {
    const CMatrix c = named_matrix("c9");
    std::vector<double> zeros(9, 0.0);
    CHECK(objective_z(c, zeros, zeros, 3, Target::TwoUnitary) < 1e-13);
}

TEST_CASE("conjugate dressing of the self-dual Butson matrix is 2-unitary") {
    const CMatrix b = named_matrix("b9_selfdual");
    // 2 pi / 3 * (0,0,0,0,4,2,0,2,4) on the left, conjugate on the right
    const double u = 2.0 * M_PI / 3.0;
    std::vector<double> alpha = {0, 0, 0, 0, 4 * u, 2 * u, 0, 2 * u, 4 * u};
    std::vector<double> beta(9);
    for (std::size_t i = 0; i < 9; ++i) beta[i] = -alpha[i];
    CHECK(objective_z(b, alpha, beta, 3, Target::TwoUnitary) < 1e-12);
}

TEST_CASE("gamma-only objective vanishes on self-gamma-dual tensor products") {
    const CMatrix y = kron(fourier_f4(0.21), fourier_f4(0.68));
    std::vector<double> zeros(16, 0.0);
    CHECK(objective_z(y, zeros, zeros, 4, Target::GammaDual) < 1e-12);
    CHECK(objective_z(y, zeros, zeros, 4, Target::SelfGammaDual) < 1e-24);
}

TEST_CASE("defects of the order-9 reference matrices") {
    CHECK(defect(fourier(3)) == 0);
    CHECK(defect(fourier(9)) == 4);
    CHECK(defect(named_matrix("b9_0")) == 0);
    CHECK(defect(named_matrix("n9_0")) == 0);
}

TEST_CASE("defect of the tensor-square Fourier matrix") {
    // oracle (nullspace of the linearized constraints): 16, not the 4 free
    // phases of the order-9 Dita family
    const CMatrix f3 = fourier(3);
    CHECK(defect(kron(f3, f3)) == 16);
}

TEST_CASE("defect is invariant under Hadamard equivalence") {
    Rng rng(17);
    const CMatrix f9 = fourier(9);
    for (int t = 0; t < 3; ++t) {
        std::vector<cd> dl(9), dr(9);
        for (auto& z : dl) z = std::polar(1.0, 2 * M_PI * rng.uniform());
        for (auto& z : dr) z = std::polar(1.0, 2 * M_PI * rng.uniform());
        // random row/column permutations via index shuffles
        std::vector<std::size_t> pr(9), pc(9);
        for (std::size_t i = 0; i < 9; ++i) pr[i] = pc[i] = i;
        for (std::size_t i = 9; i-- > 1;) std::swap(pr[i], pr[rng.index(i + 1)]);
        for (std::size_t i = 9; i-- > 1;) std::swap(pc[i], pc[rng.index(i + 1)]);
        CMatrix dressed(9);
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t c = 0; c < 9; ++c)
                dressed(r, c) = dl[r] * f9(pr[r], pc[c]) * dr[c];
        CHECK(defect(dressed) == 4);
    }
}

TEST_CASE("defect requires a Hadamard matrix") {
    CHECK_THROWS_AS((void)defect(perm_p9()), Error);
}
