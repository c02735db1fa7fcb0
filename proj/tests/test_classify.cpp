#include <doctest.h>

#include "chm/butson.hpp"
#include "chm/catalog.hpp"
#include "chm/classify.hpp"
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

CMatrix haar_like_unitary(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    CMatrix m(n);
    for (cd& z : m.entries()) z = cd(rng.normal(), rng.normal());
    return polar_unitary(m);
}

}  // namespace

TEST_CASE("classify the self-R-dual Butson matrix") {
    const ClassReport r = classify(named_matrix("b9_selfdual"), 3);
    CHECK(r.chm);
    REQUIRE(r.butson_q.has_value());
    CHECK(*r.butson_q == 3);
    CHECK(r.r_dual);
    CHECK(r.self_r_dual);
    CHECK_FALSE(r.gamma_dual);
    CHECK_FALSE(r.two_unitary);
    CHECK(r.triple.s_g == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("classify the qutrit swap") {
    const ClassReport r = classify(swap_qutrits(), 3);
    CHECK(r.self_r_dual);
    CHECK_FALSE(r.chm);
    CHECK_FALSE(r.gamma_dual);
}

TEST_CASE("classify the dressed 2-unitary matrix") {
    const ClassReport r = classify(named_matrix("c9"), 3);
    CHECK(r.chm);
    CHECK(r.two_unitary);
    CHECK(r.r_dual);
    CHECK(r.gamma_dual);
    CHECK_FALSE(r.strong_two_unitary);
}

TEST_CASE("classification is invariant under a global phase") {
    const CMatrix x = named_matrix("c9");
    const ClassReport a = classify(x, 3);
    const ClassReport b = classify(std::polar(1.0, 1.234) * x, 3);
    CHECK(a.chm == b.chm);
    CHECK(a.two_unitary == b.two_unitary);
    CHECK(a.self_r_dual == b.self_r_dual);
    CHECK(a.self_gamma_dual == b.self_gamma_dual);
}

TEST_CASE("classify report serializes") {
    const std::string j = to_json(classify(perm_p9(), 3));
    CHECK(j.find("\"n\":9") != std::string::npos);
    CHECK(j.find("\"two_unitary\":true") != std::string::npos);
    CHECK(j.find("\"chm\":false") != std::string::npos);
}

TEST_CASE("k-unitarity of the reference tensors") {
    CHECK(is_k_unitary(perm_p9(), TensorShape(3, 2)));
    CHECK_FALSE(is_k_unitary(CMatrix::identity(9), TensorShape(3, 2)));
    const cd scale(1.0 / std::sqrt(8.0), 0.0);
    CHECK(is_k_unitary(scale * named_matrix("h8"), TensorShape(2, 3)));
    CHECK(is_k_unitary(named_matrix("h8"), TensorShape(2, 3)));   // scale-free contract
    CHECK_FALSE(is_k_unitary(CMatrix::identity(16), TensorShape(4, 2)));
    CHECK_FALSE(is_k_unitary(CMatrix::identity(4), TensorShape(2, 2)));
}

TEST_CASE("2-unitarity agrees with vanishing chi on random inputs") {
    Rng rng(20);
    for (int t = 0; t < 50; ++t) {
        CMatrix m(9);
        for (cd& z : m.entries()) z = cd(rng.normal(), rng.normal());
        const bool via_chi = chi(m, 3) <= 1e-10;
        CHECK(is_k_unitary(m, TensorShape(3, 2), Tolerance(1e-8)) == via_chi);
    }
    CHECK(is_k_unitary(named_matrix("c9"), TensorShape(3, 2)));
}

TEST_CASE("strong 2-unitarity obstruction") {
    CHECK(strong_two_unitary_obstruction(2) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(strong_two_unitary_obstruction(3) == std::pair<std::size_t, std::size_t>{1, 3});
    for (std::size_t d = 2; d <= 6; ++d) CHECK(obstruction_columns_forced_equal(d));
}

TEST_CASE("no matrix classifies as strongly 2-unitary") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const CMatrix u = haar_like_unitary(9, seed);
        CHECK_FALSE(classify(u, 3).strong_two_unitary);
    }
    for (const char* name : {"b9_selfdual", "c9", "b9_0", "n9_0", "yb9_0", "yn9_0", "yk9_3"}) {
        CHECK_FALSE(classify(named_matrix(name), 3).strong_two_unitary);
    }
}

TEST_CASE("lu_apply preserves the entropy triple") {
    Rng rng(21);
    const CMatrix p16 = perm_p16();
    const EntropyTriple base = entropy_triple(p16, 4);
    const CMatrix u1 = haar_like_unitary(4, 1), u2 = haar_like_unitary(4, 2);
    const CMatrix u3 = haar_like_unitary(4, 3), u4 = haar_like_unitary(4, 4);
    const EntropyTriple after = entropy_triple(lu_apply(u1, u2, u3, u4, p16), 4);
    CHECK(after.s == doctest::Approx(base.s).epsilon(1e-12));
    CHECK(after.s_r == doctest::Approx(base.s_r).epsilon(1e-12));
    CHECK(after.s_g == doctest::Approx(base.s_g).epsilon(1e-12));

    const CMatrix eye = CMatrix::identity(4);
    CHECK(lu_apply(eye, eye, eye, eye, p16).max_abs_diff(p16) == 0.0);
    CHECK_THROWS_AS((void)lu_apply(2.0 * eye, eye, eye, eye, p16), Error);
}

TEST_CASE("scaled Fourier rotation of P9 is 2-unitary but not Hadamard") {
    const cd s(1.0 / std::sqrt(3.0), 0.0);
    const CMatrix f = s * fourier(3);
    const CMatrix q = lu_apply(f, f, f, f, perm_p9());
    CHECK(chi(q, 3) < 1e-11);
    CHECK_FALSE(is_unimodular(q));
}

TEST_CASE("lu_family masks over all three bases") {
    Rng rng(22);
    auto monomials = [&](std::size_t d) {
        std::vector<MonomialMatrix> ms;
        for (int i = 0; i < 8; ++i) ms.push_back(random_monomial(d, rng));
        return ms;
    };
    const std::array<std::array<bool, 4>, 6> two_slots = {{{1, 1, 0, 0},
                                                           {1, 0, 1, 0},
                                                           {1, 0, 0, 1},
                                                           {0, 1, 1, 0},
                                                           {0, 1, 0, 1},
                                                           {0, 0, 1, 1}}};
    for (const auto& mask : two_slots) {
        const auto ms = monomials(3);
        const CMatrix y = lu_family(LuBase::P9, mask, ms, std::vector<double>{0.0, 0.0});
        CHECK(is_unimodular(y));
        CHECK(is_unitary(y, 9.0));
        CHECK(chi(y, 3) < 1e-11);
    }
    for (const auto& mask : two_slots) {
        const auto ms = monomials(4);
        const CMatrix y =
            lu_family(LuBase::P16, mask, ms, std::vector<double>{rng.uniform(), rng.uniform()});
        CHECK(is_unimodular(y));
        CHECK(is_unitary(y, 16.0));
        CHECK(chi(y, 4) < 1e-11);
    }
    for (int j = 0; j < 4; ++j) {
        std::array<bool, 4> mask{};
        mask[j] = true;
        const auto ms = monomials(4);
        const CMatrix y = lu_family(LuBase::O16, mask, ms, std::vector<double>{rng.uniform()});
        CHECK(is_unimodular(y));
        CHECK(is_unitary(y, 16.0));
        CHECK(chi(y, 4) < 1e-11);
    }
}

TEST_CASE("lu_family rejects bad placements") {
    Rng rng(23);
    std::vector<MonomialMatrix> ms;
    for (int i = 0; i < 8; ++i) ms.push_back(random_monomial(4, rng));
    CHECK_THROWS_AS((void)lu_family(LuBase::P16, {1, 1, 1, 0}, ms, std::vector<double>{0.1, 0.2}),
                    Error);
    CHECK_THROWS_AS((void)lu_family(LuBase::O16, {1, 1, 0, 0}, ms, std::vector<double>{0.1}),
                    Error);
}

TEST_CASE("tensor construction over the AME permutations") {
    const CMatrix h4 = kron(fourier(2), fourier(2));
    const CMatrix y = tensor_construct(h4, perm_p16());
    CHECK(is_unimodular(y));
    CHECK(is_unitary(y, 16.0));
    CHECK(chi(y, 4) < 1e-12);

    const CMatrix y9 = tensor_construct(fourier(3), perm_p9());
    CHECK(is_unimodular(y9));
    CHECK(chi(y9, 3) < 1e-12);

    CHECK_THROWS_AS((void)tensor_construct(CMatrix::identity(4), perm_p16()), Error);
    try {
        (void)tensor_construct(h4, CMatrix::identity(16));
        FAIL("expected NotTwoUnitaryPermutation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotTwoUnitaryPermutation);
    }
}

TEST_CASE("random monomials are deterministic and monomial") {
    Rng a(77), b(77);
    const MonomialMatrix ma = random_monomial(5, a), mb = random_monomial(5, b);
    CHECK(ma.perm == mb.perm);
    for (std::size_t i = 0; i < 5; ++i) CHECK(ma.phases[i] == mb.phases[i]);

    const CMatrix m = ma.to_matrix();
    for (std::size_t r = 0; r < 5; ++r) {
        int nonzero = 0;
        for (std::size_t c = 0; c < 5; ++c) {
            if (std::abs(m(r, c)) > 1e-14) {
                ++nonzero;
                CHECK(std::abs(std::abs(m(r, c)) - 1.0) < 1e-14);
            }
        }
        CHECK(nonzero == 1);
    }
}
