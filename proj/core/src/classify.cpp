#include "chm/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chm/butson.hpp"
#include "chm/catalog.hpp"

namespace chm {

CMatrix MonomialMatrix::to_matrix() const {
    const std::size_t n = perm.size();
    CMatrix m(n);
    for (std::size_t c = 0; c < n; ++c) m(perm[c], c) = phases[c];
    return m;
}

MonomialMatrix random_monomial(std::size_t n, Rng& rng) {
    MonomialMatrix m;
    m.perm.resize(n);
    std::iota(m.perm.begin(), m.perm.end(), std::size_t{0});
    for (std::size_t i = n; i-- > 1;) std::swap(m.perm[i], m.perm[rng.index(i + 1)]);
    m.phases.resize(n);
    for (cd& z : m.phases) z = std::polar(1.0, 2.0 * M_PI * rng.uniform());
    return m;
}

ClassReport classify(const CMatrix& x, std::size_t d, Tolerance tol) {
    const std::size_t n = x.order();
    if (n != d * d) fail(ErrorKind::ShapeMismatch, "order is not d^2");
    ClassReport r;
    r.n = n;
    r.d = d;
    r.triple = entropy_triple(x, d, tol);

    const CMatrix xr = reshuffle(x, d);
    const CMatrix xg = partial_transpose(x, d);
    r.chm = is_unimodular(x, tol) && is_unitary(x, static_cast<double>(n), tol);
    if (r.chm) {
        for (unsigned q = 2; q <= 36; ++q) {
            if (is_butson(x, q, tol)) {
                r.butson_q = q;
                break;
            }
        }
    }
    const auto near1 = [&](double v) { return std::abs(v - 1.0) <= tol.eps; };
    r.r_dual = near1(r.triple.s) && near1(r.triple.s_r);
    r.gamma_dual = near1(r.triple.s) && near1(r.triple.s_g);
    r.two_unitary = r.r_dual && r.gamma_dual;
    r.self_r_dual = x.max_abs_diff(xr) <= tol.eps;
    r.self_gamma_dual = x.max_abs_diff(xg) <= tol.eps;
    r.strong_two_unitary = r.two_unitary && r.self_r_dual && r.self_gamma_dual;
    return r;
}

std::string to_json(const ClassReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["triple"] = {r.triple.s, r.triple.s_r, r.triple.s_g};
    nlohmann::json flags;
    flags["chm"] = r.chm;
    if (r.butson_q)
        flags["butson_q"] = *r.butson_q;
    else
        flags["butson_q"] = nullptr;
    flags["r_dual"] = r.r_dual;
    flags["gamma_dual"] = r.gamma_dual;
    flags["self_r_dual"] = r.self_r_dual;
    flags["self_gamma_dual"] = r.self_gamma_dual;
    flags["two_unitary"] = r.two_unitary;
    flags["strong_two_unitary"] = r.strong_two_unitary;
    j["flags"] = flags;
    return j.dump();
}

bool is_k_unitary(const CMatrix& u, TensorShape shape, Tolerance tol) {
    const std::size_t n = shape.order();
    if (u.order() != n) fail(ErrorKind::ShapeMismatch, "order is not d^k");
    // the matrix's own scale: Tr(UU^dag)/n
    double scale = 0.0;
    for (const cd& z : u.entries()) scale += std::norm(z);
    scale /= static_cast<double>(n);
    if (scale <= 0.0) return false;
    for (const Bipartition& b : balanced_bipartitions(shape.k)) {
        if (!is_unitary(rearrange(u, shape, b), scale, tol)) return false;
    }
    return true;
}

std::pair<std::size_t, std::size_t> strong_two_unitary_obstruction(std::size_t d) {
    if (d < 2) fail(ErrorKind::DomainError, "d must be at least 2");
    return {1, d};
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

}  // namespace

bool obstruction_columns_forced_equal(std::size_t d) {
    const std::size_t n = d * d;
    UnionFind uf(n * n);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e) {
                    const std::size_t p = (a * d + b) * n + (c * d + e);
                    uf.unite(p, (a * d + c) * n + (b * d + e));   // X = X^R
                    uf.unite(p, (a * d + e) * n + (c * d + b));   // X = X^Gamma
                }
    const auto [c1, c2] = strong_two_unitary_obstruction(d);
    for (std::size_t r = 0; r < n; ++r)
        if (uf.find(r * n + c1) != uf.find(r * n + c2)) return false;
    return true;
}

bool obstruction_columns_equal(const CMatrix& x, std::size_t d, Tolerance tol) {
    const std::size_t n = d * d;
    if (x.order() != n) fail(ErrorKind::ShapeMismatch, "order is not d^2");
    const auto [c1, c2] = strong_two_unitary_obstruction(d);
    for (std::size_t r = 0; r < n; ++r)
        if (std::abs(x(r, c1) - x(r, c2)) > tol.eps) return false;
    return true;
}

CMatrix lu_apply(const CMatrix& u1, const CMatrix& u2, const CMatrix& u3, const CMatrix& u4,
                 const CMatrix& x, Tolerance tol) {
    const std::size_t d = u1.order();
    if (u2.order() != d || u3.order() != d || u4.order() != d)
        fail(ErrorKind::ShapeMismatch, "local factors must share one order");
    if (x.order() != d * d) fail(ErrorKind::ShapeMismatch, "operator order is not d^2");
    for (const CMatrix* u : {&u1, &u2, &u3, &u4})
        if (!is_unitary(*u, 1.0, tol)) fail(ErrorKind::NotUnitary, "local factor is not unitary");
    return kron(u1, u2) * x * kron(u3, u4);
}

CMatrix lu_family(LuBase base, const std::array<bool, 4>& mask,
                  std::span<const MonomialMatrix> monomials,
                  std::span<const double> fourier_params) {
    const std::size_t want_f = (base == LuBase::O16) ? 1 : 2;
    std::size_t got_f = 0;
    for (bool m : mask) got_f += m ? 1 : 0;
    if (got_f != want_f)
        fail(ErrorKind::BadPlacement, "mask needs exactly " + std::to_string(want_f) +
                                          " Fourier slot(s) for this base");
    if (monomials.size() != 8) fail(ErrorKind::BadPlacement, "need eight monomial matrices");
    if (fourier_params.size() != want_f)
        fail(ErrorKind::BadPlacement, "one phase parameter per Fourier slot");

    const std::size_t d = (base == LuBase::P9) ? 3 : 4;
    for (const MonomialMatrix& m : monomials)
        if (m.perm.size() != d) fail(ErrorKind::BadPlacement, "monomial order mismatch");

    CMatrix basem = (base == LuBase::P9) ? perm_p9()
                  : (base == LuBase::P16) ? perm_p16()
                                          : ortho_o16();
    std::size_t next_param = 0;
    std::array<CMatrix, 4> slot;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!mask[i]) {
            slot[i] = CMatrix::identity(d);
        } else if (base == LuBase::P9) {
            slot[i] = fourier(3);
            ++next_param;   // parameter slot consumed but F3 carries none
        } else {
            slot[i] = fourier_f4(fourier_params[next_param++]);
        }
    }
    auto sandwich = [&](std::size_t a, const CMatrix& s, std::size_t b) {
        return monomials[a].to_matrix() * s * monomials[b].to_matrix();
    };
    const CMatrix left = kron(sandwich(0, slot[0], 1), sandwich(2, slot[1], 3));
    const CMatrix right = kron(sandwich(4, slot[2], 5), sandwich(6, slot[3], 7));
    return left * basem * right;
}

CMatrix tensor_construct(const CMatrix& h, const CMatrix& p, Tolerance tol) {
    const std::size_t d = h.order();
    if (p.order() != d * d) fail(ErrorKind::ShapeMismatch, "permutation order is not d^2");
    if (!is_unimodular(h, tol) || !is_unitary(h, static_cast<double>(d), tol))
        fail(ErrorKind::NotHadamard, "factor is not a (complex) Hadamard matrix");
    // p must be a permutation matrix and 2-unitary
    for (const cd& z : p.entries()) {
        if (std::abs(z) > tol.eps && std::abs(z - cd(1.0)) > tol.eps)
            fail(ErrorKind::NotTwoUnitaryPermutation, "not a permutation matrix");
    }
    if (!is_unitary(p, 1.0, tol) || chi(p, d) > 1e-9)
        fail(ErrorKind::NotTwoUnitaryPermutation, "permutation is not 2-unitary");
    return kron(h, h) * p;
}

}  // namespace chm
