#include "chm/catalog.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "chm/butson.hpp"

namespace chm {

namespace {

// ---- exponent tables and integer data printed in the source material ----

constexpr int kB9SelfDualLog3[] = {
    0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 1, 1, 1, 2, 2, 2,
    0, 0, 0, 2, 2, 2, 1, 1, 1,
    0, 1, 2, 0, 1, 2, 0, 1, 2,
    0, 1, 2, 1, 2, 0, 2, 0, 1,
    0, 1, 2, 2, 0, 1, 1, 2, 0,
    0, 2, 1, 0, 2, 1, 0, 2, 1,
    0, 2, 1, 1, 0, 2, 2, 1, 0,
    0, 2, 1, 2, 1, 0, 1, 0, 2,
};

constexpr int kC9Log3[] = {
    0, 0, 0, 0, 2, 1, 0, 1, 2,
    0, 0, 0, 1, 0, 2, 2, 0, 1,
    0, 0, 0, 2, 1, 0, 1, 2, 0,
    0, 1, 2, 0, 0, 0, 0, 2, 1,
    1, 2, 0, 2, 2, 2, 0, 2, 1,
    2, 0, 1, 1, 1, 1, 0, 2, 1,
    0, 2, 1, 0, 1, 2, 0, 0, 0,
    2, 1, 0, 0, 1, 2, 1, 1, 1,
    1, 0, 2, 0, 1, 2, 2, 2, 2,
};

constexpr int kB16_1P16Log2[] = {
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0,
    0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0,
    0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0,
    0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1,
    0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1,
    0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1,
    0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1,
    0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1,
    0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1,
    0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0,
    0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0,
    0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0,
    0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0,
};

constexpr int kB16_8Log4[] = {
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 2, 2, 2,
    0, 0, 0, 0, 2, 2, 2, 2, 0, 0, 0, 0, 2, 2, 2, 2,
    0, 0, 0, 0, 2, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0,
    0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 2, 2,
    0, 0, 2, 2, 0, 0, 2, 2, 2, 2, 0, 0, 2, 2, 0, 0,
    0, 0, 2, 2, 2, 2, 0, 0, 0, 0, 2, 2, 2, 2, 0, 0,
    0, 0, 2, 2, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 2, 2,
    0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2,
    0, 2, 0, 2, 0, 2, 0, 2, 2, 0, 2, 0, 2, 0, 2, 0,
    0, 2, 0, 2, 2, 0, 2, 0, 0, 2, 0, 2, 2, 0, 2, 0,
    0, 2, 0, 2, 2, 0, 2, 0, 2, 0, 2, 0, 0, 2, 0, 2,
    0, 2, 2, 0, 0, 2, 2, 0, 1, 3, 3, 1, 1, 3, 3, 1,
    0, 2, 2, 0, 0, 2, 2, 0, 3, 1, 1, 3, 3, 1, 1, 3,
    0, 2, 2, 0, 2, 0, 0, 2, 1, 3, 3, 1, 3, 1, 1, 3,
    0, 2, 2, 0, 2, 0, 0, 2, 3, 1, 1, 3, 1, 3, 3, 1,
};

constexpr int kH8Log2[] = {
    1, 1, 1, 0, 1, 0, 0, 0,
    1, 1, 1, 0, 0, 1, 1, 1,
    1, 1, 0, 1, 1, 0, 1, 1,
    0, 0, 1, 0, 1, 0, 1, 1,
    1, 0, 1, 1, 1, 1, 0, 1,
    0, 1, 0, 0, 1, 1, 0, 1,
    0, 1, 1, 1, 0, 0, 0, 1,
    0, 1, 1, 1, 1, 1, 1, 0,
};

constexpr int kB9_0Log6[] = {
    0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 5, 3, 2, 5, 3, 2, 1, 5,
    0, 3, 3, 0, 1, 5, 4, 1, 3,
    0, 2, 0, 2, 0, 2, 4, 4, 4,
    0, 5, 1, 0, 3, 3, 4, 3, 1,
    0, 3, 5, 2, 3, 5, 2, 5, 1,
    0, 0, 2, 4, 2, 0, 2, 4, 4,
    0, 3, 3, 4, 5, 1, 0, 3, 1,
    0, 1, 5, 4, 3, 3, 0, 1, 3,
};

constexpr int kO16[] = {
    1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1,
    0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0,
    0, 0, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0,
    0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0,
    0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0,
    -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1,
    0, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0,
    0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0,
    0, 0, -1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0,
    0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0,
    -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1,
    0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0,
    0, 0, 0, -1, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0,
    0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, -1, 0, 0,
    0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0,
    1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1,
};

constexpr int kN9Sign[] = {
    1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, -1, -1, 1, 1, 1, 1,
    1, 1, 1, -1, 1, -1, 1, 1, 1,
    1, -1, -1, 1, -1, -1, -1, -1, -1,
    1, -1, 1, -1, 1, 1, 1, 1, 1,
    1, 1, -1, -1, 1, 1, 1, 1, 1,
    1, 1, 1, -1, 1, 1, -1, 1, 1,
    1, 1, 1, -1, 1, 1, 1, -1, 1,
    1, 1, 1, -1, 1, 1, 1, 1, -1,
};

constexpr int kN9Power[] = {
    0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 1, 2, 0, 1, 1, 3, 3, 1,
    0, 2, 4, 1, 2, 3, 4, 2, 0,
    0, 4, 3, 3, 3, 2, 4, 2, 0,
    0, 0, 2, -1, 0, 0, 1, 2, -1,
    0, 3, 1, 0, 2, 3, 1, 1, 1,
    0, 1, 0, -1, 2, 2, 0, 0, -1,
    0, 4, 2, 1, 4, 2, 2, 3, 0,
    0, 3, 4, 3, 4, 2, 3, 2, 0,
};

constexpr int kT16CoreI[] = {
    2, 3, 0, 2, 1, 0, 2, 0, 2, 2, 1, 0, 2, 0, 3,
    1, 0, 2, 0, 2, 3, 2, 3, 2, 0, 2, 1, 0, 0, 2,
    0, 2, 2, 2, 2, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2,
    2, 0, 2, 2, 0, 2, 0, 0, 1, 3, 0, 2, 3, 1, 2,
    0, 1, 0, 2, 3, 2, 2, 3, 1, 3, 2, 3, 1, 1, 0,
    3, 2, 2, 0, 0, 1, 2, 2, 1, 1, 3, 0, 3, 1, 3,
    2, 2, 0, 0, 2, 2, 0, 2, 3, 3, 0, 0, 1, 1, 2,
    3, 3, 2, 1, 3, 1, 3, 1, 2, 0, 1, 3, 1, 3, 1,
    2, 1, 2, 3, 0, 3, 3, 2, 0, 2, 1, 1, 1, 3, 0,
    1, 2, 0, 1, 1, 2, 3, 1, 0, 0, 2, 2, 3, 3, 3,
    3, 1, 0, 1, 3, 3, 1, 1, 2, 2, 3, 1, 3, 3, 1,
    0, 0, 0, 3, 2, 0, 3, 2, 1, 1, 0, 2, 2, 2, 2,
    2, 3, 0, 3, 0, 1, 1, 3, 3, 1, 2, 2, 0, 2, 1,
    1, 0, 2, 1, 1, 0, 1, 2, 3, 3, 3, 3, 2, 2, 0,
    0, 2, 2, 3, 2, 2, 1, 0, 3, 1, 0, 2, 2, 0, 0,
};

constexpr int kT16CoreP[] = {
    0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1,
    0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 1, -1, -1, 1, 1,
    0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1,
    0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1,
    0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 1, -1, -1, 1, 1,
    0, 2, 2, 1, 1, 1, 1, 0, 0, 2, 2, 1, 1, 1, 1,
    0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1,
    0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1,
    0, 2, 2, 1, 1, 1, 1, 0, 0, 2, 2, 1, 1, 1, 1,
    0, 0, 0, 1, 1, -1, -1, -1, -1, 1, 1, 0, 0, 0, 0,
    0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1,
    0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1,
    0, 0, 0, 1, 1, -1, -1, -1, -1, 1, 1, 0, 0, 0, 0,
};

constexpr int kP9Cols[] = {1, 9, 5, 6, 2, 7, 8, 4, 3};

constexpr int kP16Cols[] = {1, 16, 6, 11, 15, 2, 12, 5, 8, 9, 3, 14, 10, 7, 13, 4};

// base-3 exponents of the diagonal dressings tied to order-9 matrices
constexpr int kDlF9TwoU[] = {0, 1, 1, 1, 1, 0, 0, 2, 0};
constexpr int kDrF9TwoU[] = {0, 1, 1, 1, 0, 1, 2, 2, 1};
constexpr int kDlB9_0[] = {0, 0, 0, 0, 1, 0, 0, 0, 1};
constexpr int kDrB9_0[] = {0, 0, 0, 0, 1, 0, 0, 1, 2};
constexpr int kDK9_3[] = {0, 0, 0, 0, 2, 1, 1, 2, 0};

cd phase(double turns) { return std::polar(1.0, 2.0 * M_PI * turns); }

cd root(long e, unsigned q) { return unit_root(e, q); }

LogMatrix make_log(std::size_t n, unsigned q, const int* table) {
    LogMatrix l;
    l.n = n;
    l.q = q;
    l.exps.assign(table, table + n * n);
    return l;
}

CMatrix perm_from_cols(const int* cols, std::size_t n) {
    CMatrix p(n);
    for (std::size_t j = 0; j < n; ++j) p(static_cast<std::size_t>(cols[j] - 1), j) = 1.0;
    return p;
}

std::vector<cd> omega3_diag(const int* exps, std::size_t n) {
    std::vector<cd> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = root(exps[i], 3);
    return d;
}

CMatrix n9_0_matrix() {
    const cd y(-0.25, 0.25 * std::sqrt(15.0));
    CMatrix m(9);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c) {
            int p = kN9Power[r * 9 + c];
            cd v = (p >= 0) ? std::pow(y, p) : std::pow(std::conj(y), -p);
            m(r, c) = static_cast<double>(kN9Sign[r * 9 + c]) * v;
        }
    return m;
}

std::pair<std::vector<cd>, std::vector<cd>> n9_0_dressing() {
    const cd y(-0.25, 0.25 * std::sqrt(15.0));
    const cd xi(7.0 / 128.0, 33.0 * std::sqrt(15.0) / 128.0);
    std::vector<cd> dl = {1, 1, 1, 1, -std::pow(y, 4), -std::pow(y, 3), 1, y, 1};
    std::vector<cd> dr = {1, 1, 1, 1, -1, -y, -std::pow(y, 3), xi, xi * y};
    return {dl, dr};
}

CMatrix t16_1_matrix(double p1) {
    const cd a = phase(p1);
    const cd b = a * a;
    const cd iu(0.0, 1.0);
    CMatrix m = CMatrix::ones(16);
    for (std::size_t r = 0; r < 15; ++r)
        for (std::size_t c = 0; c < 15; ++c) {
            cd coeff = std::pow(iu, kT16CoreI[r * 15 + c]);
            int p = kT16CoreP[r * 15 + c];
            cd ap = (p == 2) ? b : (p == 1) ? a : (p == 0) ? cd(1.0) : std::conj(a);
            m(r + 1, c + 1) = coeff * ap;
        }
    return m;
}

std::pair<std::vector<cd>, std::vector<cd>> t16_dressing(double p1) {
    const cd a = phase(p1);
    const cd i(0.0, 1.0);
    const cd w = std::polar(1.0, M_PI / 6.0);
    std::vector<cd> dl = {1, 1, 1, 1, 1, 1, -1, 1, 1, a, -a, -1, 1, -1, -1, 1};
    std::vector<cd> dr = {1,  1, 1, 1, 1, -i, -i * a * a, -a * a,
                          w,  std::pow(w, 4), std::pow(w, 7), std::pow(w, 10),
                          -i, -1, i, 1};
    return {dl, dr};
}

std::pair<std::vector<cd>, std::vector<cd>> y16_2_dressing(double a1, double a2) {
    const cd i(0.0, 1.0);
    const cd w3 = root(1, 3);
    const cd e1 = phase(a1), e2 = phase(a2);
    std::vector<cd> dl = {1, 1, 1, 1, 1, 1, e1, e1, w3, w3, -1, -1, -1, 1, -1, 1};
    std::vector<cd> dr = {1, 1, 1, 1, 1, i, 1, i, e2, e2, e2, e2, 1, i, 1, i};
    return {dl, dr};
}

/// Affine family through F9 itself (parameters multiply the entries by
/// residue pattern [[1,1,1],[1,a,b],[1,c,d]] indexed by (row mod 3,
/// col mod 3)); this is the form whose printed self-dual dressing works.
CMatrix f9_anchored(cd a, cd b, cd c, cd d) {
    CMatrix m = fourier(9);
    const cd pat[3][3] = {{1, 1, 1}, {1, a, b}, {1, c, d}};
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t col = 0; col < 9; ++col) m(r, col) *= pat[r % 3][col % 3];
    return m;
}

void require_arity(const std::string& name, std::span<const double> params, std::size_t want) {
    if (params.size() != want)
        fail(ErrorKind::ArityMismatch, name + " takes " + std::to_string(want) +
                                           " parameter(s), got " + std::to_string(params.size()));
}

}  // namespace

CMatrix fourier(std::size_t n) {
    if (n < 1) fail(ErrorKind::DomainError, "order must be positive");
    CMatrix m(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            m(j, k) = root(static_cast<long>((j * k) % n), static_cast<unsigned>(n));
    return m;
}

CMatrix fourier_f4(double a) {
    CMatrix m = fourier(4);
    const cd e = phase(a);
    m(1, 1) *= e;
    m(1, 3) *= e;
    m(3, 1) *= e;
    m(3, 3) *= e;
    return m;
}

CMatrix fourier_f9_4(double a1, double a2, double a3, double a4) {
    const CMatrix f3 = fourier(3);
    const cd dpar[3][3] = {{1, 1, 1}, {1, phase(a1), phase(a2)}, {1, phase(a3), phase(a4)}};
    CMatrix m(9);
    for (std::size_t i1 = 0; i1 < 3; ++i1)
        for (std::size_t i2 = 0; i2 < 3; ++i2)
            for (std::size_t j1 = 0; j1 < 3; ++j1)
                for (std::size_t j2 = 0; j2 < 3; ++j2)
                    m(3 * i1 + i2, 3 * j1 + j2) = f3(i1, j1) * dpar[j1][i2] * f3(i2, j2);
    return m;
}

CMatrix perm_p9() { return perm_from_cols(kP9Cols, 9); }
CMatrix perm_p16() { return perm_from_cols(kP16Cols, 16); }

CMatrix ortho_o16() {
    CMatrix m(16);
    for (std::size_t i = 0; i < 256; ++i)
        m.entries()[i] = static_cast<double>(kO16[i]);
    return m;
}

CMatrix cat_map(const CatMapParams& p) {
    CMatrix m(p.n);
    const double f = M_PI / static_cast<double>(p.n);
    for (std::size_t j = 1; j <= p.n; ++j)
        for (std::size_t k = 1; k <= p.n; ++k) {
            const double jj = static_cast<double>(j), kk = static_cast<double>(k);
            m(j - 1, k - 1) = std::polar(1.0, f * (p.a * jj * jj + p.b * kk * kk + p.c * jj * kk));
        }
    return m;
}

KarlssonParam::KarlssonParam(cd z) : zeta(z) {
    if (std::abs(1.0 - z) > 4.0 || std::abs(1.0 + z) > 4.0)
        fail(ErrorKind::DomainError, "zeta outside |1-z| <= 4 and |1+z| <= 4");
    if (z == cd(1.0) || z == cd(-1.0))
        fail(ErrorKind::DomainError, "zeta = +1 and zeta = -1 are excluded");
}

CMatrix karlsson(const KarlssonParam& p) {
    const cd z = p.zeta;
    auto pair = [](cd base) {
        const double rad = 16.0 / std::norm(base) - 1.0;
        const cd q = cd(0.0, 1.0) * std::sqrt(std::max(rad, 0.0));
        return std::array<cd, 2>{0.25 * base * (1.0 + q), 0.25 * base * (1.0 - q)};
    };
    auto [x, y] = pair(1.0 + z);
    auto [u, w] = pair(1.0 - z);

    const cd a3[3][3] = {{1, x, x}, {x, 1, x}, {x, x, 1}};
    const cd b3[3][3] = {{y, u, w}, {w, y, u}, {u, w, y}};
    const cd c3[3][3] = {{y, w, u}, {u, y, w}, {w, u, y}};
    const cd (*blocks[3][3])[3] = {{a3, b3, c3}, {c3, a3, b3}, {b3, c3, a3}};
    CMatrix m(9);
    for (std::size_t br = 0; br < 3; ++br)
        for (std::size_t bc = 0; bc < 3; ++bc)
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    m(3 * br + r, 3 * bc + c) = blocks[br][bc][r][c];
    return m;
}

namespace {

LogMatrix b16_1_log() {
    // the printed product is B_[1] P16; undo the column permutation
    LogMatrix prod = make_log(16, 2, kB16_1P16Log2);
    LogMatrix b;
    b.n = 16;
    b.q = 2;
    b.exps.assign(256, 0);
    for (std::size_t k = 0; k < 16; ++k) {
        const std::size_t j = static_cast<std::size_t>(kP16Cols[k] - 1);
        for (std::size_t r = 0; r < 16; ++r) b.at(r, j) = prod.at(r, k);
    }
    return b;
}

}  // namespace

CMatrix named_matrix(const std::string& name, std::span<const double> params) {
    const auto diag3 = [](const int* e) { return omega3_diag(e, 9); };

    if (name == "p9") { require_arity(name, params, 0); return perm_p9(); }
    if (name == "p16") { require_arity(name, params, 0); return perm_p16(); }
    if (name == "o16") { require_arity(name, params, 0); return ortho_o16(); }
    if (name == "h8") { require_arity(name, params, 0); return to_complex(make_log(8, 2, kH8Log2)); }
    if (name == "b9_selfdual") { require_arity(name, params, 0); return to_complex(make_log(9, 3, kB9SelfDualLog3)); }
    if (name == "c9") { require_arity(name, params, 0); return to_complex(make_log(9, 3, kC9Log3)); }
    if (name == "b9_0") { require_arity(name, params, 0); return to_complex(make_log(9, 6, kB9_0Log6)); }
    if (name == "n9_0") { require_arity(name, params, 0); return n9_0_matrix(); }
    if (name == "b16_1") { require_arity(name, params, 0); return to_complex(b16_1_log()); }
    if (name == "b16_2u") { require_arity(name, params, 0); return to_complex(make_log(16, 2, kB16_1P16Log2)); }
    if (name == "b16_8") { require_arity(name, params, 0); return to_complex(make_log(16, 4, kB16_8Log4)); }

    if (name == "y16_2") {
        require_arity(name, params, 2);
        auto [dl, dr] = y16_2_dressing(params[0], params[1]);
        CMatrix m = to_complex(make_log(16, 4, kB16_8Log4)) * perm_p16();
        return diag_scale_cols(diag_scale_rows(dl, m), dr);
    }
    if (name == "t16_1") {
        require_arity(name, params, 1);
        return t16_1_matrix(params[0]);
    }
    if (name == "y16_1") {
        require_arity(name, params, 1);
        auto [dl, dr] = t16_dressing(params[0]);
        return diag_scale_cols(diag_scale_rows(dl, t16_1_matrix(params[0])), dr);
    }
    if (name == "yb9_0") {
        require_arity(name, params, 0);
        CMatrix m = to_complex(make_log(9, 6, kB9_0Log6));
        return diag_scale_cols(diag_scale_rows(diag3(kDlB9_0), m), diag3(kDrB9_0));
    }
    if (name == "yn9_0") {
        require_arity(name, params, 0);
        auto [dl, dr] = n9_0_dressing();
        return diag_scale_cols(diag_scale_rows(dl, n9_0_matrix()), dr);
    }
    if (name == "yk9_3") {
        require_arity(name, params, 0);
        CMatrix k = karlsson(KarlssonParam(cd(3.0, 0.0)));
        auto d = diag3(kDK9_3);
        return diag_scale_cols(diag_scale_rows(d, k), d);
    }
    if (name == "y9_gamma") {
        require_arity(name, params, 1);
        std::vector<cd> dl(9, cd(1.0));
        dl[6] = dl[7] = dl[8] = phase(params[0]);   // diag{1,1,e} (x) I3
        const CMatrix f3 = fourier(3);
        return diag_scale_rows(dl, kron(f3, f3));
    }
    if (name == "f33_2u") {
        require_arity(name, params, 0);
        const CMatrix f3 = fourier(3);
        return diag_scale_cols(diag_scale_rows(diag3(kDlF9TwoU), kron(f3, f3)), diag3(kDrF9TwoU));
    }
    if (name == "y9_2u") {
        require_arity(name, params, 4);
        CMatrix m = fourier_f9_4(params[0], params[1], params[2], params[3]);
        return diag_scale_cols(diag_scale_rows(diag3(kDlF9TwoU), m), diag3(kDrF9TwoU));
    }
    if (name == "y9_selfdual") {
        require_arity(name, params, 5);
        const cd a = phase(params[1]), b = phase(params[2]);
        const cd c = phase(params[3]), d = phase(params[4]);
        const cd w9 = root(1, 9);
        std::vector<cd> dl(9, cd(1.0));
        dl[6] = dl[7] = dl[8] = phase(params[0]);
        std::vector<cd> dr = {1, 1, 1, 1, a * w9, b * w9 * w9, 1, c * w9 * w9, d * w9 * w9 * w9 * w9};
        return diag_scale_cols(diag_scale_rows(dl, f9_anchored(a, b, c, d)), dr);
    }

    if (name == "dl_f9_2u") { require_arity(name, params, 0); return CMatrix::diagonal(diag3(kDlF9TwoU)); }
    if (name == "dr_f9_2u") { require_arity(name, params, 0); return CMatrix::diagonal(diag3(kDrF9TwoU)); }
    if (name == "dl_b9_0") { require_arity(name, params, 0); return CMatrix::diagonal(diag3(kDlB9_0)); }
    if (name == "dr_b9_0") { require_arity(name, params, 0); return CMatrix::diagonal(diag3(kDrB9_0)); }
    if (name == "d_k9_3") { require_arity(name, params, 0); return CMatrix::diagonal(diag3(kDK9_3)); }
    if (name == "dl_n9_0") { require_arity(name, params, 0); return CMatrix::diagonal(n9_0_dressing().first); }
    if (name == "dr_n9_0") { require_arity(name, params, 0); return CMatrix::diagonal(n9_0_dressing().second); }

    fail(ErrorKind::UnknownName, "no catalog entry named '" + name + "'");
}

std::vector<std::pair<std::string, std::size_t>> named_matrix_list() {
    return {
        {"p9", 0},         {"p16", 0},        {"o16", 0},        {"h8", 0},
        {"b9_selfdual", 0}, {"c9", 0},        {"b9_0", 0},       {"n9_0", 0},
        {"b16_1", 0},      {"b16_2u", 0},     {"b16_8", 0},      {"y16_2", 2},
        {"t16_1", 1},      {"y16_1", 1},      {"yb9_0", 0},      {"yn9_0", 0},
        {"yk9_3", 0},      {"y9_gamma", 1},   {"f33_2u", 0},     {"y9_2u", 4},
        {"y9_selfdual", 5}, {"dl_f9_2u", 0},  {"dr_f9_2u", 0},   {"dl_b9_0", 0},
        {"dr_b9_0", 0},    {"d_k9_3", 0},     {"dl_n9_0", 0},    {"dr_n9_0", 0},
    };
}

std::optional<LogMatrix> named_log_matrix(const std::string& name) {
    if (name == "b9_selfdual") return make_log(9, 3, kB9SelfDualLog3);
    if (name == "c9") return make_log(9, 3, kC9Log3);
    if (name == "b9_0") return make_log(9, 6, kB9_0Log6);
    if (name == "h8") return make_log(8, 2, kH8Log2);
    if (name == "b16_1") return b16_1_log();
    if (name == "b16_2u") return make_log(16, 2, kB16_1P16Log2);
    if (name == "b16_8") return make_log(16, 4, kB16_8Log4);
    return std::nullopt;
}

}  // namespace chm
