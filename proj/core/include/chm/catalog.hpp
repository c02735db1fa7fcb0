#ifndef CHM_CATALOG_HPP
#define CHM_CATALOG_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "chm/matrix.hpp"

namespace chm {

struct LogMatrix;   // butson.hpp

/// Fourier matrix F_N, entries omega^{jk}; dephased Hadamard of order N.
CMatrix fourier(std::size_t n);

/// One-parameter affine family through F_4: the phase e^{2 pi i a}
/// multiplies the rows-{1,3} x cols-{1,3} block. F4(0) is the DFT and the
/// matrix is symmetric for every a, so F4(a1) (x) F4(a2) is self
/// Gamma-dual.
CMatrix fourier_f4(double a);

/// Four-parameter family of order 9 built from F3 blocks with two
/// parametric diagonals (D1 = I, D2 = diag(1, e(a1), e(a2)),
/// D3 = diag(1, e(a3), e(a4))). All-zero parameters give exactly F3 (x) F3.
CMatrix fourier_f9_4(double a1, double a2, double a3, double a4);

/// AME permutation matrices of §1.3 (column lists [1,9,5,...] converted
/// from the paper's 1-based encoding).
CMatrix perm_p9();
CMatrix perm_p16();

/// The rescaled-orthogonal LU-class representative of order 16; entries in
/// {-1, 0, +1} with O O^T = 4 I.
CMatrix ortho_o16();

struct CatMapParams {
    std::size_t n = 2;
    double a = 0.0, b = 0.0, c = 0.0;

    CatMapParams(std::size_t n_, double a_, double b_, double c_) : n(n_), a(a_), b(b_), c(c_) {
        if (n < 2) fail(ErrorKind::DomainError, "cat map order must be at least 2");
    }
};

/// Quantized cat map G_N(a,b,c)_{jk} = exp{(i pi / N)(a j^2 + b k^2 + c j k)}
/// with 1-based j,k, evaluated verbatim.
CMatrix cat_map(const CatMapParams& p);

/// zeta restricted to D = {|1-z| <= 4} cap {|1+z| <= 4} minus {-1, +1}.
struct KarlssonParam {
    cd zeta;

    explicit KarlssonParam(cd z);
};

/// Karlsson's symmetric BCCB Hadamard matrix of order 9; K(zeta) P9 is
/// 2-unitary for every zeta in the domain.
CMatrix karlsson(const KarlssonParam& z);

/// Every explicitly printed matrix, family and diagonal from the paper by
/// name. Parameters are phases in [0,1) unless noted.
///
///   p9, p16, o16           constants (also available as dedicated calls)
///   b9_selfdual            self-R-dual member of BH(9,3)
///   c9                     its 2-unitary conjugate-dressed form
///   b16_1                  first catalogued member of BH(16,2)
///   b16_2u                 b16_1 * P16, 2-unitary with +-1 entries
///   b16_8                  eighth catalogued member of BH(16,4)
///   y16_2(a1, a2)          D_L(a1) b16_8 P16 D_R(a2), 2-unitary family
///   h8                     3-unitary real Hadamard of order 8
///   b9_0, n9_0             isolated order-9 matrices (BH(9,6) / Beauchamp-Nicoara)
///   yb9_0, yn9_0, yk9_3    their self-Gamma-dual dressed forms
///   y9_gamma(a)            (diag{1,1,e(a)} (x) I3)(F3 (x) F3), self-Gamma-dual
///   f33_2u                 D_L (F3 (x) F3) D_R, 2-unitary
///   y9_2u(a1..a4)          D_L fourier_f9_4(a) D_R, 2-unitary family
///   y9_selfdual(al,a,b,c,d) self-R-dual five-phase family
///   t16_1(p1)              one-parameter affine Hadamard of order 16
///   y16_1(p1)              its 2-unitary dressed form
///   dl_f9_2u, dr_f9_2u, dl_b9_0, dr_b9_0, dl_n9_0, dr_n9_0, d_k9_3
///                          the diagonal dressings themselves
CMatrix named_matrix(const std::string& name, std::span<const double> params = {});

/// Names accepted by named_matrix, with their parameter counts.
std::vector<std::pair<std::string, std::size_t>> named_matrix_list();

/// Exact logarithmic form for the Butson-valued catalog constants
/// (b9_selfdual, c9, b16_1, b16_2u, b16_8, h8, b9_0, fourier N).
std::optional<LogMatrix> named_log_matrix(const std::string& name);

}  // namespace chm

#endif
