#ifndef CHM_MATRIX_HPP
#define CHM_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "chm/error.hpp"

namespace chm {

using cd = std::complex<double>;

/// Tolerance context shared by all floating-point predicates.
struct Tolerance {
    double eps = 1e-10;

    Tolerance() = default;
    explicit Tolerance(double e) : eps(e) {
        if (!(e > 0.0)) fail(ErrorKind::DomainError, "tolerance must be positive");
    }
};

/// Dense square complex matrix, row-major, order fixed at construction.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    CMatrix(std::size_t n, std::vector<cd> entries) : n_(n), entries_(std::move(entries)) {
        if (entries_.size() != n * n)
            fail(ErrorKind::ShapeMismatch, "entry count does not match order");
    }

    static CMatrix identity(std::size_t n);
    static CMatrix ones(std::size_t n);
    /// Diagonal matrix from its diagonal entries.
    static CMatrix diagonal(std::span<const cd> diag);

    std::size_t order() const { return n_; }
    bool empty() const { return n_ == 0; }

    cd& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const cd& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    std::span<const cd> entries() const& { return entries_; }
    std::span<cd> entries() & { return entries_; }
    // a span into a temporary would dangle
    std::span<const cd> entries() const&& = delete;
    std::span<cd> entries() && = delete;

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conj() const;

    /// max_{jk} |A_jk - B_jk|; orders must agree.
    double max_abs_diff(const CMatrix& other) const;
    double max_abs() const;

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(cd s, const CMatrix& a);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);

private:
    std::size_t n_ = 0;
    std::vector<cd> entries_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Left/right multiplication by a diagonal (given as its diagonal entries).
CMatrix diag_scale_rows(std::span<const cd> diag, const CMatrix& m);
CMatrix diag_scale_cols(const CMatrix& m, std::span<const cd> diag);

/// Small dense real matrix, only what the nullspace computation needs.
struct RealMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;   // row-major

    RealMatrix() = default;
    RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
    double& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// true iff every entry has modulus within eps of 1.
bool is_unimodular(const CMatrix& x, Tolerance tol = {});

/// true iff max-norm of (X X^dag - scale I) is at most eps * scale.
bool is_unitary(const CMatrix& x, double scale, Tolerance tol = {});

/// Unitary factor of the polar decomposition X = U P, computed from the SVD.
/// Throws RankDeficient when the smallest singular value falls below eps.
CMatrix polar_unitary(const CMatrix& x, Tolerance tol = {});

/// D_l H D_r with unimodular diagonals chosen so the first row and column
/// are all ones. The left diagonal (fixing the first column) is applied
/// first, then the right one fixes the first row.
CMatrix dephase(const CMatrix& h, Tolerance tol = {});

/// Trailing (n-1) x (n-1) block of a dephased matrix.
CMatrix core_of(const CMatrix& h, Tolerance tol = {});

/// Number of singular values below eps * (largest singular value).
std::size_t nullspace_dim(const RealMatrix& a, Tolerance tol = {});

}  // namespace chm

#endif
