#include "chm/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace chm {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::ones(std::size_t n) {
    CMatrix m(n);
    std::fill(m.entries_.begin(), m.entries_.end(), cd(1.0, 0.0));
    return m;
}

CMatrix CMatrix::diagonal(std::span<const cd> diag) {
    CMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

CMatrix CMatrix::conj() const {
    CMatrix m(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = std::conj(entries_[i]);
    return m;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (other.n_ != n_) fail(ErrorKind::ShapeMismatch, "order mismatch in comparison");
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    return m;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cd& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) fail(ErrorKind::ShapeMismatch, "order mismatch in product");
    const std::size_t n = a.n_;
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const cd arc = a(r, k);
            if (arc == cd{}) continue;
            const cd* brow = &b.entries_[k * n];
            cd* orow = &out.entries_[r * n];
            for (std::size_t c = 0; c < n; ++c) orow[c] += arc * brow[c];
        }
    }
    return out;
}

CMatrix operator*(cd s, const CMatrix& a) {
    CMatrix out(a.n_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = s * a.entries_[i];
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) fail(ErrorKind::ShapeMismatch, "order mismatch in difference");
    CMatrix out(a.n_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        out.entries_[i] = a.entries_[i] - b.entries_[i];
    return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) fail(ErrorKind::ShapeMismatch, "order mismatch in sum");
    CMatrix out(a.n_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    CMatrix out(n);
    for (std::size_t ra = 0; ra < na; ++ra)
        for (std::size_t rb = 0; rb < nb; ++rb)
            for (std::size_t ca = 0; ca < na; ++ca)
                for (std::size_t cb = 0; cb < nb; ++cb)
                    out(ra * nb + rb, ca * nb + cb) = a(ra, ca) * b(rb, cb);
    return out;
}

CMatrix diag_scale_rows(std::span<const cd> diag, const CMatrix& m) {
    if (diag.size() != m.order()) fail(ErrorKind::ShapeMismatch, "diagonal length mismatch");
    CMatrix out = m;
    for (std::size_t r = 0; r < m.order(); ++r)
        for (std::size_t c = 0; c < m.order(); ++c) out(r, c) *= diag[r];
    return out;
}

CMatrix diag_scale_cols(const CMatrix& m, std::span<const cd> diag) {
    if (diag.size() != m.order()) fail(ErrorKind::ShapeMismatch, "diagonal length mismatch");
    CMatrix out = m;
    for (std::size_t r = 0; r < m.order(); ++r)
        for (std::size_t c = 0; c < m.order(); ++c) out(r, c) *= diag[c];
    return out;
}

bool is_unimodular(const CMatrix& x, Tolerance tol) {
    for (const cd& z : x.entries())
        if (std::abs(std::abs(z) - 1.0) > tol.eps) return false;
    return true;
}

bool is_unitary(const CMatrix& x, double scale, Tolerance tol) {
    if (!(scale > 0.0)) fail(ErrorKind::DomainError, "scale must be positive");
    const std::size_t n = x.order();
    // max-norm of X X^dag - scale I, row by row
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            cd g{};
            for (std::size_t k = 0; k < n; ++k) g += x(r, k) * std::conj(x(c, k));
            if (r == c) g -= scale;
            if (std::abs(g) > tol.eps * scale) return false;
        }
    }
    return true;
}

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
    const std::size_t n = m.order();
    Eigen::MatrixXcd out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    return out;
}

CMatrix from_eigen(const Eigen::MatrixXcd& m) {
    const std::size_t n = static_cast<std::size_t>(m.rows());
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    return out;
}

}  // namespace

CMatrix polar_unitary(const CMatrix& x, Tolerance tol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(x),
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) < tol.eps)
        fail(ErrorKind::RankDeficient, "smallest singular value below tolerance");
    return from_eigen(svd.matrixU() * svd.matrixV().adjoint());
}

CMatrix dephase(const CMatrix& h, Tolerance tol) {
    const std::size_t n = h.order();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(h(i, 0)) < tol.eps || std::abs(h(0, i)) < tol.eps)
            fail(ErrorKind::ZeroEntry, "zero entry in first row or column");
    }
    std::vector<cd> dl(n), dr(n);
    for (std::size_t i = 0; i < n; ++i) dl[i] = std::conj(h(i, 0) / std::abs(h(i, 0)));
    CMatrix half = diag_scale_rows(dl, h);
    for (std::size_t j = 0; j < n; ++j) dr[j] = std::conj(half(0, j) / std::abs(half(0, j)));
    return diag_scale_cols(half, dr);
}

CMatrix core_of(const CMatrix& h, Tolerance tol) {
    const std::size_t n = h.order();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(h(i, 0) - 1.0) > tol.eps || std::abs(h(0, i) - 1.0) > tol.eps)
            fail(ErrorKind::NotDephased, "first row/column not all ones");
    }
    if (n == 0) return CMatrix();
    CMatrix out(n - 1);
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 1; c < n; ++c) out(r - 1, c - 1) = h(r, c);
    return out;
}

std::size_t nullspace_dim(const RealMatrix& a, Tolerance tol) {
    if (a.rows == 0 || a.cols == 0) return a.cols;
    Eigen::MatrixXd m(a.rows, a.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(r, c);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(0) <= 0.0) return a.cols;   // the zero matrix
    const double cutoff = tol.eps * sv(0);
    std::size_t small = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) < cutoff) ++small;
    // singular values exist only up to min(rows, cols); missing ones are zero
    return small + a.cols - static_cast<std::size_t>(sv.size());
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::ZeroEntry: return "ZeroEntry";
        case ErrorKind::ZeroMatrix: return "ZeroMatrix";
        case ErrorKind::NotDephased: return "NotDephased";
        case ErrorKind::NotHadamard: return "NotHadamard";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NotTwoUnitaryPermutation: return "NotTwoUnitaryPermutation";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::BadPlacement: return "BadPlacement";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::RangeError: return "RangeError";
    }
    return "Error";
}

}  // namespace chm
