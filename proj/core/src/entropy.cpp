#include "chm/entropy.hpp"

#include <cmath>
#include <string>

#include "chm/rearrange.hpp"

namespace chm {

double linear_entropy(const CMatrix& x, Tolerance tol) {
    const std::size_t n = x.order();
    // Tr(G) and Tr(G^2) for G = X X^dag, without forming G^2.
    std::vector<cd> g(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            cd acc{};
            for (std::size_t k = 0; k < n; ++k) acc += x(r, k) * std::conj(x(c, k));
            g[r * n + c] = acc;
        }
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += g[i * n + i].real();
    if (tr < tol.eps) fail(ErrorKind::ZeroMatrix, "Tr(XX^dag) below tolerance");
    double tr2 = 0.0;   // Tr(G^2) = sum |G_rc|^2 since G is Hermitian
    for (const cd& z : g) tr2 += std::norm(z);
    const double nn = static_cast<double>(n);
    return nn / (nn - 1.0) * (1.0 - tr2 / (tr * tr));
}

EntropyTriple entropy_triple(const CMatrix& x, std::size_t d, Tolerance tol) {
    if (x.order() != d * d) fail(ErrorKind::ShapeMismatch, "order is not d^2");
    return {linear_entropy(x, tol), linear_entropy(reshuffle(x, d), tol),
            linear_entropy(partial_transpose(x, d), tol)};
}

double chi(const CMatrix& u, std::size_t d, Tolerance tol) {
    EntropyTriple t = entropy_triple(u, d, tol);
    return std::abs(t.s - 1.0) + std::abs(t.s_g - 1.0) + std::abs(t.s_r - 1.0);
}

const char* to_string(Target t) {
    switch (t) {
        case Target::TwoUnitary: return "2u";
        case Target::RDual: return "dual";
        case Target::GammaDual: return "gamma-dual";
        case Target::SelfRDual: return "self-dual";
        case Target::SelfGammaDual: return "self-gamma-dual";
    }
    return "?";
}

Target target_from_string(std::string_view name) {
    if (name == "2u") return Target::TwoUnitary;
    if (name == "dual" || name == "r-dual") return Target::RDual;
    if (name == "gamma-dual") return Target::GammaDual;
    if (name == "self-dual" || name == "self-r-dual") return Target::SelfRDual;
    if (name == "self-gamma-dual") return Target::SelfGammaDual;
    fail(ErrorKind::DomainError, "unknown target '" + std::string(name) + "'");
}

namespace {

double mean_square_diff(const CMatrix& a, const CMatrix& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        acc += std::norm(a.entries()[i] - b.entries()[i]);
    return acc / static_cast<double>(a.entries().size());
}

}  // namespace

double objective_z(const CMatrix& x, std::span<const double> alpha,
                   std::span<const double> beta, std::size_t d, Target target) {
    const std::size_t n = x.order();
    if (n != d * d) fail(ErrorKind::ShapeMismatch, "order is not d^2");
    if (alpha.size() != n || beta.size() != n)
        fail(ErrorKind::ShapeMismatch, "phase vector length is not the order");
    CMatrix y(n);
    for (std::size_t r = 0; r < n; ++r) {
        const cd l = std::polar(1.0, alpha[r]);
        for (std::size_t c = 0; c < n; ++c)
            y(r, c) = l * x(r, c) * std::polar(1.0, beta[c]);
    }
    switch (target) {
        case Target::TwoUnitary:
            return chi(y, d);
        case Target::RDual: {
            double a = std::abs(linear_entropy(y) - 1.0);
            return a + std::abs(linear_entropy(reshuffle(y, d)) - 1.0);
        }
        case Target::GammaDual: {
            double a = std::abs(linear_entropy(y) - 1.0);
            return a + std::abs(linear_entropy(partial_transpose(y, d)) - 1.0);
        }
        case Target::SelfRDual:
            return mean_square_diff(y, reshuffle(y, d));
        case Target::SelfGammaDual:
            return mean_square_diff(y, partial_transpose(y, d));
    }
    fail(ErrorKind::DomainError, "unhandled target");
}

std::size_t defect(const CMatrix& h, Tolerance tol) {
    const std::size_t n = h.order();
    if (!is_unimodular(h, tol) || !is_unitary(h, static_cast<double>(n), tol))
        fail(ErrorKind::NotHadamard, "defect needs a complex Hadamard matrix");

    // Unknowns: R_ik for i,k >= 1, real, row-major. Two real equations per
    // pair i < j (real and imaginary part of the linearized constraint).
    const std::size_t unknowns = (n - 1) * (n - 1);
    RealMatrix a(n * (n - 1), unknowns);
    std::size_t row = 0;
    auto col = [n](std::size_t i, std::size_t k) { return (i - 1) * (n - 1) + (k - 1); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 1; k < n; ++k) {
                const cd z = h(i, k) * std::conj(h(j, k));
                if (i >= 1) {
                    a(row, col(i, k)) += z.real();
                    a(row + 1, col(i, k)) += z.imag();
                }
                if (j >= 1) {
                    a(row, col(j, k)) -= z.real();
                    a(row + 1, col(j, k)) -= z.imag();
                }
            }
            row += 2;
        }
    }
    // Larger constraint system than the entry predicates see; looser cutoff.
    return nullspace_dim(a, Tolerance(1e-8));
}

}  // namespace chm
