#ifndef CHM_ENTROPY_HPP
#define CHM_ENTROPY_HPP

#include <span>

#include "chm/matrix.hpp"

namespace chm {

/// (S(U), S(U^R), S(U^Gamma)).
struct EntropyTriple {
    double s = 0.0;
    double s_r = 0.0;
    double s_g = 0.0;
};

/// Linear entropy S(X) = n/(n-1) (1 - Tr(XX'XX')/Tr^2(XX')) with n the
/// order. Equals 1 exactly when XX' is proportional to the identity and is
/// invariant under rescaling of X. Throws ZeroMatrix for Tr(XX') below eps.
double linear_entropy(const CMatrix& x, Tolerance tol = {});

EntropyTriple entropy_triple(const CMatrix& x, std::size_t d, Tolerance tol = {});

/// chi(U) = |S(U)-1| + |S(U^Gamma)-1| + |S(U^R)-1|; zero iff U is 2-unitary.
double chi(const CMatrix& u, std::size_t d, Tolerance tol = {});

/// What a dressing search drives to zero.
enum class Target {
    TwoUnitary,      // all three entropy terms
    RDual,           // |S-1| + |S^R-1|
    GammaDual,       // |S-1| + |S^Gamma-1|
    SelfRDual,       // mean-square ||Y - Y^R||^2 / N^2
    SelfGammaDual,   // mean-square ||Y - Y^Gamma||^2 / N^2
};

const char* to_string(Target t);
Target target_from_string(std::string_view name);

/// Z(X, alpha; beta): the target objective evaluated on
/// diag(e^{i alpha}) X diag(e^{i beta}).
double objective_z(const CMatrix& x, std::span<const double> alpha,
                   std::span<const double> beta, std::size_t d, Target target);

/// Dimension of the space of first-order Hadamard-preserving deformations:
/// real matrices R with first row and column zero satisfying
/// sum_k H_ik conj(H_jk) (R_ik - R_jk) = 0 for all i < j. Zero means the
/// matrix is isolated. Input must be Hadamard at tolerance eps.
std::size_t defect(const CMatrix& h, Tolerance tol = {});

}  // namespace chm

#endif
