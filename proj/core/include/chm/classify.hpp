#ifndef CHM_CLASSIFY_HPP
#define CHM_CLASSIFY_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chm/entropy.hpp"
#include "chm/matrix.hpp"
#include "chm/rearrange.hpp"
#include "chm/rng.hpp"

namespace chm {

/// M = D P: a permutation with unimodular phases on the rows.
struct MonomialMatrix {
    std::vector<std::size_t> perm;   // perm[c] = row of the nonzero in column c
    std::vector<cd> phases;          // one unimodular factor per column

    CMatrix to_matrix() const;
};

MonomialMatrix random_monomial(std::size_t n, Rng& rng);

struct ClassReport {
    std::size_t n = 0;
    std::size_t d = 0;
    EntropyTriple triple;
    bool chm = false;
    std::optional<unsigned> butson_q;   // smallest q in 2..36, when chm
    bool r_dual = false;
    bool gamma_dual = false;
    bool self_r_dual = false;
    bool self_gamma_dual = false;
    bool two_unitary = false;
    bool strong_two_unitary = false;    // provably always false
};

/// Membership flags for the whole subset taxonomy. Self-duality means
/// literal entrywise equality with the rearranged matrix; no equivalence
/// search is attempted.
ClassReport classify(const CMatrix& x, std::size_t d, Tolerance tol = {});

std::string to_json(const ClassReport& r);

/// true iff rearrange(u, shape, b) is unitary (at u's own scale) for every
/// balanced bipartition b.
bool is_k_unitary(const CMatrix& u, TensorShape shape, Tolerance tol = {});

/// Column positions (1 and d, 0-based) forced equal in any X with
/// X = X^R = X^Gamma; such an X is singular, so strongly 2-unitary
/// matrices cannot exist.
std::pair<std::size_t, std::size_t> strong_two_unitary_obstruction(std::size_t d);

/// Symbolic certificate: treating entries as formal symbols identified by
/// the two index rules, columns 1 and d come out pairwise equal.
bool obstruction_columns_forced_equal(std::size_t d);

/// Checks the obstruction on a concrete matrix claiming X = X^R = X^Gamma.
bool obstruction_columns_equal(const CMatrix& x, std::size_t d, Tolerance tol = {});

/// (U1 (x) U2) X (U3 (x) U4) with unitary factors of order d; preserves the
/// entropy triple exactly.
CMatrix lu_apply(const CMatrix& u1, const CMatrix& u2, const CMatrix& u3, const CMatrix& u4,
                 const CMatrix& x, Tolerance tol = {});

enum class LuBase { P9, P16, O16 };

/// (M_a s1 M_b (x) M_c s2 M_d) BASE (M_e s3 M_f (x) M_g s4 M_h) with the
/// Fourier slots given by `mask` (exactly two for P9/P16, exactly one for
/// O16) and one phase parameter per Fourier slot (ignored for P9, whose
/// factor is the parameter-free F3). Always lands in the 2-unitary CHM set.
CMatrix lu_family(LuBase base, const std::array<bool, 4>& mask,
                  std::span<const MonomialMatrix> monomials,
                  std::span<const double> fourier_params);

/// (h (x) h) p for a Hadamard h of order d and a 2-unitary permutation p of
/// order d^2; the result is a 2-unitary CHM.
CMatrix tensor_construct(const CMatrix& h, const CMatrix& p, Tolerance tol = {});

}  // namespace chm

#endif
