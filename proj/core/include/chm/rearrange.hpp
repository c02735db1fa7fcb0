#ifndef CHM_REARRANGE_HPP
#define CHM_REARRANGE_HPP

#include <cstddef>
#include <vector>

#include "chm/matrix.hpp"

namespace chm {

/// Local dimension d and half-party count k of a 2k-party operator of order d^k.
struct TensorShape {
    std::size_t d = 2;
    std::size_t k = 1;

    TensorShape(std::size_t d_, std::size_t k_) : d(d_), k(k_) {
        if (d < 2 || k < 1) fail(ErrorKind::DomainError, "need d >= 2 and k >= 1");
    }
    std::size_t order() const {
        std::size_t n = 1;
        for (std::size_t i = 0; i < k; ++i) n *= d;
        return n;
    }
    std::size_t parties() const { return 2 * k; }
};

/// Subset of k of the 2k tensor legs chosen as row legs. Canonical form
/// contains leg 0, which identifies each bipartition with its complement
/// (the global transpose).
struct Bipartition {
    std::vector<std::size_t> rows;   // sorted ascending
};

/// All balanced bipartitions, one per complement pair; the identity
/// bipartition {0..k-1} comes first, the rest in lexicographic order.
/// List length is C(2k,k)/2.
std::vector<Bipartition> balanced_bipartitions(std::size_t k);

/// H^R: (a,b;c,d) -> (a,c;b,d) on an order-d^2 matrix.
CMatrix reshuffle(const CMatrix& x, std::size_t d);

/// H^Gamma: (a,b;c,d) -> (a,d;c,b); transposes the second tensor factor.
CMatrix partial_transpose(const CMatrix& x, std::size_t d);

/// General leg rebalancing. Row legs are b.rows in ascending order; each
/// column slot takes the facing leg (l +- k) of the corresponding row leg
/// when that leg is available, remaining legs ascending. With this order
/// the k = 2 bipartitions {0,1}, {0,2}, {0,3} reproduce the matrix itself,
/// reshuffle and partial_transpose exactly.
CMatrix rearrange(const CMatrix& u, TensorShape shape, const Bipartition& b);

}  // namespace chm

#endif
