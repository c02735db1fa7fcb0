#include "chm/rearrange.hpp"

#include <algorithm>

namespace chm {

std::vector<Bipartition> balanced_bipartitions(std::size_t k) {
    if (k < 1) fail(ErrorKind::DomainError, "k must be at least 1");
    const std::size_t m = 2 * k;
    std::vector<Bipartition> out;
    std::vector<std::size_t> identity(k);
    for (std::size_t i = 0; i < k; ++i) identity[i] = i;
    out.push_back({identity});

    // enumerate k-subsets of {0..2k-1} containing leg 0, lexicographically
    std::vector<std::size_t> pick(k);
    pick[0] = 0;
    auto emit = [&]() {
        if (pick != identity) out.push_back({pick});
    };
    // standard subset-increment over positions 1..k-1
    for (std::size_t i = 1; i < k; ++i) pick[i] = i;
    while (true) {
        emit();
        std::size_t i = k;
        while (i-- > 1) {
            if (pick[i] < m - (k - i)) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 1) return out;
        }
        if (k == 1) return out;
    }
}

CMatrix reshuffle(const CMatrix& x, std::size_t d) {
    if (x.order() != d * d) fail(ErrorKind::ShapeMismatch, "order is not d^2");
    CMatrix out(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e)
                    out(a * d + b, c * d + e) = x(a * d + c, b * d + e);
    return out;
}

CMatrix partial_transpose(const CMatrix& x, std::size_t d) {
    if (x.order() != d * d) fail(ErrorKind::ShapeMismatch, "order is not d^2");
    CMatrix out(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e)
                    out(a * d + b, c * d + e) = x(a * d + e, c * d + b);
    return out;
}

CMatrix rearrange(const CMatrix& u, TensorShape shape, const Bipartition& b) {
    const std::size_t d = shape.d, k = shape.k, m = 2 * k, n = shape.order();
    if (u.order() != n) fail(ErrorKind::ShapeMismatch, "order is not d^k");
    if (b.rows.size() != k) fail(ErrorKind::ShapeMismatch, "bipartition size is not k");

    std::vector<std::size_t> rows = b.rows;
    std::sort(rows.begin(), rows.end());
    std::vector<bool> in_rows(m, false);
    for (std::size_t l : rows) {
        if (l >= m) fail(ErrorKind::ShapeMismatch, "leg index out of range");
        in_rows[l] = true;
    }

    // column slots: facing legs of the row legs first, leftovers ascending
    std::vector<std::size_t> cols;
    std::vector<bool> used(m, false);
    for (std::size_t l : rows) {
        std::size_t p = (l + k) % m;
        if (!in_rows[p] && !used[p]) {
            cols.push_back(p);
            used[p] = true;
        }
    }
    for (std::size_t l = 0; l < m; ++l)
        if (!in_rows[l] && !used[l]) cols.push_back(l);

    // strides of each leg within the original (row-major tensor) position:
    // legs 0..k-1 index rows of u, legs k..2k-1 its columns, big-endian.
    std::vector<std::size_t> stride(m, 1);
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t s = 1;
        for (std::size_t q = t + 1; q < k; ++q) s *= d;
        stride[t] = s * n;        // row part scaled past the column index
        stride[k + t] = s;
    }

    CMatrix out(n);
    std::vector<std::size_t> digits(m, 0);
    for (std::size_t r = 0; r < n; ++r) {
        // decode r into the row-leg digits (big-endian over `rows`)
        {
            std::size_t rem = r;
            for (std::size_t t = k; t-- > 0;) {
                digits[rows[t]] = rem % d;
                rem /= d;
            }
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t rem = c;
            for (std::size_t t = k; t-- > 0;) {
                digits[cols[t]] = rem % d;
                rem /= d;
            }
            std::size_t pos = 0;
            for (std::size_t l = 0; l < m; ++l) pos += digits[l] * stride[l];
            out(r, c) = u.entries()[pos];
        }
    }
    return out;
}

}  // namespace chm
