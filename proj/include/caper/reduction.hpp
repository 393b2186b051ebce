#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "caper/complex.hpp"
#include "caper/sparse.hpp"

namespace caper {

/// Result of column reduction: R = D*V with V invertible upper triangular
/// (unit diagonal) and the nonzero columns of R having pairwise distinct
/// lows.  Column order is the complex's canonical order.
template <Field F>
struct ReducedDecomposition {
    using Column = SparseColumn<typename F::Element>;

    std::vector<Column> R;
    std::vector<Column> V;
    /// destroyer_of[i] = the column whose reduced low is i, or -1.
    std::vector<std::int64_t> destroyer_of;

    bool is_positive(std::size_t i) const { return R[i].empty(); }
};

/// Standard left-to-right column reduction in canonical order, processing
/// dimensions top-down so that a paired creator's column can be cleared
/// instead of reduced (its cycle is read off the destroyer's column).
template <Field F>
ReducedDecomposition<F> reduce(const FilteredComplex<F>& complex) {
    const F& field = complex.field();
    const std::size_t n = complex.size();
    ReducedDecomposition<F> dec;
    dec.R.resize(n);
    dec.V.resize(n);
    dec.destroyer_of.assign(n, -1);

    std::vector<char> cleared(n, 0);

    int top = complex.max_dim();
    for (int d = top; d >= 0; --d) {
        for (std::size_t j = 0; j < n; ++j) {
            if (complex.cell(j).dim != d) continue;
            if (cleared[j]) continue;
            dec.V[j] = {{static_cast<std::uint32_t>(j), field.one()}};
            dec.R[j] = complex.boundary(j);
            while (auto l = low(dec.R[j])) {
                std::int64_t o = dec.destroyer_of[*l];
                if (o < 0) {
                    dec.destroyer_of[*l] = static_cast<std::int64_t>(j);
                    cleared[*l] = 1;
                    // the reduced column is a cycle with unit low at *l
                    dec.V[*l] = scale(field, dec.R[j], field.inv(dec.R[j].back().coeff));
                    break;
                }
                auto factor = field.neg(field.div(dec.R[j].back().coeff, dec.R[o].back().coeff));
                dec.R[j] = add_scaled(field, dec.R[j], dec.R[o], factor);
                dec.V[j] = add_scaled(field, dec.V[j], dec.V[o], factor);
            }
        }
    }
    return dec;
}

}  // namespace caper
