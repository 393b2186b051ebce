#pragma once

#include <string>
#include <utility>
#include <vector>

#include "caper/complex.hpp"
#include "caper/reduction.hpp"

namespace caper {

/// A cycle presented at a filtration level: a formal sum of cells of one
/// dimension, all born at or before the level.
template <Field F>
struct HomologyClass {
    Extended level;
    int degree = 0;
    std::vector<std::pair<std::string, typename F::Element>> chain;
};

/// Resolves a chain's cell ids against a complex.  Enforces that the chain
/// is homogeneous in the class's degree and supported at or before its level.
template <Field F>
SparseColumn<typename F::Element> bind_chain(const FilteredComplex<F>& complex, const HomologyClass<F>& cls) {
    std::vector<std::pair<std::uint32_t, typename F::Element>> entries;
    for (const auto& [id, coeff] : cls.chain) {
        auto idx = complex.index_of(id);
        if (!idx) throw BadParameter("chain references unknown cell '" + id + "'");
        const auto& cell = complex.cell(*idx);
        if (cell.dim != cls.degree) {
            throw BadParameter("chain cell '" + id + "' has dimension " + std::to_string(cell.dim) +
                               ", class degree is " + std::to_string(cls.degree));
        }
        if (cell.birth > cls.level) {
            throw BadParameter("chain cell '" + id + "' born " + cell.birth.str() +
                               " after class level " + cls.level.str());
        }
        entries.emplace_back(static_cast<std::uint32_t>(*idx), coeff);
    }
    return make_column(complex.field(), std::move(entries));
}

/// Boundary of a chain within the complex.
template <Field F>
SparseColumn<typename F::Element> chain_boundary(const FilteredComplex<F>& complex,
                                                 const SparseColumn<typename F::Element>& chain) {
    SparseColumn<typename F::Element> out;
    for (const auto& e : chain) out = add_scaled(complex.field(), out, complex.boundary(e.row), e.coeff);
    return out;
}

/// Persistence rho of a nontrivial class at its level: how far past the
/// level its image under the persistence maps stays nonzero.  Expressed by
/// decomposing the cycle in the reduced cycle basis and taking the largest
/// death among bars carrying a nonzero coefficient.
template <Field F>
Extended class_persistence(const ReducedDecomposition<F>& dec, const FilteredComplex<F>& complex,
                           const HomologyClass<F>& cls) {
    const F& field = complex.field();
    auto z = bind_chain(complex, cls);
    if (!chain_boundary(complex, z).empty()) throw NotACycle("class chain has nonzero boundary");

    bool seen_alive = false;
    Extended max_death = Extended::neg_inf();
    while (auto l = low(z)) {
        std::size_t i = *l;
        if (!dec.is_positive(i)) throw NotACycle("chain is not a combination of cycle basis columns");
        Extended death = dec.destroyer_of[i] >= 0
                             ? complex.cell(static_cast<std::size_t>(dec.destroyer_of[i])).birth
                             : Extended::pos_inf();
        if (death > max_death) max_death = death;
        seen_alive = true;
        // V columns have unit diagonal, so the coefficient at i is z[i]
        z = add_scaled(field, z, dec.V[i], field.neg(z.back().coeff));
    }
    bool alive = seen_alive && (max_death.is_pos_inf() || max_death > cls.level);
    if (!alive) throw TrivialClass("class is already a boundary at level " + cls.level.str());
    if (max_death.is_pos_inf()) return Extended::pos_inf();
    return max_death - cls.level;
}

}  // namespace caper
