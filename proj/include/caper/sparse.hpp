#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "caper/fields.hpp"

namespace caper {

/// One nonzero entry of a sparse column.
template <class E>
struct Entry {
    std::uint32_t row;
    E coeff;
};

/// Sparse column in canonical form: rows strictly increasing, no zeros.
template <class E>
using SparseColumn = std::vector<Entry<E>>;

/// Largest row index carrying a nonzero coefficient; nullopt for the zero column.
template <class E>
std::optional<std::uint32_t> low(const SparseColumn<E>& v) {
    if (v.empty()) return std::nullopt;
    return v.back().row;
}

/// u + c*v in canonical form.
template <Field F>
SparseColumn<typename F::Element> add_scaled(const F& field, const SparseColumn<typename F::Element>& u,
                                             const SparseColumn<typename F::Element>& v,
                                             const typename F::Element& c) {
    SparseColumn<typename F::Element> out;
    out.reserve(u.size() + v.size());
    std::size_t i = 0, j = 0;
    while (i < u.size() || j < v.size()) {
        if (j == v.size() || (i < u.size() && u[i].row < v[j].row)) {
            out.push_back(u[i++]);
        } else if (i == u.size() || v[j].row < u[i].row) {
            auto cv = field.mul(c, v[j].coeff);
            if (!field.is_zero(cv)) out.push_back({v[j].row, std::move(cv)});
            ++j;
        } else {
            auto s = field.add(u[i].coeff, field.mul(c, v[j].coeff));
            if (!field.is_zero(s)) out.push_back({u[i].row, std::move(s)});
            ++i, ++j;
        }
    }
    return out;
}

template <Field F>
SparseColumn<typename F::Element> scale(const F& field, SparseColumn<typename F::Element> v,
                                        const typename F::Element& c) {
    if (field.is_zero(c)) return {};
    for (auto& e : v) e.coeff = field.mul(e.coeff, c);
    return v;
}

/// Builds a canonical column from unordered (row, coeff) pairs, combining
/// repeated rows and dropping zeros.
template <Field F>
SparseColumn<typename F::Element> make_column(const F& field,
                                              std::vector<std::pair<std::uint32_t, typename F::Element>> entries) {
    std::map<std::uint32_t, typename F::Element> acc;
    for (auto& [row, c] : entries) {
        auto it = acc.find(row);
        if (it == acc.end()) {
            acc.emplace(row, std::move(c));
        } else {
            it->second = field.add(it->second, c);
        }
    }
    SparseColumn<typename F::Element> out;
    for (auto& [row, c] : acc) {
        if (!field.is_zero(c)) out.push_back({row, std::move(c)});
    }
    return out;
}

/// Incrementally eliminated column space: supports rank and membership
/// queries over any Field.  Pivot columns are kept with distinct lows.
template <Field F>
class ColumnSpace {
public:
    using Elem = typename F::Element;
    using Column = SparseColumn<Elem>;

    explicit ColumnSpace(const F& field) : field_(&field) {}

    /// Reduces c against the stored pivots; the nonzero remainder (if any).
    Column residue(Column c) const {
        while (auto l = low(c)) {
            auto it = pivots_.find(*l);
            if (it == pivots_.end()) break;
            const Column& p = it->second;
            Elem factor = field_->neg(field_->div(c.back().coeff, p.back().coeff));
            c = add_scaled(*field_, c, p, factor);
        }
        return c;
    }

    /// Adds c to the space; returns true when the rank grew.
    bool insert(Column c) {
        c = residue(std::move(c));
        if (c.empty()) return false;
        std::uint32_t l = c.back().row;
        pivots_.emplace(l, std::move(c));
        return true;
    }

    bool contains(Column c) const { return residue(std::move(c)).empty(); }

    std::size_t rank() const { return pivots_.size(); }

private:
    const F* field_;
    std::map<std::uint32_t, Column> pivots_;
};

/// Rank of a set of columns.
template <Field F>
std::size_t column_rank(const F& field, const std::vector<SparseColumn<typename F::Element>>& cols) {
    ColumnSpace<F> space(field);
    for (const auto& c : cols) space.insert(c);
    return space.rank();
}

}  // namespace caper
