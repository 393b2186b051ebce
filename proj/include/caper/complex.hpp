#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "caper/fields.hpp"
#include "caper/rational.hpp"
#include "caper/sparse.hpp"

namespace caper {

/// One cell of a filtered complex: raw boundary references faces by id.
template <Field F>
struct Cell {
    std::string id;
    int dim = 0;
    Extended birth;
    std::vector<std::pair<std::string, typename F::Element>> faces;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const {
        std::string s;
        for (const auto& v : violations) s += v + "\n";
        return s;
    }
};

/// R-filtered chain complex over a field.  Cells are kept in canonical
/// order (birth, dim, id), so every snapshot {birth <= t} is a prefix and
/// every window {a < birth <= b} is a contiguous index range.  Boundary
/// columns are sparse over canonical indices with all rows below the
/// column's own index.
template <Field F>
class FilteredComplex {
public:
    using Elem = typename F::Element;
    using Column = SparseColumn<Elem>;

    FilteredComplex(F field, std::vector<Cell<F>> cells) : field_(std::move(field)) {
        std::sort(cells.begin(), cells.end(), [](const Cell<F>& x, const Cell<F>& y) {
            if (x.birth != y.birth) return x.birth < y.birth;
            if (x.dim != y.dim) return x.dim < y.dim;
            return x.id < y.id;
        });
        for (auto& c : cells) {
            if (index_.count(c.id)) {
                problems_.push_back("duplicate cell id '" + c.id + "'");
                continue;
            }
            index_.emplace(c.id, cells_.size());
            cells_.push_back(std::move(c));
        }
        columns_.reserve(cells_.size());
        for (std::size_t j = 0; j < cells_.size(); ++j) {
            std::vector<std::pair<std::uint32_t, Elem>> entries;
            for (const auto& [face_id, coeff] : cells_[j].faces) {
                auto it = index_.find(face_id);
                if (it == index_.end()) {
                    problems_.push_back("cell '" + cells_[j].id + "' references unknown face '" + face_id + "'");
                    continue;
                }
                const Cell<F>& face = cells_[it->second];
                if (face.dim != cells_[j].dim - 1) {
                    problems_.push_back("cell '" + cells_[j].id + "' has face '" + face_id +
                                        "' of dimension " + std::to_string(face.dim) + ", expected " +
                                        std::to_string(cells_[j].dim - 1));
                    continue;
                }
                if (face.birth > cells_[j].birth) {
                    problems_.push_back("cell '" + cells_[j].id + "' born " + cells_[j].birth.str() +
                                        " has face '" + face_id + "' born later (" + face.birth.str() + ")");
                    // monotonicity violation also breaks the index order; skip the entry
                    continue;
                }
                entries.emplace_back(static_cast<std::uint32_t>(it->second), coeff);
            }
            columns_.push_back(make_column(field_, std::move(entries)));
        }
        for (const auto& c : cells_) {
            if (c.birth.finite() &&
                (critical_.empty() || critical_.back() != c.birth)) {
                critical_.push_back(c.birth);
            }
        }
        int d = -1;
        for (const auto& c : cells_) d = std::max(d, c.dim);
        max_dim_ = d;
    }

    const F& field() const { return field_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const Cell<F>& cell(std::size_t i) const { return cells_[i]; }
    const std::vector<Cell<F>>& cells() const { return cells_; }
    const Column& boundary(std::size_t i) const { return columns_[i]; }
    int max_dim() const { return max_dim_; }

    std::optional<std::size_t> index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Distinct finite birth values, ascending.
    const std::vector<Extended>& critical_values() const { return critical_; }

    /// Number of cells with birth <= t (a canonical-order prefix).
    std::size_t prefix_size(const Extended& t) const {
        auto it = std::upper_bound(cells_.begin(), cells_.end(), t,
                                   [](const Extended& lv, const Cell<F>& c) { return lv < c.birth; });
        return static_cast<std::size_t>(it - cells_.begin());
    }

    /// Sub-complex of cells born at or before t.
    FilteredComplex snapshot(const Extended& t) const {
        std::size_t n = prefix_size(t);
        std::vector<Cell<F>> sub(cells_.begin(), cells_.begin() + n);
        return FilteredComplex(field_, std::move(sub));
    }

    /// Quotient complex C(X^b)/C(X^a): cells with a < birth <= b, boundary
    /// terms landing at or below level a dropped.
    FilteredComplex relative_complex(const Extended& a, const Extended& b) const {
        if (!(a < b)) throw InvalidWindow(a.str() + " >= " + b.str());
        std::size_t lo = prefix_size(a), hi = prefix_size(b);
        std::vector<Cell<F>> sub;
        sub.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) {
            Cell<F> c = cells_[i];
            std::vector<std::pair<std::string, Elem>> kept;
            for (auto& f : c.faces) {
                auto it = index_.find(f.first);
                if (it != index_.end() && it->second < lo) continue;  // quotiented away
                kept.push_back(std::move(f));
            }
            c.faces = std::move(kept);
            sub.push_back(std::move(c));
        }
        return FilteredComplex(field_, std::move(sub));
    }

    /// Structural problems found at construction (duplicates, unknown or
    /// mis-dimensioned faces, monotonicity breaks); reported by validate().
    const std::vector<std::string>& construction_problems() const { return problems_; }

private:
    F field_;
    std::vector<Cell<F>> cells_;
    std::vector<Column> columns_;
    std::map<std::string, std::size_t> index_;
    std::vector<Extended> critical_;
    std::vector<std::string> problems_;
    int max_dim_ = -1;
};

/// Quotient complex spanned by cells at canonical index lo and above, with
/// boundary terms below lo dropped.  relative_complex with index endpoints.
template <Field F>
FilteredComplex<F> complex_suffix(const FilteredComplex<F>& complex, std::size_t lo) {
    using Elem = typename F::Element;
    std::vector<Cell<F>> sub;
    sub.reserve(complex.size() - lo);
    for (std::size_t i = lo; i < complex.size(); ++i) {
        Cell<F> c = complex.cell(i);
        std::vector<std::pair<std::string, Elem>> kept;
        for (auto& f : c.faces) {
            auto idx = complex.index_of(f.first);
            if (idx && *idx < lo) continue;
            kept.push_back(std::move(f));
        }
        c.faces = std::move(kept);
        sub.push_back(std::move(c));
    }
    return FilteredComplex<F>(complex.field(), std::move(sub));
}

/// Checks the filtration axioms: unique ids, faces one dimension down and
/// born no later, and d(d(c)) = 0 over the complex's field for every cell.
template <Field F>
ValidationReport validate(const FilteredComplex<F>& complex) {
    ValidationReport report;
    report.violations = complex.construction_problems();
    const F& field = complex.field();
    for (std::size_t j = 0; j < complex.size(); ++j) {
        std::map<std::uint32_t, typename F::Element> acc;
        for (const auto& e1 : complex.boundary(j)) {
            for (const auto& e2 : complex.boundary(e1.row)) {
                auto [it, fresh] = acc.emplace(e2.row, field.mul(e1.coeff, e2.coeff));
                if (!fresh) it->second = field.add(it->second, field.mul(e1.coeff, e2.coeff));
            }
        }
        for (const auto& [row, c] : acc) {
            if (!field.is_zero(c)) {
                report.violations.push_back("d(d('" + complex.cell(j).id + "')) is nonzero at '" +
                                            complex.cell(row).id + "'");
            }
        }
    }
    return report;
}

}  // namespace caper
