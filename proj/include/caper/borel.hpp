#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "caper/complex.hpp"
#include "caper/diagram.hpp"
#include "caper/module.hpp"

namespace caper {

/// Order-k signed cell permutation: the generator maps each cell to a
/// single cell with a nonzero coefficient.
template <Field F>
struct GroupAction {
    std::uint64_t k = 1;
    std::map<std::string, std::pair<std::string, typename F::Element>> generator;
};

/// Checks that the generator is a birth- and dimension-preserving signed
/// permutation of order dividing k that commutes with the boundary.
template <Field F>
ValidationReport validate_action(const FilteredComplex<F>& complex, const GroupAction<F>& action) {
    ValidationReport report;
    const F& field = complex.field();
    if (action.k < 1) {
        report.violations.push_back("action order k must be at least 1");
        return report;
    }
    std::map<std::string, int> target_count;
    for (std::size_t i = 0; i < complex.size(); ++i) {
        const auto& cell = complex.cell(i);
        auto it = action.generator.find(cell.id);
        if (it == action.generator.end()) {
            report.violations.push_back("cell '" + cell.id + "' has no image under the generator");
            continue;
        }
        const auto& [target_id, coeff] = it->second;
        auto target = complex.index_of(target_id);
        if (!target) {
            report.violations.push_back("generator maps '" + cell.id + "' to unknown cell '" + target_id + "'");
            continue;
        }
        ++target_count[target_id];
        if (field.is_zero(coeff)) {
            report.violations.push_back("generator coefficient on '" + cell.id + "' is zero");
        }
        const auto& tcell = complex.cell(*target);
        if (tcell.dim != cell.dim) {
            report.violations.push_back("generator maps '" + cell.id + "' across dimensions");
        }
        if (tcell.birth != cell.birth) {
            report.violations.push_back("generator does not preserve the birth of '" + cell.id + "'");
        }
    }
    for (const auto& [id, count] : target_count) {
        if (count > 1) report.violations.push_back("generator hits cell '" + id + "' " +
                                                   std::to_string(count) + " times");
    }
    for (const auto& [src, img] : action.generator) {
        if (!complex.index_of(src)) {
            report.violations.push_back("generator lists unknown cell '" + src + "'");
        }
    }
    if (!report.ok()) return report;

    auto apply = [&](std::size_t i) -> std::pair<std::size_t, typename F::Element> {
        const auto& [tid, coeff] = action.generator.at(complex.cell(i).id);
        return {*complex.index_of(tid), coeff};
    };

    // equivariance: d(g c) == g(d c) for every cell
    for (std::size_t i = 0; i < complex.size(); ++i) {
        auto [gi, gc] = apply(i);
        auto lhs = scale(field, complex.boundary(gi), gc);
        std::vector<std::pair<std::uint32_t, typename F::Element>> entries;
        for (const auto& e : complex.boundary(i)) {
            auto [gf, cf] = apply(e.row);
            entries.emplace_back(static_cast<std::uint32_t>(gf), field.mul(e.coeff, cf));
        }
        auto rhs = make_column(field, std::move(entries));
        if (!add_scaled(field, lhs, rhs, field.neg(field.one())).empty()) {
            report.violations.push_back("generator does not commute with the boundary at '" +
                                        complex.cell(i).id + "'");
        }
    }

    // k-fold composite must be the identity with coefficient 1
    for (std::size_t i = 0; i < complex.size(); ++i) {
        std::size_t cur = i;
        typename F::Element coeff = field.one();
        for (std::uint64_t step = 0; step < action.k; ++step) {
            auto [next, c] = apply(cur);
            coeff = field.mul(coeff, c);
            cur = next;
        }
        if (cur != i || !field.eq(coeff, field.one())) {
            report.violations.push_back("generator does not have order dividing " + std::to_string(action.k) +
                                        " at '" + complex.cell(i).id + "'");
        }
    }
    return report;
}

/// Cell id of the Borel complex: resolution degree i paired with a base cell.
inline std::string borel_id(int i, const std::string& base_id) {
    return std::to_string(i) + ":" + base_id;
}

/// Highest total degree whose homology is unaffected by truncating the
/// periodic resolution at cap.
inline int truncation_safe_band(int cap, int base_max_dim) {
    return cap - std::max(1, base_max_dim);
}

/// Total complex of the periodic resolution of the trivial module tensored
/// with the base chain complex, truncated at resolution degree cap.  The
/// vertical differential alternates (g - 1) in odd resolution degrees and
/// the norm 1 + g + ... + g^(k-1) in even ones; the base differential
/// carries the Koszul sign (-1)^i.  Homology in total degrees within the
/// safe band equals the equivariant homology of the base.
template <Field F>
FilteredComplex<F> borel_complex(const FilteredComplex<F>& complex, const GroupAction<F>& action, int cap) {
    if (cap < 0) throw BadParameter("resolution cap must be nonnegative");
    const F& field = complex.field();
    using Elem = typename F::Element;

    auto apply = [&](std::size_t i) -> std::pair<std::size_t, Elem> {
        const auto& [tid, coeff] = action.generator.at(complex.cell(i).id);
        return {*complex.index_of(tid), coeff};
    };

    std::vector<Cell<F>> cells;
    cells.reserve((static_cast<std::size_t>(cap) + 1) * complex.size());
    for (int i = 0; i <= cap; ++i) {
        bool flip = (i % 2) != 0;
        for (std::size_t b = 0; b < complex.size(); ++b) {
            const auto& base = complex.cell(b);
            Cell<F> cell;
            cell.id = borel_id(i, base.id);
            cell.dim = i + base.dim;
            cell.birth = base.birth;
            for (const auto& [fid, coeff] : base.faces) {
                cell.faces.emplace_back(borel_id(i, fid), flip ? field.neg(coeff) : coeff);
            }
            if (i >= 1 && flip) {  // (g - 1) rows
                auto [gb, gc] = apply(b);
                cell.faces.emplace_back(borel_id(i - 1, complex.cell(gb).id), gc);
                cell.faces.emplace_back(borel_id(i - 1, base.id), field.neg(field.one()));
            } else if (i >= 1) {  // norm rows
                std::size_t cur = b;
                Elem coeff = field.one();
                for (std::uint64_t step = 0; step < action.k; ++step) {
                    cell.faces.emplace_back(borel_id(i - 1, complex.cell(cur).id), coeff);
                    auto [next, c] = apply(cur);
                    coeff = field.mul(coeff, c);
                    cur = next;
                }
            }
            cells.push_back(std::move(cell));
        }
    }
    return FilteredComplex<F>(field, std::move(cells));
}

/// Persistence diagram of the Borel complex, restricted to the degrees the
/// truncation leaves intact.
template <Field F>
PersistenceDiagram equivariant_persist(const FilteredComplex<F>& complex, const GroupAction<F>& action,
                                       int cap) {
    int band = truncation_safe_band(cap, complex.max_dim());
    if (band < 0) {
        throw CapTooSmall("cap " + std::to_string(cap) + " leaves no reportable degree");
    }
    FilteredComplex<F> borel = borel_complex(complex, action, cap);
    PersistenceDiagram full = diagram(reduce(borel), borel);
    PersistenceDiagram out;
    for (auto& pt : full.points) {
        if (pt.degree <= band) out.points.push_back(pt);
    }
    return out;
}

/// Restriction of an action to a sub- or quotient complex on the same ids.
template <Field F>
GroupAction<F> restrict_action(const FilteredComplex<F>& sub, const GroupAction<F>& action) {
    GroupAction<F> out;
    out.k = action.k;
    for (const auto& [src, img] : action.generator) {
        if (sub.index_of(src)) out.generator.emplace(src, img);
    }
    return out;
}

/// Equivariant homology dimension of an action window (a, b] in one degree.
template <Field F>
std::size_t equivariant_windowed(const FilteredComplex<F>& complex, const GroupAction<F>& action,
                                 const Extended& a, const Extended& b, int degree, int cap) {
    FilteredComplex<F> window = complex.relative_complex(a, b);
    int band = truncation_safe_band(cap, window.max_dim());
    if (degree > band) {
        throw CapTooSmall("degree " + std::to_string(degree) + " outside safe band " + std::to_string(band));
    }
    FilteredComplex<F> borel = borel_complex(window, restrict_action(window, action), cap);
    std::size_t cells_p = 0;
    std::vector<SparseColumn<typename F::Element>> d_p, d_p1;
    for (std::size_t i = 0; i < borel.size(); ++i) {
        if (borel.cell(i).dim == degree) {
            ++cells_p;
            d_p.push_back(borel.boundary(i));
        } else if (borel.cell(i).dim == degree + 1) {
            d_p1.push_back(borel.boundary(i));
        }
    }
    return cells_p - column_rank(borel.field(), d_p) - column_rank(borel.field(), d_p1);
}

/// Capacity of the surviving generator of the equivariant surrogate module
/// in the given degree.  Kill classes are cycles of the Borel complex
/// (ids "i:cell").  The generator is located as the unique cycle class of
/// the value just below 0 that survives the quotient.
template <Field F>
Extended equivariant_capacity(const FilteredComplex<F>& complex, const GroupAction<F>& action, int degree,
                              const SurrogateSpec<F>& spec, int cap) {
    int band = truncation_safe_band(cap, complex.max_dim());
    if (degree > band) {
        throw CapTooSmall("degree " + std::to_string(degree) + " outside safe band " + std::to_string(band));
    }
    FilteredComplex<F> borel = borel_complex(complex, action, cap);
    RelativeModule<F> module(borel, spec);

    std::vector<std::pair<int, SparseColumn<typename F::Element>>> kills;
    for (const auto& cls : spec.kill) kills.emplace_back(cls.degree, bind_chain(borel, cls));

    // basis search for the unique surviving generator at threshold 0
    std::size_t lo = borel.prefix_size(module.epsilon_level());
    FilteredComplex<F> q = complex_suffix(borel, lo);
    ReducedDecomposition<F> dec = reduce(q);
    ColumnSpace<F> space(borel.field());
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q.cell(j).dim == degree + 1 && !dec.is_positive(j)) space.insert(dec.R[j]);
    }
    auto localize = [lo](const SparseColumn<typename F::Element>& c) {
        SparseColumn<typename F::Element> out;
        for (const auto& e : c) {
            if (e.row >= lo) out.push_back({e.row - static_cast<std::uint32_t>(lo), e.coeff});
        }
        return out;
    };
    for (const auto& [deg, z] : kills) {
        if (deg == degree) space.insert(localize(z));
    }
    SparseColumn<typename F::Element> generator;
    bool found = false;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q.cell(j).dim != degree || !dec.is_positive(j)) continue;
        if (space.insert(dec.V[j])) {
            if (found) throw AmbiguousGenerator("surrogate value at 0 has rank > 1 in degree " +
                                                std::to_string(degree));
            found = true;
            generator = dec.V[j];
            for (auto& e : generator) e.row += static_cast<std::uint32_t>(lo);  // back to Borel indices
        }
    }
    if (!found) throw DeadAtZero();

    const Extended zero(0);
    for (const auto& level : borel.critical_values()) {
        if (!(level > zero)) continue;
        std::size_t l = borel.prefix_size(level);
        FilteredComplex<F> ql = complex_suffix(borel, l);
        if (detail::chain_dead_in_quotient(borel.field(), ql, l, generator, degree, kills)) return level;
    }
    return Extended::pos_inf();
}

}  // namespace caper
