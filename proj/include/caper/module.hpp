#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "caper/complex.hpp"
#include "caper/diagram.hpp"
#include "caper/homology_class.hpp"
#include "caper/reduction.hpp"

namespace caper {

/// Classes to quotient out of the module value just below threshold 0.
template <Field F>
struct SurrogateSpec {
    std::vector<HomologyClass<F>> kill;
};

/// Dimension of H_p of the window (a, b]: the relative homology of the pair
/// of sublevel complexes at b and a.
template <Field F>
std::size_t windowed_homology(const FilteredComplex<F>& complex, const Extended& a, const Extended& b,
                              int degree) {
    FilteredComplex<F> q = complex.relative_complex(a, b);
    std::size_t cells_p = 0;
    std::vector<SparseColumn<typename F::Element>> d_p, d_p1;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q.cell(i).dim == degree) {
            ++cells_p;
            d_p.push_back(q.boundary(i));
        } else if (q.cell(i).dim == degree + 1) {
            d_p1.push_back(q.boundary(i));
        }
    }
    return cells_p - column_rank(q.field(), d_p) - column_rank(q.field(), d_p1);
}

/// The persistence module a -> H_p(X, X^a) of relative homology with maps
/// induced by inclusion of pairs, optionally with the value at threshold 0
/// replaced by the quotient of the value just below 0 by designated
/// classes.  Exposes the rank function (s, t, p) -> rank v_s^t.
///
/// The evaluator works on the quotient complexes Q_a = C(X)/C(X^a): rank
/// v_s^t is the dimension of the image of the cycle space of Q_s inside
/// H_p(Q_t), obtained by eliminating pushed cycles against the boundary
/// space of Q_t (plus the pushed kill classes when an endpoint sits at the
/// surrogate threshold).
template <Field F>
class RelativeModule {
public:
    using Elem = typename F::Element;
    using Column = SparseColumn<Elem>;

    explicit RelativeModule(const FilteredComplex<F>& complex,
                            std::optional<SurrogateSpec<F>> spec = std::nullopt,
                            std::optional<Extended> eps_level = std::nullopt)
        : X_(&complex) {
        if (spec) {
            if (eps_level) {
                check_epsilon_level(complex, *eps_level);
                eps_level_ = *eps_level;
            } else {
                eps_level_ = choose_epsilon_level(complex);
            }
            for (const auto& cls : spec->kill) {
                Column z = bind_chain(complex, cls);
                if (!chain_boundary(complex, z).empty()) {
                    throw NotACycle("kill class chain has nonzero boundary");
                }
                kill_.emplace_back(cls.degree, std::move(z));
            }
            // each kill class must be nontrivial in the module value just below 0
            std::size_t lo = complex.prefix_size(*eps_level_);
            for (const auto& [deg, z] : kill_) {
                ColumnSpace<F> space(complex.field());
                for (const auto& b : boundaries(lo, deg)) space.insert(b);
                if (space.contains(push(z, lo))) {
                    throw TrivialClass("kill class is trivial just below threshold 0");
                }
            }
        }
    }

    RelativeModule(const RelativeModule&) = delete;
    RelativeModule& operator=(const RelativeModule&) = delete;

    const FilteredComplex<F>& complex() const { return *X_; }
    const std::vector<Extended>& critical_values() const { return X_->critical_values(); }
    bool surrogate() const { return eps_level_.has_value(); }

    /// The resolved level -epsilon standing in for threshold 0.
    const Extended& epsilon_level() const {
        if (!eps_level_) throw BadParameter("module has no surrogate threshold");
        return *eps_level_;
    }

    /// Midpoint of the gap between the largest negative critical value and 0
    /// (-1 when no negative critical value exists).
    static Extended choose_epsilon_level(const FilteredComplex<F>& complex) {
        Extended zero(0);
        Extended level(Rational(-1));
        for (const auto& c : complex.critical_values()) {
            if (c < zero) level = Extended(Rational(c.value() / 2));
        }
        check_epsilon_level(complex, level);
        return level;
    }

    /// A level stands in for 0^- only when it lies strictly between the
    /// largest negative critical value and 0.
    static void check_epsilon_level(const FilteredComplex<F>& complex, const Extended& level) {
        if (!level.finite() || !(level < Extended(0))) throw EpsilonCollision();
        for (const auto& c : complex.critical_values()) {
            if (level < c && c < Extended(0)) throw EpsilonCollision();
        }
    }

    /// rank of v_s^t in the given degree, s <= t.
    std::size_t rank(const Extended& s, const Extended& t, int degree) const {
        if (s > t) throw InvalidWindow("s = " + s.str() + " > t = " + t.str());
        const Extended zero(0);
        bool s_pivot = surrogate() && s == zero;
        bool t_pivot = surrogate() && t == zero;
        std::size_t lo_s = X_->prefix_size(s_pivot ? *eps_level_ : s);
        std::size_t lo_t = X_->prefix_size(t_pivot ? *eps_level_ : t);

        std::lock_guard<std::mutex> hold(lock_);
        ColumnSpace<F> space(X_->field());
        for (const auto& b : boundaries(lo_t, degree)) space.insert(b);
        if (s_pivot || t_pivot) {
            for (const auto& [deg, z] : kill_) {
                if (deg == degree) space.insert(push(z, lo_t));
            }
        }
        std::size_t base = space.rank();
        for (const auto& z : cycles(lo_s, degree)) space.insert(push_between(z, lo_s, lo_t));
        return space.rank() - base;
    }

    std::size_t dim(const Extended& a, int degree) const { return rank(a, a, degree); }

private:
    // Q_lo = cells [lo, n) with earlier faces dropped, in global birth order.
    const FilteredComplex<F>& quotient(std::size_t lo) const {
        auto it = q_cache_.find(lo);
        if (it == q_cache_.end()) it = q_cache_.emplace(lo, complex_suffix(*X_, lo)).first;
        return it->second;
    }

    const ReducedDecomposition<F>& reduction(std::size_t lo) const {
        auto it = r_cache_.find(lo);
        if (it == r_cache_.end()) it = r_cache_.emplace(lo, reduce(quotient(lo))).first;
        return it->second;
    }

    // cycle basis of Q_lo in the degree, as columns over global indices
    std::vector<Column> cycles(std::size_t lo, int degree) const {
        const auto& q = quotient(lo);
        const auto& dec = reduction(lo);
        std::vector<Column> out;
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (q.cell(j).dim != degree || !dec.is_positive(j)) continue;
            out.push_back(globalize(dec.V[j], lo));
        }
        return out;
    }

    // boundary space basis of Q_lo in the degree, over global indices
    std::vector<Column> boundaries(std::size_t lo, int degree) const {
        const auto& q = quotient(lo);
        const auto& dec = reduction(lo);
        std::vector<Column> out;
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (q.cell(j).dim != degree + 1 || dec.is_positive(j)) continue;
            out.push_back(globalize(dec.R[j], lo));
        }
        return out;
    }

    static Column globalize(Column c, std::size_t lo) {
        for (auto& e : c) e.row += static_cast<std::uint32_t>(lo);
        return c;
    }

    // image of a global chain in Q_lo: entries below lo vanish
    static Column push(const Column& c, std::size_t lo) {
        Column out;
        for (const auto& e : c) {
            if (e.row >= lo) out.push_back(e);
        }
        return out;
    }

    static Column push_between(const Column& c, std::size_t lo_s, std::size_t lo_t) {
        return lo_t <= lo_s ? c : push(c, lo_t);
    }

    const FilteredComplex<F>* X_;
    std::optional<Extended> eps_level_;
    std::vector<std::pair<int, Column>> kill_;
    mutable std::mutex lock_;
    mutable std::map<std::size_t, FilteredComplex<F>> q_cache_;
    mutable std::map<std::size_t, ReducedDecomposition<F>> r_cache_;
};

namespace detail {

/// True when the chain's class survives in Q_lo modulo boundaries and the
/// pushed kill classes of the same degree.
template <Field F>
bool chain_dead_in_quotient(const F& field, const FilteredComplex<F>& q, std::size_t lo,
                            const SparseColumn<typename F::Element>& global_chain, int degree,
                            const std::vector<std::pair<int, SparseColumn<typename F::Element>>>& kills) {
    ColumnSpace<F> space(field);
    auto localize = [lo](const SparseColumn<typename F::Element>& c) {
        SparseColumn<typename F::Element> out;
        for (const auto& e : c) {
            if (e.row >= lo) out.push_back({e.row - static_cast<std::uint32_t>(lo), e.coeff});
        }
        return out;
    };
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q.cell(j).dim == degree + 1 && !q.boundary(j).empty()) space.insert(q.boundary(j));
    }
    // boundaries of Q are spanned by reduced columns; raw columns span the same space
    for (const auto& [deg, z] : kills) {
        if (deg == degree) space.insert(localize(z));
    }
    return space.contains(localize(global_chain));
}

}  // namespace detail

/// Persistence of the image of mu at threshold 0 in the surrogate relative
/// module: sup of the levels b > 0 where the pushed class stays nonzero.
/// Throws DeadAtZero when the image at 0 already vanishes.
template <Field F>
Extended capacity(const FilteredComplex<F>& complex, const HomologyClass<F>& mu, int degree,
                  const SurrogateSpec<F>& spec) {
    if (mu.degree != degree) {
        throw BadParameter("class degree " + std::to_string(mu.degree) + " does not match requested degree " +
                           std::to_string(degree));
    }
    const F& field = complex.field();
    auto z = bind_chain(complex, mu);
    if (!chain_boundary(complex, z).empty()) throw NotACycle("class chain has nonzero boundary");

    RelativeModule<F> module(complex, spec);
    std::vector<std::pair<int, SparseColumn<typename F::Element>>> kills;
    for (const auto& cls : spec.kill) kills.emplace_back(cls.degree, bind_chain(complex, cls));

    const Extended zero(0);
    std::size_t lo_eps = complex.prefix_size(module.epsilon_level());
    {
        auto q = complex_suffix(complex, lo_eps);
        if (detail::chain_dead_in_quotient(field, q, lo_eps, z, degree, kills)) throw DeadAtZero();
    }
    // scan the critical values above 0 for the destroyer; with none the
    // class is never killed and the capacity is unbounded
    for (const auto& level : complex.critical_values()) {
        if (!(level > zero)) continue;
        std::size_t lo = complex.prefix_size(level);
        auto q = complex_suffix(complex, lo);
        if (detail::chain_dead_in_quotient(field, q, lo, z, degree, kills)) return level;
    }
    return Extended::pos_inf();
}

}  // namespace caper
