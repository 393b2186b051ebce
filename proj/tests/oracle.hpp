// Test-only oracles, independent of the reduction engine: dense Gaussian
// elimination over the same fields, homology and persistent-Betti ranks
// computed straight from boundary matrices, induced-map ranks for long
// exact sequence checks, random fixture generators, and an exhaustive
// bottleneck matcher.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "caper/caper.hpp"

namespace oracle {

using namespace caper;

template <Field F>
struct Dense {
    std::size_t rows = 0, cols = 0;
    std::vector<typename F::Element> a;

    Dense() = default;
    Dense(const F& field, std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, field.zero()) {}

    typename F::Element& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const typename F::Element& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

template <Field F>
Dense<F> hstack(const F& field, const Dense<F>& x, const Dense<F>& y) {
    if (x.rows == 0 && x.cols == 0) return y;
    if (y.rows == 0 && y.cols == 0) return x;
    Dense<F> out(field, std::max(x.rows, y.rows), x.cols + y.cols);
    for (std::size_t r = 0; r < x.rows; ++r) {
        for (std::size_t c = 0; c < x.cols; ++c) out.at(r, c) = x.at(r, c);
    }
    for (std::size_t r = 0; r < y.rows; ++r) {
        for (std::size_t c = 0; c < y.cols; ++c) out.at(r, x.cols + c) = y.at(r, c);
    }
    return out;
}

template <Field F>
std::size_t dense_rank(const F& field, Dense<F> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && field.is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        auto inv = field.inv(m.at(rank, col));
        for (std::size_t c = 0; c < m.cols; ++c) m.at(rank, c) = field.mul(m.at(rank, c), inv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || field.is_zero(m.at(r, col))) continue;
            auto factor = m.at(r, col);
            for (std::size_t c = 0; c < m.cols; ++c) {
                m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(rank, c)));
            }
        }
        ++rank;
    }
    return rank;
}

/// Columns spanning the kernel of m, via reduced row echelon form.
template <Field F>
Dense<F> kernel_basis(const F& field, Dense<F> m) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && field.is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        auto inv = field.inv(m.at(rank, col));
        for (std::size_t c = 0; c < m.cols; ++c) m.at(rank, c) = field.mul(m.at(rank, c), inv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || field.is_zero(m.at(r, col))) continue;
            auto factor = m.at(r, col);
            for (std::size_t c = 0; c < m.cols; ++c) {
                m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(rank, c)));
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(m.cols, 0);
    for (auto c : pivot_col) is_pivot[c] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Dense<F> ker(field, m.cols, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        ker.at(fc, j) = field.one();
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            ker.at(pivot_col[r], j) = field.neg(m.at(r, fc));
        }
    }
    return ker;
}

/// Cells of the window (a, b] in one dimension, as global indices.
template <Field F>
std::vector<std::size_t> window_cells(const FilteredComplex<F>& X, const Extended& a, const Extended& b,
                                      int dim) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (X.cell(i).dim == dim && a < X.cell(i).birth && X.cell(i).birth <= b) out.push_back(i);
    }
    return out;
}

/// Dense boundary matrix of degree p restricted to a window (a, b].
template <Field F>
Dense<F> window_boundary(const FilteredComplex<F>& X, const Extended& a, const Extended& b, int p) {
    const F& field = X.field();
    auto rows = window_cells(X, a, b, p - 1);
    auto cols = window_cells(X, a, b, p);
    std::map<std::size_t, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
    Dense<F> m(field, rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& e : X.boundary(cols[c])) {
            auto it = row_index.find(e.row);
            if (it != row_index.end()) m.at(it->second, c) = e.coeff;
        }
    }
    return m;
}

/// dim H_p of the window (a, b] by rank-nullity on dense matrices.
template <Field F>
std::size_t window_homology_dim(const FilteredComplex<F>& X, const Extended& a, const Extended& b, int p) {
    const F& field = X.field();
    std::size_t cells = window_cells(X, a, b, p).size();
    return cells - dense_rank(field, window_boundary(X, a, b, p)) -
           dense_rank(field, window_boundary(X, a, b, p + 1));
}

/// Dense persistent Betti number: rank of H_p(X^s) -> H_p(X^t) computed as
/// rank [Z_s | B_t] - rank B_t with the cycle space embedded in C_p(X^t).
template <Field F>
std::size_t persistent_betti_dense(const FilteredComplex<F>& X, const Extended& s, const Extended& t, int p) {
    const F& field = X.field();
    auto neg_inf = Extended::neg_inf();
    auto cols_s = window_cells(X, neg_inf, s, p);
    auto cols_t = window_cells(X, neg_inf, t, p);
    // include -inf-born cells: the sublevel complex at s is {birth <= s}
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (X.cell(i).dim == p && X.cell(i).birth.is_neg_inf()) {
            cols_s.push_back(i);
            cols_t.push_back(i);
        }
    }
    std::sort(cols_s.begin(), cols_s.end());
    std::sort(cols_t.begin(), cols_t.end());
    std::map<std::size_t, std::size_t> row_t;
    for (std::size_t r = 0; r < cols_t.size(); ++r) row_t.emplace(cols_t[r], r);

    Dense<F> zs;
    {
        // kernel of d_p on the sublevel complex at s
        auto rows = window_cells(X, neg_inf, s, p - 1);
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (X.cell(i).dim == p - 1 && X.cell(i).birth.is_neg_inf()) rows.push_back(i);
        }
        std::map<std::size_t, std::size_t> row_index;
        for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
        Dense<F> dp(field, rows.size(), cols_s.size());
        for (std::size_t c = 0; c < cols_s.size(); ++c) {
            for (const auto& e : X.boundary(cols_s[c])) dp.at(row_index.at(e.row), c) = e.coeff;
        }
        Dense<F> ker = kernel_basis(field, dp);  // coordinates over cols_s
        zs = Dense<F>(field, cols_t.size(), ker.cols);
        for (std::size_t j = 0; j < ker.cols; ++j) {
            for (std::size_t r = 0; r < cols_s.size(); ++r) {
                zs.at(row_t.at(cols_s[r]), j) = ker.at(r, j);
            }
        }
    }
    Dense<F> bt;
    {
        auto cols_t1 = window_cells(X, neg_inf, t, p + 1);
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (X.cell(i).dim == p + 1 && X.cell(i).birth.is_neg_inf()) cols_t1.push_back(i);
        }
        bt = Dense<F>(field, cols_t.size(), cols_t1.size());
        for (std::size_t c = 0; c < cols_t1.size(); ++c) {
            for (const auto& e : X.boundary(cols_t1[c])) bt.at(row_t.at(e.row), c) = e.coeff;
        }
    }
    return dense_rank(field, hstack(field, zs, bt)) - dense_rank(field, bt);
}

// ------------------------------------------------------------ LES of a triple

/// Ranks of the three maps in the long exact sequence of (X^c, X^b, X^a) at
/// degree p: inclusion f: H_p(b,a) -> H_p(c,a), projection g: H_p(c,a) ->
/// H_p(c,b), connecting d: H_p(c,b) -> H_{p-1}(b,a).
template <Field F>
struct TripleRanks {
    std::size_t f = 0, g = 0, d = 0;
};

template <Field F>
std::size_t induced_rank(const F& field, const Dense<F>& mapped_cycles, const Dense<F>& target_boundaries) {
    return dense_rank(field, hstack(field, mapped_cycles, target_boundaries)) -
           dense_rank(field, target_boundaries);
}

template <Field F>
TripleRanks<F> triple_ranks(const FilteredComplex<F>& X, const Extended& a, const Extended& b,
                            const Extended& c, int p) {
    const F& field = X.field();
    auto index_of = [](const std::vector<std::size_t>& cells) {
        std::map<std::size_t, std::size_t> m;
        for (std::size_t i = 0; i < cells.size(); ++i) m.emplace(cells[i], i);
        return m;
    };
    auto cells_ba = window_cells(X, a, b, p);
    auto cells_ca = window_cells(X, a, c, p);
    auto cells_cb = window_cells(X, b, c, p);
    auto idx_ca = index_of(cells_ca);
    auto idx_cb = index_of(cells_cb);

    TripleRanks<F> out;
    {
        // f: cycles of (b,a] included into (c,a]
        Dense<F> ker = kernel_basis(field, window_boundary(X, a, b, p));
        Dense<F> mapped(field, cells_ca.size(), ker.cols);
        for (std::size_t j = 0; j < ker.cols; ++j) {
            for (std::size_t r = 0; r < cells_ba.size(); ++r) {
                mapped.at(idx_ca.at(cells_ba[r]), j) = ker.at(r, j);
            }
        }
        out.f = induced_rank(field, mapped, window_boundary(X, a, c, p + 1));
    }
    {
        // g: cycles of (c,a] projected to (c,b]
        Dense<F> ker = kernel_basis(field, window_boundary(X, a, c, p));
        Dense<F> mapped(field, cells_cb.size(), ker.cols);
        for (std::size_t j = 0; j < ker.cols; ++j) {
            for (std::size_t r = 0; r < cells_ca.size(); ++r) {
                auto it = idx_cb.find(cells_ca[r]);
                if (it != idx_cb.end()) mapped.at(it->second, j) = ker.at(r, j);
            }
        }
        out.g = induced_rank(field, mapped, window_boundary(X, b, c, p + 1));
    }
    {
        // connecting map: full boundary of a (c,b] relative cycle, restricted
        // to the cells of (a,b]
        auto rows_ba = window_cells(X, a, b, p - 1);
        auto idx_ba = index_of(rows_ba);
        Dense<F> ker = kernel_basis(field, window_boundary(X, b, c, p));
        Dense<F> mapped(field, rows_ba.size(), ker.cols);
        for (std::size_t j = 0; j < ker.cols; ++j) {
            for (std::size_t r = 0; r < cells_cb.size(); ++r) {
                if (field.is_zero(ker.at(r, j))) continue;
                for (const auto& e : X.boundary(cells_cb[r])) {
                    auto it = idx_ba.find(e.row);
                    if (it == idx_ba.end()) continue;
                    mapped.at(it->second, j) =
                        field.add(mapped.at(it->second, j), field.mul(ker.at(r, j), e.coeff));
                }
            }
        }
        out.d = induced_rank(field, mapped, window_boundary(X, a, b, p));
    }
    return out;
}

// ------------------------------------------------------------ random fixtures

struct RandomComplexParams {
    int vertices = 7;
    double edge_p = 0.62, tri_p = 0.7, tet_p = 0.6;
    double bump_p = 0.4;  // chance a cell is born later than its lower-star level
    std::vector<Rational> birth_grid{Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    std::size_t max_cells = 40;
};

/// Random filtered simplicial complex with births on a fixed grid; valid by
/// construction (simplicial boundaries, faces never born later).
template <Field F>
FilteredComplex<F> random_complex(const F& field, std::mt19937& rng, const RandomComplexParams& params) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, params.birth_grid.size() - 1);
    const auto one = field.one();
    const auto minus = field.neg(one);

    auto vid = [](int i) { return "v" + std::to_string(i); };
    auto eid = [](int i, int j) { return "e" + std::to_string(i) + "." + std::to_string(j); };
    auto tid = [](int i, int j, int k) {
        return "t" + std::to_string(i) + "." + std::to_string(j) + "." + std::to_string(k);
    };
    auto qid = [](int i, int j, int k, int l) {
        return "T" + std::to_string(i) + "." + std::to_string(j) + "." + std::to_string(k) + "." +
               std::to_string(l);
    };

    int nv = params.vertices;
    std::map<std::string, Rational> birth;
    std::vector<Cell<F>> cells;
    for (int i = 0; i < nv; ++i) {
        Rational b = params.birth_grid[pick(rng)];
        birth[vid(i)] = b;
        cells.push_back({vid(i), 0, Extended(b), {}});
    }
    auto level = [&](std::initializer_list<std::string> faces) {
        Rational m;
        bool first = true;
        for (const auto& f : faces) {
            if (first || birth.at(f) > m) m = birth.at(f);
            first = false;
        }
        return m;
    };
    auto assign_birth = [&](const std::string& id, const Rational& floor_value) {
        Rational b = floor_value;
        if (coin(rng) < params.bump_p) {
            std::vector<Rational> later;
            for (const auto& g : params.birth_grid) {
                if (g >= floor_value) later.push_back(g);
            }
            if (!later.empty()) b = later[pick(rng) % later.size()];
        }
        birth[id] = b;
        return Extended(b);
    };

    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < nv && cells.size() < params.max_cells; ++i) {
        for (int j = i + 1; j < nv && cells.size() < params.max_cells; ++j) {
            if (coin(rng) >= params.edge_p) continue;
            edges.insert({i, j});
            cells.push_back({eid(i, j), 1, assign_birth(eid(i, j), level({vid(i), vid(j)})),
                             {{vid(j), one}, {vid(i), minus}}});
        }
    }
    std::set<std::tuple<int, int, int>> tris;
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            for (int k = j + 1; k < nv; ++k) {
                if (cells.size() >= params.max_cells) break;
                if (!edges.count({i, j}) || !edges.count({i, k}) || !edges.count({j, k})) continue;
                if (coin(rng) >= params.tri_p) continue;
                tris.insert({i, j, k});
                cells.push_back({tid(i, j, k), 2,
                                 assign_birth(tid(i, j, k), level({eid(i, j), eid(i, k), eid(j, k)})),
                                 {{eid(j, k), one}, {eid(i, k), minus}, {eid(i, j), one}}});
            }
        }
    }
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            for (int k = j + 1; k < nv; ++k) {
                for (int l = k + 1; l < nv; ++l) {
                    if (cells.size() >= params.max_cells) break;
                    if (!tris.count({i, j, k}) || !tris.count({i, j, l}) || !tris.count({i, k, l}) ||
                        !tris.count({j, k, l})) {
                        continue;
                    }
                    if (coin(rng) >= params.tet_p) continue;
                    cells.push_back({qid(i, j, k, l), 3,
                                     assign_birth(qid(i, j, k, l),
                                                  level({tid(i, j, k), tid(i, j, l), tid(i, k, l), tid(j, k, l)})),
                                     {{tid(j, k, l), one},
                                      {tid(i, k, l), minus},
                                      {tid(i, j, l), one},
                                      {tid(i, j, k), minus}}});
                }
            }
        }
    }
    return FilteredComplex<F>(field, std::move(cells));
}

/// Random rational in [lo, hi] with the given denominator.
inline Rational random_rational(std::mt19937& rng, const Rational& lo, const Rational& hi, int denom = 24) {
    std::uniform_int_distribution<long> pick(0, denom);
    return lo + (hi - lo) * Rational(pick(rng), denom);
}

// ------------------------------------------------------- exhaustive matching

inline std::optional<Rational> exhaustive_point_cost(const DiagramPoint& a, const DiagramPoint& b) {
    auto coord = [](const Extended& x, const Extended& y) -> std::optional<Rational> {
        if (x == y) return Rational(0);
        if (!x.finite() || !y.finite()) return std::nullopt;
        Rational d = x.value() - y.value();
        return d < 0 ? Rational(-d) : d;
    };
    auto db = coord(a.birth, b.birth);
    auto dd = coord(a.death, b.death);
    if (!db || !dd) return std::nullopt;
    return std::max(*db, *dd);
}

inline std::optional<Rational> exhaustive_diag_cost(const DiagramPoint& a) {
    if (!a.birth.finite() || !a.death.finite()) return std::nullopt;
    return Rational((a.death.value() - a.birth.value()) / 2);
}

/// Brute-force bottleneck over all partial matchings; nullopt means +inf.
/// Only finite-cost assignments are explored, so any completed matching has
/// a finite max cost.
inline std::optional<Rational> bottleneck_exhaustive(const std::vector<DiagramPoint>& p1,
                                                     const std::vector<DiagramPoint>& p2, int degree) {
    std::vector<DiagramPoint> a, b;
    for (const auto& pt : p1) {
        if (pt.degree == degree) a.push_back(pt);
    }
    for (const auto& pt : p2) {
        if (pt.degree == degree) b.push_back(pt);
    }
    std::optional<Rational> best;
    std::vector<char> used(b.size(), 0);

    std::function<void(std::size_t, Rational)> go = [&](std::size_t i, Rational cost_so_far) {
        if (i == a.size()) {
            Rational total = cost_so_far;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (used[j]) continue;
                auto d = exhaustive_diag_cost(b[j]);
                if (!d) return;  // unmatched essential bar, matching infeasible
                total = std::max(total, *d);
            }
            if (!best || total < *best) best = total;
            return;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            auto c = exhaustive_point_cost(a[i], b[j]);
            if (!c) continue;
            used[j] = 1;
            go(i + 1, std::max(cost_so_far, *c));
            used[j] = 0;
        }
        if (auto d = exhaustive_diag_cost(a[i])) go(i + 1, std::max(cost_so_far, *d));
    };
    go(0, Rational(0));
    return best;
}

}  // namespace oracle
