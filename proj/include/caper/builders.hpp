#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "caper/borel.hpp"
#include "caper/complex.hpp"

namespace caper {

/// A sampled function on the vertices of an unfiltered base complex.
template <Field F>
struct VertexFunction {
    FilteredComplex<F> base;
    std::map<std::string, Rational> values;
};

/// Lower-star filtration: each cell is born at the maximum value over its
/// vertices.  Vertex sets are collected through the raw face lists, so
/// cells whose boundary coefficients cancel still resolve their vertices.
template <Field F>
FilteredComplex<F> lower_star(const VertexFunction<F>& f) {
    const auto& base = f.base;
    std::vector<std::set<std::string>> vertex_sets(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        const auto& cell = base.cell(i);
        if (cell.dim == 0) {
            vertex_sets[i].insert(cell.id);
            continue;
        }
        for (const auto& [fid, coeff] : cell.faces) {
            auto idx = base.index_of(fid);
            if (!idx) throw BadParameter("cell '" + cell.id + "' references unknown face '" + fid + "'");
            vertex_sets[i].insert(vertex_sets[*idx].begin(), vertex_sets[*idx].end());
        }
        if (vertex_sets[i].empty()) {
            throw MissingValue("cannot resolve the vertices of cell '" + cell.id + "'");
        }
    }
    std::vector<Cell<F>> cells;
    cells.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        Cell<F> cell = base.cell(i);
        bool first = true;
        Rational birth;
        for (const auto& v : vertex_sets[i]) {
            auto it = f.values.find(v);
            if (it == f.values.end()) throw MissingValue("vertex '" + v + "' has no function value");
            if (first || it->second > birth) birth = it->second;
            first = false;
        }
        cell.birth = Extended(birth);
        cells.push_back(std::move(cell));
    }
    return FilteredComplex<F>(base.field(), std::move(cells));
}

/// Cubical complex of a rectangular sample grid with lower-star births:
/// vertices at samples, edges between neighbors, squares on each 2x2 block.
template <Field F>
FilteredComplex<F> grid_sublevel(const F& field, const std::vector<std::vector<Rational>>& samples) {
    if (samples.empty() || samples[0].empty()) throw EmptyGrid();
    const std::size_t rows = samples.size(), cols = samples[0].size();
    for (const auto& r : samples) {
        if (r.size() != cols) throw BadParameter("grid is not rectangular");
    }
    auto vid = [](std::size_t i, std::size_t j) { return "v" + std::to_string(i) + "." + std::to_string(j); };
    auto hid = [](std::size_t i, std::size_t j) { return "h" + std::to_string(i) + "." + std::to_string(j); };
    auto wid = [](std::size_t i, std::size_t j) { return "w" + std::to_string(i) + "." + std::to_string(j); };
    auto qid = [](std::size_t i, std::size_t j) { return "q" + std::to_string(i) + "." + std::to_string(j); };

    const auto one = field.one();
    const auto minus = field.neg(one);
    std::vector<Cell<F>> cells;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            cells.push_back({vid(i, j), 0, Extended(samples[i][j]), {}});
        }
    }
    auto vmax = [&](std::initializer_list<Rational> vals) {
        Rational m;
        bool first = true;
        for (const auto& v : vals) {
            if (first || v > m) m = v;
            first = false;
        }
        return Extended(m);
    };
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            cells.push_back({hid(i, j), 1, vmax({samples[i][j], samples[i][j + 1]}),
                             {{vid(i, j + 1), one}, {vid(i, j), minus}}});
        }
    }
    for (std::size_t i = 0; i + 1 < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            cells.push_back({wid(i, j), 1, vmax({samples[i][j], samples[i + 1][j]}),
                             {{vid(i + 1, j), one}, {vid(i, j), minus}}});
        }
    }
    for (std::size_t i = 0; i + 1 < rows; ++i) {
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            cells.push_back({qid(i, j), 2,
                             vmax({samples[i][j], samples[i][j + 1], samples[i + 1][j], samples[i + 1][j + 1]}),
                             {{hid(i, j), one},
                              {wid(i, j + 1), one},
                              {hid(i + 1, j), minus},
                              {wid(i, j), minus}}});
        }
    }
    return FilteredComplex<F>(field, std::move(cells));
}

template <Field F>
struct SymmetricFixture {
    FilteredComplex<F> complex;
    GroupAction<F> action;
};

/// Canonical fixtures carrying a rotation action of order k, all births 0:
///   point            — one vertex, identity generator;
///   polygon-circle   — an (m*k)-gon with rotation by m vertices (free);
///   bipyramid-sphere — a k-gon equator with two poles; the rotation fixes
///                      exactly the poles.
template <Field F>
SymmetricFixture<F> symmetric_fixture(const F& field, const std::string& name, std::uint64_t k,
                                      std::uint64_t m = 1) {
    if (k < 1) throw BadParameter("fixture requires k >= 1");
    const auto one = field.one();
    const auto minus = field.neg(one);
    const Extended zero(0);

    if (name == "point") {
        std::vector<Cell<F>> cells{{"v0", 0, zero, {}}};
        GroupAction<F> action;
        action.k = k;
        action.generator.emplace("v0", std::make_pair(std::string("v0"), one));
        return {FilteredComplex<F>(field, std::move(cells)), std::move(action)};
    }

    if (name == "polygon-circle") {
        if (m < 1) throw BadParameter("polygon-circle requires m >= 1");
        const std::uint64_t n = m * k;
        auto v = [](std::uint64_t i) { return "v" + std::to_string(i); };
        auto e = [](std::uint64_t i) { return "e" + std::to_string(i); };
        std::vector<Cell<F>> cells;
        for (std::uint64_t i = 0; i < n; ++i) cells.push_back({v(i), 0, zero, {}});
        for (std::uint64_t i = 0; i < n; ++i) {
            cells.push_back({e(i), 1, zero, {{v((i + 1) % n), one}, {v(i), minus}}});
        }
        GroupAction<F> action;
        action.k = k;
        for (std::uint64_t i = 0; i < n; ++i) {
            action.generator.emplace(v(i), std::make_pair(v((i + m) % n), one));
            action.generator.emplace(e(i), std::make_pair(e((i + m) % n), one));
        }
        return {FilteredComplex<F>(field, std::move(cells)), std::move(action)};
    }

    if (name == "bipyramid-sphere") {
        auto v = [](std::uint64_t i) { return "v" + std::to_string(i); };
        auto e = [](std::uint64_t i) { return "e" + std::to_string(i); };
        auto a = [](std::uint64_t i) { return "a" + std::to_string(i); };  // pole n spokes
        auto b = [](std::uint64_t i) { return "b" + std::to_string(i); };  // pole s spokes
        auto t = [](std::uint64_t i) { return "t" + std::to_string(i); };  // upper faces
        auto u = [](std::uint64_t i) { return "u" + std::to_string(i); };  // lower faces
        std::vector<Cell<F>> cells;
        cells.push_back({"n", 0, zero, {}});
        cells.push_back({"s", 0, zero, {}});
        for (std::uint64_t i = 0; i < k; ++i) cells.push_back({v(i), 0, zero, {}});
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t j = (i + 1) % k;
            cells.push_back({e(i), 1, zero, {{v(j), one}, {v(i), minus}}});
            cells.push_back({a(i), 1, zero, {{v(i), one}, {"n", minus}}});
            cells.push_back({b(i), 1, zero, {{v(i), one}, {"s", minus}}});
        }
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t j = (i + 1) % k;
            cells.push_back({t(i), 2, zero, {{e(i), one}, {a(j), minus}, {a(i), one}}});
            cells.push_back({u(i), 2, zero, {{e(i), one}, {b(j), minus}, {b(i), one}}});
        }
        GroupAction<F> action;
        action.k = k;
        action.generator.emplace("n", std::make_pair(std::string("n"), one));
        action.generator.emplace("s", std::make_pair(std::string("s"), one));
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t j = (i + 1) % k;
            action.generator.emplace(v(i), std::make_pair(v(j), one));
            action.generator.emplace(e(i), std::make_pair(e(j), one));
            action.generator.emplace(a(i), std::make_pair(a(j), one));
            action.generator.emplace(b(i), std::make_pair(b(j), one));
            action.generator.emplace(t(i), std::make_pair(t(j), one));
            action.generator.emplace(u(i), std::make_pair(u(j), one));
        }
        return {FilteredComplex<F>(field, std::move(cells)), std::move(action)};
    }

    throw BadParameter("unknown fixture '" + name + "'");
}

}  // namespace caper
