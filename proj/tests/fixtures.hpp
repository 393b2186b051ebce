// Shared hand-built fixtures for unit and acceptance tests.
#pragma once

#include <string>
#include <vector>

#include "caper/caper.hpp"

namespace fixtures {

using namespace caper;

/// Two vertices born at b0 joined by an edge born at b1.
template <Field F>
FilteredComplex<F> interval(const F& field, const Rational& vertex_birth, const Rational& edge_birth) {
    std::vector<Cell<F>> cells;
    cells.push_back({"a", 0, Extended(vertex_birth), {}});
    cells.push_back({"b", 0, Extended(vertex_birth), {}});
    cells.push_back({"ab", 1, Extended(edge_birth), {{"b", field.one()}, {"a", field.neg(field.one())}}});
    return FilteredComplex<F>(field, std::move(cells));
}

/// Octahedron (bipyramid over a square) filtered by vertex heights:
/// south pole at `south`, equator at `equator`, north pole at `north`.
template <Field F>
FilteredComplex<F> octahedron(const F& field, const Rational& south, const Rational& equator,
                              const Rational& north) {
    auto fixture = symmetric_fixture(field, "bipyramid-sphere", 4);
    VertexFunction<F> f{std::move(fixture.complex), {}};
    f.values["n"] = north;
    f.values["s"] = south;
    for (int i = 0; i < 4; ++i) f.values["v" + std::to_string(i)] = equator;
    return lower_star(f);
}

/// The fundamental 2-cycle of the bipyramid fixtures (upper minus lower faces).
template <Field F>
HomologyClass<F> sphere_fundamental_class(const F& field, const Extended& level, int k = 4) {
    HomologyClass<F> cls;
    cls.level = level;
    cls.degree = 2;
    for (int i = 0; i < k; ++i) {
        cls.chain.emplace_back("t" + std::to_string(i), field.one());
        cls.chain.emplace_back("u" + std::to_string(i), field.neg(field.one()));
    }
    return cls;
}

/// Identity action of order k (useful as the k = 1 degeneration).
template <Field F>
GroupAction<F> identity_action(const FilteredComplex<F>& complex, std::uint64_t k = 1) {
    GroupAction<F> action;
    action.k = k;
    for (std::size_t i = 0; i < complex.size(); ++i) {
        action.generator.emplace(complex.cell(i).id,
                                 std::make_pair(complex.cell(i).id, complex.field().one()));
    }
    return action;
}

/// Solid triangle: three vertices, three edges, one 2-cell, all born at 0.
template <Field F>
FilteredComplex<F> filled_triangle(const F& field) {
    const auto one = field.one();
    const auto minus = field.neg(one);
    std::vector<Cell<F>> cells;
    cells.push_back({"v0", 0, Extended(0), {}});
    cells.push_back({"v1", 0, Extended(0), {}});
    cells.push_back({"v2", 0, Extended(0), {}});
    cells.push_back({"e01", 1, Extended(0), {{"v1", one}, {"v0", minus}}});
    cells.push_back({"e02", 1, Extended(0), {{"v2", one}, {"v0", minus}}});
    cells.push_back({"e12", 1, Extended(0), {{"v2", one}, {"v1", minus}}});
    cells.push_back({"t", 2, Extended(0), {{"e12", one}, {"e02", minus}, {"e01", one}}});
    return FilteredComplex<F>(field, std::move(cells));
}

}  // namespace fixtures
