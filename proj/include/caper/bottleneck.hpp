#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "caper/diagram.hpp"
#include "caper/rational.hpp"

namespace caper {

namespace detail {

/// Sup-norm distance between diagram points; nullopt when infinite.
/// Points with infinite death match only points with infinite death.
inline std::optional<Rational> point_cost(const DiagramPoint& a, const DiagramPoint& b) {
    auto coord = [](const Extended& x, const Extended& y) -> std::optional<Rational> {
        if (x == y) return Rational(0);  // covers equal infinities
        if (!x.finite() || !y.finite()) return std::nullopt;
        Rational d = x.value() - y.value();
        return d < 0 ? Rational(-d) : d;
    };
    auto db = coord(a.birth, b.birth);
    auto dd = coord(a.death, b.death);
    if (!db || !dd) return std::nullopt;
    return std::max(*db, *dd);
}

/// Distance to the diagonal (half lifespan); nullopt for essential bars.
inline std::optional<Rational> diagonal_cost(const DiagramPoint& a) {
    if (!a.birth.finite() || !a.death.finite()) return std::nullopt;
    return Rational((a.death.value() - a.birth.value()) / 2);
}

inline bool le(const std::optional<Rational>& cost, const Rational& r) { return cost && *cost <= r; }

}  // namespace detail

/// Exact bottleneck distance between the degree-p layers of two diagrams.
///
/// The optimum is always realized at a pairwise point distance or a half
/// lifespan, so those are enumerated as candidate thresholds and the
/// smallest feasible one is found by binary search.  Feasibility at r is a
/// perfect-matching test on the classic bipartite graph where each diagram
/// is padded with one diagonal slot per point of the other side.
inline Extended bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int degree) {
    using detail::diagonal_cost;
    using detail::le;
    using detail::point_cost;

    std::vector<DiagramPoint> p1, p2;
    for (const auto& pt : d1.points) {
        if (pt.degree == degree) p1.push_back(pt);
    }
    for (const auto& pt : d2.points) {
        if (pt.degree == degree) p2.push_back(pt);
    }
    const std::size_t n1 = p1.size(), n2 = p2.size(), n = n1 + n2;
    if (n == 0) return Extended(0);

    std::vector<Rational> candidates{Rational(0)};
    for (const auto& a : p1) {
        for (const auto& b : p2) {
            if (auto c = point_cost(a, b)) candidates.push_back(*c);
        }
    }
    for (const auto& a : p1) {
        if (auto c = diagonal_cost(a)) candidates.push_back(*c);
    }
    for (const auto& b : p2) {
        if (auto c = diagonal_cost(b)) candidates.push_back(*c);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Left vertices: p1 points then diagonal slots of p2.
    // Right vertices: p2 points then diagonal slots of p1.
    auto edge = [&](std::size_t u, std::size_t v, const Rational& r) -> bool {
        bool u_point = u < n1, v_point = v < n2;
        if (u_point && v_point) return le(point_cost(p1[u], p2[v]), r);
        if (u_point && !v_point) return v - n2 == u && le(diagonal_cost(p1[u]), r);
        if (!u_point && v_point) return u - n1 == v && le(diagonal_cost(p2[v]), r);
        return true;  // diagonal to diagonal
    };

    auto feasible = [&](const Rational& r) -> bool {
        std::vector<std::int64_t> match_right(n, -1), match_left(n, -1);
        std::vector<char> visited(n, 0);
        std::function<bool(std::size_t)> augment = [&](std::size_t u) -> bool {
            for (std::size_t v = 0; v < n; ++v) {
                if (visited[v] || !edge(u, v, r)) continue;
                visited[v] = 1;
                if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
                    match_right[v] = static_cast<std::int64_t>(u);
                    match_left[u] = static_cast<std::int64_t>(v);
                    return true;
                }
            }
            return false;
        };
        std::size_t matched = 0;
        for (std::size_t u = 0; u < n; ++u) {
            std::fill(visited.begin(), visited.end(), 0);
            if (augment(u)) ++matched;
        }
        return matched == n;
    };

    std::size_t lo = 0, hi = candidates.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if (lo == candidates.size()) return Extended::pos_inf();
    return Extended(candidates[lo]);
}

}  // namespace caper
