#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "caper/complex.hpp"
#include "caper/reduction.hpp"

namespace caper {

struct DiagramPoint {
    int degree = 0;
    Extended birth;
    Extended death;

    friend bool operator==(const DiagramPoint& a, const DiagramPoint& b) {
        return a.degree == b.degree && a.birth == b.birth && a.death == b.death;
    }
    friend bool operator<(const DiagramPoint& a, const DiagramPoint& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    }
};

/// Multiset of (degree, birth, death) points, death = +inf for essential
/// classes.  Kept sorted by (degree, birth, death).
struct PersistenceDiagram {
    std::vector<DiagramPoint> points;

    void sort() { std::sort(points.begin(), points.end()); }

    friend bool operator==(const PersistenceDiagram& a, const PersistenceDiagram& b) {
        return a.points == b.points;
    }
};

/// True when a bar [birth, death) is still alive at level t.
inline bool alive_at(const DiagramPoint& pt, const Extended& t) {
    if (pt.birth > t) return false;
    return pt.death > t || (pt.death.is_pos_inf() && t.is_pos_inf());
}

/// Reads the diagram off a reduction: each nonzero column R_j destroys the
/// class created at its low, unpaired creators persist forever.
/// Zero-length points are discarded.
template <Field F>
PersistenceDiagram diagram(const ReducedDecomposition<F>& dec, const FilteredComplex<F>& complex) {
    PersistenceDiagram out;
    for (std::size_t i = 0; i < complex.size(); ++i) {
        if (!dec.is_positive(i)) continue;
        Extended birth = complex.cell(i).birth;
        Extended death = Extended::pos_inf();
        if (dec.destroyer_of[i] >= 0) death = complex.cell(static_cast<std::size_t>(dec.destroyer_of[i])).birth;
        if (birth == death) continue;
        out.points.push_back({complex.cell(i).dim, birth, death});
    }
    out.sort();
    return out;
}

/// Rank of the persistence map H_p(X^s) -> H_p(X^t): the number of points
/// born at or before s and still alive at t.
inline std::size_t persistent_betti(const PersistenceDiagram& dgm, const Extended& s, const Extended& t,
                                    int degree) {
    if (s > t) throw InvalidWindow("s = " + s.str() + " > t = " + t.str());
    std::size_t count = 0;
    for (const auto& pt : dgm.points) {
        if (pt.degree == degree && pt.birth <= s && alive_at(pt, t)) ++count;
    }
    return count;
}

template <Field F>
std::size_t persistent_betti(const ReducedDecomposition<F>& dec, const FilteredComplex<F>& complex,
                             const Extended& s, const Extended& t, int degree) {
    return persistent_betti(diagram(dec, complex), s, t, degree);
}

}  // namespace caper
