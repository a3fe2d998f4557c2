#pragma once

#include <vector>

#include "matchmult/int_poly.hpp"

namespace matchmult {

/// Closed interval [lo, hi] holding exactly one distinct real root. lo == hi
/// means the root is the rational lo itself.
struct RealRootInterval {
    Rational lo;
    Rational hi;
    unsigned multiplicity = 1;

    double midpoint() const { return Rational((lo + hi) / 2).get_d(); }
};

/// Sturm chain of a square-free polynomial.
class SturmSequence {
   public:
    explicit SturmSequence(const IntPoly& squarefree);

    /// Sign variations at a point that is not a root of the chain head.
    int variations(const Rational& at) const;
    /// Number of distinct roots in the half-open interval (lo, hi].
    int count(const Rational& lo, const Rational& hi) const;

   private:
    std::vector<IntPoly> chain_;
};

/// Strict upper bound on the absolute value of every complex root.
Rational root_bound(const IntPoly& p);

/// Sorted, pairwise disjoint isolating intervals for the distinct real roots,
/// each refined to width at most `max_width`; multiplicities come from the
/// square-free decomposition.
std::vector<RealRootInterval> isolate_real_roots(const IntPoly& p, const Rational& max_width = Rational(1, 1024));

}  // namespace matchmult
