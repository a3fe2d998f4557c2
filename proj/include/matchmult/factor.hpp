#pragma once

#include <utility>
#include <vector>

#include "matchmult/int_poly.hpp"

namespace matchmult {

struct PolyPower {
    IntPoly base;
    unsigned exponent = 0;

    friend bool operator==(const PolyPower&, const PolyPower&) = default;
};

/// p = unit * prod(base^exponent). Bases are primitive, irreducible over Q,
/// pairwise distinct and have positive leading coefficient, so a monic p
/// yields monic bases and unit = 1. For non-primitive input the content is
/// folded into unit.
struct FactoredPoly {
    Integer unit = 1;
    std::vector<PolyPower> factors;

    IntPoly expand() const;
};

/// Yun square-free decomposition of the primitive part of p. Parts come back
/// in canonical factor order, each square-free, pairwise coprime, and
/// prod(part^mult) equals p up to an integer constant.
std::vector<PolyPower> squarefree_decompose(const IntPoly& p);

/// Square-free irreducible factorisation over Q by modular factorisation,
/// Hensel lifting and Zassenhaus recombination.
FactoredPoly factor_irreducible(const IntPoly& p);

/// Irreducible factors of a primitive, square-free polynomial with positive
/// leading coefficient, in canonical order.
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f);

/// Largest k with f^k | p. f must be monic, non-constant and square-free.
unsigned root_multiplicity(const IntPoly& p, const IntPoly& f);

bool is_squarefree(const IntPoly& p);

}  // namespace matchmult
