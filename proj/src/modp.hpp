#pragma once

// Polynomials over a word-size prime field. Internal to the factoriser.

#include <cstdint>
#include <random>
#include <vector>

#include "matchmult/int_poly.hpp"

namespace matchmult::detail {

using PolyP = std::vector<std::uint64_t>;  // low to high, no trailing zeros

class PrimeField {
   public:
    explicit PrimeField(std::uint64_t p) : p_(p) {}

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t inv(std::uint64_t a) const noexcept;

    PolyP reduce(const IntPoly& f) const;
    IntPoly lift(const PolyP& f) const;  // coefficients in [0, p)

    PolyP add(const PolyP& a, const PolyP& b) const;
    PolyP sub(const PolyP& a, const PolyP& b) const;
    PolyP mul(const PolyP& a, const PolyP& b) const;
    PolyP scale(const PolyP& a, std::uint64_t s) const;
    void divmod(const PolyP& a, const PolyP& b, PolyP& q, PolyP& r) const;
    PolyP mod(const PolyP& a, const PolyP& b) const;
    PolyP monic(const PolyP& a) const;
    PolyP gcd(PolyP a, PolyP b) const;  // monic
    /// Returns monic g with s*a + t*b = g.
    PolyP ext_gcd(const PolyP& a, const PolyP& b, PolyP& s, PolyP& t) const;
    PolyP derivative(const PolyP& a) const;
    PolyP powmod(const PolyP& base, const Integer& e, const PolyP& modulus) const;

    /// Monic irreducible factors of a monic square-free f, sorted.
    std::vector<PolyP> factor_squarefree(const PolyP& f) const;

   private:
    void equal_degree(const PolyP& f, int d, std::mt19937_64& rng, std::vector<PolyP>& out) const;

    std::uint64_t p_;
};

void trim(PolyP& a);
inline int degree(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

}  // namespace matchmult::detail
