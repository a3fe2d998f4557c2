#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace matchmult {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over the integers. Coefficient i multiplies
/// x^i. The stored vector never ends in a zero, so the zero polynomial is the
/// empty vector and has degree -1.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t k);
    static IntPoly x() { return monomial(1, 1); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !is_zero() && coeffs_.back() == 1; }

    /// Coefficient of x^i; zero beyond the degree.
    const Integer& operator[](std::size_t i) const noexcept;
    const Integer& leading() const noexcept;
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& s);

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

   private:
    void trim();

    std::vector<Integer> coeffs_;
};

IntPoly operator+(IntPoly lhs, const IntPoly& rhs);
IntPoly operator-(IntPoly lhs, const IntPoly& rhs);
IntPoly operator-(const IntPoly& p);
IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
IntPoly operator*(IntPoly lhs, const Integer& s);

/// Canonical factor order: degree first, then coefficients compared from the
/// constant term upward.
std::strong_ordering canonical_compare(const IntPoly& a, const IntPoly& b);

IntPoly derivative(const IntPoly& p);
IntPoly pow(const IntPoly& p, unsigned e);

/// Non-negative gcd of the coefficients; zero for the zero polynomial.
Integer content(const IntPoly& p);
/// p / content(p), normalised to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

struct PolyDivision {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division by a divisor with leading coefficient +-1; stays in Z[x].
PolyDivision divmod_monic(const IntPoly& a, const IntPoly& b);
/// Exact quotient a / b in Z[x], or nullopt when b does not divide a there.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient via the subresultant PRS.
/// gcd(0, 0) is the zero polynomial.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

Rational evaluate(const IntPoly& p, const Rational& at);
/// Sign of p(at) computed without leaving the integers.
int sign_at(const IntPoly& p, const Rational& at);

/// Human form, highest power first, e.g. "x^7 - 6*x^5 + 10*x^3 - 4*x".
std::string to_string(const IntPoly& p);
/// Accepts the text form above or a dense JSON array "[c0, c1, ...]".
IntPoly parse_poly(std::string_view text);

nlohmann::json to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

}  // namespace matchmult
