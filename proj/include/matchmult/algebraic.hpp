#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matchmult/int_poly.hpp"
#include "matchmult/real_roots.hpp"

namespace matchmult {

/// A root theta, held exactly as its minimal polynomial. Everything computed
/// about theta (multiplicities, signs, partitions) is shared by its
/// conjugates. The optional interval picks out one real conjugate for display.
class RootClass {
   public:
    /// Validates that minpoly is monic, non-constant and irreducible.
    explicit RootClass(IntPoly minpoly);

    /// Skips the irreducibility check; for polynomials that come straight
    /// out of factor_irreducible.
    static RootClass trusted(IntPoly minpoly);

    const IntPoly& minpoly() const noexcept { return minpoly_; }
    int degree() const noexcept { return minpoly_.degree(); }
    const std::optional<RealRootInterval>& interval() const noexcept { return interval_; }

    /// Attaches an isolating interval for the largest real conjugate.
    RootClass& with_display_interval();

    /// "x^2 - 3 (~1.73205)"
    std::string describe() const;
    nlohmann::json to_json() const;

    friend bool operator==(const RootClass& a, const RootClass& b) { return a.minpoly_ == b.minpoly_; }

   private:
    struct Trusted {};
    RootClass(IntPoly minpoly, Trusted);

    IntPoly minpoly_;
    std::optional<RealRootInterval> interval_;
};

/// Element of Q(theta) = Q[x] / (minpoly), stored as a reduced rational
/// polynomial in the generator.
class NfElem {
   public:
    using Field = std::shared_ptr<const RootClass>;

    NfElem(Field field, std::vector<Rational> rep);

    static NfElem zero(Field field) { return NfElem(std::move(field), {}); }
    static NfElem constant(Field field, const Rational& c) { return NfElem(std::move(field), {c}); }
    /// The class of x itself, i.e. theta.
    static NfElem generator(Field field);

    const Field& field() const noexcept { return field_; }
    const std::vector<Rational>& rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_.empty(); }

    NfElem& operator+=(const NfElem& rhs);
    NfElem& operator-=(const NfElem& rhs);
    NfElem& operator*=(const NfElem& rhs);
    NfElem& operator/=(const NfElem& rhs);

    NfElem inverse() const;

    friend NfElem operator+(NfElem a, const NfElem& b) { return a += b; }
    friend NfElem operator-(NfElem a, const NfElem& b) { return a -= b; }
    friend NfElem operator*(NfElem a, const NfElem& b) { return a *= b; }
    friend NfElem operator/(NfElem a, const NfElem& b) { return a /= b; }
    NfElem operator-() const;

    /// Same field (by minimal polynomial) and same representative.
    friend bool operator==(const NfElem& a, const NfElem& b);

    /// e.g. "1/2*t + 1/2", with t standing for theta.
    std::string to_string() const;
    nlohmann::json to_json() const;

   private:
    void check_same_field(const NfElem& other) const;
    void reduce();

    Field field_;
    std::vector<Rational> rep_;
};

NfElem nf_div(const NfElem& a, const NfElem& b);

using NfMatrix = std::vector<std::vector<NfElem>>;
using NfVector = std::vector<NfElem>;

/// Null-space basis of a square matrix by Gauss-Jordan elimination over
/// Q(theta). Each basis vector is scaled so its first nonzero entry is 1.
/// Empty iff the matrix is nonsingular. The field is taken from the entries;
/// the 0x0 matrix has an empty basis.
std::vector<NfVector> kernel_basis(const NfMatrix& m);

}  // namespace matchmult
