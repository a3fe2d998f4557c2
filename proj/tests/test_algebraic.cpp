#include <memory>
#include <random>

#include "doctest.h"
#include "matchmult/algebraic.hpp"
#include "matchmult/errors.hpp"
#include "matchmult/real_roots.hpp"

using namespace matchmult;

namespace {

NfElem::Field field_of(std::initializer_list<long> minpoly) {
    return std::make_shared<const RootClass>(IntPoly(minpoly));
}

NfElem elem(const NfElem::Field& f, std::vector<Rational> rep) { return NfElem(f, std::move(rep)); }

}  // namespace

TEST_CASE("RootClass validation") {
    CHECK_NOTHROW(RootClass(IntPoly{-3, 0, 1}));
    CHECK_THROWS_AS(RootClass(IntPoly{-1, 0, 1}), Error);  // reducible
    CHECK_THROWS_AS(RootClass(IntPoly{-3, 0, 2}), Error);  // not monic
    CHECK_THROWS_AS(RootClass(IntPoly{4}), Error);
    RootClass r(IntPoly{-3, 0, 1});
    r.with_display_interval();
    REQUIRE(r.interval().has_value());
    const auto& iv = *r.interval();
    CHECK(iv.lo * iv.lo <= 3);
    CHECK(iv.hi * iv.hi >= 3);
    CHECK(iv.lo > 0);
    CHECK(iv.hi - iv.lo <= Rational(1, 1000000));
}

TEST_CASE("nf_div examples modulo x^2 - 3") {
    const auto f = field_of({-3, 0, 1});
    const NfElem one = NfElem::constant(f, 1);
    const NfElem t = NfElem::generator(f);
    CHECK(nf_div(one, t) == elem(f, {0, Rational(1, 3)}));
    CHECK(nf_div(one, NfElem::constant(f, 2)) == elem(f, {Rational(1, 2)}));
    CHECK(nf_div(one, t - one) == elem(f, {Rational(1, 2), Rational(1, 2)}));
    CHECK_THROWS_AS(nf_div(one, NfElem::zero(f)), Error);
    const auto other = field_of({-2, 0, 1});
    try {
        (void)nf_div(one, NfElem::generator(other));
        FAIL("expected ModulusMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ModulusMismatch);
    }
}

TEST_CASE("generator satisfies its minimal polynomial") {
    const auto f = field_of({2, 0, -4, 0, 1});
    const NfElem t = NfElem::generator(f);
    const NfElem t2 = t * t;
    CHECK((t2 * t2 - NfElem::constant(f, 4) * t2 + NfElem::constant(f, 2)).is_zero());
}

TEST_CASE("division inverts multiplication for random elements") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 7);
    for (auto minpoly : {IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}, IntPoly{2, 0, -4, 0, 1}}) {
        const auto f = std::make_shared<const RootClass>(minpoly);
        const std::size_t d = static_cast<std::size_t>(minpoly.degree());
        int done = 0;
        while (done < 100) {
            std::vector<Rational> ra(d), rb(d);
            for (auto& c : ra) c = Rational(num(rng), den(rng));
            for (auto& c : rb) c = Rational(num(rng), den(rng));
            const NfElem a = elem(f, ra), b = elem(f, rb);
            if (a.is_zero() || b.is_zero()) continue;
            CHECK(nf_div(a * b, b) == a);
            CHECK((b * b.inverse()) == NfElem::constant(f, 1));
            ++done;
        }
    }
}

TEST_CASE("kernel_basis examples") {
    const auto f = field_of({-1, 1});  // theta = 1, field Q
    const NfElem z = NfElem::zero(f), one = NfElem::constant(f, 1);
    CHECK(kernel_basis({{one, z}, {z, one}}).empty());
    CHECK(kernel_basis({{z, z}, {z, z}}).size() == 2);
    CHECK(kernel_basis({}).empty());
    CHECK_THROWS_AS(kernel_basis({{one, z}, {z}}), Error);

    // The adjacency of P2 minus theta*I; the spec's modulus x^2 - 1 is
    // reducible, so both of its roots are exercised through Q(theta) = Q.
    for (long theta : {1L, -1L}) {
        const auto g = field_of({-theta, 1});
        const NfElem t = NfElem::generator(g), o = NfElem::constant(g, 1);
        auto basis = kernel_basis({{-t, o}, {o, -t}});
        REQUIRE(basis.size() == 1);
        CHECK(basis[0][0] == o);
        CHECK(basis[0][1] == t);
    }
}

TEST_CASE("kernel vectors annihilate random singular matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-3, 3);
    const auto f = field_of({-3, 0, 1});
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        NfMatrix m(n, NfVector(n, NfElem::zero(f)));
        for (std::size_t r = 0; r + 1 < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m[r][c] = elem(f, {num(rng), num(rng)});
        // last row = t * row0 + row1 makes the matrix singular
        for (std::size_t c = 0; c < n; ++c) m[n - 1][c] = NfElem::generator(f) * m[0][c] + (n > 2 ? m[1][c] : NfElem::zero(f));
        auto basis = kernel_basis(m);
        CHECK(!basis.empty());
        for (const auto& v : basis) {
            for (std::size_t r = 0; r < n; ++r) {
                NfElem acc = NfElem::zero(f);
                for (std::size_t c = 0; c < n; ++c) acc += m[r][c] * v[c];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("isolate_real_roots examples") {
    auto a = isolate_real_roots(IntPoly{0, 1});
    REQUIRE(a.size() == 1);
    CHECK(a[0].lo == 0);
    CHECK(a[0].hi == 0);
    CHECK(a[0].multiplicity == 1);

    auto b = isolate_real_roots(IntPoly{-2, 0, 1});
    REQUIRE(b.size() == 2);
    CHECK(b[0].lo > -2);
    CHECK(b[0].hi < -1);
    CHECK(b[1].lo > 1);
    CHECK(b[1].hi < 2);

    CHECK(isolate_real_roots(IntPoly{1, 0, 1}).empty());
    CHECK_THROWS_AS(isolate_real_roots(IntPoly{}), Error);

    auto c = isolate_real_roots(IntPoly{0, 0, -3, 0, 1});
    REQUIRE(c.size() == 3);
    CHECK(c[1].lo == 0);
    CHECK(c[1].multiplicity == 2);
    CHECK(c[0].multiplicity == 1);
}

TEST_CASE("isolating intervals bracket sign changes and are disjoint") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Integer> c(7);
        for (auto& x : c) x = coeff(rng);
        c.back() = 1;
        const IntPoly p(c);
        const auto roots = isolate_real_roots(p, Rational(1, 64));
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const auto& r = roots[i];
            if (i > 0) CHECK(roots[i - 1].hi < r.lo);
            if (r.lo == r.hi) {
                CHECK(sign_at(p, r.lo) == 0);
            } else if (r.multiplicity % 2 == 1) {
                CHECK(sign_at(p, r.lo) * sign_at(p, r.hi) < 0);
            }
            CHECK(r.hi - r.lo <= Rational(1, 64));
        }
    }
}
