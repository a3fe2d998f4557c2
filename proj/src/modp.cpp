#include "modp.hpp"

#include <algorithm>
#include <utility>

namespace matchmult::detail {

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t PrimeField::inv(std::uint64_t a) const noexcept {
    // Fermat; p is prime.
    std::uint64_t result = 1;
    std::uint64_t base = a % p_;
    std::uint64_t e = p_ - 2;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

PolyP PrimeField::reduce(const IntPoly& f) const {
    PolyP out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p_);
    trim(out);
    return out;
}

IntPoly PrimeField::lift(const PolyP& f) const {
    std::vector<Integer> v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) v[i] = static_cast<unsigned long>(f[i]);
    return IntPoly(std::move(v));
}

PolyP PrimeField::add(const PolyP& a, const PolyP& b) const {
    PolyP out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(out);
    return out;
}

PolyP PrimeField::sub(const PolyP& a, const PolyP& b) const {
    PolyP out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(out);
    return out;
}

PolyP PrimeField::mul(const PolyP& a, const PolyP& b) const {
    if (a.empty() || b.empty()) return {};
    PolyP out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
    }
    trim(out);
    return out;
}

PolyP PrimeField::scale(const PolyP& a, std::uint64_t s) const {
    PolyP out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], s);
    trim(out);
    return out;
}

void PrimeField::divmod(const PolyP& a, const PolyP& b, PolyP& q, PolyP& r) const {
    r = a;
    if (degree(a) < degree(b)) {
        q.clear();
        return;
    }
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv(b.back());
    q.assign(a.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const std::uint64_t t = mul(r[k + db], lead_inv);
        q[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = sub(r[k + j], mul(t, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
}

PolyP PrimeField::mod(const PolyP& a, const PolyP& b) const {
    PolyP q, r;
    divmod(a, b, q, r);
    return r;
}

PolyP PrimeField::monic(const PolyP& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
}

PolyP PrimeField::gcd(PolyP a, PolyP b) const {
    while (!b.empty()) {
        PolyP r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

PolyP PrimeField::ext_gcd(const PolyP& a, const PolyP& b, PolyP& s, PolyP& t) const {
    PolyP r0 = a, r1 = b;
    PolyP s0{1}, s1{};
    PolyP t0{}, t1{1};
    while (!r1.empty()) {
        PolyP q, r;
        divmod(r0, r1, q, r);
        PolyP s2 = sub(s0, mul(q, s1));
        PolyP t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        s = {};
        t = {};
        return {};
    }
    const std::uint64_t li = inv(r0.back());
    s = scale(s0, li);
    t = scale(t0, li);
    return scale(r0, li);
}

PolyP PrimeField::derivative(const PolyP& a) const {
    if (a.size() < 2) return {};
    PolyP out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul(a[i], i % p_);
    trim(out);
    return out;
}

PolyP PrimeField::powmod(const PolyP& base, const Integer& e, const PolyP& modulus) const {
    PolyP result{1};
    result = mod(result, modulus);
    PolyP b = mod(base, modulus);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mod(mul(result, result), modulus);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, b), modulus);
    }
    return result;
}

void PrimeField::equal_degree(const PolyP& f, int d, std::mt19937_64& rng, std::vector<PolyP>& out) const {
    const int n = degree(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    Integer exponent;
    mpz_ui_pow_ui(exponent.get_mpz_t(), p_, static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
    for (;;) {
        PolyP a(static_cast<std::size_t>(n));
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (degree(a) < 1) continue;
        PolyP g = gcd(a, f);
        if (degree(g) > 0 && degree(g) < n) {
            PolyP q, r;
            divmod(f, g, q, r);
            equal_degree(g, d, rng, out);
            equal_degree(monic(q), d, rng, out);
            return;
        }
        PolyP b = sub(powmod(a, exponent, f), PolyP{1});
        g = gcd(b, f);
        if (degree(g) > 0 && degree(g) < n) {
            PolyP q, r;
            divmod(f, g, q, r);
            equal_degree(g, d, rng, out);
            equal_degree(monic(q), d, rng, out);
            return;
        }
    }
}

std::vector<PolyP> PrimeField::factor_squarefree(const PolyP& f_in) const {
    std::vector<PolyP> out;
    PolyP f = monic(f_in);
    if (degree(f) < 1) return out;
    // Fixed seed: the factor set is unique, the seed only fixes the work done.
    std::mt19937_64 rng(0x5eedULL + p_);
    const PolyP x{0, 1};
    PolyP h = x;
    for (int d = 1; 2 * d <= degree(f); ++d) {
        h = powmod(h, Integer(static_cast<unsigned long>(p_)), f);
        PolyP g = gcd(sub(h, x), f);
        if (degree(g) > 0) {
            equal_degree(g, d, rng, out);
            PolyP q, r;
            divmod(f, g, q, r);
            f = monic(q);
            h = mod(h, f);
        }
    }
    if (degree(f) > 0) out.push_back(f);
    std::sort(out.begin(), out.end(), [](const PolyP& a, const PolyP& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace matchmult::detail
