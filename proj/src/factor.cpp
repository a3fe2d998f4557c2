#include "matchmult/factor.hpp"

#include <algorithm>
#include <numeric>

#include "matchmult/errors.hpp"
#include "modp.hpp"

namespace matchmult {

namespace {

using detail::PolyP;
using detail::PrimeField;

// Arithmetic in (Z/mZ)[x], coefficients kept in [0, m).
struct ModRing {
    Integer m;

    IntPoly reduce(const IntPoly& a) const {
        std::vector<Integer> v(a.coeffs().begin(), a.coeffs().end());
        for (auto& c : v) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        return IntPoly(std::move(v));
    }

    IntPoly mul(const IntPoly& a, const IntPoly& b) const { return reduce(a * b); }
    IntPoly add(const IntPoly& a, const IntPoly& b) const { return reduce(a + b); }
    IntPoly sub(const IntPoly& a, const IntPoly& b) const { return reduce(a - b); }

    // b must be monic modulo m.
    void divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) const {
        auto d = divmod_monic(reduce(a), b);
        q = reduce(d.quotient);
        r = reduce(d.remainder);
    }

    IntPoly symmetric(const IntPoly& a) const {
        const Integer half = m / 2;
        std::vector<Integer> v(a.coeffs().begin(), a.coeffs().end());
        for (auto& c : v) {
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
            if (c > half) c -= m;
        }
        return IntPoly(std::move(v));
    }
};

struct HenselPair {
    IntPoly g, h, s, t;
};

// One quadratic Hensel step: from f = gh, sg + th = 1 (mod m) to the same
// relations modulo m^2, with h monic.
HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const Integer& m) {
    const ModRing ring{m * m};
    const IntPoly e = ring.sub(f, ring.mul(in.g, in.h));
    IntPoly q, r;
    ring.divmod(ring.mul(in.s, e), in.h, q, r);
    HenselPair out;
    out.g = ring.add(in.g, ring.add(ring.mul(in.t, e), ring.mul(q, in.g)));
    out.h = ring.add(in.h, r);
    const IntPoly b = ring.sub(ring.add(ring.mul(in.s, out.g), ring.mul(in.t, out.h)), IntPoly::constant(1));
    IntPoly c, d;
    ring.divmod(ring.mul(in.s, b), out.h, c, d);
    out.s = ring.sub(in.s, d);
    out.t = ring.sub(in.t, ring.add(ring.mul(in.t, b), ring.mul(c, out.g)));
    return out;
}

// Lifts f = lc(f) * prod(factors) (mod p) to monic factors modulo `target`,
// which must be a power p^(2^j).
void multifactor_lift(const IntPoly& f, std::span<const PolyP> factors, const PrimeField& fp,
                      const Integer& target, std::vector<IntPoly>& out) {
    const ModRing ring{target};
    if (factors.size() == 1) {
        Integer lc_inv;
        Integer lc = f.leading();
        mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
        out.push_back(ring.reduce(f * lc_inv));
        return;
    }
    const std::size_t half = factors.size() / 2;
    const auto left = factors.first(half);
    const auto right = factors.subspan(half);

    PolyP g0{mpz_fdiv_ui(f.leading().get_mpz_t(), fp.p())};
    for (const auto& u : left) g0 = fp.mul(g0, u);
    PolyP h0{1};
    for (const auto& u : right) h0 = fp.mul(h0, u);
    PolyP s0, t0;
    fp.ext_gcd(g0, h0, s0, t0);

    HenselPair pair{fp.lift(g0), fp.lift(h0), fp.lift(s0), fp.lift(t0)};
    Integer m = fp.p();
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m *= m;
    }
    multifactor_lift(pair.g, left, fp, target, out);
    multifactor_lift(pair.h, right, fp, target, out);
}

constexpr std::uint64_t kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
                                     59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127,
                                     131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
                                     211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283,
                                     293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383,
                                     389, 397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467,
                                     479, 487, 491, 499, 503, 509, 521, 523, 541, 547, 557, 563, 569, 571, 577};

// Bound on twice the largest coefficient of lc(f) * g for any factor g of f.
Integer lifting_target(const IntPoly& f) {
    Integer norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Integer bound;
    mpz_mul_2exp(bound.get_mpz_t(), norm.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
    bound *= abs(f.leading());
    return 2 * bound + 1;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void sort_canonical(std::vector<PolyPower>& v) {
    std::sort(v.begin(), v.end(), [](const PolyPower& a, const PolyPower& b) {
        if (auto c = canonical_compare(a.base, b.base); c != 0) return c < 0;
        return a.exponent < b.exponent;
    });
}

}  // namespace

IntPoly FactoredPoly::expand() const {
    IntPoly out = IntPoly::constant(unit);
    for (const auto& f : factors) out *= pow(f.base, f.exponent);
    return out;
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) return false;
    return gcd(p, derivative(p)).degree() == 0;
}

std::vector<PolyPower> squarefree_decompose(const IntPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of 0");
    std::vector<PolyPower> parts;
    const IntPoly a = primitive_part(p);
    if (a.degree() < 1) return parts;

    const IntPoly da = derivative(a);
    const IntPoly c = gcd(a, da);
    IntPoly w = *divide_exact(a, c);
    IntPoly y = *divide_exact(da, c);
    IntPoly z = y - derivative(w);
    unsigned i = 1;
    while (w.degree() > 0) {
        const IntPoly g = gcd(w, z);
        if (g.degree() > 0) parts.push_back({g, i});
        w = *divide_exact(w, g);
        y = *divide_exact(z, g);
        z = y - derivative(w);
        ++i;
    }
    sort_canonical(parts);
    return parts;
}

std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f) {
    if (f.degree() < 1) return {};
    if (f.degree() == 1) return {f};

    // Pick, among a few admissible primes, the one with fewest modular factors.
    std::uint64_t best_p = 0;
    std::vector<PolyP> best;
    int admissible = 0;
    for (std::uint64_t p : kPrimes) {
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
        const PrimeField fp(p);
        const PolyP fbar = fp.reduce(f);
        if (detail::degree(fp.gcd(fbar, fp.derivative(fbar))) != 0) continue;
        auto facs = fp.factor_squarefree(fbar);
        if (best_p == 0 || facs.size() < best.size()) {
            best_p = p;
            best = std::move(facs);
        }
        if (best.size() == 1 || ++admissible == 5) break;
    }
    if (best_p == 0) throw std::logic_error("no admissible prime for factorisation");
    if (best.size() == 1) return {f};

    const PrimeField fp(best_p);
    const Integer target_bound = lifting_target(f);
    Integer target = best_p;
    while (target < target_bound) target *= target;

    std::vector<IntPoly> lifted;
    multifactor_lift(f, best, fp, target, lifted);

    const ModRing ring{target};
    std::vector<IntPoly> result;
    IntPoly rest = f;
    std::vector<std::size_t> remaining(lifted.size());
    std::iota(remaining.begin(), remaining.end(), 0);

    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> pick(s);
        std::iota(pick.begin(), pick.end(), 0);
        do {
            IntPoly g = IntPoly::constant(rest.leading());
            for (std::size_t k : pick) g = ring.mul(g, lifted[remaining[k]]);
            g = primitive_part(ring.symmetric(g));
            if (g.degree() < 1) continue;
            auto quotient = divide_exact(rest, g);
            if (!quotient) continue;
            result.push_back(g);
            rest = primitive_part(*quotient);
            std::vector<std::size_t> keep;
            for (std::size_t k = 0; k < remaining.size(); ++k)
                if (std::find(pick.begin(), pick.end(), k) == pick.end()) keep.push_back(remaining[k]);
            remaining = std::move(keep);
            found = true;
            break;
        } while (next_subset(pick, remaining.size()));
        if (!found) ++s;
    }
    if (rest.degree() > 0) result.push_back(rest);
    std::sort(result.begin(), result.end(),
              [](const IntPoly& a, const IntPoly& b) { return canonical_compare(a, b) < 0; });
    return result;
}

FactoredPoly factor_irreducible(const IntPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorisation of 0");
    FactoredPoly out;
    out.unit = content(p);
    if (p.leading() < 0) out.unit = -out.unit;
    for (const auto& part : squarefree_decompose(p)) {
        for (auto& g : factor_squarefree_primitive(part.base)) out.factors.push_back({std::move(g), part.exponent});
    }
    sort_canonical(out.factors);
    return out;
}

unsigned root_multiplicity(const IntPoly& p, const IntPoly& f) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity in the zero polynomial");
    if (f.degree() < 1 || !f.is_monic()) throw Error(ErrorCode::InvalidFactor, "factor must be monic and non-constant");
    if (!is_squarefree(f)) throw Error(ErrorCode::InvalidFactor, "factor must be square-free");
    unsigned k = 0;
    IntPoly rest = p;
    while (rest.degree() >= f.degree()) {
        auto d = divmod_monic(rest, f);
        if (!d.remainder.is_zero()) break;
        rest = std::move(d.quotient);
        ++k;
    }
    return k;
}

}  // namespace matchmult
