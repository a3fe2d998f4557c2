#include "matchmult/real_roots.hpp"

#include <algorithm>

#include "matchmult/errors.hpp"
#include "matchmult/factor.hpp"

namespace matchmult {

SturmSequence::SturmSequence(const IntPoly& squarefree) {
    if (squarefree.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of 0");
    chain_.push_back(squarefree);
    IntPoly next = derivative(squarefree);
    while (!next.is_zero()) {
        chain_.push_back(next);
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        IntPoly r = pseudo_remainder(a, b);
        const int e = a.degree() - b.degree() + 1;
        // Undo a negative scaling so r is a positive multiple of rem(a, b).
        if (b.leading() < 0 && (e % 2) != 0) r = -r;
        r = -r;
        if (!r.is_zero()) {
            Integer c = content(r);
            std::vector<Integer> v(r.coeffs().begin(), r.coeffs().end());
            for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            r = IntPoly(std::move(v));
        }
        next = std::move(r);
    }
}

int SturmSequence::variations(const Rational& at) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
        const int s = sign_at(p, at);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

Rational root_bound(const IntPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of 0");
    Rational best = 0;
    const Integer lead = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rational r(abs(p[static_cast<std::size_t>(i)]), lead);
        r.canonicalize();
        if (r > best) best = r;
    }
    return best + 1;
}

namespace {

struct Bracket {
    Rational lo, hi;
    const IntPoly* owner;
    unsigned multiplicity;
};

// Halves a bracket of a simple root of an irreducible owner; lo < hi.
void bisect(Bracket& b) {
    Rational mid = (b.lo + b.hi) / 2;
    if (sign_at(*b.owner, b.lo) * sign_at(*b.owner, mid) < 0)
        b.hi = mid;
    else
        b.lo = mid;
}

void isolate_irreducible(const IntPoly& g, unsigned mult, const Rational& max_width, std::vector<Bracket>& out) {
    if (g.degree() == 1) {
        Rational root(-g[0], g[1]);
        root.canonicalize();
        out.push_back({root, root, &g, mult});
        return;
    }
    // No rational roots, so no bisection point ever lands on a root.
    const SturmSequence sturm(g);
    const Rational bound = root_bound(g);
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    std::vector<Bracket> found;
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const int n = sturm.count(lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            found.push_back({lo, hi, &g, mult});
            continue;
        }
        Rational mid = (lo + hi) / 2;
        work.emplace_back(mid, hi);
        work.emplace_back(lo, mid);
    }
    for (auto& b : found) {
        while (b.hi - b.lo > max_width) bisect(b);
        out.push_back(b);
    }
}

}  // namespace

std::vector<RealRootInterval> isolate_real_roots(const IntPoly& p, const Rational& max_width) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root isolation of 0");
    std::vector<IntPoly> owners;
    std::vector<unsigned> mults;
    for (const auto& part : squarefree_decompose(p)) {
        for (auto& g : factor_squarefree_primitive(part.base)) {
            owners.push_back(std::move(g));
            mults.push_back(part.exponent);
        }
    }
    std::vector<Bracket> brackets;
    for (std::size_t i = 0; i < owners.size(); ++i) isolate_irreducible(owners[i], mults[i], max_width, brackets);

    auto by_lo = [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; };
    std::sort(brackets.begin(), brackets.end(), by_lo);
    // Roots of distinct factors differ, so refining overlaps terminates.
    for (bool overlap = true; overlap;) {
        overlap = false;
        for (std::size_t i = 0; i + 1 < brackets.size(); ++i) {
            auto& a = brackets[i];
            auto& b = brackets[i + 1];
            if (a.hi < b.lo) continue;
            overlap = true;
            if (a.lo < a.hi) bisect(a);
            if (b.lo < b.hi) bisect(b);
        }
        std::sort(brackets.begin(), brackets.end(), by_lo);
    }

    std::vector<RealRootInterval> out;
    out.reserve(brackets.size());
    for (const auto& b : brackets) out.push_back({b.lo, b.hi, b.multiplicity});
    return out;
}

}  // namespace matchmult
