#include "matchmult/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "matchmult/errors.hpp"

namespace matchmult {

namespace {

const Integer kZero = 0;

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

const Integer& IntPoly::operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Integer& IntPoly::leading() const noexcept { return coeffs_.empty() ? kZero : coeffs_.back(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }

IntPoly operator-(const IntPoly& p) {
    std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    const auto a = lhs.coeffs();
    const auto b = rhs.coeffs();
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly lhs, const Integer& s) { return lhs *= s; }

std::strong_ordering canonical_compare(const IntPoly& a, const IntPoly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Integer> v(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) v[i - 1] = p[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

IntPoly pow(const IntPoly& p, unsigned e) {
    IntPoly result = IntPoly::constant(1);
    IntPoly base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return {};
    Integer g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

PolyDivision divmod_monic(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    const Integer& lb = b.leading();
    if (lb != 1 && lb != -1) throw Error(ErrorCode::InvalidFactor, "divisor must have leading coefficient +-1");
    if (a.degree() < b.degree()) return {IntPoly{}, a};

    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Integer> q(r.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer t = r[k + db];
        if (lb < 0) t = -t;
        q[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    r.resize(db);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;

    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const Integer& lb = b.leading();
    std::vector<Integer> q(r.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Integer& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Integer t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[k] = t;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    const int steps = a.degree() - b.degree() + 1;
    const Integer& lb = b.leading();
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    int used = 0;
    for (std::size_t top = r.size(); top-- > db;) {
        const Integer t = r[top];
        for (std::size_t i = 0; i <= top; ++i) r[i] *= lb;
        if (t != 0) {
            const std::size_t shift = top - db;
            for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        }
        ++used;
    }
    r.resize(db);
    IntPoly rem(std::move(r));
    if (used < steps) rem *= ipow(lb, static_cast<unsigned long>(steps - used));
    return rem;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    IntPoly f = primitive_part(a);
    IntPoly g = primitive_part(b);
    if (f.degree() < g.degree()) std::swap(f, g);
    if (g.degree() == 0) return IntPoly::constant(1);

    Integer sg = 1;
    Integer h = 1;
    for (;;) {
        const int delta = f.degree() - g.degree();
        IntPoly r = pseudo_remainder(f, g);
        if (r.is_zero()) return primitive_part(g);
        if (r.degree() == 0) return IntPoly::constant(1);
        Integer denom = sg * ipow(h, static_cast<unsigned long>(delta));
        std::vector<Integer> v(r.coeffs().begin(), r.coeffs().end());
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
        f = std::move(g);
        g = IntPoly(std::move(v));
        sg = f.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            Integer num = ipow(sg, static_cast<unsigned long>(delta));
            Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
}

Rational evaluate(const IntPoly& p, const Rational& at) {
    Rational acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * at + Rational(p[i]);
    return acc;
}

int sign_at(const IntPoly& p, const Rational& at) {
    if (p.is_zero()) return 0;
    // Homogenised Horner: sum c_i num^i den^(n-i), den > 0.
    const Integer& num = at.get_num();
    const Integer& den = at.get_den();
    Integer acc = p.leading();
    Integer den_pow = 1;
    for (std::size_t i = p.coeffs().size() - 1; i-- > 0;) {
        den_pow *= den;
        acc *= num;
        mpz_addmul(acc.get_mpz_t(), p[i].get_mpz_t(), den_pow.get_mpz_t());
    }
    return sgn(acc);
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Integer& c = p[i];
        if (c == 0) continue;
        const bool first = out.empty();
        if (c < 0)
            out += first ? "-" : " - ";
        else if (!first)
            out += " + ";
        const Integer mag = abs(c);
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

class TermParser {
   public:
    explicit TermParser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    IntPoly parse() {
        if (s_.empty()) fail("empty polynomial");
        std::vector<Integer> coeffs;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;

            Integer coeff = 1;
            bool has_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = digits();
                has_coeff = true;
                if (peek() == '*') {
                    ++pos_;
                    if (peek() != 'x') fail("expected 'x' after '*'");
                }
            }
            std::size_t power = 0;
            if (peek() == 'x') {
                ++pos_;
                power = 1;
                if (peek() == '^' || (peek() == '*' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*')) {
                    pos_ += peek() == '^' ? 1 : 2;
                    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                    power = digits().get_ui();
                }
            } else if (!has_coeff) {
                fail("expected a term");
            }
            if (coeffs.size() <= power) coeffs.resize(power + 1);
            coeffs[power] += sign * coeff;
        }
        return IntPoly(std::move(coeffs));
    }

   private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    Integer digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Integer(s_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw Error(ErrorCode::ParseError, "bad integer '" + j.get<std::string>() + "'");
        return v;
    }
    throw Error(ErrorCode::ParseError, "coefficient must be an integer or a decimal string");
}

}  // namespace

IntPoly parse_poly(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    if (first < text.size() && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        return poly_from_json(j);
    }
    return TermParser(text).parse();
}

nlohmann::json to_json(const IntPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p())
            arr.push_back(c.get_si());
        else
            arr.push_back(c.get_str());
    }
    return arr;
}

IntPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial JSON must be a dense array");
    std::vector<Integer> v;
    v.reserve(j.size());
    for (const auto& c : j) v.push_back(integer_from_json(c));
    return IntPoly(std::move(v));
}

}  // namespace matchmult
