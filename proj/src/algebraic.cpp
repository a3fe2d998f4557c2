#include "matchmult/algebraic.hpp"

#include <sstream>

#include "matchmult/errors.hpp"
#include "matchmult/factor.hpp"

namespace matchmult {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_qpoly(const IntPoly& p) {
    QPoly q;
    q.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) q.emplace_back(c);
    return q;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    trim(out);
    return out;
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    q.clear();
    if (r.size() < b.size()) return;
    const std::size_t db = b.size() - 1;
    q.assign(r.size() - db, Rational(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational t = r[k + db] / b.back();
        q[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] -= t * b[j];
    }
    r.resize(db);
    trim(r);
    trim(q);
}

}  // namespace

RootClass::RootClass(IntPoly minpoly, Trusted) : minpoly_(std::move(minpoly)) {}

RootClass::RootClass(IntPoly minpoly) : minpoly_(std::move(minpoly)) {
    if (minpoly_.degree() < 1 || !minpoly_.is_monic())
        throw Error(ErrorCode::InvalidFactor, "minimal polynomial must be monic and non-constant: " + matchmult::to_string(minpoly_));
    const auto f = factor_irreducible(minpoly_);
    if (f.factors.size() != 1 || f.factors.front().exponent != 1)
        throw Error(ErrorCode::InvalidFactor, "minimal polynomial must be irreducible: " + matchmult::to_string(minpoly_));
}

RootClass RootClass::trusted(IntPoly minpoly) { return RootClass(std::move(minpoly), Trusted{}); }

RootClass& RootClass::with_display_interval() {
    auto roots = isolate_real_roots(minpoly_, Rational(1, 1 << 30));
    if (!roots.empty()) interval_ = roots.back();
    return *this;
}

std::string RootClass::describe() const {
    std::ostringstream os;
    os << matchmult::to_string(minpoly_);
    if (interval_) {
        if (interval_->lo == interval_->hi)
            os << " (=" << interval_->lo.get_str() << ")";
        else
            os << " (~" << interval_->midpoint() << ")";
    }
    return os.str();
}

nlohmann::json RootClass::to_json() const {
    nlohmann::json j;
    j["minpoly"] = matchmult::to_json(minpoly_);
    if (interval_)
        j["approx"] = {interval_->lo.get_d(), interval_->hi.get_d()};
    else
        j["approx"] = nullptr;
    return j;
}

NfElem::NfElem(Field field, std::vector<Rational> rep) : field_(std::move(field)), rep_(std::move(rep)) {
    if (!field_) throw Error(ErrorCode::ModulusMismatch, "number field element without a field");
    for (auto& c : rep_) c.canonicalize();
    reduce();
}

NfElem NfElem::generator(Field field) { return NfElem(std::move(field), {Rational(0), Rational(1)}); }

void NfElem::reduce() {
    trim(rep_);
    const auto& m = field_->minpoly();
    if (static_cast<int>(rep_.size()) <= m.degree()) return;
    QPoly q, r;
    qdivmod(rep_, to_qpoly(m), q, r);
    rep_ = std::move(r);
}

void NfElem::check_same_field(const NfElem& other) const {
    if (field_ != other.field_ && field_->minpoly() != other.field_->minpoly())
        throw Error(ErrorCode::ModulusMismatch, matchmult::to_string(field_->minpoly()) + " vs " +
                                                    matchmult::to_string(other.field_->minpoly()));
}

NfElem& NfElem::operator+=(const NfElem& rhs) {
    check_same_field(rhs);
    if (rhs.rep_.size() > rep_.size()) rep_.resize(rhs.rep_.size());
    for (std::size_t i = 0; i < rhs.rep_.size(); ++i) rep_[i] += rhs.rep_[i];
    trim(rep_);
    return *this;
}

NfElem& NfElem::operator-=(const NfElem& rhs) {
    check_same_field(rhs);
    if (rhs.rep_.size() > rep_.size()) rep_.resize(rhs.rep_.size());
    for (std::size_t i = 0; i < rhs.rep_.size(); ++i) rep_[i] -= rhs.rep_[i];
    trim(rep_);
    return *this;
}

NfElem& NfElem::operator*=(const NfElem& rhs) {
    check_same_field(rhs);
    rep_ = qmul(rep_, rhs.rep_);
    reduce();
    return *this;
}

NfElem NfElem::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(theta)");
    // Extended Euclid: s * rep + t * minpoly = g, g a nonzero constant.
    QPoly r0 = to_qpoly(field_->minpoly()), r1 = rep_;
    QPoly s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        QPoly q, r;
        qdivmod(r0, r1, q, r);
        QPoly s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw Error(ErrorCode::DivisionByZero, "element is a zero divisor modulo the minimal polynomial");
    for (auto& c : s0) c /= r0[0];
    return NfElem(field_, std::move(s0));
}

NfElem& NfElem::operator/=(const NfElem& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

NfElem NfElem::operator-() const {
    NfElem out = *this;
    for (auto& c : out.rep_) c = -c;
    return out;
}

bool operator==(const NfElem& a, const NfElem& b) {
    return a.field_->minpoly() == b.field_->minpoly() && a.rep_ == b.rep_;
}

std::string NfElem::to_string() const {
    if (rep_.empty()) return "0";
    std::string out;
    for (std::size_t i = rep_.size(); i-- > 0;) {
        const Rational& c = rep_[i];
        if (c == 0) continue;
        const bool first = out.empty();
        if (c < 0)
            out += first ? "-" : " - ";
        else if (!first)
            out += " + ";
        const Rational mag = abs(c);
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

nlohmann::json NfElem::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& c : rep_) arr.push_back(c.get_str());
    return arr;
}

NfElem nf_div(const NfElem& a, const NfElem& b) { return a / b; }

std::vector<NfVector> kernel_basis(const NfMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error(ErrorCode::ShapeError, "kernel_basis needs a square matrix");
    if (n == 0) return {};
    const auto field = m[0][0].field();

    NfMatrix a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pick = row;
        while (pick < n && a[pick][col].is_zero()) ++pick;
        if (pick == n) continue;
        std::swap(a[row], a[pick]);
        const NfElem inv = a[row][col].inverse();
        for (auto& e : a[row]) e *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const NfElem factor = a[r][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<NfVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        NfVector v(n, NfElem::zero(field));
        v[free] = NfElem::constant(field, 1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free];
        for (const auto& e : v) {
            if (e.is_zero()) continue;
            const NfElem inv = e.inverse();
            for (auto& x : v) x *= inv;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace matchmult
