#include "shcalc/novikov.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace shcalc {

const char* to_string(CoefficientField field) {
    return field == CoefficientField::GF2 ? "gf2" : "q";
}

Rational to_field(const Rational& value, CoefficientField field) {
    if (field == CoefficientField::Rationals) return value;
    const mpz_class& den = value.get_den();
    if (mpz_even_p(den.get_mpz_t()))
        throw DivisionByZero();
    return Rational(mpz_odd_p(value.get_num().get_mpz_t()) ? 1 : 0);
}

namespace {

using Dense = std::vector<Rational>;

void require_same_field(CoefficientField a, CoefficientField b) {
    if (a != b) throw FieldMismatch();
}

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of ordinary polynomials (ascending coefficients).
std::pair<Dense, Dense> divmod(Dense a, const Dense& b, CoefficientField field) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {Dense{}, a};
    Dense q(a.size() - db, Rational(0));
    const Rational lead_inv = 1 / Rational(b.back());
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) continue;
        Rational c = to_field(a[k] * lead_inv, field);
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i)
            a[k - db + i] = to_field(a[k - db + i] - c * b[i], field);
    }
    trim(q);
    trim(a);
    return {q, a};
}

Dense monic_gcd(Dense a, Dense b, CoefficientField field) {
    trim(a);
    trim(b);
    auto make_monic = [field](Dense& p) {
        const Rational lead_inv = 1 / Rational(p.back());
        for (auto& c : p) c = to_field(c * lead_inv, field);
    };
    // Monic remainders keep the rational coefficients from exploding.
    if (!b.empty()) make_monic(b);
    while (!b.empty()) {
        Dense r = divmod(a, b, field).second;
        if (!r.empty()) make_monic(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

}  // namespace

// ---------------------------------------------------------------- Laurent

Laurent Laurent::monomial(const Rational& coeff, std::int64_t exponent, CoefficientField field) {
    return from_dense({coeff}, exponent, field);
}

Laurent Laurent::from_dense(std::vector<Rational> coeffs, std::int64_t low, CoefficientField field) {
    Laurent out(field);
    out.low_ = low;
    out.coeffs_ = std::move(coeffs);
    out.normalize();
    return out;
}

void Laurent::normalize() {
    for (auto& c : coeffs_) {
        c.canonicalize();
        c = to_field(c, field_);
    }
    trim(coeffs_);
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
    low_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) low_ = 0;
}

std::size_t Laurent::term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

Rational Laurent::coeff(std::int64_t exponent) const {
    if (is_zero() || exponent < low_ || exponent > top_exponent()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

Laurent Laurent::shifted(std::int64_t by) const {
    Laurent out = *this;
    if (!out.is_zero()) out.low_ += by;
    return out;
}

Laurent Laurent::scaled(const Rational& factor) const {
    Dense c = coeffs_;
    for (auto& x : c) x *= factor;
    return from_dense(std::move(c), low_, field_);
}

Laurent Laurent::operator-() const { return scaled(-1); }

Laurent operator+(const Laurent& a, const Laurent& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int64_t low = std::min(a.low_, b.low_);
    const std::int64_t high = std::max(a.top_exponent(), b.top_exponent());
    Dense c(static_cast<std::size_t>(high - low + 1), Rational(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[a.low_ - low + k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[b.low_ - low + k] += b.coeffs_[k];
    return Laurent::from_dense(std::move(c), low, a.field_);
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Laurent(a.field_);
    Dense c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Laurent::from_dense(std::move(c), a.low_ + b.low_, a.field_);
}

bool operator==(const Laurent& a, const Laurent& b) {
    return a.field_ == b.field_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::string Laurent::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[k].get_str();
        const std::int64_t e = low_ + static_cast<std::int64_t>(k);
        if (e != 0) out += "*t^" + std::to_string(e);
    }
    return out;
}

// ---------------------------------------------------------- NovikovScalar

NovikovScalar::NovikovScalar(Laurent numerator)
    : num_(std::move(numerator)), den_(Laurent::constant(1, num_.field())) {}

NovikovScalar::NovikovScalar(Laurent numerator, Laurent denominator)
    : num_(numerator.field()), den_(Laurent::constant(1, numerator.field())) {
    require_same_field(numerator.field(), denominator.field());
    if (denominator.is_zero()) throw DivisionByZero();
    if (numerator.is_zero()) return;
    const CoefficientField field = numerator.field();

    // t is a unit: push every power of t into the numerator.
    const std::int64_t shift = numerator.valuation() - denominator.valuation();
    Dense num = numerator.dense();
    Dense den = denominator.dense();

    if (den.size() > 1) {
        Dense g = monic_gcd(num, den, field);
        if (g.size() > 1) {
            num = divmod(num, g, field).first;
            den = divmod(den, g, field).first;
        }
    }
    const Rational lead_inv = 1 / Rational(den.back());
    for (auto& c : num) c *= lead_inv;
    for (auto& c : den) c *= lead_inv;
    num_ = Laurent::from_dense(std::move(num), shift, field);
    den_ = Laurent::from_dense(std::move(den), 0, field);
}

bool NovikovScalar::is_one() const {
    return is_laurent() && num_.term_count() == 1 && num_.valuation() == 0 && num_.coeff(0) == 1;
}

std::optional<std::pair<Rational, std::int64_t>> NovikovScalar::as_monomial() const {
    if (is_zero() || !is_laurent() || num_.term_count() != 1) return std::nullopt;
    return std::make_pair(num_.coeff(num_.valuation()), num_.valuation());
}

NovikovScalar NovikovScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return NovikovScalar(den_, num_);
}

NovikovScalar NovikovScalar::operator-() const { return NovikovScalar(-num_, den_, Canonical{}); }

NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return NovikovScalar(a.num_ + b.num_, a.den_);
    return NovikovScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

NovikovScalar operator-(const NovikovScalar& a, const NovikovScalar& b) { return a + (-b); }

NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() || b.is_zero()) return NovikovScalar(a.field());
    if (a.is_laurent() && b.is_laurent())
        return NovikovScalar(a.num_ * b.num_, a.den_, NovikovScalar::Canonical{});
    return NovikovScalar(a.num_ * b.num_, a.den_ * b.den_);
}

NovikovScalar operator/(const NovikovScalar& a, const NovikovScalar& b) { return a * b.inverse(); }

bool operator==(const NovikovScalar& a, const NovikovScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string NovikovScalar::to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const NovikovScalar& a) { return os << a.to_string(); }

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Rational parse_rational(std::string_view s) {
    s = strip(s);
    if (s.empty()) throw ParseError("empty coefficient");
    if (s.front() == '+') s.remove_prefix(1);
    Rational q;
    if (q.set_str(std::string(s), 10) != 0) throw ParseError("bad coefficient '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

Laurent parse_laurent(std::string_view s, CoefficientField field) {
    s = strip(s);
    Laurent out(field);
    if (s == "0") return out;
    while (!s.empty()) {
        const std::size_t plus = s.find(" + ");
        std::string_view term = strip(s.substr(0, plus));
        s = plus == std::string_view::npos ? std::string_view{} : s.substr(plus + 3);
        std::int64_t exponent = 0;
        const std::size_t star = term.find("*t^");
        if (star != std::string_view::npos) {
            const std::string e(strip(term.substr(star + 3)));
            std::size_t used = 0;
            try {
                exponent = std::stoll(e, &used);
            } catch (const std::exception&) {
                throw ParseError("bad exponent '" + e + "'");
            }
            if (used != e.size()) throw ParseError("bad exponent '" + e + "'");
            term = term.substr(0, star);
        }
        out = out + Laurent::monomial(parse_rational(term), exponent, field);
    }
    return out;
}

}  // namespace

NovikovScalar NovikovScalar::parse(std::string_view text, CoefficientField field) {
    text = strip(text);
    const std::size_t split = text.find(")/(");
    if (!text.empty() && text.front() == '(' && split != std::string_view::npos && text.back() == ')') {
        return NovikovScalar(parse_laurent(text.substr(1, split - 1), field),
                             parse_laurent(text.substr(split + 3, text.size() - split - 4), field));
    }
    return NovikovScalar(parse_laurent(text, field));
}

std::optional<std::int64_t> monomial_degree(const NovikovScalar& a, const GradingContext& ctx) {
    auto mono = a.as_monomial();
    if (!mono) return std::nullopt;
    return 2 * ctx.minimal_chern * mono->second;
}

}  // namespace shcalc
