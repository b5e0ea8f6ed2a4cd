#include "shcalc/quantum_ring.hpp"

namespace shcalc {

const char* to_string(Generator g) { return g == Generator::cQ ? "cQ" : "omega"; }

RingPresentation make_presentation(Generator generator, LambdaPolynomial relation,
                                   std::optional<GradingContext> grading) {
    if (relation.empty() || !relation.back().is_one())
        throw std::invalid_argument("relation must be a monic polynomial");
    RingPresentation pres;
    pres.generator = generator;
    pres.relation = std::move(relation);
    pres.grading = grading;
    return pres;
}

bool RingPresentation::is_homogeneous() const {
    if (!grading) return true;
    const std::size_t r = rank();
    for (std::size_t k = 0; k <= r; ++k) {
        const NovikovScalar& c = relation[k];
        if (c.is_zero()) continue;
        auto mono = c.as_monomial();
        if (!mono) return false;
        if (grading->minimal_chern * mono->second != static_cast<std::int64_t>(r - k)) return false;
    }
    return true;
}

namespace {

bool is_unknown_power(const RingPresentation& pres, std::size_t k) {
    for (auto u : pres.unknown_powers)
        if (u == k) return true;
    return false;
}

std::string render_coefficient(const NovikovScalar& c) {
    const std::string s = c.to_string();
    const bool compound = s.find(" + ") != std::string::npos || s.front() == '(';
    return compound ? "(" + s + ")" : s;
}

void require_complete(const RingPresentation& pres) {
    if (!pres.complete) throw IncompletePresentation();
}

void require_element(const RingPresentation& pres, const RingElement& x) {
    if (x.coeffs.size() != pres.rank()) throw PresentationMismatch();
    for (const auto& c : x.coeffs)
        if (c.field() != pres.field()) throw PresentationMismatch();
}

}  // namespace

std::string RingPresentation::to_string() const {
    const std::string gen = shcalc::to_string(generator);
    std::string body;
    for (std::size_t k = relation.size(); k-- > 0;) {
        const NovikovScalar& c = relation[k];
        const bool unknown = is_unknown_power(*this, k);
        if (c.is_zero() && !unknown) continue;
        std::string term;
        const std::string power = k == 0 ? "" : (k == 1 ? gen : gen + "^" + std::to_string(k));
        if (unknown)
            term = k == 0 ? "?" : "?*" + power;
        else if (k > 0 && c.is_one())
            term = power;
        else
            term = k == 0 ? render_coefficient(c) : render_coefficient(c) + "*" + power;
        if (!body.empty()) body += " + ";
        body += term;
    }
    return "Lambda[" + gen + "]/(" + body + ")";
}

bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.generator == b.generator && a.relation == b.relation && a.complete == b.complete &&
           a.unknown_powers == b.unknown_powers;
}

RingElement reduce(const RingPresentation& pres, const LambdaPolynomial& raw) {
    require_complete(pres);
    const std::size_t r = pres.rank();
    const CoefficientField field = pres.field();
    LambdaPolynomial work = raw;
    for (const auto& c : work)
        if (c.field() != field) throw FieldMismatch();
    // gen^r = -(relation - gen^r); fold high powers down.
    for (std::size_t k = work.size(); k-- > r;) {
        if (work[k].is_zero()) continue;
        const NovikovScalar lead = work[k];
        for (std::size_t i = 0; i < r; ++i)
            if (!pres.relation[i].is_zero()) work[k - r + i] -= lead * pres.relation[i];
        work[k] = NovikovScalar(field);
    }
    work.resize(r, NovikovScalar(field));
    return {std::move(work)};
}

RingElement unit(const RingPresentation& pres) { return reduce(pres, {NovikovScalar::constant(1, pres.field())}); }

RingElement generator_power(const RingPresentation& pres, std::size_t k) {
    LambdaPolynomial raw(k + 1, NovikovScalar(pres.field()));
    raw[k] = NovikovScalar::constant(1, pres.field());
    return reduce(pres, raw);
}

RingElement multiply(const RingPresentation& pres, const RingElement& x, const RingElement& y) {
    require_complete(pres);
    require_element(pres, x);
    require_element(pres, y);
    const std::size_t r = pres.rank();
    if (r == 0) return {};
    LambdaPolynomial raw(2 * r - 1, NovikovScalar(pres.field()));
    for (std::size_t i = 0; i < r; ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < r; ++j)
            if (!y.coeffs[j].is_zero()) raw[i + j] += x.coeffs[i] * y.coeffs[j];
    }
    return reduce(pres, raw);
}

RingElement add(const RingPresentation& pres, const RingElement& x, const RingElement& y) {
    require_element(pres, x);
    require_element(pres, y);
    RingElement out = x;
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += y.coeffs[k];
    return out;
}

RingElement power(const RingPresentation& pres, const RingElement& x, std::size_t k) {
    RingElement out = unit(pres);
    for (std::size_t e = 0; e < k; ++e) out = multiply(pres, out, x);
    return out;
}

LambdaMatrix multiplication_matrix(const RingPresentation& pres, const RingElement& x) {
    require_complete(pres);
    require_element(pres, x);
    const std::size_t r = pres.rank();
    const BasisLabel basis = pres.generator == Generator::cQ ? BasisLabel::CQPowers : BasisLabel::OmegaPowers;
    LambdaMatrix mat(r, pres.field(), basis, pres.grading);
    for (std::size_t j = 0; j < r; ++j) {
        const RingElement image = multiply(pres, x, generator_power(pres, r - 1 - j));
        for (std::size_t i = 0; i < r; ++i) mat(i, j) = image.coeffs[r - 1 - i];
    }
    return mat;
}

namespace {

RingPresentation rescale_generator(const RingPresentation& pres, const NovikovScalar& scale, Generator target) {
    // relation(gen_old) with gen_old = scale * gen_new, divided by scale^deg.
    if (scale.is_zero()) throw NonInvertibleScale("generator rescaling by zero in the coefficient field");
    RingPresentation out = pres;
    out.generator = target;
    NovikovScalar factor = NovikovScalar::constant(1, pres.field());
    for (auto& c : out.relation) {
        c *= factor;
        factor *= scale;
    }
    const NovikovScalar lead_inv = out.relation.back().inverse();
    for (auto& c : out.relation) c *= lead_inv;
    return out;
}

}  // namespace

RingPresentation change_generator(const RingPresentation& pres, int n) {
    if (pres.generator != Generator::cQ) throw std::invalid_argument("change_generator expects a c_Q presentation");
    const NovikovScalar scale = NovikovScalar::constant(to_field(Rational(-n), pres.field()), pres.field());
    if (scale.is_zero())
        throw NonInvertibleScale("n = " + std::to_string(n) + " is not invertible in the coefficient field");
    return rescale_generator(pres, scale, Generator::omegaQ);
}

RingPresentation change_generator_to_c(const RingPresentation& pres, int n) {
    if (pres.generator != Generator::omegaQ)
        throw std::invalid_argument("change_generator_to_c expects an omega_Q presentation");
    const Rational field_n = to_field(Rational(-n), pres.field());
    if (field_n == 0)
        throw NonInvertibleScale("n = " + std::to_string(n) + " is not invertible in the coefficient field");
    const Rational inv = 1 / field_n;
    return rescale_generator(pres, NovikovScalar::constant(inv, pres.field()), Generator::cQ);
}

bool is_nilpotent_element(const RingPresentation& pres, const RingElement& x) {
    require_complete(pres);
    const RingElement p = power(pres, x, pres.rank());
    for (const auto& c : p.coeffs)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace shcalc
