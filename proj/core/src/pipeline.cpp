#include "shcalc/pipeline.hpp"

#include "shcalc/grr.hpp"
#include "shcalc/localization.hpp"

#include <random>
#include <sstream>

namespace shcalc {

const char* to_string(RegimeKind kind) {
    switch (kind) {
        case RegimeKind::Monotone: return "Monotone";
        case RegimeKind::CalabiYau: return "CalabiYau";
        case RegimeKind::Unsupported: return "Unsupported";
        case RegimeKind::LargeMinChern: return "LargeMinChern";
    }
    return "?";
}

const char* to_string(ShKind kind) {
    switch (kind) {
        case ShKind::Presentation: return "presentation";
        case ShKind::ZeroRing: return "zero";
        case ShKind::Partial: return "partial";
    }
    return "?";
}

Regime classify_regime(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("need m >= 1 and n >= 1 (got m=" + std::to_string(m) + ", n=" +
                                    std::to_string(n) + ")");
    const std::int64_t minimal_chern = minimal_chern_number(m, n);
    if (n < 1 + m) return {RegimeKind::Monotone, 2 * minimal_chern > m};
    if (n == 1 + m) return {RegimeKind::CalabiYau, true};
    if (n <= 2 * m) return {RegimeKind::Unsupported, false};
    return {RegimeKind::LargeMinChern, true};
}

namespace {

void refuse_unsupported(int m, int n) {
    throw UnsupportedRegime("O(-" + std::to_string(n) + ") -> P^" + std::to_string(m) +
                            " lies in 2+m <= n <= 2m, where M is not weak+ monotone; r is not constructed there");
}

// Every entry of r is a multiple of n, so over GF2 even n kills all of them.
bool char2_kills_r(int n, CoefficientField field) { return field == CoefficientField::GF2 && n % 2 == 0; }

NovikovScalar field_constant(const Rational& c, CoefficientField field) {
    return NovikovScalar::constant(to_field(c, field), field);
}

}  // namespace

std::vector<std::pair<int, int>> unknown_entry_positions(int m, int n, CoefficientField field) {
    std::vector<std::pair<int, int>> out;
    const std::int64_t minimal_chern = minimal_chern_number(m, n);
    if (n >= 1 + m || minimal_chern < 1 || char2_kills_r(n, field)) return out;
    for (std::int64_t d = 2; d * minimal_chern <= m; ++d)
        for (std::int64_t a = 0; d * minimal_chern + a <= m; ++a)
            out.emplace_back(static_cast<int>(d * minimal_chern + a), static_cast<int>(1 + a));
    return out;
}

LambdaMatrix build_r_matrix(int m, int n, CoefficientField field) {
    const Regime regime = classify_regime(m, n);
    if (regime.kind == RegimeKind::Unsupported) refuse_unsupported(m, n);
    const std::int64_t minimal_chern = minimal_chern_number(m, n);
    const auto s = static_cast<std::size_t>(m) + 1;
    LambdaMatrix r(s, field, BasisLabel::OmegaPowers, GradingContext{minimal_chern});

    // Constant sections: -n = c_1(O(-n))[P^1] on the superdiagonal.
    const NovikovScalar constant_count = field_constant(-n, field);
    for (std::size_t i = 0; i + 1 < s; ++i) r(i, i + 1) = constant_count;

    if (regime.kind == RegimeKind::Monotone) {
        for (int a = 0; a < n; ++a) {
            const auto row = static_cast<std::size_t>(minimal_chern + a - 1);
            r(row, static_cast<std::size_t>(a)) =
                NovikovScalar::monomial(subdiagonal_entry(m, n, a, field), 1, field);
        }
        for (auto [i, j] : unknown_entry_positions(m, n, field))
            r.mark_unknown(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
    return r;
}

NovikovScalar expected_leading_coefficient(int m, int n, CoefficientField field) {
    const std::int64_t minimal_chern = minimal_chern_number(m, n);
    if (minimal_chern < 1 || n >= 1 + m)
        throw RegimeError("a_N is only defined in the monotone range 1 <= n < 1+m");
    Rational sum = 0;
    for (int a = 0; a < n; ++a) sum += subdiagonal_entry(m, n, a, CoefficientField::Rationals);
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(minimal_chern - 1));
    Rational value = sum * scale;
    if (minimal_chern % 2 != 0) value = -value;
    return NovikovScalar::monomial(to_field(value, field), 1, field);
}

RingPresentation closed_form_qh(int m, int n, CoefficientField field) {
    if (!(n >= 1 && 2 * n < 2 + m)) throw RegimeError("closed form QH needs 1 <= n < 1+m/2");
    mpz_class nn;
    mpz_pow_ui(nn.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(n));
    LambdaPolynomial rel(static_cast<std::size_t>(m) + 2, NovikovScalar(field));
    rel.back() = NovikovScalar::constant(1, field);
    rel[static_cast<std::size_t>(n)] += NovikovScalar::monomial(to_field(Rational(nn), field), 1, field);
    return make_presentation(Generator::omegaQ, std::move(rel), GradingContext{minimal_chern_number(m, n)});
}

LambdaMatrix quantum_power_basis(const LambdaMatrix& r, int n) {
    const std::size_t s = r.size();
    const CoefficientField field = r.field();
    const Rational scale = to_field(Rational(-n), field);
    if (scale == 0) throw NonInvertibleScale("n is not invertible in the coefficient field");
    const NovikovScalar inv = NovikovScalar::constant(1 / scale, field);

    LambdaMatrix p(s, field, r.basis(), r.grading());
    LambdaVector v(s, NovikovScalar(field));
    v[s - 1] = NovikovScalar::constant(1, field);
    // omega_Q^k = (c/(-n))^k applied to 1.
    for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t i = 0; i < s; ++i) p(i, s - 1 - k) = v[i];
        v = r.apply(v);
        for (auto& x : v) x *= inv;
    }
    return p;
}

bool ShResult::all_diagnostics_pass() const {
    for (const auto& d : diagnostics)
        if (!d.pass) return false;
    return true;
}

bool rank_constraints(int m, int n, std::int64_t sh_rank) {
    const std::int64_t minimal_chern = minimal_chern_number(m, n);
    if (sh_rank < 0 || sh_rank >= m + 1) return false;
    if (minimal_chern == 0) return true;
    const std::int64_t mod = minimal_chern < 0 ? -minimal_chern : minimal_chern;
    return sh_rank % mod == 0;
}

bool vb_vanishing_predicate(std::int64_t min_chern, std::int64_t rank_e, std::int64_t rank_hb) {
    if (rank_e < 1 || rank_hb < 1) throw std::invalid_argument("ranks must be >= 1");
    const std::int64_t abs_n = min_chern < 0 ? -min_chern : min_chern;
    return abs_n >= rank_e * rank_hb;
}

bool vanishing_nilpotency(const ShResult& result) {
    if (!result.exact || !result.qh_cq.complete)
        throw IncompletePresentation();
    // In the c_Q presentation c_1(L) is the generator itself.
    const bool nilpotent = is_nilpotent_element(result.qh_cq, generator_power(result.qh_cq, 1));
    if (result.qh_omega) {
        const RingPresentation& qh = *result.qh_omega;
        RingElement c1 = generator_power(qh, 1);
        for (auto& x : c1.coeffs) x *= NovikovScalar::constant(to_field(Rational(-result.n), qh.field()), qh.field());
        if (is_nilpotent_element(qh, c1) != nilpotent)
            throw std::logic_error("nilpotency of c_1(L) differs between the c_Q and omega_Q presentations");
    }
    return nilpotent;
}

namespace {

std::string join(const std::vector<std::size_t>& xs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << "]";
    return os.str();
}

void add(ShResult& res, std::string name, bool pass, std::string detail) {
    res.diagnostics.push_back({std::move(name), pass, std::move(detail)});
}

// a_i = 0 unless N | i, and a_{kN} is a multiple of t^k.
bool char_poly_degree_pattern(const CharPoly& cp, std::int64_t minimal_chern) {
    for (std::size_t i = 1; i < cp.a.size(); ++i) {
        const NovikovScalar& ai = cp.a[i];
        if (ai.is_zero()) continue;
        if (minimal_chern <= 0 || static_cast<std::int64_t>(i) % minimal_chern != 0) return false;
        auto mono = ai.as_monomial();
        if (!mono || mono->second != static_cast<std::int64_t>(i) / minimal_chern) return false;
    }
    return true;
}

void localization_checks(ShResult& res, std::uint64_t seed) {
    const int m = res.m, n = res.n;
    bool ok = true;
    std::ostringstream detail;
    for (int a = 0; a < n; ++a) {
        const Rational closed = subdiagonal_entry(m, n, a, CoefficientField::Rationals);
        for (std::uint64_t trial = 0; trial < 3; ++trial) {
            const Rational value = localize_Aa(m, n, a, sample_weights(m, seed + trial));
            if (value != closed) ok = false;
        }
        const auto placed = res.r_matrix(static_cast<std::size_t>(res.minimal_chern + a - 1), static_cast<std::size_t>(a));
        if (placed != NovikovScalar::monomial(to_field(closed, res.field), 1, res.field)) ok = false;
        detail << (a ? ", " : "") << "A_" << a << "=" << closed.get_str();
    }
    add(res, "localization_matches_tau", ok, detail.str() + " (3 weight vectors each)");
}

void exact_pipeline(ShResult& res, std::uint64_t seed) {
    const int m = res.m, n = res.n;
    const std::int64_t minimal_chern = res.minimal_chern;
    const GradingContext grading{minimal_chern};
    const LambdaMatrix& r = res.r_matrix;
    const std::size_t size = r.size();

    res.char_poly = char_poly(r);
    res.qh_cq = make_presentation(Generator::cQ, res.char_poly.ascending(), grading);
    try {
        res.qh_omega = change_generator(res.qh_cq, n);
    } catch (const NonInvertibleScale&) {
        res.qh_omega.reset();
    }

    const std::size_t k = stabilization_index(r);
    const std::size_t kernel_dim = stabilized_kernel(r).size();
    const ShPresentation shp = sh_presentation_from_charpoly(res.char_poly);
    const std::size_t p = shp.p;
    res.sh_rank = p;

    if (p == 0) {
        res.sh_kind = ShKind::ZeroRing;
        if (res.regime.kind == RegimeKind::CalabiYau)
            res.zero_reason = "c_1(TM) = 0 (n = 1+m)";
        else if (res.regime.kind == RegimeKind::LargeMinChern)
            res.zero_reason = "only constant sections contribute, so r is nilpotent";
        else if (char2_kills_r(n, res.field))
            res.zero_reason = "c_1(L)[P^1] = -n vanishes in characteristic 2";
        else
            res.zero_reason = "r is nilpotent";
        res.sh_cq = make_presentation(Generator::cQ, shp.relation, grading);
        if (res.qh_omega) res.sh_omega = change_generator(*res.sh_cq, n);
    } else {
        res.sh_kind = ShKind::Presentation;
        res.sh_cq = make_presentation(Generator::cQ, shp.relation, grading);
        if (res.qh_omega) res.sh_omega = change_generator(*res.sh_cq, n);
    }

    const LambdaMatrix ch = evaluate_at(res.char_poly.ascending(), r);
    add(res, "cayley_hamilton", ch.is_zero(), "char_poly(r) evaluated at r");
    add(res, "kernel_complement_rank", size - kernel_dim == p,
        "dim ker r^k = " + std::to_string(kernel_dim) + " at k = " + std::to_string(k) + ", p = " + std::to_string(p));
    add(res, "image_power_rank", image_power_rank(r, k) == p && image_power_rank(r, k + 3) == p,
        "rank r^k stabilizes at p");

    const std::size_t r_rank = rank(r);
    const std::vector<std::size_t> blocks = jordan_zero_block_sizes(r);
    if (r_rank == static_cast<std::size_t>(m)) {
        const std::vector<std::size_t> expected{size - p};
        add(res, "single_zero_jordan_block", blocks == expected && k == size - p,
            "blocks " + join(blocks) + ", stabilization index " + std::to_string(k));
    } else {
        add(res, "single_zero_jordan_block", char2_kills_r(n, res.field),
            "rank r = " + std::to_string(r_rank) + " (blocks " + join(blocks) + ")");
    }
    if (res.field == CoefficientField::Rationals)
        add(res, "r_rank_is_m", r_rank == static_cast<std::size_t>(m), "rank r = " + std::to_string(r_rank));

    bool homogeneous = r.is_homogeneous() && res.qh_cq.is_homogeneous() && res.sh_cq->is_homogeneous();
    if (res.qh_omega) homogeneous = homogeneous && res.qh_omega->is_homogeneous() && res.sh_omega->is_homogeneous();
    add(res, "homogeneity", homogeneous, "grading with |t| = 2N = " + std::to_string(2 * minimal_chern));

    if (minimal_chern != 0)
        add(res, "rank_constraints", rank_constraints(m, n, static_cast<std::int64_t>(p)),
            "rank " + std::to_string(p) + " < " + std::to_string(m + 1) + " and divisible by |N|");

    const bool nilpotent = vanishing_nilpotency(res);
    add(res, "nilpotency_biconditional", nilpotent == (p == 0),
        std::string("c_1(L) ") + (nilpotent ? "is" : "is not") + " nilpotent in QH");

    if (res.regime.kind == RegimeKind::Monotone) {
        add(res, "char_poly_degree_pattern", char_poly_degree_pattern(res.char_poly, minimal_chern),
            "a_i = 0 unless N | i, a_{kN} ~ t^k");
        const NovikovScalar expected = expected_leading_coefficient(m, n, res.field);
        add(res, "leading_coefficient_formula", res.char_poly.a[static_cast<std::size_t>(minimal_chern)] == expected,
            "a_N = " + res.char_poly.a[static_cast<std::size_t>(minimal_chern)].to_string());
        localization_checks(res, seed);
    }

    if (res.qh_omega && res.qh_omega->complete) {
        RingElement c1 = generator_power(*res.qh_omega, 1);
        for (auto& x : c1.coeffs) x *= field_constant(-n, res.field);
        const LambdaMatrix mult = multiplication_matrix(*res.qh_omega, c1);
        const LambdaMatrix basis = quantum_power_basis(r, n);
        const auto basis_inv = inverse(basis);
        bool ok = basis_inv.has_value() && r == basis * mult * *basis_inv;
        if (n == 1) ok = ok && mult == r;
        add(res, "multiplication_matrix_matches_r", ok,
            n == 1 ? "entrywise equal" : "equal after the classical-to-quantum power change of basis");
    }

    if (m == 1 && n == 1) {
        const std::int64_t degree = obstruction_degree_O11();
        add(res, "grr_obstruction_degree", r(0, 0) == NovikovScalar::monomial(degree, 1, res.field),
            "deg(Obs) = " + std::to_string(degree));
    }

    if (kodaira_threshold(m, n)) {
        LambdaPolynomial ordinary(size + 1, NovikovScalar(res.field));
        ordinary.back() = NovikovScalar::constant(1, res.field);
        add(res, "ordinary_qh_above_threshold", res.qh_cq.relation == ordinary && p == 0,
            "n > 2m: QH = Lambda[c]/(c^(m+1)), SH = 0");
    }
    if (vb_vanishing_predicate(minimal_chern, 1, m + 1))
        add(res, "vector_bundle_vanishing", p == 0, "|N| >= rank H*(P^m) forces SH = 0");
}

void partial_pipeline(ShResult& res, std::uint64_t seed) {
    const int m = res.m, n = res.n;
    const std::int64_t minimal_chern = res.minimal_chern;
    const GradingContext grading{minimal_chern};
    const auto big_n = static_cast<std::size_t>(minimal_chern);

    // Unknown entries carry t^d with d >= 2, so they cannot reach a_N (t^1).
    res.char_poly = char_poly(res.r_matrix);
    const NovikovScalar a_n = res.char_poly.a[big_n];

    LambdaPolynomial rel(static_cast<std::size_t>(m) + 2, NovikovScalar(res.field));
    rel.back() = NovikovScalar::constant(1, res.field);
    rel[static_cast<std::size_t>(m) + 1 - big_n] = a_n;
    res.qh_cq = make_presentation(Generator::cQ, std::move(rel), grading);
    res.qh_cq.complete = false;
    for (std::size_t k = 2; k * big_n <= static_cast<std::size_t>(m); ++k)
        res.qh_cq.unknown_powers.push_back(static_cast<std::size_t>(m) + 1 - k * big_n);
    try {
        res.qh_omega = change_generator(res.qh_cq, n);
    } catch (const NonInvertibleScale&) {
        res.qh_omega.reset();
    }

    PartialFacts facts;
    facts.sh_nonzero = !a_n.is_zero();
    facts.rank_multiple_of = minimal_chern;
    facts.rank_min = minimal_chern;
    facts.rank_max = (m / minimal_chern) * minimal_chern;
    facts.leading_coefficient = a_n;
    facts.unknown_positions = unknown_entry_positions(m, n, res.field);
    res.partial = facts;
    res.sh_kind = ShKind::Partial;

    add(res, "sh_nonzero", facts.sh_nonzero, "a_N = " + a_n.to_string() + " != 0");
    add(res, "leading_coefficient_formula", a_n == expected_leading_coefficient(m, n, res.field),
        "a_N = (-1)^N n^(N-1) (sum A_a) t");

    // Fill the unknown slots with random homogeneous values; a_N must not move.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(-9, 9);
    bool stable = true;
    for (int trial = 0; trial < 3; ++trial) {
        LambdaMatrix filled = res.r_matrix;
        for (auto [i, j] : facts.unknown_positions) {
            const std::int64_t d = (i - j + 1) / minimal_chern;
            filled(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                NovikovScalar::monomial(to_field(Rational(pick(rng)), res.field), d, res.field);
        }
        if (char_poly(filled).a[big_n] != a_n) stable = false;
    }
    add(res, "leading_coefficient_independent_of_unknowns", stable, "3 random completions of the unknown entries");
    add(res, "no_fabricated_coefficients", res.r_matrix.has_unknowns() && !res.qh_cq.complete,
        std::to_string(facts.unknown_positions.size()) + " undetermined r entries");
    localization_checks(res, seed);
}

}  // namespace

ShResult compute_sh(int m, int n, CoefficientField field, std::uint64_t seed) {
    ShResult res;
    res.m = m;
    res.n = n;
    res.field = field;
    res.regime = classify_regime(m, n);
    if (res.regime.kind == RegimeKind::Unsupported) refuse_unsupported(m, n);
    res.minimal_chern = minimal_chern_number(m, n);
    res.exact = res.regime.exact_mode || char2_kills_r(n, field);
    res.r_matrix = build_r_matrix(m, n, field);
    if (res.exact)
        exact_pipeline(res, seed);
    else
        partial_pipeline(res, seed);
    return res;
}

}  // namespace shcalc
