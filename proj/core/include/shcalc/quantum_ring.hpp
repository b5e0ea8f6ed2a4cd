#pragma once

// Singly generated quotient rings Lambda[x]/(relation) modelling quantum and
// symplectic cohomology, in either the c_Q = c_1(L) or the omega_Q generator.

#include "shcalc/linalg.hpp"
#include "shcalc/novikov.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shcalc {

enum class Generator { cQ, omegaQ };

const char* to_string(Generator g);

class IncompletePresentation : public std::logic_error {
public:
    IncompletePresentation() : std::logic_error("presentation has undetermined coefficients") {}
};

class PresentationMismatch : public std::invalid_argument {
public:
    PresentationMismatch() : std::invalid_argument("ring elements belong to different presentations") {}
};

class NonInvertibleScale : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Lambda[gen]/(relation) with relation monic. The ring has rank
/// deg(relation) with basis gen^(rank-1), ..., gen, 1. When `complete` is
/// false the powers listed in `unknown_powers` have undetermined
/// coefficients (stored as zero).
struct RingPresentation {
    Generator generator = Generator::omegaQ;
    LambdaPolynomial relation;  // ascending, monic
    std::optional<GradingContext> grading;
    bool complete = true;
    std::vector<std::size_t> unknown_powers;

    std::size_t rank() const { return relation.empty() ? 0 : relation.size() - 1; }
    CoefficientField field() const { return relation.front().field(); }
    bool is_zero_ring() const { return rank() == 0; }

    /// True when every relation coefficient of gen^k is homogeneous of
    /// degree 2(rank - k) (generator in degree 2, t in degree 2N).
    bool is_homogeneous() const;

    /// e.g. "Lambda[omega]/(omega^4 + 4*t^1)".
    std::string to_string() const;

    friend bool operator==(const RingPresentation& a, const RingPresentation& b);
};

RingPresentation make_presentation(Generator generator, LambdaPolynomial relation,
                                   std::optional<GradingContext> grading = std::nullopt);

/// Reduced element: coeffs[k] is the coefficient of gen^k, k < rank.
struct RingElement {
    std::vector<NovikovScalar> coeffs;
    friend bool operator==(const RingElement& a, const RingElement& b) { return a.coeffs == b.coeffs; }
};

/// Canonical representative of a raw polynomial (ascending coefficients).
RingElement reduce(const RingPresentation& pres, const LambdaPolynomial& raw);

RingElement unit(const RingPresentation& pres);
RingElement generator_power(const RingPresentation& pres, std::size_t k);

RingElement multiply(const RingPresentation& pres, const RingElement& x, const RingElement& y);
RingElement add(const RingPresentation& pres, const RingElement& x, const RingElement& y);
RingElement power(const RingPresentation& pres, const RingElement& x, std::size_t k);

/// Matrix of y -> x*y in the basis gen^(rank-1), ..., gen, 1.
LambdaMatrix multiplication_matrix(const RingPresentation& pres, const RingElement& x);

/// Substitute c = -n*omega in a c_Q presentation and renormalize to monic.
/// Throws NonInvertibleScale when n is zero in the coefficient field.
RingPresentation change_generator(const RingPresentation& pres, int n);

/// Inverse substitution omega = -c/n.
RingPresentation change_generator_to_c(const RingPresentation& pres, int n);

/// x^rank == 0.
bool is_nilpotent_element(const RingPresentation& pres, const RingElement& x);

}  // namespace shcalc
