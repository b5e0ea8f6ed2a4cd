#pragma once

// Exact linear algebra over the Novikov field: characteristic polynomials,
// kernels of powers, and the generalized 0-eigenspace data that determines
// the rank of the stabilized quotient.

#include "shcalc/novikov.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace shcalc {

using LambdaVector = std::vector<NovikovScalar>;
/// Polynomial in one variable over Lambda, coefficient of x^k at index k.
using LambdaPolynomial = std::vector<NovikovScalar>;

/// What column j means: gen^(s-1-j) for the power bases, nothing for Abstract.
enum class BasisLabel { OmegaPowers, CQPowers, Abstract };

const char* to_string(BasisLabel basis);

/// Square matrix over Lambda. Indices are 0-based; the matrix entry at
/// (i, j) acts on the j-th basis vector and lands in the i-th coordinate.
class LambdaMatrix {
public:
    LambdaMatrix(std::size_t size, CoefficientField field, BasisLabel basis = BasisLabel::Abstract,
                 std::optional<GradingContext> grading = std::nullopt);

    static LambdaMatrix identity(std::size_t size, CoefficientField field);

    std::size_t size() const { return size_; }
    CoefficientField field() const { return field_; }
    BasisLabel basis() const { return basis_; }
    const std::optional<GradingContext>& grading() const { return grading_; }
    LambdaMatrix with_basis(BasisLabel basis, std::optional<GradingContext> grading) const;

    const NovikovScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    NovikovScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }

    /// Entries whose value is not determined (stored as zero).
    bool is_unknown(std::size_t i, std::size_t j) const { return unknown_[i * size_ + j]; }
    void mark_unknown(std::size_t i, std::size_t j) { unknown_[i * size_ + j] = true; }
    bool has_unknowns() const;

    bool is_zero() const;
    LambdaVector column(std::size_t j) const;
    LambdaVector apply(const LambdaVector& v) const;
    LambdaMatrix power(std::size_t k) const;

    /// With a grading and a power basis: every nonzero entry (i, j) is a
    /// monomial c t^d with N d = i - j + 1 (1-based indices).
    bool is_homogeneous() const;

    friend LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b);
    friend LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b);
    friend LambdaMatrix operator*(const NovikovScalar& c, const LambdaMatrix& a);
    /// Compares entries only.
    friend bool operator==(const LambdaMatrix& a, const LambdaMatrix& b);

    std::vector<std::vector<std::string>> to_strings() const;

private:
    std::size_t size_;
    CoefficientField field_;
    BasisLabel basis_;
    std::optional<GradingContext> grading_;
    std::vector<NovikovScalar> entries_;
    std::vector<bool> unknown_;
};

/// det(lambda I - M) = lambda^s + a_1 lambda^(s-1) + ... + a_s; a[0] = 1.
struct CharPoly {
    std::vector<NovikovScalar> a;

    std::size_t degree() const { return a.size() - 1; }
    /// Ascending coefficients (index k holds the coefficient of lambda^k).
    LambdaPolynomial ascending() const;
};

/// Division-free (Berkowitz) characteristic polynomial.
CharPoly char_poly(const LambdaMatrix& m);

/// p(M) for a polynomial with ascending coefficients.
LambdaMatrix evaluate_at(const LambdaPolynomial& p, const LambdaMatrix& m);

std::size_t rank(const LambdaMatrix& m);
/// Basis of the right kernel, one vector per free column.
std::vector<LambdaVector> kernel_basis(const LambdaMatrix& m);
std::optional<LambdaMatrix> inverse(const LambdaMatrix& m);

/// dim ker M^k for k = 0, 1, ..., up to and including the first repeat.
std::vector<std::size_t> kernel_power_dimensions(const LambdaMatrix& m);

/// Smallest k >= 0 with dim ker M^(k+1) = dim ker M^k.
std::size_t stabilization_index(const LambdaMatrix& m);

/// Basis of ker M^k for k = stabilization_index(M): the generalized
/// eigenspace for eigenvalue 0.
std::vector<LambdaVector> stabilized_kernel(const LambdaMatrix& m);

/// Sizes of the Jordan blocks for eigenvalue 0, descending.
std::vector<std::size_t> jordan_zero_block_sizes(const LambdaMatrix& m);

std::size_t image_power_rank(const LambdaMatrix& m, std::size_t k);

/// Quotient by the generalized 0-eigenspace: Lambda[c]/(c^p + a_1 c^(p-1) + ... + a_p)
/// where p is the last index with a_p != 0. p = 0 means the zero ring.
struct ShPresentation {
    std::size_t p = 0;
    LambdaPolynomial relation;  // ascending, monic of degree p
};

ShPresentation sh_presentation_from_charpoly(const CharPoly& cp);

}  // namespace shcalc
