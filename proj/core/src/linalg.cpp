#include "shcalc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace shcalc {

const char* to_string(BasisLabel basis) {
    switch (basis) {
        case BasisLabel::OmegaPowers: return "omega";
        case BasisLabel::CQPowers: return "cQ";
        case BasisLabel::Abstract: break;
    }
    return "abstract";
}

LambdaMatrix::LambdaMatrix(std::size_t size, CoefficientField field, BasisLabel basis,
                           std::optional<GradingContext> grading)
    : size_(size),
      field_(field),
      basis_(basis),
      grading_(grading),
      entries_(size * size, NovikovScalar(field)),
      unknown_(size * size, false) {}

LambdaMatrix LambdaMatrix::identity(std::size_t size, CoefficientField field) {
    LambdaMatrix id(size, field);
    for (std::size_t i = 0; i < size; ++i) id(i, i) = NovikovScalar::constant(1, field);
    return id;
}

LambdaMatrix LambdaMatrix::with_basis(BasisLabel basis, std::optional<GradingContext> grading) const {
    LambdaMatrix out = *this;
    out.basis_ = basis;
    out.grading_ = grading;
    return out;
}

bool LambdaMatrix::has_unknowns() const {
    return std::find(unknown_.begin(), unknown_.end(), true) != unknown_.end();
}

bool LambdaMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const NovikovScalar& x) { return x.is_zero(); });
}

LambdaVector LambdaMatrix::column(std::size_t j) const {
    LambdaVector v;
    v.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) v.push_back((*this)(i, j));
    return v;
}

LambdaVector LambdaMatrix::apply(const LambdaVector& v) const {
    if (v.size() != size_) throw std::invalid_argument("vector length does not match matrix size");
    LambdaVector out(size_, NovikovScalar(field_));
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

LambdaMatrix LambdaMatrix::power(std::size_t k) const {
    LambdaMatrix out = identity(size_, field_);
    for (std::size_t e = 0; e < k; ++e) out = out * *this;
    return out.with_basis(basis_, grading_);
}

bool LambdaMatrix::is_homogeneous() const {
    if (!grading_ || basis_ == BasisLabel::Abstract) return true;
    const auto minimal_chern = grading_->minimal_chern;
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) {
            const NovikovScalar& x = (*this)(i, j);
            if (x.is_zero()) continue;
            auto mono = x.as_monomial();
            if (!mono) return false;
            const auto offset = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j) + 1;
            if (minimal_chern * mono->second != offset) return false;
        }
    return true;
}

namespace {

void require_same_shape(const LambdaMatrix& a, const LambdaMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
    if (a.field() != b.field()) throw FieldMismatch();
}

}  // namespace

LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b) {
    require_same_shape(a, b);
    const std::size_t s = a.size();
    LambdaMatrix out(s, a.field());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < s; ++k) {
            const NovikovScalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < s; ++j)
                if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
        }
    return out;
}

LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b) {
    require_same_shape(a, b);
    LambdaMatrix out(a.size(), a.field());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

LambdaMatrix operator*(const NovikovScalar& c, const LambdaMatrix& a) {
    LambdaMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = c * a(i, j);
    return out;
}

bool operator==(const LambdaMatrix& a, const LambdaMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
}

std::vector<std::vector<std::string>> LambdaMatrix::to_strings() const {
    std::vector<std::vector<std::string>> rows(size_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
            rows[i].push_back(is_unknown(i, j) ? "?" : (*this)(i, j).to_string());
    return rows;
}

LambdaPolynomial CharPoly::ascending() const { return LambdaPolynomial(a.rbegin(), a.rend()); }

CharPoly char_poly(const LambdaMatrix& m) {
    const std::size_t s = m.size();
    const CoefficientField field = m.field();
    const NovikovScalar one = NovikovScalar::constant(1, field);
    if (s == 0) return {{one}};

    // c holds det(lambda I - M_r) for the leading r x r block, highest power first.
    std::vector<NovikovScalar> c{one, -m(0, 0)};
    for (std::size_t r = 1; r < s; ++r) {
        // Toeplitz column: 1, -m_rr, -R S, -R M_r S, ..., -R M_r^(r-1) S.
        std::vector<NovikovScalar> q{one, -m(r, r)};
        LambdaVector v(r, NovikovScalar(field));
        for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
        for (std::size_t k = 2; k <= r + 1; ++k) {
            NovikovScalar dot(field);
            for (std::size_t i = 0; i < r; ++i)
                if (!m(r, i).is_zero() && !v[i].is_zero()) dot += m(r, i) * v[i];
            q.push_back(-dot);
            if (k == r + 1) break;
            LambdaVector next(r, NovikovScalar(field));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (!m(i, j).is_zero() && !v[j].is_zero()) next[i] += m(i, j) * v[j];
            v = std::move(next);
        }
        std::vector<NovikovScalar> next(r + 2, NovikovScalar(field));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (!q[i - j].is_zero() && !c[j].is_zero()) next[i] += q[i - j] * c[j];
        c = std::move(next);
    }
    return {std::move(c)};
}

LambdaMatrix evaluate_at(const LambdaPolynomial& p, const LambdaMatrix& m) {
    // Horner.
    LambdaMatrix acc(m.size(), m.field());
    const LambdaMatrix id = LambdaMatrix::identity(m.size(), m.field());
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * m + p[k] * id;
    return acc;
}

namespace {

// Fraction-free row echelon form (Bareiss). Rows are first cleared of
// denominators, so every entry stays a Laurent polynomial and each division
// by the previous pivot is exact.
struct Echelon {
    std::vector<LambdaVector> rows;
    std::vector<std::size_t> pivot_cols;
};

Echelon fraction_free_echelon(const LambdaMatrix& m) {
    const std::size_t s = m.size();
    const CoefficientField field = m.field();
    Echelon e;
    e.rows.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
        NovikovScalar scale = NovikovScalar::constant(1, field);
        for (std::size_t j = 0; j < s; ++j) {
            const NovikovScalar& x = m(i, j);
            if (!x.is_laurent()) scale *= NovikovScalar(x.denominator());
        }
        for (std::size_t j = 0; j < s; ++j) e.rows[i].push_back(m(i, j) * scale);
    }
    NovikovScalar prev = NovikovScalar::constant(1, field);
    std::size_t row = 0;
    for (std::size_t col = 0; col < s && row < s; ++col) {
        std::size_t pivot = row;
        while (pivot < s && e.rows[pivot][col].is_zero()) ++pivot;
        if (pivot == s) continue;
        std::swap(e.rows[row], e.rows[pivot]);
        const NovikovScalar p = e.rows[row][col];
        const NovikovScalar prev_inv = prev.inverse();
        for (std::size_t r = row + 1; r < s; ++r) {
            const NovikovScalar f = e.rows[r][col];
            for (std::size_t j = col + 1; j < s; ++j) {
                NovikovScalar x = p * e.rows[r][j];
                if (!f.is_zero()) x -= f * e.rows[row][j];
                e.rows[r][j] = x * prev_inv;
            }
            e.rows[r][col] = NovikovScalar(field);
        }
        prev = p;
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

std::size_t rank(const LambdaMatrix& m) { return fraction_free_echelon(m).pivot_cols.size(); }

std::vector<LambdaVector> kernel_basis(const LambdaMatrix& m) {
    const std::size_t s = m.size();
    const CoefficientField field = m.field();
    const Echelon e = fraction_free_echelon(m);
    std::vector<bool> is_pivot(s, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<LambdaVector> basis;
    for (std::size_t free = 0; free < s; ++free) {
        if (is_pivot[free]) continue;
        LambdaVector v(s, NovikovScalar(field));
        v[free] = NovikovScalar::constant(1, field);
        // Back substitution through the echelon rows, last pivot first.
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = e.pivot_cols[k];
            NovikovScalar acc(field);
            for (std::size_t j = pc + 1; j < s; ++j)
                if (!v[j].is_zero() && !e.rows[k][j].is_zero()) acc += e.rows[k][j] * v[j];
            v[pc] = acc.is_zero() ? acc : -acc / e.rows[k][pc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LambdaMatrix> inverse(const LambdaMatrix& m) {
    const std::size_t s = m.size();
    std::vector<LambdaVector> aug(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) aug[i].push_back(m(i, j));
        for (std::size_t j = 0; j < s; ++j)
            aug[i].push_back(i == j ? NovikovScalar::constant(1, m.field()) : NovikovScalar(m.field()));
    }
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t pivot = col;
        while (pivot < s && aug[pivot][col].is_zero()) ++pivot;
        if (pivot == s) return std::nullopt;
        std::swap(aug[col], aug[pivot]);
        const NovikovScalar inv = aug[col][col].inverse();
        for (auto& x : aug[col]) x *= inv;
        for (std::size_t r = 0; r < s; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            const NovikovScalar f = aug[r][col];
            for (std::size_t j = 0; j < 2 * s; ++j)
                if (!aug[col][j].is_zero()) aug[r][j] -= f * aug[col][j];
        }
    }
    LambdaMatrix out(s, m.field(), m.basis(), m.grading());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) out(i, j) = aug[i][s + j];
    return out;
}

std::vector<std::size_t> kernel_power_dimensions(const LambdaMatrix& m) {
    std::vector<std::size_t> dims{0};
    LambdaMatrix pw = m;
    for (;;) {
        dims.push_back(m.size() - rank(pw));
        if (dims.back() == dims[dims.size() - 2]) return dims;
        pw = pw * m;
    }
}

std::size_t stabilization_index(const LambdaMatrix& m) { return kernel_power_dimensions(m).size() - 2; }

std::vector<LambdaVector> stabilized_kernel(const LambdaMatrix& m) {
    return kernel_basis(m.power(stabilization_index(m)));
}

std::vector<std::size_t> jordan_zero_block_sizes(const LambdaMatrix& m) {
    const std::vector<std::size_t> d = kernel_power_dimensions(m);
    // at_least[k] = number of blocks of size >= k.
    std::vector<std::size_t> at_least(d.size() + 1, 0);
    for (std::size_t k = 1; k < d.size(); ++k) at_least[k] = d[k] - d[k - 1];
    std::vector<std::size_t> sizes;
    for (std::size_t k = d.size(); k-- > 1;)
        for (std::size_t c = at_least[k + 1]; c < at_least[k]; ++c) sizes.push_back(k);
    return sizes;
}

std::size_t image_power_rank(const LambdaMatrix& m, std::size_t k) { return rank(m.power(k)); }

ShPresentation sh_presentation_from_charpoly(const CharPoly& cp) {
    std::size_t p = 0;
    for (std::size_t i = cp.a.size(); i-- > 1;)
        if (!cp.a[i].is_zero()) {
            p = i;
            break;
        }
    ShPresentation out;
    out.p = p;
    for (std::size_t k = 0; k <= p; ++k) out.relation.push_back(cp.a[p - k]);
    return out;
}

}  // namespace shcalc
