#pragma once

// End-to-end computation of QH*(M) and SH*(M) = QH*(M)/ker r^k for
// M = Tot(O(-n) -> P^m).

#include "shcalc/gw_entries.hpp"
#include "shcalc/linalg.hpp"
#include "shcalc/novikov.hpp"
#include "shcalc/quantum_ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shcalc {

enum class RegimeKind {
    Monotone,       // 1 <= n < 1+m
    CalabiYau,      // n = 1+m
    Unsupported,    // 2+m <= n <= 2m
    LargeMinChern,  // n >= 1+2m
};

const char* to_string(RegimeKind kind);

struct Regime {
    RegimeKind kind = RegimeKind::Monotone;
    /// Every r-matrix entry is known: Monotone with 2N > m, CalabiYau, LargeMinChern.
    bool exact_mode = false;
};

class UnsupportedRegime : public RegimeError {
public:
    using RegimeError::RegimeError;
};

inline std::int64_t minimal_chern_number(int m, int n) { return 1 + static_cast<std::int64_t>(m) - n; }

Regime classify_regime(int m, int n);

/// r in the basis omega^m, ..., omega, 1: -n on the superdiagonal, A_a t at
/// 1-based position (N+a, 1+a), and degree >= 2 positions (dN+a, 1+a)
/// flagged unknown when they fall inside the matrix. Last row zero.
LambdaMatrix build_r_matrix(int m, int n, CoefficientField field);

/// 1-based positions of undetermined (degree >= 2) entries of r.
std::vector<std::pair<int, int>> unknown_entry_positions(int m, int n, CoefficientField field);

struct Diagnostic {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// What is proven about SH when degree >= 2 entries are unknown.
struct PartialFacts {
    bool sh_nonzero = false;
    std::int64_t rank_multiple_of = 0;
    std::int64_t rank_min = 0;
    std::int64_t rank_max = 0;
    NovikovScalar leading_coefficient;  // a_N
    std::vector<std::pair<int, int>> unknown_positions;
};

enum class ShKind { Presentation, ZeroRing, Partial };

const char* to_string(ShKind kind);

struct ShResult {
    int m = 0;
    int n = 0;
    std::int64_t minimal_chern = 0;
    CoefficientField field = CoefficientField::Rationals;
    Regime regime;
    bool exact = false;  // all r entries known (regime exact or forced by char 2)

    LambdaMatrix r_matrix{0, CoefficientField::Rationals};
    CharPoly char_poly;

    RingPresentation qh_cq;
    std::optional<RingPresentation> qh_omega;

    ShKind sh_kind = ShKind::ZeroRing;
    std::optional<RingPresentation> sh_cq;
    std::optional<RingPresentation> sh_omega;
    std::optional<PartialFacts> partial;
    std::optional<std::size_t> sh_rank;
    std::string zero_reason;

    std::vector<Diagnostic> diagnostics;

    const RingPresentation& qh() const { return qh_omega ? *qh_omega : qh_cq; }
    const RingPresentation* sh() const { return sh_omega ? &*sh_omega : (sh_cq ? &*sh_cq : nullptr); }
    bool all_diagnostics_pass() const;
};

/// seed drives the torus weights used by the localization cross-check.
ShResult compute_sh(int m, int n, CoefficientField field, std::uint64_t seed = 0);

/// c_1(L) nilpotent in QH; must agree with sh_rank == 0. Rejects partial results.
bool vanishing_nilpotency(const ShResult& result);

/// sh_rank < m+1 and, when N != 0, sh_rank divisible by |N|.
bool rank_constraints(int m, int n, std::int64_t sh_rank);

/// |N| >= rank_C(E) * rank H*(B).
bool vb_vanishing_predicate(std::int64_t min_chern, std::int64_t rank_e, std::int64_t rank_hb);

/// n > 2m: the quantum product is ordinary and SH vanishes.
inline bool kodaira_threshold(int m, int n) { return n > 2 * m; }

/// (-1)^N n^(N-1) (sum_a A_a) t, the leading char-poly coefficient a_N.
NovikovScalar expected_leading_coefficient(int m, int n, CoefficientField field);

/// Closed-form quantum cohomology Lambda[omega]/(omega^(1+m) + n^n t omega^n)
/// for 1 <= n < 1+m/2 (over Q; reduced into the field otherwise).
RingPresentation closed_form_qh(int m, int n, CoefficientField field);

/// Change of basis whose column k holds the quantum power omega_Q^(m-k)
/// written in the classical basis omega^m, ..., 1 (columns of r^k applied to 1,
/// divided by (-n)^k). Identity exactly when quantum and classical powers agree.
LambdaMatrix quantum_power_basis(const LambdaMatrix& r, int n);

}  // namespace shcalc
