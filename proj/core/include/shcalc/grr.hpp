#pragma once

// Intersection theory on point blow-ups of algebraic surfaces, and the
// Riemann-Roch count that fixes the degree of the obstruction bundle for
// degree-one sections of O(-1) -> P^1.

#include "shcalc/novikov.hpp"

#include <cstdint>
#include <vector>

namespace shcalc {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Divisor classes are coefficient vectors: pulled-back base classes first,
/// then one coordinate per exceptional curve E_1..E_k.
struct DivisorClass {
    std::vector<std::int64_t> coeffs;
};

class BlowupSurfaceRing {
public:
    BlowupSurfaceRing(IntMatrix base_form, std::vector<std::int64_t> base_canonical, std::int64_t base_euler,
                      int k);

    int base_rank() const { return static_cast<int>(base_form_.size()); }
    int blown_up_points() const { return k_; }
    int rank() const { return base_rank() + k_; }
    std::int64_t euler() const { return base_euler_ + k_; }

    /// Gram matrix of the blow-up: base form plus -1 on each E_i, with
    /// E_i . pi^*D = 0.
    IntMatrix form() const;
    /// K = pi^*K_S + sum E_i.
    DivisorClass canonical() const;
    /// c_1 = -K.
    DivisorClass first_chern() const;

    DivisorClass pullback(const std::vector<std::int64_t>& base_class) const;
    DivisorClass exceptional(int index) const;

private:
    IntMatrix base_form_;
    std::vector<std::int64_t> base_canonical_;
    std::int64_t base_euler_;
    int k_;
};

BlowupSurfaceRing blowup_ring(const IntMatrix& base_form, const std::vector<std::int64_t>& base_canonical,
                              std::int64_t base_euler, int k);

BlowupSurfaceRing p1xp1_blown_up_twice();

std::int64_t intersect(const BlowupSurfaceRing& ring, const DivisorClass& d1, const DivisorClass& d2);

/// Holomorphic Euler characteristic of the line bundle with class z:
///   chi_top/12 + c1^2/12 + c1.z/2 + z.z/2.
Rational grr_chi(const BlowupSurfaceRing& ring, const DivisorClass& z);

/// The four integrals appearing in grr_chi.
struct GrrIntegrals {
    std::int64_t c2 = 0;
    std::int64_t c1_squared = 0;
    std::int64_t c1_z = 0;
    std::int64_t z_squared = 0;
};

GrrIntegrals grr_integrals(const BlowupSurfaceRing& ring, const DivisorClass& z);

/// 1 - chi on Bl(P^1 x P^1, 2 pts) with z = pi^*(-1,-1).
std::int64_t obstruction_degree_O11();

}  // namespace shcalc
