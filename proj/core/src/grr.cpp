#include "shcalc/grr.hpp"

#include <stdexcept>
#include <string>

namespace shcalc {

BlowupSurfaceRing::BlowupSurfaceRing(IntMatrix base_form, std::vector<std::int64_t> base_canonical,
                                     std::int64_t base_euler, int k)
    : base_form_(std::move(base_form)),
      base_canonical_(std::move(base_canonical)),
      base_euler_(base_euler),
      k_(k) {
    const std::size_t r = base_form_.size();
    if (k_ < 0) throw std::invalid_argument("number of blown-up points must be >= 0");
    if (base_canonical_.size() != r) throw std::invalid_argument("canonical class does not match the base rank");
    for (std::size_t i = 0; i < r; ++i) {
        if (base_form_[i].size() != r) throw std::invalid_argument("base intersection form is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (base_form_[i][j] != base_form_[j][i])
                throw std::invalid_argument("base intersection form is not symmetric");
    }
}

IntMatrix BlowupSurfaceRing::form() const {
    const auto n = static_cast<std::size_t>(rank());
    IntMatrix q(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < base_form_.size(); ++i)
        for (std::size_t j = 0; j < base_form_.size(); ++j) q[i][j] = base_form_[i][j];
    for (std::size_t e = base_form_.size(); e < n; ++e) q[e][e] = -1;
    return q;
}

DivisorClass BlowupSurfaceRing::pullback(const std::vector<std::int64_t>& base_class) const {
    if (base_class.size() != base_form_.size())
        throw std::invalid_argument("base class has the wrong length");
    DivisorClass d{base_class};
    d.coeffs.resize(static_cast<std::size_t>(rank()), 0);
    return d;
}

DivisorClass BlowupSurfaceRing::exceptional(int index) const {
    if (index < 0 || index >= k_) throw std::out_of_range("no exceptional curve " + std::to_string(index));
    DivisorClass d{std::vector<std::int64_t>(static_cast<std::size_t>(rank()), 0)};
    d.coeffs[base_form_.size() + static_cast<std::size_t>(index)] = 1;
    return d;
}

DivisorClass BlowupSurfaceRing::canonical() const {
    DivisorClass k = pullback(base_canonical_);
    for (std::size_t e = base_form_.size(); e < k.coeffs.size(); ++e) k.coeffs[e] = 1;
    return k;
}

DivisorClass BlowupSurfaceRing::first_chern() const {
    DivisorClass c = canonical();
    for (auto& x : c.coeffs) x = -x;
    return c;
}

BlowupSurfaceRing blowup_ring(const IntMatrix& base_form, const std::vector<std::int64_t>& base_canonical,
                              std::int64_t base_euler, int k) {
    return BlowupSurfaceRing(base_form, base_canonical, base_euler, k);
}

BlowupSurfaceRing p1xp1_blown_up_twice() { return blowup_ring({{0, 1}, {1, 0}}, {-2, -2}, 4, 2); }

std::int64_t intersect(const BlowupSurfaceRing& ring, const DivisorClass& d1, const DivisorClass& d2) {
    const auto n = static_cast<std::size_t>(ring.rank());
    if (d1.coeffs.size() != n || d2.coeffs.size() != n)
        throw std::invalid_argument("divisor class length does not match the ring rank " + std::to_string(n));
    const IntMatrix q = ring.form();
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += d1.coeffs[i] * q[i][j] * d2.coeffs[j];
    return s;
}

GrrIntegrals grr_integrals(const BlowupSurfaceRing& ring, const DivisorClass& z) {
    const DivisorClass c1 = ring.first_chern();
    return {ring.euler(), intersect(ring, c1, c1), intersect(ring, c1, z), intersect(ring, z, z)};
}

Rational grr_chi(const BlowupSurfaceRing& ring, const DivisorClass& z) {
    const GrrIntegrals in = grr_integrals(ring, z);
    Rational chi = Rational(in.c2) / 12 + Rational(in.c1_squared) / 12 + Rational(in.c1_z) / 2 +
                   Rational(in.z_squared) / 2;
    chi.canonicalize();
    return chi;
}

std::int64_t obstruction_degree_O11() {
    const BlowupSurfaceRing ring = p1xp1_blown_up_twice();
    const Rational chi = grr_chi(ring, ring.pullback({-1, -1}));
    // chi = h^0 - h^1 = 1 - deg(R^1 pi_* F); the moduli space is P^1.
    const Rational degree = 1 - chi;
    if (degree.get_den() != 1) throw std::logic_error("non-integral obstruction degree");
    return degree.get_num().get_si();
}

}  // namespace shcalc
