#ifndef PENTACODE_RING5_HPP
#define PENTACODE_RING5_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "pentacode/poly.hpp"

namespace pentacode {

// An element of F_p[v]/(v⁵−v), stored in the idempotent (CRT) basis:
// r = b₁η₁ + b₂η₂ + b₃η₃ + b₄η₄ + b₅η₅.
struct RingElement {
    std::array<Fe, 5> crt{};

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

using RingVector = std::vector<RingElement>;

/**
 * Everything the ring F_p[v]/(v⁵−v) needs: the five roots of v⁵−v, the five
 * orthogonal idempotents η₁..η₅, and the 5×5 Gray matrix.
 *
 * The roots are ordered (0, 1, p−1, p−a, a) where a is the smallest square
 * root of −1; that ordering fixes which field copy each component index
 * refers to.  The Gray matrix is the circulant with first row
 * (6, 2, 3, −6, 6) reduced mod p; its rows are mutually orthogonal with
 * common self-inner-product 121 mod p, computed and asserted nonzero here.
 *
 * Immutable after construction; all operations are pure.
 */
class RingContext {
   public:
    explicit RingContext(const PrimeField& field);

    const PrimeField& field() const noexcept { return field_; }
    const std::array<Fe, 5>& roots() const noexcept { return roots_; }
    const Poly& eta(std::size_t i) const { return etas_.at(i); }  // i in [0, 5)
    const std::array<std::array<Fe, 5>, 5>& gray_matrix() const noexcept { return gray_; }
    Fe gray_norm() const noexcept { return gray_norm_; }  // 121 mod p

    Poly to_v_basis(const RingElement& e) const;
    RingElement from_v_basis(const Poly& f) const;  // reduces mod v⁵−v first

    RingElement add(const RingElement& x, const RingElement& y) const;
    RingElement mul(const RingElement& x, const RingElement& y) const;
    RingElement neg(const RingElement& x) const;

    std::array<Fe, 5> gray_phi(const RingElement& e) const;
    std::vector<Fe> gray_big_phi(const RingVector& v) const;

    unsigned lee_weight(const RingElement& e) const;
    std::uint64_t lee_weight(const RingVector& v) const;
    std::uint64_t lee_distance(const RingVector& x, const RingVector& y) const;

   private:
    PrimeField field_;
    std::array<Fe, 5> roots_;
    std::array<Poly, 5> etas_;
    std::array<std::array<Fe, 5>, 5> gray_;
    Fe gray_norm_;
};

}  // namespace pentacode

#endif
