#ifndef PENTACODE_FIELD_HPP
#define PENTACODE_FIELD_HPP

#include <cstdint>

#include "pentacode/errors.hpp"

namespace pentacode {

// A field element is its canonical residue in [0, p).
using Fe = std::uint64_t;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/**
 * The prime field F_p with p ≡ 1 (mod 4).
 *
 * Construction validates p and finds the smallest residue a with a² ≡ −1,
 * which exists exactly because 4 | p−1.  Immutable after construction; all
 * operations are pure.
 */
class PrimeField {
   public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }
    Fe sqrt_minus_one() const noexcept { return a_; }

    Fe add(Fe x, Fe y) const noexcept {
        Fe s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    Fe sub(Fe x, Fe y) const noexcept { return x >= y ? x - y : x + (p_ - y); }
    Fe neg(Fe x) const noexcept { return x == 0 ? 0 : p_ - x; }
    Fe mul(Fe x, Fe y) const noexcept {
        return static_cast<Fe>(static_cast<unsigned __int128>(x) * y % p_);
    }
    Fe pow(Fe base, std::uint64_t e) const noexcept;
    Fe inv(Fe x) const;  // throws DivideByZeroError on x = 0
    Fe div(Fe x, Fe y) const { return mul(x, inv(y)); }

    // Maps an arbitrary signed integer into [0, p).
    Fe reduce(std::int64_t v) const noexcept;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    std::uint64_t p_;
    Fe a_;
};

}  // namespace pentacode

#endif
