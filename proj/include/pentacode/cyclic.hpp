#ifndef PENTACODE_CYCLIC_HPP
#define PENTACODE_CYCLIC_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "pentacode/linear.hpp"
#include "pentacode/ring5.hpp"

namespace pentacode {

/**
 * A cyclic code of length n over F_p: the ideal ⟨g⟩ of F_p[x]/(xⁿ−1) with g
 * a monic divisor of xⁿ−1, deg g < n.  Dimension k = n − deg g.
 */
class CyclicCode {
   public:
    CyclicCode(const PrimeField& field, std::size_t n, Poly g, std::ostream* warn = nullptr);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    const Poly& gen_poly() const noexcept { return g_; }

   private:
    PrimeField field_;
    std::size_t n_, k_;
    Poly g_;
};

// Generator matrix with rows xⁱ·g(x), i ∈ [0, k).
Matrix generator_matrix(const CyclicCode& c);

// The dual ⟨h*⟩ where g·h = xⁿ−1; ZeroDualError when g = 1 (the dual of the
// full space is the zero code).
CyclicCode cyclic_dual(const CyclicCode& c);

// xⁿ−1 ≡ 0 (mod g·g*): the code contains its dual.
bool dual_containing(const PrimeField& F, std::size_t n, const Poly& g);

/**
 * A cyclic code over R = F_p[v]/(v⁵−v) of length n, stored as the five
 * component generator polynomials g₁..g₅ (each a monic divisor of xⁿ−1).
 * Components with gᵢ = xⁿ−1 are zero components; at least one component must
 * be nonzero.
 */
class RCyclicCode {
   public:
    RCyclicCode(std::shared_ptr<const RingContext> ctx, std::size_t n, std::array<Poly, 5> gens,
                std::ostream* warn = nullptr);

    const RingContext& ctx() const noexcept { return *ctx_; }
    std::shared_ptr<const RingContext> ctx_ptr() const noexcept { return ctx_; }
    std::size_t n() const noexcept { return n_; }
    const std::array<Poly, 5>& gens() const noexcept { return gens_; }
    std::size_t component_dim(std::size_t i) const;  // n − deg gᵢ

   private:
    std::shared_ptr<const RingContext> ctx_;
    std::size_t n_;
    std::array<Poly, 5> gens_;
};

// log_q |C| = 5n − Σ deg gᵢ
std::size_t cardinality_exponent(const RCyclicCode& c);
// |C| = q^exponent as a decimal string
std::string cardinality_decimal(const RCyclicCode& c);

// Componentwise duals ⟨hᵢ*⟩; ZeroDualError when the result would be the zero
// code (all gᵢ = 1).
RCyclicCode r_dual(const RCyclicCode& c);

// The per-component criterion xⁿ−1 ≡ 0 (mod gᵢgᵢ*) for all i.
bool r_dual_containing(const RCyclicCode& c);

// w ∈ C iff each CRT coordinate sequence, read as a polynomial, is divisible
// by the matching gᵢ.
bool membership(const RCyclicCode& c, const RingVector& w);

// Codeword with i-th coordinate polynomial mᵢ·gᵢ mod (xⁿ−1); message degrees
// must satisfy deg mᵢ < n − deg gᵢ.
RingVector encode(const RCyclicCode& c, const std::array<Poly, 5>& messages);

RingVector cyclic_shift(const RingVector& w);

// Rows Φ(ηᵢ·xʲ·gᵢ) for i ∈ [1,5], j ∈ [0, n−deg gᵢ), as ring vectors.
std::vector<RingVector> generator_rows(const RCyclicCode& c);

// The [5n, Σ(n−deg gᵢ)] Gray image; the rank is checked against the
// cardinality exponent.
LinearCode gray_image(const RCyclicCode& c);

// Row-space equality Φ(C⊥) = Φ(C)⊥.
bool gray_dual_equality(const RCyclicCode& c);

struct QuantumParams {
    std::size_t N;    // 5n
    std::int64_t K;   // 2k − 5n
    unsigned D;       // minimum distance of the Gray image
    std::uint64_t q;  // field size

    friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

// CSS parameters from a dual-containing code; NotDualContainingError otherwise.
QuantumParams css_from_code(const RCyclicCode& c, const DistanceConfig& cfg = {});

struct SearchOptions {
    unsigned min_distance_floor = 1;
    std::uint64_t max_tuples = 100'000;
    bool dedupe_by_params = false;
    std::uint64_t divisor_cap = 4096;
    DistanceConfig distance;
    std::uint64_t seed = 0;
    int workers = 0;
};

struct SearchResult {
    std::array<Poly, 5> gens;
    std::size_t gray_n, gray_k;
    unsigned gray_d;
    QuantumParams quantum;
};

struct SearchReport {
    std::vector<SearchResult> results;
    std::uint64_t tuples_total = 0;       // eligible tuples before truncation
    std::uint64_t tuples_examined = 0;    // min(total, max_tuples)
    std::uint64_t inconclusive = 0;       // dropped: distance above w_cap
};

/**
 * Enumerates per-component divisors of xⁿ−1 passing the dual-containment
 * criterion, forms 5-tuples (the first max_tuples in canonical order), and
 * ranks the resulting codes by (D desc, K desc, gens).  Output is
 * independent of the worker count.
 */
SearchReport search(std::shared_ptr<const RingContext> ctx, std::size_t n, const SearchOptions& opt);

}  // namespace pentacode

#endif
