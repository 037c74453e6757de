#ifndef PENTACODE_POLY_HPP
#define PENTACODE_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pentacode/field.hpp"

namespace pentacode {

/**
 * A polynomial over F_p, stored as ascending coefficients with no trailing
 * zeros.  The zero polynomial is the empty sequence; asking for its degree
 * throws instead of returning a -1 sentinel that could leak into arithmetic.
 */
class Poly {
   public:
    Poly() = default;  // the zero polynomial

    // Reduces mod p and trims trailing zeros.
    static Poly from_coeffs(const PrimeField& F, const std::vector<std::int64_t>& coeffs);
    static Poly from_residues(std::vector<Fe> coeffs);  // entries must already be in [0, p)
    static Poly constant(Fe c);
    static Poly x_power(std::size_t k, Fe lead = 1);

    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t degree() const;  // throws ZeroPolyDegreeError on the zero polynomial
    Fe coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Fe leading() const;
    Fe constant_term() const noexcept { return coeff(0); }
    const std::vector<Fe>& coeffs() const noexcept { return c_; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

    friend bool operator==(const Poly&, const Poly&) = default;

   private:
    std::vector<Fe> c_;
};

// (degree, then lexicographic on ascending coefficients); total order used
// for all canonical sorting.  Zero sorts first.
bool poly_less(const Poly& a, const Poly& b);

Poly add(const PrimeField& F, const Poly& f, const Poly& g);
Poly sub(const PrimeField& F, const Poly& f, const Poly& g);
Poly mul(const PrimeField& F, const Poly& f, const Poly& g);
Poly scale(const PrimeField& F, const Poly& f, Fe c);

// Quotient and remainder with deg(remainder) < deg(g); throws DivideByZeroError on g = 0.
std::pair<Poly, Poly> divmod(const PrimeField& F, const Poly& f, const Poly& g);
Poly mod(const PrimeField& F, const Poly& f, const Poly& g);
bool divides(const PrimeField& F, const Poly& g, const Poly& f);  // g | f

Poly monic(const PrimeField& F, const Poly& f);
Fe eval(const PrimeField& F, const Poly& f, Fe x);
Poly derivative(const PrimeField& F, const Poly& f);

// base^e mod m
Poly powmod(const PrimeField& F, const Poly& base, std::uint64_t e, const Poly& m);

// Monic gcd; throws BothZeroError when both inputs are zero.
Poly gcd(const PrimeField& F, const Poly& f, const Poly& g);

struct ExtGcd {
    Poly d;  // monic gcd
    Poly a;  // a·f + b·g = d
    Poly b;
};
ExtGcd ext_gcd(const PrimeField& F, const Poly& f, const Poly& g);

// Monic normalization of x^deg(g) · g(1/x); requires g(0) ≠ 0.
Poly reciprocal(const PrimeField& F, const Poly& g);

Poly xn_minus_1(const PrimeField& F, std::size_t n);

/**
 * Complete factorization of xⁿ − 1 into monic irreducibles.  Writing
 * n = m·pᵉ with gcd(m, p) = 1, the factors of xᵐ − 1 (squarefree) each
 * carry multiplicity pᵉ.  Factors are sorted canonically, so the result is
 * independent of the randomized splitting path.
 */
struct Factorization {
    std::uint64_t n = 0;
    std::vector<std::pair<Poly, unsigned>> factors;  // (monic irreducible, multiplicity)
};

Factorization factor_xn_minus_1(const PrimeField& F, std::size_t n, std::uint64_t seed = 0);

// All monic divisors ∏ factorᵉ, canonical order; throws TooManyDivisorsError
// when the count would exceed cap.
std::vector<Poly> enumerate_divisors(const PrimeField& F, const Factorization& fac, std::uint64_t cap);

bool is_irreducible(const PrimeField& F, const Poly& f);

// Display form, descending powers: "x^2+3x+1".  Zero renders as "0".
std::string format_poly(const Poly& f, char var = 'x');
// Ascending coefficient list: "1,3,1".
std::string coeff_list(const Poly& f);
// Accepts both forms; a "coeffs:" or "expr:" prefix forces one, otherwise a
// comma selects the coefficient list and anything else parses symbolically.
Poly parse_poly(const PrimeField& F, const std::string& text);

}  // namespace pentacode

#endif
