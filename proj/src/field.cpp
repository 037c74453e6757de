#include "pentacode/field.hpp"

namespace pentacode {

namespace {

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set is deterministic for all n < 2^64
    for (std::uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), a_(0) {
    if (!is_prime(p)) throw NotPrimeError(p);
    if (p % 4 != 1) throw BadResidueError(p);

    if (p < 100) {
        // tiny fields: direct scan, also the obvious oracle
        for (Fe x = 0; x < p; ++x) {
            if (mul(x, x) == p - 1) {
                a_ = x;
                return;
            }
        }
    }
    // a quadratic non-residue g gives g^((p-1)/4) as a root of -1
    for (std::uint64_t g = 2;; ++g) {
        if (pow(g, (p - 1) / 2) == p - 1) {
            Fe r = pow(g, (p - 1) / 4);
            a_ = r < p - r ? r : p - r;
            return;
        }
    }
}

Fe PrimeField::pow(Fe base, std::uint64_t e) const noexcept { return powmod(base, e, p_); }

Fe PrimeField::inv(Fe x) const {
    if (x == 0) throw DivideByZeroError();
    return pow(x, p_ - 2);
}

Fe PrimeField::reduce(std::int64_t v) const noexcept {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<Fe>(m);
}

}  // namespace pentacode
