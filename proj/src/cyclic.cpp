#include "pentacode/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pentacode {

CyclicCode::CyclicCode(const PrimeField& field, std::size_t n, Poly g, std::ostream* warn)
    : field_(field), n_(n) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    if (g.is_zero()) throw NotADivisorError();
    if (g.leading() != 1) {
        if (warn) *warn << "note: generator " << format_poly(g) << " normalized to monic\n";
        g = monic(field_, g);
    }
    if (!divides(field_, g, xn_minus_1(field_, n))) throw NotADivisorError();
    if (g.degree() == n) throw ZeroCodeError();
    g_ = std::move(g);
    k_ = n_ - g_.degree();
}

Matrix generator_matrix(const CyclicCode& c) {
    Matrix m(c.k(), c.n());
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j <= c.gen_poly().degree(); ++j)
            m.at(i, i + j) = c.gen_poly().coeff(j);
    return m;
}

CyclicCode cyclic_dual(const CyclicCode& c) {
    if (c.k() == c.n()) throw ZeroDualError();
    const Poly h = divmod(c.field(), xn_minus_1(c.field(), c.n()), c.gen_poly()).first;
    return CyclicCode(c.field(), c.n(), reciprocal(c.field(), h));
}

bool dual_containing(const PrimeField& F, std::size_t n, const Poly& g) {
    const Poly target = xn_minus_1(F, n);
    if (g.is_zero() || !divides(F, g, target)) throw NotADivisorError();
    return divides(F, mul(F, g, reciprocal(F, g)), target);
}

RCyclicCode::RCyclicCode(std::shared_ptr<const RingContext> ctx, std::size_t n,
                         std::array<Poly, 5> gens, std::ostream* warn)
    : ctx_(std::move(ctx)), n_(n), gens_(std::move(gens)) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    const PrimeField& F = ctx_->field();
    const Poly target = xn_minus_1(F, n);
    std::size_t dim = 0;
    for (unsigned i = 0; i < 5; ++i) {
        Poly& g = gens_[i];
        if (g.is_zero()) throw NotADivisorError(i + 1);
        if (g.leading() != 1) {
            if (warn) *warn << "note: g_" << i + 1 << " = " << format_poly(g) << " normalized to monic\n";
            g = monic(F, g);
        }
        if (!divides(F, g, target)) throw NotADivisorError(i + 1);
        dim += n - g.degree();
    }
    if (dim == 0) throw ZeroCodeError();
}

std::size_t RCyclicCode::component_dim(std::size_t i) const { return n_ - gens_.at(i).degree(); }

std::size_t cardinality_exponent(const RCyclicCode& c) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < 5; ++i) e += c.component_dim(i);
    return e;
}

std::string cardinality_decimal(const RCyclicCode& c) {
    // schoolbook q^e over decimal digits; exponents routinely exceed 64-bit range
    std::vector<unsigned> digits{1};
    const std::uint64_t q = c.ctx().field().p();
    for (std::size_t i = 0, e = cardinality_exponent(c); i < e; ++i) {
        std::uint64_t carry = 0;
        for (auto& d : digits) {
            const std::uint64_t v = d * q + carry;
            d = static_cast<unsigned>(v % 10);
            carry = v / 10;
        }
        while (carry) {
            digits.push_back(static_cast<unsigned>(carry % 10));
            carry /= 10;
        }
    }
    std::string out(digits.size(), '0');
    for (std::size_t i = 0; i < digits.size(); ++i) out[i] = static_cast<char>('0' + digits[digits.size() - 1 - i]);
    return out;
}

RCyclicCode r_dual(const RCyclicCode& c) {
    const PrimeField& F = c.ctx().field();
    const Poly target = xn_minus_1(F, c.n());
    std::array<Poly, 5> duals;
    bool any_nonzero = false;
    for (std::size_t i = 0; i < 5; ++i) {
        const Poly h = divmod(F, target, c.gens()[i]).first;
        duals[i] = reciprocal(F, h);  // gᵢ = 1 yields hᵢ* = xⁿ−1, a zero component
        if (duals[i].degree() < c.n()) any_nonzero = true;
    }
    if (!any_nonzero) throw ZeroDualError();
    return RCyclicCode(c.ctx_ptr(), c.n(), std::move(duals));
}

bool r_dual_containing(const RCyclicCode& c) {
    const PrimeField& F = c.ctx().field();
    for (std::size_t i = 0; i < 5; ++i)
        if (!dual_containing(F, c.n(), c.gens()[i])) return false;
    return true;
}

bool membership(const RCyclicCode& c, const RingVector& w) {
    if (w.size() != c.n()) throw LengthMismatchError();
    const PrimeField& F = c.ctx().field();
    for (std::size_t i = 0; i < 5; ++i) {
        std::vector<Fe> coeffs(c.n());
        for (std::size_t t = 0; t < c.n(); ++t) coeffs[t] = w[t].crt[i];
        if (!divides(F, c.gens()[i], Poly::from_residues(std::move(coeffs)))) return false;
    }
    return true;
}

RingVector encode(const RCyclicCode& c, const std::array<Poly, 5>& messages) {
    const PrimeField& F = c.ctx().field();
    RingVector out(c.n());
    for (std::size_t i = 0; i < 5; ++i) {
        const Poly& m = messages[i];
        if (m.is_zero()) continue;
        if (m.degree() + 1 > c.component_dim(i)) throw DegreeTooLargeError(static_cast<unsigned>(i + 1));
        const Poly cw = mod(F, mul(F, m, c.gens()[i]), xn_minus_1(F, c.n()));
        for (std::size_t t = 0; t < c.n(); ++t) out[t].crt[i] = cw.coeff(t);
    }
    return out;
}

RingVector cyclic_shift(const RingVector& w) {
    RingVector out(w.size());
    for (std::size_t t = 0; t < w.size(); ++t) out[(t + 1) % w.size()] = w[t];
    return out;
}

std::vector<RingVector> generator_rows(const RCyclicCode& c) {
    const PrimeField& F = c.ctx().field();
    std::vector<RingVector> rows;
    const Poly target = xn_minus_1(F, c.n());
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < c.component_dim(i); ++j) {
            const Poly xjg = mod(F, mul(F, Poly::x_power(j), c.gens()[i]), target);
            RingVector row(c.n());
            for (std::size_t t = 0; t < c.n(); ++t) row[t].crt[i] = xjg.coeff(t);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

LinearCode gray_image(const RCyclicCode& c) {
    const RingContext& ctx = c.ctx();
    const std::size_t n = c.n();
    const auto& M = ctx.gray_matrix();

    Matrix rows(cardinality_exponent(c), 5 * n);
    std::size_t r = 0;
    const Poly target = xn_minus_1(ctx.field(), n);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < c.component_dim(i); ++j) {
            // Φ of a vector living in the i-th field copy: each coordinate
            // coefficient scales row i of the Gray matrix
            const Poly xjg = mod(ctx.field(), mul(ctx.field(), Poly::x_power(j), c.gens()[i]), target);
            for (std::size_t t = 0; t < n; ++t) {
                const Fe coeff = xjg.coeff(t);
                if (coeff == 0) continue;
                for (std::size_t col = 0; col < 5; ++col)
                    rows.at(r, 5 * t + col) = ctx.field().mul(coeff, M[i][col]);
            }
            ++r;
        }
    }
    LinearCode code(ctx.field(), rows);
    if (code.k() != cardinality_exponent(c))
        throw std::logic_error("gray image rank does not match the cardinality exponent");
    return code;
}

bool gray_dual_equality(const RCyclicCode& c) {
    const LinearCode lhs = gray_image(r_dual(c));
    const LinearCode rhs = dual_basis(gray_image(c));
    return lhs.gen() == rhs.gen();  // both are canonical RREFs
}

QuantumParams css_from_code(const RCyclicCode& c, const DistanceConfig& cfg) {
    if (!r_dual_containing(c)) throw NotDualContainingError();
    const LinearCode gray = gray_image(c);
    const std::size_t n5 = 5 * c.n();
    const std::int64_t K = 2 * static_cast<std::int64_t>(gray.k()) - static_cast<std::int64_t>(n5);
    if (K < 0) throw std::logic_error("dual-containing code with negative quantum dimension");
    return {n5, K, min_distance(gray, cfg), c.ctx().field().p()};
}

SearchReport search(std::shared_ptr<const RingContext> ctx, std::size_t n, const SearchOptions& opt) {
    const PrimeField& F = ctx->field();
    const Factorization fac = factor_xn_minus_1(F, n, opt.seed);
    std::vector<Poly> eligible;
    for (const Poly& g : enumerate_divisors(F, fac, opt.divisor_cap))
        if (dual_containing(F, n, g)) eligible.push_back(g);
    // divisors come out of enumerate_divisors in canonical order already

    const std::uint64_t m = eligible.size();
    std::uint64_t total = 1;
    bool overflow = false;
    for (int i = 0; i < 5; ++i) {
        if (total > ~static_cast<std::uint64_t>(0) / m) overflow = true;
        total *= m;
    }
    if (overflow) total = ~static_cast<std::uint64_t>(0);
    const std::uint64_t examined = std::min(total, opt.max_tuples);

    DistanceConfig inner = opt.distance;
    inner.workers = 1;  // tuples are the parallel axis

    SearchReport report;
    report.tuples_total = total;
    report.tuples_examined = examined;

#ifdef _OPENMP
    const int nthreads = opt.workers > 0 ? opt.workers : omp_get_max_threads();
#else
    const int nthreads = 1;
#endif
    std::vector<std::vector<SearchResult>> buckets(nthreads);
    std::uint64_t inconclusive = 0;

#pragma omp parallel num_threads(nthreads) reduction(+ : inconclusive)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        std::vector<SearchResult>& mine = buckets[tid];
#pragma omp for schedule(dynamic, 16)
        for (std::uint64_t t = 0; t < examined; ++t) {
            std::array<Poly, 5> gens;
            std::uint64_t idx = t;
            for (int i = 4; i >= 0; --i) {
                gens[i] = eligible[idx % m];
                idx /= m;
            }
            const RCyclicCode code(ctx, n, gens);
            const LinearCode gray = gray_image(code);
            unsigned d;
            try {
                d = min_distance(gray, inner);
            } catch (const DistanceInconclusiveError&) {
                ++inconclusive;
                continue;
            }
            if (d < opt.min_distance_floor) continue;
            const std::int64_t K =
                2 * static_cast<std::int64_t>(gray.k()) - static_cast<std::int64_t>(5 * n);
            mine.push_back(SearchResult{gens, 5 * n, gray.k(), d,
                                        QuantumParams{5 * n, K, d, F.p()}});
        }
    }
    report.inconclusive = inconclusive;

    for (auto& b : buckets)
        report.results.insert(report.results.end(), std::make_move_iterator(b.begin()),
                              std::make_move_iterator(b.end()));

    auto canonical = [](const SearchResult& a, const SearchResult& b) {
        if (a.quantum.D != b.quantum.D) return a.quantum.D > b.quantum.D;
        if (a.quantum.K != b.quantum.K) return a.quantum.K > b.quantum.K;
        for (int i = 0; i < 5; ++i)
            if (a.gens[i] != b.gens[i]) return poly_less(a.gens[i], b.gens[i]);
        return false;
    };
    std::sort(report.results.begin(), report.results.end(), canonical);

    if (opt.dedupe_by_params) {
        auto same = [](const SearchResult& a, const SearchResult& b) {
            return a.quantum.N == b.quantum.N && a.quantum.K == b.quantum.K && a.quantum.D == b.quantum.D;
        };
        report.results.erase(std::unique(report.results.begin(), report.results.end(), same),
                             report.results.end());
    }
    return report;
}

}  // namespace pentacode
