#include "pentacode/linear.hpp"

#include <atomic>
#include <climits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pentacode {

void Matrix::append_row(const std::vector<Fe>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw LengthMismatchError();
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::size_t rref_in_place(const PrimeField& F, Matrix& m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
        const Fe inv = F.inv(m.at(rank, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(rank, j) = F.mul(m.at(rank, j), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, c) == 0) continue;
            const Fe f = m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

std::pair<std::size_t, Matrix> rref(const PrimeField& F, const Matrix& m) {
    Matrix r = m;
    const std::size_t rank = rref_in_place(F, r);
    Matrix out(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
    return {rank, out};
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

Matrix matmul(const PrimeField& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw LengthMismatchError();
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Fe x = a.at(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(x, b.at(t, j)));
        }
    return out;
}

LinearCode::LinearCode(const PrimeField& field, const Matrix& generator_rows) : field_(field) {
    if (generator_rows.cols() == 0) throw ZeroCodeError();
    n_ = generator_rows.cols();
    auto [rank, reduced] = rref(field_, generator_rows);
    if (rank == 0) throw ZeroCodeError();
    k_ = rank;
    gen_ = std::move(reduced);

    // null-space basis from the RREF: one row per free column
    std::vector<std::size_t> pivot_col(k_);
    std::vector<bool> is_pivot(n_, false);
    for (std::size_t r = 0; r < k_; ++r) {
        std::size_t c = 0;
        while (gen_.at(r, c) == 0) ++c;
        pivot_col[r] = c;
        is_pivot[c] = true;
    }
    parity_ = Matrix(n_ - k_, n_);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n_; ++c) {
        if (is_pivot[c]) continue;
        parity_.at(row, c) = 1;
        for (std::size_t r = 0; r < k_; ++r) parity_.at(row, pivot_col[r]) = field_.neg(gen_.at(r, c));
        ++row;
    }
    if (rref_in_place(field_, parity_) != n_ - k_)
        throw std::logic_error("parity-check matrix rank mismatch");

    const Matrix product = matmul(field_, gen_, transpose(parity_));
    for (Fe x : product.data())
        if (x != 0) throw std::logic_error("generator and parity-check are not orthogonal");
}

LinearCode dual_basis(const LinearCode& c) {
    if (c.k() == c.n()) throw ZeroDualError();
    return LinearCode(c.field(), c.parity());
}

bool is_self_orthogonal(const LinearCode& c) {
    const Matrix product = matmul(c.field(), c.gen(), transpose(c.gen()));
    for (Fe x : product.data())
        if (x != 0) return false;
    return true;
}

namespace {

std::uint64_t pow_saturating(std::uint64_t p, std::size_t k) {
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= p;
        if (r > ~static_cast<std::uint64_t>(0)) return ~static_cast<std::uint64_t>(0);
    }
    return static_cast<std::uint64_t>(r);
}

// Walks message indices [begin, end) of the base-p odometer; the codeword is
// updated incrementally (one generator-row addition per digit bump).
unsigned min_weight_block(const LinearCode& c, std::uint64_t begin, std::uint64_t end) {
    const PrimeField& F = c.field();
    const std::size_t k = c.k(), n = c.n();
    const std::uint64_t p = F.p();

    std::vector<Fe> digits(k, 0);
    std::vector<Fe> cw(n, 0);
    std::uint64_t idx = begin;
    for (std::size_t i = 0; i < k; ++i) {
        digits[i] = idx % p;
        idx /= p;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (digits[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) cw[j] = F.add(cw[j], F.mul(digits[i], c.gen().at(i, j)));
    }

    unsigned best = UINT_MAX;
    for (std::uint64_t t = begin; t < end; ++t) {
        if (t != 0) {
            unsigned w = 0;
            for (Fe x : cw)
                if (x) ++w;
            if (w < best) best = w;
        }
        for (std::size_t i = 0; i < k; ++i) {
            ++digits[i];
            for (std::size_t j = 0; j < n; ++j) cw[j] = F.add(cw[j], c.gen().at(i, j));
            if (digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return best;
}

int resolve_workers(int workers) {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

}  // namespace

unsigned min_distance_bruteforce(const LinearCode& c, std::uint64_t budget, int workers) {
    const std::uint64_t total = pow_saturating(c.field().p(), c.k());
    if (total > budget) throw BudgetExceededError();

    const int nthreads = resolve_workers(workers);
    unsigned best = UINT_MAX;
#pragma omp parallel for num_threads(nthreads) reduction(min : best) schedule(static)
    for (int b = 0; b < nthreads; ++b) {
        const std::uint64_t begin = total / nthreads * b + std::min<std::uint64_t>(b, total % nthreads);
        const std::uint64_t end = begin + total / nthreads + (static_cast<std::uint64_t>(b) < total % nthreads ? 1 : 0);
        const unsigned w = min_weight_block(c, begin, end);
        if (w < best) best = w;
    }
    return best;
}

namespace {

// Shared machinery for the column-dependency search.  Columns of the
// parity-check matrix are reduced incrementally against an echelon basis of
// the already-chosen columns; a column vanishing under reduction exhibits a
// dependent set.
struct DepContext {
    const PrimeField& F;
    std::vector<std::vector<Fe>> cols;  // n columns, each of length n-k

    explicit DepContext(const LinearCode& c) : F(c.field()) {
        const Matrix& H = c.parity();
        cols.resize(c.n());
        for (std::size_t j = 0; j < c.n(); ++j) {
            cols[j].resize(H.rows());
            for (std::size_t r = 0; r < H.rows(); ++r) cols[j][r] = H.at(r, j);
        }
    }

    // Reduces v against the basis; returns true when it vanishes.
    bool reduce(std::vector<Fe>& v, const std::vector<std::pair<std::size_t, std::vector<Fe>>>& basis) const {
        for (const auto& [piv, b] : basis) {
            const Fe f = v[piv];
            if (f == 0) continue;
            for (std::size_t i = piv; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(f, b[i]));
        }
        for (Fe x : v)
            if (x) return false;
        return true;
    }

    void push(std::vector<Fe> v, std::vector<std::pair<std::size_t, std::vector<Fe>>>& basis) const {
        std::size_t piv = 0;
        while (v[piv] == 0) ++piv;
        const Fe inv = F.inv(v[piv]);
        for (std::size_t i = piv; i < v.size(); ++i) v[i] = F.mul(v[i], inv);
        basis.emplace_back(piv, std::move(v));
    }

    // True when some w columns from [first, n) extend the current independent
    // basis to a dependent set of total size target.
    bool dfs(std::size_t first, unsigned depth, unsigned target,
             std::vector<std::pair<std::size_t, std::vector<Fe>>>& basis,
             const std::atomic<bool>* stop) const {
        if (stop && stop->load(std::memory_order_relaxed)) return false;
        const std::size_t n = cols.size();
        for (std::size_t c = first; c + (target - depth) <= n; ++c) {
            std::vector<Fe> v = cols[c];
            const bool vanished = reduce(v, basis);
            if (depth + 1 == target) {
                if (vanished) return true;
                continue;
            }
            if (vanished) return true;  // a smaller dependent set; callers scan sizes in order
            push(std::move(v), basis);
            const bool found = dfs(c + 1, depth + 1, target, basis, stop);
            basis.pop_back();
            if (found) return true;
        }
        return false;
    }
};

}  // namespace

unsigned min_distance(const LinearCode& c, const DistanceConfig& cfg) {
    const std::uint64_t total = pow_saturating(c.field().p(), c.k());
    unsigned d;
    if (total <= cfg.budget) {
        d = min_distance_bruteforce(c, cfg.budget, cfg.workers);
    } else {
        const DependencyOutcome r = min_distance_dependency(c, cfg.w_cap, cfg.workers);
        if (!r.exact) throw DistanceInconclusiveError(cfg.w_cap);
        d = r.value;
    }
    if (d > c.n() - c.k() + 1) throw std::logic_error("singleton bound violated");
    return d;
}

DependencyOutcome min_distance_dependency(const LinearCode& c, unsigned w_cap, int workers) {
    const DepContext ctx(c);
    const std::size_t n = c.n();
    const int nthreads = resolve_workers(workers);

    // w = 1: a zero column (vacuously true when the parity check has no rows)
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (Fe x : ctx.cols[j])
            if (x) {
                zero = false;
                break;
            }
        if (zero) return {true, 1};
    }

    for (unsigned w = 2; w <= w_cap; ++w) {
        if (w > n) break;
        std::atomic<bool> found{false};
#pragma omp parallel for num_threads(nthreads) schedule(dynamic)
        for (std::size_t c1 = 0; c1 <= n - w; ++c1) {
            if (found.load(std::memory_order_relaxed)) continue;
            std::vector<std::pair<std::size_t, std::vector<Fe>>> basis;
            ctx.push(ctx.cols[c1], basis);
            if (ctx.dfs(c1 + 1, 1, w, basis, &found)) found.store(true, std::memory_order_relaxed);
        }
        if (found.load()) return {true, w};
    }
    return {false, w_cap};
}

namespace reference {

unsigned min_distance_bruteforce(const LinearCode& c, std::uint64_t budget) {
    const PrimeField& F = c.field();
    const std::uint64_t total = pow_saturating(F.p(), c.k());
    if (total > budget) throw BudgetExceededError();

    unsigned best = UINT_MAX;
    for (std::uint64_t t = 1; t < total; ++t) {
        std::uint64_t idx = t;
        std::vector<Fe> cw(c.n(), 0);
        for (std::size_t i = 0; i < c.k(); ++i) {
            const Fe digit = idx % F.p();
            idx /= F.p();
            if (digit == 0) continue;
            for (std::size_t j = 0; j < c.n(); ++j)
                cw[j] = F.add(cw[j], F.mul(digit, c.gen().at(i, j)));
        }
        unsigned w = 0;
        for (Fe x : cw)
            if (x) ++w;
        if (w < best) best = w;
    }
    return best;
}

DependencyOutcome min_distance_dependency(const LinearCode& c, unsigned w_cap) {
    const PrimeField& F = c.field();
    const Matrix& H = c.parity();
    const std::size_t n = c.n();

    for (unsigned w = 1; w <= w_cap && w <= n; ++w) {
        std::vector<std::size_t> pick(w);
        for (unsigned i = 0; i < w; ++i) pick[i] = i;
        for (;;) {
            Matrix sub(w, H.rows());
            for (unsigned i = 0; i < w; ++i)
                for (std::size_t r = 0; r < H.rows(); ++r) sub.at(i, r) = H.at(r, pick[i]);
            if (rref_in_place(F, sub) < w) return {true, w};
            // next combination in lexicographic order
            int j = static_cast<int>(w) - 1;
            while (j >= 0 && pick[j] == n - w + j) --j;
            if (j < 0) break;
            ++pick[j];
            for (unsigned i = j + 1; i < w; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    return {false, w_cap};
}

}  // namespace reference

}  // namespace pentacode
