#ifndef PENTACODE_LINEAR_HPP
#define PENTACODE_LINEAR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pentacode/field.hpp"

namespace pentacode {

// Dense row-major matrix over F_p; entries are canonical residues.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Fe& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Fe at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<Fe>& data() const noexcept { return a_; }

    void append_row(const std::vector<Fe>& row);

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Fe> a_;
};

// Full reduced row-echelon form in place; returns the rank (zero rows sink
// to the bottom but are kept).
std::size_t rref_in_place(const PrimeField& F, Matrix& m);

// RREF with zero rows dropped.
std::pair<std::size_t, Matrix> rref(const PrimeField& F, const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix matmul(const PrimeField& F, const Matrix& a, const Matrix& b);

/**
 * A linear [n, k] code over F_p held as a rank-reduced generator matrix
 * (RREF, k rows) and the matching parity-check matrix (RREF, n−k rows) with
 * gen·parityᵀ = 0.  The zero code (k = 0) is rejected.
 */
class LinearCode {
   public:
    LinearCode(const PrimeField& field, const Matrix& generator_rows);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    const Matrix& gen() const noexcept { return gen_; }
    const Matrix& parity() const noexcept { return parity_; }

   private:
    PrimeField field_;
    std::size_t n_, k_;
    Matrix gen_, parity_;
};

// The [n, n−k] code generated by the parity-check matrix; ZeroDualError when k = n.
LinearCode dual_basis(const LinearCode& c);

bool is_self_orthogonal(const LinearCode& c);

struct DistanceConfig {
    std::uint64_t budget = 10'000'000;  // max codewords for brute-force enumeration
    unsigned w_cap = 8;                 // max column-subset size for the dependency search
    int workers = 0;                    // OpenMP threads; 0 = runtime default
};

struct DependencyOutcome {
    bool exact;      // found a dependent set
    unsigned value;  // the distance when exact, else the exhausted w_cap
};

// Minimum Hamming weight over all p^k − 1 nonzero codewords.
// Throws BudgetExceededError when p^k > budget.
unsigned min_distance_bruteforce(const LinearCode& c, std::uint64_t budget, int workers = 0);

// Smallest w ≤ w_cap such that some w columns of the parity-check matrix are
// linearly dependent; GreaterThan(w_cap) otherwise.
DependencyOutcome min_distance_dependency(const LinearCode& c, unsigned w_cap, int workers = 0);

// Dispatcher: brute force within budget, dependency search otherwise.
// Throws DistanceInconclusiveError when the dependency cap is exhausted.
unsigned min_distance(const LinearCode& c, const DistanceConfig& cfg = {});

// Serial reference engines, kept as oracles for the OpenMP kernels above.
namespace reference {
unsigned min_distance_bruteforce(const LinearCode& c, std::uint64_t budget);
DependencyOutcome min_distance_dependency(const LinearCode& c, unsigned w_cap);
}  // namespace reference

}  // namespace pentacode

#endif
