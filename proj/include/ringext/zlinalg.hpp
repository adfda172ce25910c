#pragma once

// Exact linear algebra over Z: Hermite and Smith normal forms, kernels,
// integer solving and subgroup comparison inside free Z-modules.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ringext::zlinalg {

using BigInt = boost::multiprecision::cpp_int;

/// An element of a free Z-module on a declared basis: basis index ->
/// nonzero coefficient. Zero coefficients are never stored.
class FormalSum {
public:
    FormalSum() = default;
    static FormalSum generator(std::size_t g, const BigInt& coeff = 1);
    static FormalSum from_vector(const std::vector<BigInt>& v);

    const std::map<std::size_t, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(std::size_t g) const;

    /// Adds coeff * [g]; drops the term when it cancels.
    void add_term(std::size_t g, const BigInt& coeff);
    FormalSum& operator+=(const FormalSum& other);
    FormalSum& operator-=(const FormalSum& other);
    FormalSum operator+(const FormalSum& other) const;
    FormalSum operator-(const FormalSum& other) const;
    FormalSum operator-() const;
    FormalSum scaled(const BigInt& k) const;

    std::vector<BigInt> to_vector(std::size_t dim) const;
    std::string to_string() const;

    bool operator==(const FormalSum&) const = default;
    auto operator<=>(const FormalSum& other) const { return terms_ <=> other.terms_; }

private:
    std::map<std::size_t, BigInt> terms_;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    /// Columns given as formal sums over a basis of size `dim`.
    static IntMatrix from_columns(const std::vector<FormalSum>& cols, std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    FormalSum column(std::size_t c) const;
    std::vector<FormalSum> columns() const;
    FormalSum apply(const FormalSum& x) const;  // M x
    IntMatrix transpose() const;
    bool is_zero() const;

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += k * row j
    void add_row_multiple(std::size_t i, std::size_t j, const BigInt& k);
    /// col i += k * col j
    void add_col_multiple(std::size_t i, std::size_t j, const BigInt& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::vector<std::vector<std::string>> to_strings() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

/// U * original * V = D with U, V unimodular. For smith_form, D is diagonal
/// with d1 | d2 | ... and nonnegative entries. For hermite_form, U is the
/// identity and D is the column-style Hermite form.
struct NormalForm {
    IntMatrix original, U, V, D;
};

NormalForm smith_form(const IntMatrix& m);
NormalForm hermite_form(const IntMatrix& m);

/// Bareiss fraction-free determinant of a square matrix.
BigInt determinant(const IntMatrix& m);

/// Invariant factors (nonzero diagonal of the Smith form).
std::vector<BigInt> invariant_factors(const IntMatrix& m);

/// Column Hermite decomposition M V = H, computed once and reused for
/// any number of right-hand sides and the kernel.
class LinearSolver {
public:
    explicit LinearSolver(IntMatrix m);

    const IntMatrix& matrix() const { return form_.original; }
    std::size_t rank() const { return pivot_rows_.size(); }

    /// The Hermite-reduced solution of M x = b (free coordinates set to 0
    /// in the Hermite basis), or nullopt when none exists over Z.
    std::optional<FormalSum> solve(const FormalSum& b) const;

    /// Saturated Z-basis of ker M.
    std::vector<FormalSum> kernel_basis() const;

private:
    NormalForm form_;
    std::vector<std::size_t> pivot_rows_;
};

std::vector<FormalSum> kernel_basis(const IntMatrix& m);
std::optional<FormalSum> solve(const IntMatrix& m, const FormalSum& b);

/// Do the two generator lists span the same subgroup of Z^dim?
bool subgroup_equal(const std::vector<FormalSum>& gens1, const std::vector<FormalSum>& gens2, std::size_t dim);

/// Is v in the subgroup generated by gens?
bool in_span(const std::vector<FormalSum>& gens, const FormalSum& v, std::size_t dim);

}  // namespace ringext::zlinalg
