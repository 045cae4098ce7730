#pragma once

// Exact integer and rational linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mdsgit {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);

    static IntegerMatrix identity(std::size_t n);
    /// Every row must have length `cols`; an empty row list gives a 0 x cols matrix.
    static IntegerMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix from_columns(std::span<const IntVector> columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    std::vector<IntVector> row_list() const;
    std::vector<IntVector> column_list() const;

    IntegerMatrix transposed() const;
    IntegerMatrix select_columns(std::span<const std::size_t> indices) const;
    IntegerMatrix select_rows(std::size_t begin, std::size_t end) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_columns(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t i);
    void negate_column(std::size_t j);

    bool is_diagonal() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntVector operator*(const IntegerMatrix& a, const IntVector& x);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithForm {
    IntegerMatrix d;
    IntegerMatrix u;  // rows x rows, unimodular
    IntegerMatrix v;  // cols x cols, unimodular
    std::size_t rank = 0;

    /// Nonzero diagonal entries d_0 | d_1 | ...
    std::vector<Integer> elementary_divisors() const;
};

/// u * m * v == d with d diagonal and d_i | d_{i+1}. Pivots on the leftmost entry of minimal
/// absolute value, so results are reproducible.
SmithForm smith_normal_form(const IntegerMatrix& m);

struct HermiteForm {
    IntegerMatrix h;  // u * m, row echelon with positive pivots and reduced entries above them
    IntegerMatrix u;  // unimodular
    std::size_t rank = 0;
};

/// Row-style Hermite normal form: unique representative of the orbit GL(rows, Z) * m.
HermiteForm hermite_normal_form(const IntegerMatrix& m);

/// Rows span the saturated lattice {v in Z^cols : m v = 0}; returned in Hermite normal form.
IntegerMatrix saturated_kernel_basis(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(std::span<const IntVector> vectors);
Integer determinant(const IntegerMatrix& m);

// Vector helpers.

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);
int sign(const Integer& x);
int sign(const Rational& x);
Integer content(const IntVector& v);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
/// Clears denominators and divides by the content.
IntVector primitive(const RatVector& v);
/// Multiplies by the lcm of the denominators (no content division).
IntVector clear_denominators(const RatVector& v);
RatVector to_rational(const IntVector& v);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& s, const IntVector& v);

/// Canonical integer basis of the rational row space: reduced echelon form with each row made
/// primitive. Two vector families give equal output iff they span the same subspace.
std::vector<IntVector> canonical_span_basis(std::span<const IntVector> vectors, std::size_t dim);
/// Canonical integer basis (as above) of {x : <v, x> = 0 for all v in `vectors`}.
std::vector<IntVector> orthogonal_complement(std::span<const IntVector> vectors, std::size_t dim);

/// Some solution x of A x = b over Q (A given by rows), or nothing if inconsistent.
bool solve_rational(std::span<const IntVector> rows, const RatVector& rhs, RatVector& out,
                    std::size_t unknowns);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

}  // namespace mdsgit
