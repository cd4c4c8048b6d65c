#pragma once

#include "intvec.hpp"

#include <optional>
#include <vector>

namespace farey {

// Dense integer matrix, row-major. Columns usually hold lattice vectors.
class MatZ {
public:
    MatZ() = default;
    MatZ(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, Int(0)) {}

    static MatZ identity(std::size_t n);
    static MatZ from_columns(const std::vector<IntVec>& cols);
    static MatZ from_rows(const std::vector<IntVec>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

    IntVec column(std::size_t j) const;
    IntVec row(std::size_t i) const;
    void set_column(std::size_t j, const IntVec& v);

    MatZ operator*(const MatZ& o) const;
    bool operator==(const MatZ& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    MatZ transposed() const;
    Int determinant() const; // square only
    // Inverse of a matrix with determinant +-1.
    MatZ unimodular_inverse() const;

    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

// Rank of the rational span of the rows.
std::size_t rank_of(const MatZ& m);

// Invariant factors d_1 | d_2 | ... of the Smith normal form (nonzero ones only).
std::vector<Int> smith_invariant_factors(MatZ m);

struct HermiteResult {
    MatZ h; // upper triangular, diag > 0, entries above a diagonal reduced mod it
    MatZ u; // unimodular, u * input = h
};

// Row-style Hermite normal form for a square nonsingular matrix: U*M = H.
HermiteResult hermite_normal_form(const MatZ& m);

// Basis of the saturation Z^n intersect span_Q(rows): every integer vector in the
// rational row span is an integer combination of the result.
std::vector<IntVec> saturation_basis(const std::vector<IntVec>& vectors);

// Integer coordinates of v in the given lattice basis, if they exist.
std::optional<std::vector<Int>> coords_in_basis(const std::vector<IntVec>& basis, const IntVec& v);

// Extends the primitive row c (content 1) to a unimodular k x k matrix with c as row 0.
MatZ complete_unimodular(const std::vector<Int>& c);

// Unique rational solution x of (columns of m) * x = rhs; nullopt if none/ambiguous.
std::optional<std::vector<Rat>> solve_columns(const std::vector<IntVec>& cols, const IntVec& rhs);

} // namespace farey
