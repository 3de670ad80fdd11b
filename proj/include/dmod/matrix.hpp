#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dmod/field.hpp"

namespace dmod {

using Vector = std::vector<FieldElem>;

/// Dense row-major matrix over a single coefficient domain.
class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols, Domain d);

    /// Throws DomainMismatch if entries mix domains, InvalidArgument on ragged rows.
    static Matrix from_rows(const std::vector<Vector>& rows, Domain d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Domain& domain() const noexcept { return dom_; }

    FieldElem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldElem& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector operator*(const Vector& v) const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    Domain dom_;
    std::vector<FieldElem> entries_;
};

struct EchelonForm {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // ascending pivot columns, one per nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
EchelonForm rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : Mv = 0}, itself in reduced echelon form (rows of the basis
/// matrix, pivots ascending). Empty iff the kernel is trivial.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with Mx = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace dmod
