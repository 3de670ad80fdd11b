#include "dmod/matrix.hpp"

#include <utility>

#include "dmod/error.hpp"

namespace dmod {

Matrix::Matrix(std::size_t rows, std::size_t cols, Domain d)
    : rows_(rows), cols_(cols), dom_(d), entries_(rows * cols, FieldElem::zero(d)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, Domain d) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, d);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorCode::invalid_argument, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            require_same_domain(d, rows[r][c].domain());
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::invalid_argument, "vector length does not match columns");
    Vector out(rows_, FieldElem::zero(dom_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

EchelonForm rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        const FieldElem scale = m(row, col).inv();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= scale;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const FieldElem factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
    const auto [reduced, pivots] = rref(m);
    const Domain d = m.domain();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), FieldElem::zero(d));
        v[free] = FieldElem::one(d);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;

    // Canonicalize: the kernel basis is the RREF of the free-variable basis.
    auto canon = rref(Matrix::from_rows(basis, d)).reduced;
    std::vector<Vector> out(canon.rows(), Vector(canon.cols(), FieldElem::zero(d)));
    for (std::size_t r = 0; r < canon.rows(); ++r)
        for (std::size_t c = 0; c < canon.cols(); ++c) out[r][c] = canon(r, c);
    return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw Error(ErrorCode::invalid_argument, "right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1, m.domain());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        require_same_domain(m.domain(), b[r].domain());
        aug(r, m.cols()) = b[r];
    }
    const auto [reduced, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), FieldElem::zero(m.domain()));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, m.cols());
    return x;
}

}  // namespace dmod
