#include "quiverhom/matrix.hpp"

#include <algorithm>

#include "quiverhom/error.hpp"

namespace qh {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::column(std::size_t c) const {
    Matrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
    return v;
}

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), ErrorCode::InvalidArgument, "matrix shape mismatch in multiply");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b(k, j);
                if (bkj == 0) continue;
                out(i, j) += aik * bkj;
            }
        }
    }
    if (F.is_prime())
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = F.reduce(out(i, j));
    return out;
}

Matrix add(const Field& F, const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::InvalidArgument,
            "matrix shape mismatch in add");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = F.add(a(i, j), b(i, j));
    return out;
}

Matrix scale(const Field& F, const Scalar& s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = F.mul(s, a(i, j));
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), ErrorCode::InvalidArgument, "row mismatch in hstack");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Matrix block_diagonal(const std::vector<const Matrix*>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const Matrix* b : blocks) {
        rows += b->rows();
        cols += b->cols();
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const Matrix* b : blocks) {
        for (std::size_t i = 0; i < b->rows(); ++i)
            for (std::size_t j = 0; j < b->cols(); ++j) out(r0 + i, c0 + j) = (*b)(i, j);
        r0 += b->rows();
        c0 += b->cols();
    }
    return out;
}

RowEchelon rref(const Field& F, Matrix m) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Scalar inv = F.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Scalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(row, j) != 0) m(i, j) = F.sub(m(i, j), F.mul(f, m(row, j)));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Field& F, const Matrix& m) { return rref(F, m).pivots.size(); }

Kernel kernel(const Field& F, const Matrix& m) {
    RowEchelon e = rref(F, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    Kernel k;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) k.free_columns.push_back(c);
    k.basis = Matrix(m.cols(), k.free_columns.size());
    for (std::size_t f = 0; f < k.free_columns.size(); ++f) {
        std::size_t fc = k.free_columns[f];
        k.basis(fc, f) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (e.reduced(r, fc) != 0) k.basis(e.pivots[r], f) = F.neg(e.reduced(r, fc));
    }
    return k;
}

std::optional<Matrix> solve(const Field& F, const Matrix& m, const Matrix& b) {
    require(m.rows() == b.rows(), ErrorCode::InvalidArgument, "row mismatch in solve");
    RowEchelon e = rref(F, hstack(m, b));
    Matrix x(m.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, m.cols() + j);
    }
    return x;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    RowEchelon e = rref(F, hstack(m, Matrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::vector<std::size_t> complement_indices(const Field& F, const Matrix& m) {
    std::size_t n = m.rows();
    RowEchelon e = rref(F, hstack(m, Matrix::identity(n)));
    std::vector<std::size_t> out;
    for (std::size_t p : e.pivots)
        if (p >= m.cols()) out.push_back(p - m.cols());
    return out;
}

// ---------------------------------------------------------------------------

void SparseEchelon::reduce_into(Acc& acc) const {
    auto it = acc.begin();
    while (it != acc.end()) {
        auto piv = pivot_rows_.find(it->first);
        if (piv == pivot_rows_.end()) {
            ++it;
            continue;
        }
        std::uint32_t col = it->first;
        Scalar coef = it->second;
        for (const auto& [c, v] : piv->second) {
            auto [pos, inserted] = acc.try_emplace(c, 0);
            pos->second = field_.sub(pos->second, field_.mul(coef, v));
            if (pos->second == 0) acc.erase(pos);
        }
        it = acc.upper_bound(col);
    }
}

SparseVec SparseEchelon::reduce(const SparseVec& row) const {
    Acc acc;
    for (const auto& [c, v] : row)
        if (v != 0) acc[c] = field_.add(acc[c], v);
    for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
    reduce_into(acc);
    return SparseVec(acc.begin(), acc.end());
}

bool SparseEchelon::add_row(const SparseVec& row) {
    require(!finalized_, ErrorCode::InvalidArgument, "add_row after finalize");
    SparseVec r = reduce(row);
    if (r.empty()) return false;
    Scalar inv = field_.inv(r.front().second);
    for (auto& [c, v] : r) v = field_.mul(v, inv);
    std::uint32_t lead = r.front().first;
    pivot_rows_.emplace(lead, std::move(r));
    return true;
}

void SparseEchelon::finalize() {
    if (finalized_) return;
    // Back substitution, last pivot first, so each row only needs the
    // already-reduced rows to its right.
    for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
        Acc acc(it->second.begin(), it->second.end());
        Scalar lead = acc.begin()->second;
        std::uint32_t lead_col = acc.begin()->first;
        acc.erase(acc.begin());
        reduce_into(acc);
        SparseVec row;
        row.reserve(acc.size() + 1);
        row.emplace_back(lead_col, lead);
        for (auto& e : acc) row.push_back(e);
        it->second = std::move(row);
    }
    finalized_ = true;
    free_cache_ = free_columns();
}

std::vector<std::uint32_t> SparseEchelon::pivot_columns() const {
    std::vector<std::uint32_t> out;
    out.reserve(pivot_rows_.size());
    for (const auto& [c, row] : pivot_rows_) out.push_back(c);
    return out;
}

std::vector<std::uint32_t> SparseEchelon::free_columns() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < cols_; ++c)
        if (!pivot_rows_.count(c)) out.push_back(c);
    return out;
}

std::vector<Scalar> SparseEchelon::kernel_point(const std::vector<Scalar>& free_values) const {
    require(finalized_, ErrorCode::InvalidArgument, "kernel_point before finalize");
    require(free_values.size() == free_cache_.size(), ErrorCode::InvalidArgument,
            "kernel_point: wrong number of free values");
    std::vector<Scalar> x(cols_);
    for (std::size_t i = 0; i < free_cache_.size(); ++i) x[free_cache_[i]] = free_values[i];
    for (const auto& [lead, row] : pivot_rows_) {
        Scalar s = 0;
        for (std::size_t k = 1; k < row.size(); ++k)
            if (x[row[k].first] != 0) s += row[k].second * x[row[k].first];
        x[lead] = field_.neg(field_.reduce(s));
    }
    return x;
}

const SparseVec* SparseEchelon::pivot_row(std::uint32_t col) const {
    auto it = pivot_rows_.find(col);
    return it == pivot_rows_.end() ? nullptr : &it->second;
}

std::vector<Scalar> SparseEchelon::kernel_basis_vector(std::size_t free_index) const {
    std::vector<Scalar> vals(free_cache_.size());
    vals.at(free_index) = 1;
    return kernel_point(vals);
}

}  // namespace qh
