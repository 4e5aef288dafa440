#include "svt/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace svt {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp(1);
    return m;
}

void Mat::add_row(Row r) {
    if (r.size() != ncols_) throw std::invalid_argument("row length mismatch");
    rows_.push_back(std::move(r));
}

void Mat::append(const Mat& other) {
    if (other.ncols_ != ncols_) throw std::invalid_argument("column count mismatch");
    rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

namespace {

// In-place forward elimination; returns the rank. Rows are swapped, pivots
// are not normalized.
std::size_t eliminate(std::vector<Row>& rows, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Fp inv = rows[r][c].inv();
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const Fp f = rows[i][c] * inv;
            rows[i][c] = Fp();
            for (std::size_t j = c + 1; j < ncols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t Mat::rank() const {
    // Peel rows carrying a single live nonzero entry: each contributes 1 to
    // the rank and deletes its column from the rest. Fat points at the
    // coordinate points produce whole blocks of such rows. Row nonzero
    // counts and a column index keep the peel linear in the nonzeros.
    const std::size_t n = rows_.size();
    std::vector<bool> col_dead(ncols_, false), row_dead(n, false);
    std::vector<std::size_t> nnz(n, 0);
    std::vector<std::vector<std::size_t>> rows_of_col(ncols_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (!rows_[i][j].is_zero()) {
                ++nnz[i];
                rows_of_col[j].push_back(i);
            }
        }
    }
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i)
        if (nnz[i] == 1) queue.push_back(i);
    std::size_t peeled = 0;
    while (!queue.empty()) {
        const std::size_t i = queue.back();
        queue.pop_back();
        if (row_dead[i] || nnz[i] != 1) continue;
        std::size_t col = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (!col_dead[j] && !rows_[i][j].is_zero()) {
                col = j;
                break;
            }
        }
        if (col == ncols_) continue;
        row_dead[i] = true;
        col_dead[col] = true;
        ++peeled;
        for (const std::size_t r : rows_of_col[col]) {
            if (row_dead[r]) continue;
            if (--nnz[r] == 1) queue.push_back(r);
        }
    }
    std::vector<std::size_t> live_cols;
    for (std::size_t j = 0; j < ncols_; ++j)
        if (!col_dead[j]) live_cols.push_back(j);
    std::vector<Row> dense;
    for (std::size_t i = 0; i < n; ++i) {
        if (row_dead[i] || nnz[i] == 0) continue;
        Row r(live_cols.size());
        for (std::size_t j = 0; j < live_cols.size(); ++j) r[j] = rows_[i][live_cols[j]];
        dense.push_back(std::move(r));
    }
    return peeled + eliminate(dense, live_cols.size());
}

Mat Mat::rref() const {
    std::vector<Row> rows = rows_;
    std::size_t r = eliminate(rows, ncols_);
    rows.resize(r);
    // normalize pivots and clear above
    std::vector<std::size_t> pivot_col(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t c = 0;
        while (c < ncols_ && rows[i][c].is_zero()) ++c;
        pivot_col[i] = c;
        const Fp inv = rows[i][c].inv();
        for (std::size_t j = c; j < ncols_; ++j) rows[i][j] *= inv;
    }
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t c = pivot_col[i];
        for (std::size_t k = 0; k < i; ++k) {
            if (rows[k][c].is_zero()) continue;
            const Fp f = rows[k][c];
            for (std::size_t j = c; j < ncols_; ++j) rows[k][j] -= f * rows[i][j];
        }
    }
    Mat out(ncols_);
    for (auto& row : rows) out.add_row(std::move(row));
    return out;
}

Mat Mat::nullspace() const {
    const Mat R = rref();
    std::vector<bool> is_pivot(ncols_, false);
    std::vector<std::size_t> pivot_of_col(ncols_, 0);
    for (std::size_t i = 0; i < R.nrows(); ++i) {
        std::size_t c = 0;
        while (c < ncols_ && R.at(i, c).is_zero()) ++c;
        is_pivot[c] = true;
        pivot_of_col[c] = i;
    }
    Mat out(ncols_);
    for (std::size_t j = 0; j < ncols_; ++j) {
        if (is_pivot[j]) continue;
        Row v(ncols_);
        v[j] = Fp(1);
        for (std::size_t c = 0; c < ncols_; ++c) {
            if (is_pivot[c]) v[c] = -R.at(pivot_of_col[c], j);
        }
        out.add_row(std::move(v));
    }
    return out;
}

Mat Mat::transpose() const {
    Mat out(ncols_, nrows());
    for (std::size_t i = 0; i < nrows(); ++i)
        for (std::size_t j = 0; j < ncols_; ++j) out.at(j, i) = rows_[i][j];
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (ncols_ != o.nrows()) throw std::invalid_argument("dimension mismatch in product");
    Mat out(nrows(), o.ncols());
    for (std::size_t i = 0; i < nrows(); ++i) {
        for (std::size_t k = 0; k < ncols_; ++k) {
            const Fp x = rows_[i][k];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.ncols(); ++j)
                out.at(i, j) += x * o.at(k, j);
        }
    }
    return out;
}

void Mat::scale_columns(const std::vector<Fp>& diag) {
    if (diag.size() != ncols_) throw std::invalid_argument("diagonal length mismatch");
    for (auto& row : rows_)
        for (std::size_t j = 0; j < ncols_; ++j) row[j] *= diag[j];
}

std::size_t stacked_rank(const Mat& a, const Mat& b) {
    Mat s = a;
    s.append(b);
    return s.rank();
}

}  // namespace svt
