#pragma once

// Dense matrices over F_p with exact elimination. Sizes here are desk scale
// (a few hundred rows/columns), so everything is plain Gaussian elimination;
// rank() first peels rows with a single nonzero entry, which makes the large
// coordinate-fat-point blocks of condition matrices essentially free.

#include <cstddef>
#include <vector>

#include "svt/field.hpp"

namespace svt {

using Row = std::vector<Fp>;

class Mat {
  public:
    explicit Mat(std::size_t ncols) : ncols_(ncols) {}
    Mat(std::size_t nrows, std::size_t ncols)
        : ncols_(ncols), rows_(nrows, Row(ncols)) {}

    static Mat identity(std::size_t n);

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

    Fp& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Fp& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const Row& row(std::size_t i) const { return rows_[i]; }

    void add_row(Row r);
    void append(const Mat& other);  // stack rows; column counts must agree

    std::size_t rank() const;
    Mat rref() const;       // canonical: unit pivots, sorted, no zero rows
    Mat nullspace() const;  // rows span { v : M v = 0 }, canonical
    Mat transpose() const;
    Mat operator*(const Mat& o) const;

    // row-scale every column j by diag[j]
    void scale_columns(const std::vector<Fp>& diag);

    bool operator==(const Mat& o) const = default;

  private:
    std::size_t ncols_;
    std::vector<Row> rows_;
};

// rank of the vertical stack without materializing a copy of both
std::size_t stacked_rank(const Mat& a, const Mat& b);

}  // namespace svt
