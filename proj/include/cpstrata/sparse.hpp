#pragma once

#include <map>
#include <vector>

#include "cpstrata/rational.hpp"

namespace cpstrata::linalg {

/// Sparse vector over Q; absent indices are zero, stored entries are nonzero.
using SparseVector = std::map<int, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);  // y += a x

/// Row echelon form where each row's pivot is its largest index and is
/// normalized to 1. Reduction sweeps from the top index down, so the result
/// of reduce() only has entries at non-pivot indices.
class Echelon {
public:
    SparseVector reduce(SparseVector v) const;

    /// Reduces and, if nonzero, keeps the remainder. Returns the new pivot or -1.
    int insert(SparseVector v);

    bool in_span(const SparseVector& v) const { return reduce(v).empty(); }
    bool is_pivot(int index) const { return rows_.count(index) != 0; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseVector>& rows() const { return rows_; }

private:
    std::map<int, SparseVector> rows_;
};

/// Kernel of the linear map sending basis vector i to images[i].
/// Each returned vector has a unique "own" index with coefficient 1 and
/// otherwise only smaller indices.
struct KernelResult {
    std::vector<SparseVector> kernel;
    int rank = 0;  // rank of the map
    Echelon image;
};

KernelResult kernel_and_image(const std::vector<SparseVector>& images);

}  // namespace cpstrata::linalg
