#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fermat/mpoly.hpp"

namespace fermat {

/// Incremental Gaussian elimination over Q(e_n).
///
/// Rows are streamed in; each is reduced against the pivots accepted so far,
/// in the order they were accepted, and kept if anything survives. Pivot k is
/// normalized to 1 at its pivot column and is zero at the pivot columns of
/// pivots 0..k-1, so the pivot set is triangular in acceptance order. Rank is
/// exact; no row ever has to be revisited.
class RowReducer {
public:
    /// `order` is the root order rows are lifted to before elimination; rows
    /// of other (dividing) orders are accepted and converted.
    explicit RowReducer(std::size_t ncols, int order = 1) : ncols_(ncols), order_(order) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return pivots_.size(); }
    bool full() const { return pivots_.size() == ncols_; }

    /// Returns true if the row was independent of the rows added before.
    bool add_row(std::vector<Cyclo> row);
    /// The residue of row after reduction (zero iff row is in the span).
    std::vector<Cyclo> reduce(std::vector<Cyclo> row) const;
    bool in_span(std::span<const Cyclo> row) const;

    /// Basis of { v : r . v = 0 for every added row r }, one vector per free column.
    std::vector<std::vector<Cyclo>> kernel_basis() const;
    /// Reduced row echelon form of the row space, rows ordered by pivot column.
    std::vector<std::vector<Cyclo>> rref() const;
    /// Pivot columns in acceptance order.
    std::vector<std::size_t> pivot_columns() const;

private:
    struct Pivot {
        std::size_t col;
        std::vector<Cyclo> row;
        std::vector<std::size_t> support;
    };
    void reduce_in_place(std::vector<Cyclo>& row) const;

    void lift(std::vector<Cyclo>& row) const;

    std::size_t ncols_;
    int order_;
    std::vector<Pivot> pivots_;
};

/// Rank of a matrix given by rows; order 0 means the common order of the entries.
std::size_t matrix_rank(const CycloMatrix& rows, std::size_t ncols, int order = 0);

/// Kernel of the map v -> rows * v.
std::vector<std::vector<Cyclo>> matrix_kernel(const CycloMatrix& rows, std::size_t ncols, int order = 0);

/// Least common multiple of the root orders of all entries.
int common_order(const CycloMatrix& rows);

/// Dot product sum_i a_i b_i.
Cyclo dot(std::span<const Cyclo> a, std::span<const Cyclo> b);

}  // namespace fermat
