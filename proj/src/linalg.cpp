#include "fermat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermat {

void RowReducer::lift(std::vector<Cyclo>& row) const {
    if (order_ == 1) return;
    for (auto& c : row)
        if (c.order() != order_ && order_ % c.order() == 0) c = c.to_order(order_);
}

void RowReducer::reduce_in_place(std::vector<Cyclo>& row) const {
    if (row.size() != ncols_) throw std::invalid_argument("row length does not match column count");
    lift(row);
    for (const Pivot& p : pivots_) {
        if (row[p.col].is_zero()) continue;
        const Cyclo factor = row[p.col];
        for (std::size_t j : p.support) row[j].sub_mul(factor, p.row[j]);
    }
}

std::vector<Cyclo> RowReducer::reduce(std::vector<Cyclo> row) const {
    reduce_in_place(row);
    return row;
}

bool RowReducer::in_span(std::span<const Cyclo> row) const {
    std::vector<Cyclo> r(row.begin(), row.end());
    reduce_in_place(r);
    return std::all_of(r.begin(), r.end(), [](const Cyclo& c) { return c.is_zero(); });
}

bool RowReducer::add_row(std::vector<Cyclo> row) {
    if (full()) {
        if (row.size() != ncols_) throw std::invalid_argument("row length does not match column count");
        return false;
    }
    reduce_in_place(row);
    auto lead = std::find_if(row.begin(), row.end(), [](const Cyclo& c) { return !c.is_zero(); });
    if (lead == row.end()) return false;
    const std::size_t col = static_cast<std::size_t>(lead - row.begin());
    const Cyclo inv = lead->inverse();
    Pivot p{col, std::move(row), {}};
    for (std::size_t j = col; j < ncols_; ++j) {
        if (p.row[j].is_zero()) continue;
        p.row[j] *= inv;
        p.support.push_back(j);
    }
    pivots_.push_back(std::move(p));
    return true;
}

std::vector<std::size_t> RowReducer::pivot_columns() const {
    std::vector<std::size_t> cols;
    for (const auto& p : pivots_) cols.push_back(p.col);
    return cols;
}

std::vector<std::vector<Cyclo>> RowReducer::kernel_basis() const {
    const int order = order_;
    std::vector<bool> is_pivot(ncols_, false);
    for (const auto& p : pivots_) is_pivot[p.col] = true;
    std::vector<std::vector<Cyclo>> basis;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Cyclo> v(ncols_, Cyclo::zero(order));
        v[f] = Cyclo::one(order);
        // Pivot k only involves its own column, free columns, and columns of
        // later pivots, so solve in reverse acceptance order.
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            Cyclo x = Cyclo::zero(order);
            for (std::size_t j : it->support)
                if (j != it->col && !v[j].is_zero()) x.sub_mul(it->row[j], v[j]);
            v[it->col] = x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Cyclo>> RowReducer::rref() const {
    std::vector<Pivot> rows = pivots_;
    std::sort(rows.begin(), rows.end(), [](const Pivot& a, const Pivot& b) { return a.col < b.col; });
    for (std::size_t i = rows.size(); i-- > 0;) {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == i || rows[k].row[rows[i].col].is_zero()) continue;
            const Cyclo factor = rows[k].row[rows[i].col];
            for (std::size_t j = 0; j < ncols_; ++j)
                if (!rows[i].row[j].is_zero()) rows[k].row[j].sub_mul(factor, rows[i].row[j]);
        }
    }
    std::vector<std::vector<Cyclo>> out;
    for (auto& p : rows) out.push_back(std::move(p.row));
    return out;
}

int common_order(const CycloMatrix& rows) {
    int order = 1;
    for (const auto& row : rows)
        for (const auto& c : row)
            if (!c.is_rational()) order = lcm_order(order, c.order());
    return order;
}

std::size_t matrix_rank(const CycloMatrix& rows, std::size_t ncols, int order) {
    RowReducer r(ncols, order > 0 ? order : common_order(rows));
    for (const auto& row : rows) {
        r.add_row(row);
        if (r.full()) break;
    }
    return r.rank();
}

std::vector<std::vector<Cyclo>> matrix_kernel(const CycloMatrix& rows, std::size_t ncols, int order) {
    RowReducer r(ncols, order > 0 ? order : common_order(rows));
    for (const auto& row : rows) r.add_row(row);
    return r.kernel_basis();
}

Cyclo dot(std::span<const Cyclo> a, std::span<const Cyclo> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Cyclo s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        s += a[i] * b[i];
    }
    return s;
}

}  // namespace fermat
