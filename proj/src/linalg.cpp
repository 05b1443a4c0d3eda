#include "cliffsym/linalg.hpp"

#include <stdexcept>

namespace cliffsym {

bool Echelon::add(std::vector<Rat> v)
{
    if (v.size() != width_) throw std::invalid_argument("Echelon::add: width mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& f = v[pivots_[r]];
        if (f.is_zero()) continue;
        Rat factor = f;
        for (size_t c = pivots_[r]; c < width_; ++c)
            if (!rows_[r][c].is_zero()) v[c] -= factor * rows_[r][c];
    }
    size_t p = width_;
    for (size_t c = 0; c < width_; ++c)
        if (!v[c].is_zero()) {
            p = c;
            break;
        }
    if (p == width_) return false;
    Rat inv = Rat(1) / v[p];
    for (size_t c = p; c < width_; ++c) v[c] *= inv;
    // back-substitute into existing rows to keep them reduced
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& f = rows_[r][p];
        if (f.is_zero()) continue;
        Rat factor = f;
        for (size_t c = p; c < width_; ++c)
            if (!v[c].is_zero()) rows_[r][c] -= factor * v[c];
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
    return true;
}

std::vector<Rat> Echelon::reduce(std::vector<Rat> v) const
{
    if (v.size() != width_) throw std::invalid_argument("Echelon::reduce: width mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& f = v[pivots_[r]];
        if (f.is_zero()) continue;
        Rat factor = f;
        for (size_t c = pivots_[r]; c < width_; ++c)
            if (!rows_[r][c].is_zero()) v[c] -= factor * rows_[r][c];
    }
    return v;
}

bool Echelon::contains(std::vector<Rat> v) const
{
    v = reduce(std::move(v));
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

SolveResult solve_in_span(const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& target)
{
    size_t rows = target.size();
    size_t cols = columns.size();
    for (auto& c : columns)
        if (c.size() != rows) throw std::invalid_argument("solve_in_span: width mismatch");

    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < rows; ++i) m[i][j] = columns[j][i];
    for (size_t i = 0; i < rows; ++i) m[i][cols] = target[i];

    std::vector<size_t> pivot_row_of_col(cols, SIZE_MAX);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = SIZE_MAX;
        for (size_t r = row; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                p = r;
                break;
            }
        if (p == SIZE_MAX) continue;
        std::swap(m[p], m[row]);
        Rat inv = Rat(1) / m[row][col];
        for (size_t c = col; c <= cols; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_row_of_col[col] = row;
        ++row;
    }

    SolveResult res;
    for (size_t r = row; r < rows; ++r)
        if (!m[r][cols].is_zero()) return res;  // inconsistent
    res.solvable = true;
    res.unique = true;
    res.x.assign(cols, Rat(0));
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_row_of_col[c] == SIZE_MAX) res.unique = false;
        else
            res.x[c] = m[pivot_row_of_col[c]][cols];
    }
    return res;
}

int rank_of(const std::vector<std::vector<Rat>>& vectors, size_t width)
{
    Echelon e(width);
    for (auto& v : vectors) e.add(v);
    return e.rank();
}

}  // namespace cliffsym
