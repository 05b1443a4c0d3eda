#pragma once

#include <optional>
#include <vector>

#include "cliffsym/rational.hpp"

namespace cliffsym {

/* Incremental row-echelon basis over the rationals. Pivot entries are
 * normalized to 1; rows stay fully reduced against each other, so
 * membership tests are single sweeps. */
class Echelon {
  public:
    explicit Echelon(size_t width) : width_(width) {}

    size_t width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /* Reduce v against the basis; insert the remainder when nonzero.
     * Returns true when the rank grew. */
    bool add(std::vector<Rat> v);
    bool contains(std::vector<Rat> v) const;

    /* Remainder of v after reduction (zero vector iff contained). */
    std::vector<Rat> reduce(std::vector<Rat> v) const;

  private:
    size_t width_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<size_t> pivots_;  // pivot column per row, increasing
};

struct SolveResult {
    bool solvable = false;
    bool unique = false;
    std::vector<Rat> x;  // one solution (free variables set to zero)
};

/* Solve sum_j x_j * columns[j] = target exactly. */
SolveResult solve_in_span(const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& target);

int rank_of(const std::vector<std::vector<Rat>>& vectors, size_t width);

}  // namespace cliffsym
