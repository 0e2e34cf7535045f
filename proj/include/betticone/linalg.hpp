#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "betticone/diagram.hpp"

namespace betticone {

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    bool is_integral() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rat> data_;
};

// Ordered list of (column, degree) cells fixing the coordinates used to
// flatten diagrams into column vectors.  Cells are sorted by column, then
// degree, matching the column-major reading of a Betti table.
struct SupportBasis {
    std::vector<std::pair<long, long>> cells;

    // Union of the supports of the given diagrams.
    static SupportBasis from_supports(const std::vector<BettiDiagram>& diagrams);
    // Every cell with 0 <= column <= pdim and 0 <= row <= reg.
    static SupportBasis full_rectangle(long pdim, long reg);

    std::size_t size() const { return cells.size(); }
};

// Coordinates of d in basis order; every supported cell of d must appear in
// the basis.
std::vector<Rat> vectorize(const BettiDiagram& d, const SupportBasis& basis);

// Exact determinant by fraction-free elimination.
Rat det(const RationalMatrix& m);

// lcm of the absolute values of the nonzero maximal minors of an integral
// matrix with rows <= cols.  Throws if the rows are not spanned (rank < N).
Int maximal_minor_lcm(const RationalMatrix& a);

struct CramerSolution {
    std::vector<Rat> x;
    Rat det_b;
    std::vector<Rat> det_bk;  // numerator determinant witnesses, x[k] = det_bk[k] / det_b
};

CramerSolution cramer_solve(const RationalMatrix& b, const std::vector<Rat>& v);

// The integer d' such that d' times any nonnegative rational combination of
// the given diagrams admits a nonnegative integral combination: the lcm of
// the nonzero maximal minors of (vectorized diagrams | identity).
// The diagrams must be nonzero and integral.
Int denominator_bound(const std::vector<BettiDiagram>& diagrams, const SupportBasis& basis);

}  // namespace betticone
