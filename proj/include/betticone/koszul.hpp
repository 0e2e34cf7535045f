#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "betticone/diagram.hpp"

namespace betticone {

// (a0, a1 <= ... <= ac): a twist together with the degrees of a homogeneous
// regular sequence.  Codimension c >= 1, every degree >= 1; constructors sort
// the degrees into canonical nondecreasing order.
class DeterminingVector {
public:
    DeterminingVector(long twist, std::vector<long> degrees);
    explicit DeterminingVector(const std::vector<long>& entries);  // entries[0] is the twist

    long twist() const { return twist_; }
    const std::vector<long>& degrees() const { return degrees_; }
    long codim() const { return static_cast<long>(degrees_.size()); }
    long regularity() const;  // twist + sum of degrees - codim

    std::vector<long> entries() const;  // (a0, a1, ..., ac)

    friend bool operator==(const DeterminingVector&, const DeterminingVector&) = default;
    friend auto operator<=>(const DeterminingVector&, const DeterminingVector&) = default;

private:
    long twist_;
    std::vector<long> degrees_;
};

// Betti diagram of the complete intersection cut out by a.  The entry in
// column i at degree a0 + s counts the size-i index subsets of the degree
// list summing to s; repeated degrees count with multiplicity.
BettiDiagram ci_diagram(const DeterminingVector& a);

// Splits off the 1-based i-th degree: returns the vector with that degree
// removed and (0, a_i).  The product of their diagrams is ci_diagram(a).
// Requires codimension >= 2.
std::pair<DeterminingVector, DeterminingVector> koszul_factor(const DeterminingVector& a,
                                                              std::size_t i);

// Coordinatewise comparison; vectors of different codimension are
// incomparable (always false).
bool vector_leq(const DeterminingVector& a, const DeterminingVector& b);

}  // namespace betticone
