#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "betticone/diagram.hpp"
#include "betticone/koszul.hpp"

namespace betticone {

// Output of the candidate filter: C0 holds the rows of the nonzero column-0
// entries, C1 the internal degrees of the nonzero column-1 entries, and L
// every determining vector whose diagram could appear in a nonnegative
// decomposition (twist in C0, all column-1 degrees in C1, codimension at
// most w, regularity at most h).  L is duplicate-free and sorted.
struct CandidateSet {
    std::vector<long> C0;
    std::vector<long> C1;
    std::vector<DeterminingVector> L;

    std::size_t r() const { return L.size(); }
};

CandidateSet candidates(const BettiDiagram& gamma, long w, long h);

enum class Embedding { reduced, full };

struct DecomposeOptions {
    Embedding embedding = Embedding::reduced;

    // Scale strategy.  escalate searches at D = d first and computes the
    // minor bound only when that search comes up empty, so a non-membership
    // verdict is always certified; exact computes the bound up front;
    // a set override skips the minor computation and uses the given value,
    // which leaves the verdict uncertified.
    enum class Bound { escalate, exact } bound = Bound::escalate;
    std::optional<Int> d_prime_override;

    bool prune = true;
    std::optional<std::uint64_t> max_solutions;
    std::optional<long> variables;  // caps the candidate codimension
    std::ostream* progress = nullptr;
};

struct DecompositionTerm {
    DeterminingVector vector;
    Int coeff;
};

// D * gamma = sum of coeff * ci_diagram(vector); m is the common coefficient
// total, terms are sorted by vector.
struct Decomposition {
    std::vector<DecompositionTerm> terms;
    Int D;
    Int m;
};

struct DecomposeResult {
    bool member = false;
    // True when the emitted list is exhaustive at the certified scale bound
    // and the search was not cut short.
    bool complete = false;
    std::vector<Decomposition> decompositions;
    Int d = 1;
    Int d_prime = 1;
    Int D = 1;
    Int m = 0;
    std::uint64_t tuples_examined = 0;
    // The row shift applied internally to bring the top row to 0; all
    // reported vectors and candidate data are mapped back to the input's
    // coordinates.
    long applied_twist = 0;
    CandidateSet cands;
};

// Decides membership of gamma in the cone spanned by complete-intersection
// diagrams and lists every integral decomposition at the working scale D.
// Rejects diagrams with negative entries; the zero diagram is a member with
// the empty decomposition.
DecomposeResult decompose(const BettiDiagram& gamma, const DecomposeOptions& opts = {});

// Exact recheck: D * gamma equals the term sum and all coefficients are
// positive.
bool verify(const BettiDiagram& gamma, const Decomposition& dec);

// Decomposes p * ci_diagram(a) and reports whether every decomposition found
// is a multiple of that single diagram.
bool extremality_check(const DeterminingVector& a, const Int& p);

// Partitions the vectors into maximal chains of the coordinatewise order,
// longest chain first.
std::vector<std::vector<DeterminingVector>> chain_filter(std::vector<DeterminingVector> l);

}  // namespace betticone
