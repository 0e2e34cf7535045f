#pragma once

#include <map>
#include <utility>

#include "betticone/rational.hpp"

namespace betticone {

// Finitely supported table of rationals indexed by (homological column,
// internal degree).  The entry stored at (i, d) is displayed in column i,
// row d - i, so the usual Betti table layout puts beta_{i,i+j} at row j.
// Entries of value zero are never stored.
class BettiDiagram {
public:
    using Key = std::pair<long, long>;  // (column, degree)
    using Map = std::map<Key, Rat>;

    BettiDiagram() = default;

    // Value in column i, displayed row j; absent cells read as zero.
    Rat entry(long col, long row) const { return entry_at_degree(col, col + row); }
    Rat entry_at_degree(long col, long deg) const;

    void set(long col, long row, const Rat& value) { set_at_degree(col, col + row, value); }
    void set_at_degree(long col, long deg, const Rat& value);
    void add_at_degree(long col, long deg, const Rat& value);

    const Map& cells() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    bool is_nonnegative() const;
    bool is_integral() const;

    long pdim() const;     // last nonzero column; undefined on the zero diagram
    long reg() const;      // last nonzero row; undefined on the zero diagram
    long top_row() const;  // first nonzero row; undefined on the zero diagram

    // Shifts every row (equivalently every degree) by t.
    BettiDiagram twist(long t) const;

    // Column sum.
    Rat total_betti(long col) const;

    // (lcm of the entry denominators, the diagram scaled by it).
    std::pair<Int, BettiDiagram> clear_denominators() const;

    friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

private:
    Map entries_;
};

BettiDiagram add(const BettiDiagram& x, const BettiDiagram& y);
BettiDiagram sub(const BettiDiagram& x, const BettiDiagram& y);
BettiDiagram scale(const BettiDiagram& x, const Rat& q);

// Convolution over (column, degree) pairs; the one-entry diagram {(0,0): 1}
// is the multiplicative identity.
BettiDiagram odot(const BettiDiagram& x, const BettiDiagram& y);

inline BettiDiagram operator+(const BettiDiagram& x, const BettiDiagram& y) { return add(x, y); }
inline BettiDiagram operator-(const BettiDiagram& x, const BettiDiagram& y) { return sub(x, y); }
inline BettiDiagram operator*(const Rat& q, const BettiDiagram& x) { return scale(x, q); }

}  // namespace betticone
