#include "betticone/diagram.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace betticone {

Rat BettiDiagram::entry_at_degree(long col, long deg) const {
    auto it = entries_.find({col, deg});
    return it == entries_.end() ? Rat(0) : it->second;
}

void BettiDiagram::set_at_degree(long col, long deg, const Rat& value) {
    if (col < 0) throw std::invalid_argument("column index must be nonnegative");
    // Callers may hand over raw p/q pairs; exact comparison needs canonical
    // form, so normalize at the boundary.
    Rat v = value;
    v.canonicalize();
    if (v == 0)
        entries_.erase({col, deg});
    else
        entries_[{col, deg}] = std::move(v);
}

void BettiDiagram::add_at_degree(long col, long deg, const Rat& value) {
    if (col < 0) throw std::invalid_argument("column index must be nonnegative");
    Rat v = value;
    v.canonicalize();
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace({col, deg}, std::move(v));
    if (!inserted) {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

bool BettiDiagram::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& kv) { return kv.second > 0; });
}

bool BettiDiagram::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& kv) { return kv.second.get_den() == 1; });
}

long BettiDiagram::pdim() const {
    if (entries_.empty()) throw std::invalid_argument("pdim undefined on zero diagram");
    return entries_.rbegin()->first.first;
}

long BettiDiagram::reg() const {
    if (entries_.empty()) throw std::invalid_argument("reg undefined on zero diagram");
    long r = entries_.begin()->first.second - entries_.begin()->first.first;
    for (const auto& [key, value] : entries_) r = std::max(r, key.second - key.first);
    return r;
}

long BettiDiagram::top_row() const {
    if (entries_.empty()) throw std::invalid_argument("top row undefined on zero diagram");
    long r = entries_.begin()->first.second - entries_.begin()->first.first;
    for (const auto& [key, value] : entries_) r = std::min(r, key.second - key.first);
    return r;
}

BettiDiagram BettiDiagram::twist(long t) const {
    BettiDiagram out;
    for (const auto& [key, value] : entries_)
        out.entries_.emplace(Key{key.first, key.second + t}, value);
    return out;
}

Rat BettiDiagram::total_betti(long col) const {
    Rat sum = 0;
    for (auto it = entries_.lower_bound({col, std::numeric_limits<long>::min()});
         it != entries_.end() && it->first.first == col; ++it)
        sum += it->second;
    return sum;
}

std::pair<Int, BettiDiagram> BettiDiagram::clear_denominators() const {
    Int d = 1;
    for (const auto& [key, value] : entries_) d = lcm(d, value.get_den());
    return {d, scale(*this, Rat(d))};
}

BettiDiagram add(const BettiDiagram& x, const BettiDiagram& y) {
    BettiDiagram out = x;
    for (const auto& [key, value] : y.cells())
        out.add_at_degree(key.first, key.second, value);
    return out;
}

BettiDiagram sub(const BettiDiagram& x, const BettiDiagram& y) {
    BettiDiagram out = x;
    for (const auto& [key, value] : y.cells())
        out.add_at_degree(key.first, key.second, -value);
    return out;
}

BettiDiagram scale(const BettiDiagram& x, const Rat& q) {
    BettiDiagram out;
    if (q == 0) return out;
    for (const auto& [key, value] : x.cells())
        out.set_at_degree(key.first, key.second, value * q);
    return out;
}

BettiDiagram odot(const BettiDiagram& x, const BettiDiagram& y) {
    BettiDiagram out;
    for (const auto& [kx, vx] : x.cells())
        for (const auto& [ky, vy] : y.cells())
            out.add_at_degree(kx.first + ky.first, kx.second + ky.second, vx * vy);
    return out;
}

}  // namespace betticone
