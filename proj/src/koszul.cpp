#include "betticone/koszul.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace betticone {

namespace {

long twist_entry(const std::vector<long>& entries) {
    if (entries.size() < 2)
        throw std::invalid_argument("determining vector needs a twist and at least one degree");
    return entries.front();
}

}  // namespace

DeterminingVector::DeterminingVector(long twist, std::vector<long> degrees)
    : twist_(twist), degrees_(std::move(degrees)) {
    if (degrees_.empty())
        throw std::invalid_argument("determining vector needs at least one degree");
    for (long d : degrees_)
        if (d < 1) throw std::invalid_argument("degrees must be positive");
    std::sort(degrees_.begin(), degrees_.end());
}

DeterminingVector::DeterminingVector(const std::vector<long>& entries)
    : DeterminingVector(twist_entry(entries),
                        std::vector<long>(entries.empty() ? entries.end() : entries.begin() + 1,
                                          entries.end())) {}

long DeterminingVector::regularity() const {
    return twist_ + std::accumulate(degrees_.begin(), degrees_.end(), 0L) - codim();
}

std::vector<long> DeterminingVector::entries() const {
    std::vector<long> out;
    out.reserve(degrees_.size() + 1);
    out.push_back(twist_);
    out.insert(out.end(), degrees_.begin(), degrees_.end());
    return out;
}

BettiDiagram ci_diagram(const DeterminingVector& a) {
    const auto& degrees = a.degrees();
    const long c = a.codim();
    const long total = std::accumulate(degrees.begin(), degrees.end(), 0L);

    // counts[i][s]: index subsets of size i with degree sum s.
    std::vector<std::vector<Int>> counts(c + 1, std::vector<Int>(total + 1, 0));
    counts[0][0] = 1;
    for (long d : degrees)
        for (long i = c; i >= 1; --i)
            for (long s = total; s >= d; --s)
                counts[i][s] += counts[i - 1][s - d];

    BettiDiagram out;
    for (long i = 0; i <= c; ++i)
        for (long s = 0; s <= total; ++s)
            if (counts[i][s] != 0)
                out.set_at_degree(i, a.twist() + s, Rat(counts[i][s]));
    return out;
}

std::pair<DeterminingVector, DeterminingVector> koszul_factor(const DeterminingVector& a,
                                                              std::size_t i) {
    if (a.codim() < 2)
        throw std::invalid_argument("koszul factorization needs codimension at least 2");
    if (i < 1 || i > static_cast<std::size_t>(a.codim()))
        throw std::invalid_argument("degree index out of range");
    std::vector<long> rest = a.degrees();
    const long removed = rest[i - 1];
    rest.erase(rest.begin() + static_cast<long>(i - 1));
    return {DeterminingVector(a.twist(), std::move(rest)),
            DeterminingVector(0, {removed})};
}

bool vector_leq(const DeterminingVector& a, const DeterminingVector& b) {
    if (a.codim() != b.codim()) return false;
    if (a.twist() > b.twist()) return false;
    for (long i = 0; i < a.codim(); ++i)
        if (a.degrees()[i] > b.degrees()[i]) return false;
    return true;
}

}  // namespace betticone
