#include "betticone/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "betticone/linalg.hpp"

namespace betticone {

CandidateSet candidates(const BettiDiagram& gamma, long w, long h) {
    if (!gamma.is_nonnegative())
        throw std::invalid_argument("diagram has negative entries");
    CandidateSet cs;
    if (gamma.is_zero()) return cs;

    std::set<long> c0, c1;
    for (const auto& [key, value] : gamma.cells()) {
        if (key.first == 0) c0.insert(key.second);
        if (key.first == 1) c1.insert(key.second);
    }
    cs.C0.assign(c0.begin(), c0.end());
    cs.C1.assign(c1.begin(), c1.end());

    for (long j : cs.C0) {
        std::vector<long> allowed;
        for (long t : cs.C1)
            if (t - j >= 1) allowed.push_back(t - j);
        // Nondecreasing degree tuples over the allowed values, recorded in
        // lexicographic order.  A tuple's regularity j + sum - len never
        // shrinks when a degree is appended, so a violating branch is dead.
        std::vector<long> cur;
        std::function<void(std::size_t, long, long)> grow = [&](std::size_t start, long len,
                                                                long sum) {
            for (std::size_t t = start; t < allowed.size(); ++t) {
                const long len2 = len + 1;
                const long sum2 = sum + allowed[t];
                if (len2 > w) break;
                if (j + sum2 > h + len2) break;
                cur.push_back(allowed[t]);
                cs.L.emplace_back(j, cur);
                grow(t, len2, sum2);
                cur.pop_back();
            }
        };
        grow(0, 0, 0);
    }
    return cs;
}

namespace {

using Key = BettiDiagram::Key;
using IntMap = std::map<Key, Int>;

IntMap to_int_map(const BettiDiagram& d) {
    IntMap out;
    for (const auto& [key, value] : d.cells()) out.emplace(key, value.get_num());
    return out;
}

struct Searcher {
    const IntMap& target;
    const std::vector<IntMap>& diags;
    std::optional<std::uint64_t> max_solutions;
    std::ostream* progress;

    std::vector<std::vector<Int>> found;
    std::uint64_t examined = 0;
    bool cut_short = false;

    bool at_limit() const {
        return max_solutions && found.size() >= *max_solutions;
    }

    void note_examined() {
        ++examined;
        if (progress && examined % (1u << 24) == 0)
            *progress << "  ... " << examined << " tuples examined\n";
    }
};

// Literal enumeration: every composition of m into r parts is formed and the
// resulting sum compared against the target.
void enumerate_all(Searcher& s, std::vector<Int>& tuple, std::size_t pos, const Int& left) {
    if (s.at_limit()) {
        s.cut_short = true;
        return;
    }
    const std::size_t r = s.diags.size();
    if (pos + 1 >= r) {
        if (r > 0) tuple[r - 1] = left;
        s.note_examined();
        IntMap sum;
        for (std::size_t i = 0; i < r; ++i) {
            if (tuple[i] == 0) continue;
            for (const auto& [key, value] : s.diags[i]) {
                auto [it, inserted] = sum.try_emplace(key, tuple[i] * value);
                if (!inserted) it->second += tuple[i] * value;
            }
        }
        if (sum == s.target) s.found.push_back(tuple);
        return;
    }
    for (Int v = 0; v <= left; ++v) {
        tuple[pos] = v;
        enumerate_all(s, tuple, pos + 1, left - v);
        if (s.cut_short) return;
    }
    tuple[pos] = 0;
}

struct Group {
    long twist;
    std::size_t begin;
    std::size_t end;
    Int budget;
};

void apply(IntMap& remaining, const IntMap& diag, const Int& times) {
    if (times == 0) return;
    for (const auto& [key, value] : diag) {
        auto [it, inserted] = remaining.try_emplace(key, times * value);
        if (!inserted) {
            it->second += times * value;
            if (it->second == 0) remaining.erase(it);
        }
    }
}

// Depth-first search with two exact cuts: the coefficients of each twist
// group must add up to that group's column-0 budget, and no partial sum may
// exceed the target in any cell.
void search_pruned(Searcher& s, const std::vector<Group>& groups, IntMap& remaining,
                   std::vector<Int>& tuple, std::size_t g, std::size_t idx, const Int& left) {
    if (s.at_limit()) {
        s.cut_short = true;
        return;
    }
    if (g == groups.size()) {
        s.note_examined();
        if (remaining.empty()) s.found.push_back(tuple);
        return;
    }
    if (idx == 0 && left == 0) {
        // Nothing to place in this group; only the all-zero assignment fits.
        std::size_t width = groups[g].end - groups[g].begin;
        for (std::size_t k = 0; k < width; ++k) tuple[groups[g].begin + k] = 0;
        const Int next = g + 1 < groups.size() ? groups[g + 1].budget : Int(0);
        search_pruned(s, groups, remaining, tuple, g + 1, 0, next);
        return;
    }
    const std::size_t i = groups[g].begin + idx;
    const IntMap& diag = s.diags[i];
    const bool last = (i + 1 == groups[g].end);

    Int cap = left;
    for (const auto& [key, value] : diag) {
        auto it = remaining.find(key);
        const Int have = it == remaining.end() ? Int(0) : it->second;
        Int q = have / value;  // floor; both operands nonnegative
        if (q < cap) cap = q;
        if (cap == 0) break;
    }

    if (last) {
        if (left > cap) return;
        tuple[i] = left;
        apply(remaining, diag, -left);
        const Int next = g + 1 < groups.size() ? groups[g + 1].budget : Int(0);
        search_pruned(s, groups, remaining, tuple, g + 1, 0, next);
        apply(remaining, diag, left);
        return;
    }
    Int v = 0;
    while (true) {
        tuple[i] = v;
        search_pruned(s, groups, remaining, tuple, g, idx + 1, left - v);
        if (s.cut_short) break;
        if (v == cap) break;
        apply(remaining, diag, -1);
        ++v;
    }
    apply(remaining, diag, v);
    tuple[i] = 0;
}

std::vector<std::vector<Int>> run_search(const BettiDiagram& target,
                                         const std::vector<BettiDiagram>& diagrams,
                                         const std::vector<DeterminingVector>& vecs,
                                         const Int& m, const DecomposeOptions& opts,
                                         std::uint64_t& examined, bool& cut_short) {
    std::vector<IntMap> diags;
    diags.reserve(diagrams.size());
    for (const BettiDiagram& d : diagrams) diags.push_back(to_int_map(d));
    IntMap tgt = to_int_map(target);

    Searcher s{tgt, diags, opts.max_solutions, opts.progress, {}, 0, false};
    std::vector<Int> tuple(diags.size(), Int(0));

    if (!opts.prune) {
        if (diags.empty()) {
            if (m == 0) {
                s.note_examined();
                if (tgt.empty()) s.found.push_back(tuple);
            }
        } else {
            enumerate_all(s, tuple, 0, m);
        }
    } else {
        std::vector<Group> groups;
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            if (groups.empty() || groups.back().twist != vecs[i].twist())
                groups.push_back({vecs[i].twist(), i, i + 1, Int(0)});
            else
                groups.back().end = i + 1;
        }
        bool feasible = true;
        std::set<long> covered;
        for (Group& g : groups) {
            auto it = tgt.find({0, g.twist});
            g.budget = it == tgt.end() ? Int(0) : it->second;
            covered.insert(g.twist);
        }
        for (const auto& [key, value] : tgt)
            if (key.first == 0 && !covered.count(key.second)) feasible = false;
        if (feasible) {
            IntMap remaining = tgt;
            const Int first = groups.empty() ? Int(0) : groups.front().budget;
            if (groups.empty()) {
                s.note_examined();
                if (remaining.empty()) s.found.push_back(tuple);
            } else {
                search_pruned(s, groups, remaining, tuple, 0, 0, first);
            }
        }
    }
    examined += s.examined;
    cut_short = s.cut_short;
    return std::move(s.found);
}

Int column0_total(const BettiDiagram& d) {
    Rat m = d.total_betti(0);
    return m.get_num();
}

}  // namespace

DecomposeResult decompose(const BettiDiagram& gamma0, const DecomposeOptions& opts) {
    if (!gamma0.is_nonnegative())
        throw std::invalid_argument("diagram has negative entries");

    DecomposeResult res;
    if (gamma0.is_zero()) {
        res.member = true;
        res.complete = true;
        res.decompositions.push_back({{}, Int(1), Int(0)});
        return res;
    }

    const long shift = -gamma0.top_row();
    res.applied_twist = shift;
    const BettiDiagram gamma = gamma0.twist(shift);
    auto [d, gd] = gamma.clear_denominators();
    res.d = d;

    long w = gamma.pdim();
    if (opts.variables) w = std::min(w, *opts.variables);
    const long h = gamma.reg();
    CandidateSet cs = candidates(gamma, w, h);

    std::vector<BettiDiagram> diags;
    diags.reserve(cs.L.size());
    for (const DeterminingVector& v : cs.L) diags.push_back(ci_diagram(v));

    auto bound_for_family = [&]() -> Int {
        SupportBasis basis;
        if (opts.embedding == Embedding::reduced) {
            std::vector<BettiDiagram> all = diags;
            all.push_back(gd);
            basis = SupportBasis::from_supports(all);
        } else {
            basis = SupportBasis::full_rectangle(gamma.pdim(), gamma.reg());
        }
        return denominator_bound(diags, basis);
    };

    bool cut_short = false;
    auto run_at = [&](const Int& d_prime) -> std::vector<std::vector<Int>> {
        BettiDiagram target = scale(gd, Rat(d_prime));
        res.m = column0_total(target);
        res.d_prime = d_prime;
        res.D = d * d_prime;
        return run_search(target, diags, cs.L, res.m, opts, res.tuples_examined, cut_short);
    };

    std::vector<std::vector<Int>> tuples;
    bool certified = false;
    if (opts.d_prime_override) {
        if (*opts.d_prime_override < 1)
            throw std::invalid_argument("denominator override must be positive");
        tuples = run_at(*opts.d_prime_override);
    } else if (opts.bound == DecomposeOptions::Bound::exact) {
        tuples = run_at(bound_for_family());
        certified = true;
    } else {
        tuples = run_at(Int(1));
        if (tuples.empty() && !cut_short) {
            const Int dp = bound_for_family();
            if (dp != 1) tuples = run_at(dp);
            certified = true;
        }
    }

    res.member = !tuples.empty();
    res.complete = certified && !cut_short;
    for (const std::vector<Int>& tuple : tuples) {
        Decomposition dec;
        dec.D = res.D;
        dec.m = res.m;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            if (tuple[i] > 0)
                dec.terms.push_back(
                    {DeterminingVector(cs.L[i].twist() - shift, cs.L[i].degrees()), tuple[i]});
        res.decompositions.push_back(std::move(dec));
    }

    for (long& j : cs.C0) j -= shift;
    for (long& t : cs.C1) t -= shift;
    std::vector<DeterminingVector> shifted;
    shifted.reserve(cs.L.size());
    for (const DeterminingVector& v : cs.L)
        shifted.emplace_back(v.twist() - shift, v.degrees());
    cs.L = std::move(shifted);
    res.cands = std::move(cs);
    return res;
}

bool verify(const BettiDiagram& gamma, const Decomposition& dec) {
    BettiDiagram sum;
    for (const DecompositionTerm& term : dec.terms) {
        if (term.coeff <= 0) return false;
        sum = add(sum, scale(ci_diagram(term.vector), Rat(term.coeff)));
    }
    return sum == scale(gamma, Rat(dec.D));
}

bool extremality_check(const DeterminingVector& a, const Int& p) {
    if (p < 1) throw std::invalid_argument("multiplier must be positive");
    DecomposeResult res = decompose(scale(ci_diagram(a), Rat(p)));
    if (!res.member) return false;
    for (const Decomposition& dec : res.decompositions) {
        if (dec.terms.size() != 1) return false;
        if (!(dec.terms[0].vector == a)) return false;
        if (dec.terms[0].coeff != p * dec.D) return false;
    }
    return true;
}

std::vector<std::vector<DeterminingVector>> chain_filter(std::vector<DeterminingVector> l) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());

    std::vector<std::vector<DeterminingVector>> chains;
    std::vector<char> used(l.size(), 0);
    std::size_t remaining = l.size();
    // The sorted order is a linear extension, so a longest-chain pass over
    // the unused elements is a plain forward dynamic program.
    while (remaining > 0) {
        std::vector<std::size_t> best(l.size(), 0);
        std::vector<std::size_t> parent(l.size(), l.size());
        std::size_t best_end = l.size();
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (used[i]) continue;
            best[i] = 1;
            for (std::size_t j = 0; j < i; ++j) {
                if (used[j] || !vector_leq(l[j], l[i])) continue;
                if (best[j] + 1 > best[i]) {
                    best[i] = best[j] + 1;
                    parent[i] = j;
                }
            }
            if (best_end == l.size() || best[i] > best[best_end]) best_end = i;
        }
        std::vector<DeterminingVector> chain;
        for (std::size_t i = best_end; i != l.size(); i = parent[i]) {
            chain.push_back(l[i]);
            used[i] = 1;
            --remaining;
        }
        std::reverse(chain.begin(), chain.end());
        chains.push_back(std::move(chain));
    }
    return chains;
}

}  // namespace betticone
