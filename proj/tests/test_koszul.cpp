#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "betticone/koszul.hpp"

using namespace betticone;

namespace {

// Independent oracle: walks all 2^c index subsets and tallies (size, degree
// sum) pairs directly.
std::map<std::pair<long, long>, long> subset_counts(long twist, const std::vector<long>& degrees) {
    std::map<std::pair<long, long>, long> counts;
    for (unsigned long mask = 0; mask < (1ul << degrees.size()); ++mask) {
        long size = 0, sum = 0;
        for (std::size_t i = 0; i < degrees.size(); ++i)
            if (mask >> i & 1) {
                ++size;
                sum += degrees[i];
            }
        ++counts[{size, twist + sum}];
    }
    return counts;
}

bool matches_oracle(const DeterminingVector& a) {
    BettiDiagram d = ci_diagram(a);
    auto expected = subset_counts(a.twist(), a.degrees());
    if (d.cells().size() != expected.size()) return false;
    for (const auto& [key, count] : expected)
        if (d.entry_at_degree(key.first, key.second) != count) return false;
    return true;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

DeterminingVector random_vector(std::mt19937& rng, long max_codim = 5, long max_degree = 6,
                                long max_twist = 2) {
    std::uniform_int_distribution<long> cd(2, max_codim), dd(1, max_degree), td(0, max_twist);
    std::vector<long> degrees(cd(rng));
    for (long& d : degrees) d = dd(rng);
    return DeterminingVector{td(rng), std::move(degrees)};
}

}  // namespace

TEST_CASE("determining vectors sort their degrees") {
    DeterminingVector a{1, {3, 2, 2}};
    CHECK(a.twist() == 1);
    CHECK(a.degrees() == std::vector<long>{2, 2, 3});
    CHECK(a.codim() == 3);
    CHECK(a.regularity() == 5);
    CHECK(a.entries() == std::vector<long>{1, 2, 2, 3});

    DeterminingVector b{std::vector<long>{-2, 5, 1, 4}};
    CHECK(b.twist() == -2);
    CHECK(b.degrees() == std::vector<long>{1, 4, 5});
    CHECK(b == DeterminingVector{-2, {1, 4, 5}});

    CHECK(DeterminingVector{0, {1}} < DeterminingVector{0, {2}});
    CHECK(DeterminingVector{0, {2}} < DeterminingVector{1, {1}});
    CHECK(DeterminingVector{0, {1, 3}} < DeterminingVector{0, {2, 2}});
}

TEST_CASE("determining vectors reject empty or nonpositive degrees") {
    CHECK_THROWS_AS(DeterminingVector(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(DeterminingVector(0, {0}), std::invalid_argument);
    CHECK_THROWS_AS(DeterminingVector(0, {2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(DeterminingVector(std::vector<long>{3}), std::invalid_argument);
    CHECK_THROWS_AS(DeterminingVector(std::vector<long>{}), std::invalid_argument);
}

TEST_CASE("ci_diagram reproduces the codimension-3 reference table") {
    BettiDiagram b = ci_diagram(DeterminingVector{1, {2, 2, 3}});
    CHECK(b.cells().size() == 6);
    CHECK(b.entry(0, 1) == 1);
    CHECK(b.entry(1, 2) == 2);
    CHECK(b.entry(1, 3) == 1);
    CHECK(b.entry(2, 3) == 1);
    CHECK(b.entry(2, 4) == 2);
    CHECK(b.entry(3, 5) == 1);
}

TEST_CASE("ci_diagram collapses equal degrees onto binomial rows") {
    BettiDiagram b = ci_diagram(DeterminingVector{0, {1, 1, 1}});
    for (long i = 0; i <= 3; ++i) CHECK(b.entry(i, 0) == binomial(3, i));
    CHECK(b.cells().size() == 4);

    BettiDiagram q = ci_diagram(DeterminingVector{0, {2, 2}});
    CHECK(q.entry_at_degree(0, 0) == 1);
    CHECK(q.entry_at_degree(1, 2) == 2);
    CHECK(q.entry_at_degree(2, 4) == 1);
}

TEST_CASE("ci_diagram matches subset enumeration") {
    CHECK(matches_oracle(DeterminingVector{0, {1}}));
    CHECK(matches_oracle(DeterminingVector{2, {3}}));
    CHECK(matches_oracle(DeterminingVector{0, {1, 2, 3, 4}}));
    CHECK(matches_oracle(DeterminingVector{1, {2, 2, 2, 5, 5}}));
    CHECK(matches_oracle(DeterminingVector{-3, {1, 1, 6, 6}}));

    std::mt19937 rng(101);
    for (int trial = 0; trial < 40; ++trial) CHECK(matches_oracle(random_vector(rng)));
}

TEST_CASE("ci_diagram column sums are binomial coefficients") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 25; ++trial) {
        DeterminingVector a = random_vector(rng);
        BettiDiagram b = ci_diagram(a);
        long c = a.codim();
        for (long i = 0; i <= c; ++i) CHECK(b.total_betti(i) == binomial(c, i));
        CHECK(b.pdim() == c);
        CHECK(b.top_row() == a.twist());
        CHECK(b.reg() == a.regularity());
        CHECK(b.entry_at_degree(0, a.twist()) == 1);
        long total = a.twist();
        for (long d : a.degrees()) total += d;
        CHECK(b.entry_at_degree(c, total) == 1);
    }
}

TEST_CASE("ci_diagram is symmetric under column reversal") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        DeterminingVector a = random_vector(rng);
        BettiDiagram b = ci_diagram(a);
        long c = a.codim();
        long total = 2 * a.twist();
        for (long d : a.degrees()) total += d;
        for (const auto& [key, value] : b.cells())
            CHECK(b.entry_at_degree(c - key.first, total - key.second) == value);
    }
}

TEST_CASE("ci_diagram commutes with twisting") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 25; ++trial) {
        DeterminingVector a = random_vector(rng);
        long t = trial - 12;
        CHECK(ci_diagram(a).twist(t) == ci_diagram(DeterminingVector{a.twist() + t, a.degrees()}));
    }
}

TEST_CASE("koszul_factor splits one degree off") {
    auto [rest, piece] = koszul_factor(DeterminingVector{1, {2, 2, 3}}, 3);
    CHECK(rest == DeterminingVector{1, {2, 2}});
    CHECK(piece == DeterminingVector{0, {3}});

    auto [rest2, piece2] = koszul_factor(DeterminingVector{0, {2, 5}}, 1);
    CHECK(rest2 == DeterminingVector{0, {5}});
    CHECK(piece2 == DeterminingVector{0, {2}});

    CHECK_THROWS_AS(koszul_factor(DeterminingVector{0, {4}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(koszul_factor(DeterminingVector{0, {2, 3}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(koszul_factor(DeterminingVector{0, {2, 3}}, 3), std::invalid_argument);
}

TEST_CASE("koszul_factor factors the diagram under odot") {
    std::mt19937 rng(113);
    for (int trial = 0; trial < 40; ++trial) {
        DeterminingVector a = random_vector(rng);
        std::uniform_int_distribution<std::size_t> pick(1, a.degrees().size());
        auto [rest, piece] = koszul_factor(a, pick(rng));
        CHECK(piece.twist() == 0);
        CHECK(piece.codim() == 1);
        CHECK(odot(ci_diagram(rest), ci_diagram(piece)) == ci_diagram(a));
    }
}

TEST_CASE("vector_leq compares coordinatewise") {
    CHECK(vector_leq(DeterminingVector{0, {1, 2}}, DeterminingVector{0, {1, 2}}));
    CHECK(vector_leq(DeterminingVector{0, {1, 2}}, DeterminingVector{1, {2, 2}}));
    CHECK(!vector_leq(DeterminingVector{1, {2, 2}}, DeterminingVector{0, {1, 2}}));
    CHECK(!vector_leq(DeterminingVector{0, {1, 4}}, DeterminingVector{1, {2, 2}}));
    CHECK(!vector_leq(DeterminingVector{0, {1, 2}}, DeterminingVector{0, {1, 2, 3}}));
    CHECK(!vector_leq(DeterminingVector{0, {1, 2, 3}}, DeterminingVector{0, {1, 2}}));

    std::mt19937 rng(127);
    for (int trial = 0; trial < 30; ++trial) {
        DeterminingVector a = random_vector(rng), b = random_vector(rng), c = random_vector(rng);
        CHECK(vector_leq(a, a));
        if (vector_leq(a, b) && vector_leq(b, a)) CHECK(a == b);
        if (vector_leq(a, b) && vector_leq(b, c)) CHECK(vector_leq(a, c));
    }
}
