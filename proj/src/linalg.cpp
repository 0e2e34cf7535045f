#include "betticone/linalg.hpp"

#include <set>
#include <stdexcept>

namespace betticone {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RationalMatrix::is_integral() const {
    for (const Rat& v : data_)
        if (v.get_den() != 1) return false;
    return true;
}

SupportBasis SupportBasis::from_supports(const std::vector<BettiDiagram>& diagrams) {
    std::set<std::pair<long, long>> cells;
    for (const BettiDiagram& d : diagrams)
        for (const auto& [key, value] : d.cells()) cells.insert(key);
    SupportBasis basis;
    basis.cells.assign(cells.begin(), cells.end());
    return basis;
}

SupportBasis SupportBasis::full_rectangle(long pdim, long reg) {
    if (pdim < 0 || reg < 0) throw std::invalid_argument("rectangle bounds must be nonnegative");
    SupportBasis basis;
    basis.cells.reserve(static_cast<std::size_t>((pdim + 1) * (reg + 1)));
    for (long col = 0; col <= pdim; ++col)
        for (long row = 0; row <= reg; ++row) basis.cells.emplace_back(col, col + row);
    return basis;
}

std::vector<Rat> vectorize(const BettiDiagram& d, const SupportBasis& basis) {
    std::map<std::pair<long, long>, std::size_t> index;
    for (std::size_t i = 0; i < basis.cells.size(); ++i) index.emplace(basis.cells[i], i);
    std::vector<Rat> out(basis.size(), Rat(0));
    for (const auto& [key, value] : d.cells()) {
        auto it = index.find(key);
        if (it == index.end())
            throw std::invalid_argument("diagram support not covered by basis");
        out[it->second] = value;
    }
    return out;
}

namespace {

// Fraction-free elimination; destroys its argument and returns the
// determinant.  Each intermediate entry stays a minor of the input, so the
// exact divisions below never truncate.
Int bareiss_det(std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

// Walks column subsets in increasing order, sharing the elimination of a
// common prefix between all subsets extending it.  cols holds the remaining
// eligible columns with rows < k already eliminated; a column with no pivot
// below row k is linearly dependent on the chosen prefix, so every superset
// through it is singular and the branch is skipped.
void minor_dfs(const std::vector<std::vector<Int>>& cols, std::size_t k, std::size_t n,
               const Int& prev, Int& acc, bool& any) {
    const std::size_t need = n - k;
    for (std::size_t idx = 0; idx + need <= cols.size(); ++idx) {
        const std::vector<Int>& col = cols[idx];
        std::size_t p = k;
        while (p < n && col[p] == 0) ++p;
        if (p == n) continue;
        const Int& pivot = col[p];
        if (need == 1) {
            any = true;
            acc = lcm(acc, abs(pivot));
            continue;
        }
        std::vector<std::vector<Int>> child;
        child.reserve(cols.size() - idx - 1);
        for (std::size_t t = idx + 1; t < cols.size(); ++t) {
            std::vector<Int> y = cols[t];
            if (p != k) std::swap(y[p], y[k]);
            for (std::size_t i = k + 1; i < n; ++i) {
                const Int& ci = (i == p) ? col[k] : col[i];
                Int num = y[i] * pivot - ci * y[k];
                mpz_divexact(y[i].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            child.push_back(std::move(y));
        }
        minor_dfs(child, k + 1, n, pivot, acc, any);
    }
}

}  // namespace

Rat det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int denom = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Int row_lcm = 1;
        for (std::size_t c = 0; c < n; ++c) row_lcm = lcm(row_lcm, m.at(r, c).get_den());
        for (std::size_t c = 0; c < n; ++c) {
            Int f;
            mpz_divexact(f.get_mpz_t(), row_lcm.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
            a[r][c] = m.at(r, c).get_num() * f;
        }
        denom *= row_lcm;
    }
    return Rat(bareiss_det(a)) / Rat(denom);
}

Int maximal_minor_lcm(const RationalMatrix& a) {
    if (!a.is_integral()) throw std::invalid_argument("maximal minors need an integral matrix");
    const std::size_t n = a.rows();
    if (n > a.cols()) throw std::invalid_argument("matrix has more rows than columns");
    if (n == 0) return 1;
    std::vector<std::vector<Int>> cols(a.cols(), std::vector<Int>(n));
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < n; ++r) cols[c][r] = a.at(r, c).get_num();
    Int acc = 1;
    bool any = false;
    minor_dfs(cols, 0, n, Int(1), acc, any);
    if (!any) throw std::invalid_argument("basis columns cannot span");
    return acc;
}

CramerSolution cramer_solve(const RationalMatrix& b, const std::vector<Rat>& v) {
    if (b.rows() != b.cols()) throw std::invalid_argument("system matrix must be square");
    if (v.size() != b.rows()) throw std::invalid_argument("right-hand side has wrong length");
    CramerSolution sol;
    sol.det_b = det(b);
    if (sol.det_b == 0) throw std::invalid_argument("singular system");
    const std::size_t n = b.rows();
    for (std::size_t k = 0; k < n; ++k) {
        RationalMatrix bk = b;
        for (std::size_t r = 0; r < n; ++r) bk.at(r, k) = v[r];
        Rat dk = det(bk);
        sol.x.push_back(dk / sol.det_b);
        sol.det_bk.push_back(std::move(dk));
    }
    return sol;
}

Int denominator_bound(const std::vector<BettiDiagram>& diagrams, const SupportBasis& basis) {
    const std::size_t n = basis.size();
    RationalMatrix a(n, diagrams.size() + n);
    for (std::size_t j = 0; j < diagrams.size(); ++j) {
        if (diagrams[j].is_zero())
            throw std::invalid_argument("denominator bound needs nonzero diagrams");
        if (!diagrams[j].is_integral())
            throw std::invalid_argument("denominator bound needs integral diagrams");
        std::vector<Rat> col = vectorize(diagrams[j], basis);
        for (std::size_t r = 0; r < n; ++r) a.at(r, j) = std::move(col[r]);
    }
    for (std::size_t r = 0; r < n; ++r) a.at(r, diagrams.size() + r) = 1;
    return maximal_minor_lcm(a);
}

}  // namespace betticone
