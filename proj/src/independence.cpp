#include "drlab/independence.hpp"

#include "drlab/dual.hpp"
#include "drlab/errors.hpp"
#include "drlab/resultant.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace drlab {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix &m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty())
        return pivot_cols;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][c];
        for (auto &x : m[row])
            x *= inv;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == row || m[k][c].is_zero())
                continue;
            Rational f = m[k][c];
            for (std::size_t j = c; j < cols; ++j)
                m[k][j] -= f * m[row][j];
        }
        pivot_cols.push_back(c);
        ++row;
    }
    return pivot_cols;
}

std::size_t rational_rank(RationalMatrix m) { return rref(m).size(); }

// Primitive integer vector k != 0 with k^T m == 0, or nullopt when the rows
// are independent.
std::optional<std::vector<Integer>> left_kernel(const ExponentMatrix &m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    RationalMatrix t(cols, std::vector<Rational>(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            t[j][i] = Rational(m[i][j]);
    auto pivots = rref(t);
    std::vector<bool> is_pivot(rows, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < rows && is_pivot[free_col])
        ++free_col;
    if (free_col == rows)
        return std::nullopt;

    std::vector<Rational> v(rows);
    v[free_col] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        v[pivots[k]] = -t[k][free_col];

    Integer lcm = 1;
    for (const auto &x : v)
        lcm = ::lcm(lcm, x.denominator());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto &x : v) {
        out.push_back(x.numerator() * (lcm / x.denominator()));
        g = ::gcd(g, out.back());
    }
    for (auto &x : out)
        x /= g;
    // sign convention: first nonzero entry positive
    for (const auto &x : out) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto &y : out)
                y = -y;
        break;
    }
    return out;
}

}  // namespace

RankResult integer_matrix_rank(const ExponentMatrix &m) {
    RankResult res;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols)
            throw std::invalid_argument("ragged exponent matrix");
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = m[i][j];
    }
    std::vector<bool> used(rows, false);
    for (;;) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = 0; i < rows && pr == rows; ++i) {
            if (used[i])
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (a[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        }
        if (pr == rows)
            break;
        used[pr] = true;
        res.pivots.emplace_back(pr, pc);
        ++res.rank;
        const Integer piv = a[pr][pc];
        for (std::size_t i = 0; i < rows; ++i) {
            if (used[i] || a[i][pc] == 0)
                continue;
            const Integer f = a[i][pc];
            Integer content = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                a[i][j] = piv * a[i][j] - f * a[pr][j];
                content = ::gcd(content, a[i][j]);
            }
            if (content > 1)
                for (auto &x : a[i])
                    x /= content;
        }
    }
    return res;
}

std::string to_string(Verdict v) { return v == Verdict::Independent ? "independent" : "dependent"; }

bool kernel_annihilates(const ExponentMatrix &m, const std::vector<Integer> &kernel) {
    if (kernel.size() != m.size())
        return false;
    if (std::all_of(kernel.begin(), kernel.end(), [](const Integer &x) { return x == 0; }))
        return false;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t j = 0; j < cols; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            s += kernel[i] * m[i][j];
        if (s != 0)
            return false;
    }
    return true;
}

IndependenceCertificate multiplicative_independence(const ExponentMatrix &m) {
    if (m.empty())
        throw std::invalid_argument("multiplicative_independence needs at least one monomial");
    IndependenceCertificate cert;
    cert.matrix = m;
    auto rank = integer_matrix_rank(m);
    cert.rank = rank.rank;
    cert.pivots = std::move(rank.pivots);
    if (cert.rank == m.size()) {
        cert.verdict = Verdict::Independent;
        return cert;
    }
    cert.verdict = Verdict::Dependent;
    cert.kernel = left_kernel(m);
    if (!cert.kernel || !kernel_annihilates(m, *cert.kernel))
        throw std::logic_error("kernel vector failed verification");
    return cert;
}

IndependenceCertificate multiplicative_independence(const std::vector<LaurentMonomial> &monomials) {
    ExponentMatrix m;
    for (const auto &mono : monomials)
        m.emplace_back(mono.exponents.begin(), mono.exponents.end());
    return multiplicative_independence(m);
}

ExponentMatrix to_exponent_matrix(const DegreeMatrix &P) {
    ExponentMatrix m;
    for (const auto &row : P.degrees)
        m.emplace_back(row.begin(), row.end());
    return m;
}

JacobianReport jacobian_rank(int n, int points, std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("jacobian_rank needs n >= 2");
    if (points < 1)
        throw std::invalid_argument("jacobian_rank needs at least one point");
    JacobianReport rep;
    rep.n = n;
    rep.seed = seed;
    rep.rows = static_cast<std::size_t>(n);
    rep.columns = static_cast<std::size_t>(2 * n);
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(n)));
    std::uniform_int_distribution<long> coef(-20, 20);

    while (rep.points.size() < static_cast<std::size_t>(points)) {
        JacobianPoint pt;
        for (int i = 0; i <= n; ++i)
            pt.a.push_back(coef(rng));
        for (int k = 0; k <= n - 2; ++k)
            pt.b.push_back(coef(rng));
        if (pt.a[0] == 0 || pt.a[n] == 0) {
            ++rep.resampled;
            continue;
        }
        RationalMatrix jac(rep.rows, std::vector<Rational>(rep.columns));
        try {
            for (std::size_t dir = 0; dir < rep.columns; ++dir) {
                std::vector<DualScalar> fa, gb;
                for (int i = 0; i <= n; ++i)
                    fa.emplace_back(Rational(pt.a[i]), Rational(dir == static_cast<std::size_t>(i) ? 1 : 0));
                for (int k = 0; k <= n - 2; ++k)
                    gb.emplace_back(Rational(pt.b[k]),
                                    Rational(dir == static_cast<std::size_t>(n + 1 + k) ? 1 : 0));
                auto series = dr_series(BinaryForm<DualScalar>(fa), BinaryForm<DualScalar>(gb));
                std::size_t row = 0;
                for (int r = 0; r <= n; ++r)
                    if (r != 1)
                        jac[row++][dir] = series.entries[r].derivative;
            }
        } catch (const NumericDegenerate &) {
            ++rep.resampled;
            continue;
        }
        pt.rank = rational_rank(std::move(jac));
        rep.max_rank = std::max(rep.max_rank, pt.rank);
        rep.points.push_back(std::move(pt));
    }
    return rep;
}

std::vector<SuiteEntry> run_independence_suite(int n_max, std::uint64_t seed, int jacobian_points,
                                               int jacobian_max_n, int n_min) {
    if (n_min < 3 || n_max < n_min)
        throw std::invalid_argument("independence suite needs 3 <= n_min <= n_max");
    std::vector<SuiteEntry> out;
    for (int n = n_min; n <= n_max; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteEntry e;
        e.n = n;
        e.P = degree_matrix_P(n, n == 3 ? DegreeMethod::Direct : DegreeMethod::ClosedForm);
        e.certificate = multiplicative_independence(to_exponent_matrix(e.P));
        e.independent = e.certificate.verdict == Verdict::Independent &&
                        e.certificate.rank == static_cast<std::size_t>(n);
        if (n <= jacobian_max_n && jacobian_points > 0) {
            e.jacobian = jacobian_rank(n, jacobian_points, seed);
            e.independent = e.independent && e.jacobian->max_rank == static_cast<std::size_t>(n);
        }
        e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace drlab
