#ifndef DRLAB_INDEPENDENCE_HPP
#define DRLAB_INDEPENDENCE_HPP

#include "drlab/laurent.hpp"
#include "drlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drlab {

using ExponentMatrix = std::vector<std::vector<long>>;

struct RankResult {
    std::size_t rank = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column) in original indices
};

/// Rank over the rationals by fraction-free elimination. The pivot is the
/// first nonzero entry in a row-major scan of the remaining rows, so the
/// trail is reproducible.
RankResult integer_matrix_rank(const ExponentMatrix &m);

enum class Verdict { Independent, Dependent };
std::string to_string(Verdict v);

struct IndependenceCertificate {
    ExponentMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    Verdict verdict = Verdict::Independent;
    /// Primitive integer vector k with sum_i k_i * row_i == 0 (dependent only).
    std::optional<std::vector<Integer>> kernel;
};

IndependenceCertificate multiplicative_independence(const std::vector<LaurentMonomial> &monomials);
/// Same, starting from an explicit exponent matrix (rows are monomials).
IndependenceCertificate multiplicative_independence(const ExponentMatrix &m);

/// True when kernel is nonzero and annihilates the rows of m.
bool kernel_annihilates(const ExponentMatrix &m, const std::vector<Integer> &kernel);

struct JacobianPoint {
    std::vector<long> a;  // a_0..a_n
    std::vector<long> b;  // b_0..b_{n-2}
    std::size_t rank = 0;
};

struct JacobianReport {
    int n = 0;
    std::uint64_t seed = 0;
    std::size_t rows = 0;     // number of DR_{n,r}, r in {0, 2, ..., n}
    std::size_t columns = 0;  // 2n coefficients
    std::vector<JacobianPoint> points;
    std::size_t resampled = 0;
    std::size_t max_rank = 0;
};

/// Jacobian of {DR_{n,r} : r = 0, 2, ..., n} with respect to a_0..a_n,
/// b_0..b_{n-2}, evaluated exactly at seeded integer points with
/// coefficients in [-20, 20] and a_0 a_n != 0.
JacobianReport jacobian_rank(int n, int points, std::uint64_t seed);

inline constexpr int kJacobianMaxN = 7;

struct SuiteEntry {
    int n = 0;
    DegreeMatrix P;
    IndependenceCertificate certificate;
    std::optional<JacobianReport> jacobian;
    bool independent = false;
    double seconds = 0;
};

/// For each 3 <= n <= n_max: matrix P (direct for n = 3, closed form
/// otherwise), its multiplicative-independence certificate and, for
/// n <= jacobian_max_n, a Jacobian rank report.
std::vector<SuiteEntry> run_independence_suite(int n_max, std::uint64_t seed, int jacobian_points = 10,
                                               int jacobian_max_n = kJacobianMaxN, int n_min = 3);

ExponentMatrix to_exponent_matrix(const DegreeMatrix &P);

}  // namespace drlab

#endif  // DRLAB_INDEPENDENCE_HPP
