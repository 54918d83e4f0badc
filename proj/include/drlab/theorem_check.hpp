#ifndef DRLAB_THEOREM_CHECK_HPP
#define DRLAB_THEOREM_CHECK_HPP

#include "drlab/bracket.hpp"
#include "drlab/resultant.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace drlab {

enum class Mode { Numeric, Symbolic };

std::string to_string(Mode m);
/// "numeric" or "symbolic"; throws std::invalid_argument otherwise.
Mode parse_mode(const std::string &text);

struct VerificationFailure {
    std::uint64_t trial = 0;
    int r = -1;  // -1 when the check is not indexed by r
    std::string expected;
    std::string actual;
    std::string message;
    std::optional<SymbolAssignment> witness;
};

/// Outcome of a verification run. Failures are data, never exceptions.
struct VerificationReport {
    std::string target;
    int n = 0;
    Mode mode = Mode::Numeric;
    int trials = 0;
    std::uint64_t seed = 0;
    std::size_t checks = 0;
    std::vector<VerificationFailure> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

/// Deliberate corruption of one bracket-sum coefficient, used to exercise the
/// failure path of the harness.
struct BracketPerturbation {
    int r = 0;
    std::size_t term = 0;  // index into the canonical term order
    Rational delta{1};
};

/// Largest n accepted by the symbolic Theorem 2.1 / vanishing checks.
inline constexpr int kSymbolicMaxN = 4;

/// DR_{n,r} from dr_series against the bracket sum for every r, at `trials`
/// seeded generic assignments (numeric) or as polynomials in the symbol
/// coordinates (symbolic). (n, r) == (2, 2) is compared against f_0^2.
VerificationReport verify_theorem1(int n, int trials, std::uint64_t seed, Mode mode,
                                   std::optional<BracketPerturbation> fault = std::nullopt);

/// DR_{n,1} == 0, through both dr_series and the bracket sum.
VerificationReport verify_vanishing(int n, int trials, std::uint64_t seed, Mode mode);

/// Three-term Plucker identity on random symbol quadruples and coordinates.
VerificationReport verify_plucker(int n, int trials, std::uint64_t seed);

/// SL_2 invariance of every DR_{n,r} under random determinant-one
/// substitutions, and the bi-degree scaling law
/// DR(l f, m g)[r] == l^(2n-2-r) m^r DR(f, g)[r].
VerificationReport verify_invariance(int n, int trials, std::uint64_t seed);

/// Random determinant-one matrix as a product of shears with small rational
/// parameters.
Mat2 random_unimodular(std::mt19937_64 &rng);

/// Random integer forms of degrees n and n - 2 with coefficients in
/// [-bound, bound] and a_0 a_n != 0.
std::pair<BinaryForm<Rational>, BinaryForm<Rational>> random_form_pair(int n, std::mt19937_64 &rng, long bound = 20);

}  // namespace drlab

#endif  // DRLAB_THEOREM_CHECK_HPP
