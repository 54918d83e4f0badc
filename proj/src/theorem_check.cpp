#include "drlab/theorem_check.hpp"

#include "drlab/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace drlab {

namespace {

constexpr std::size_t kMaxReportedChars = 400;

std::string clip(std::string s) {
    if (s.size() > kMaxReportedChars)
        s = s.substr(0, kMaxReportedChars) + "...";
    return s;
}

VerificationReport make_report(std::string target, int n, Mode mode, int trials, std::uint64_t seed) {
    VerificationReport rep;
    rep.target = std::move(target);
    rep.n = n;
    rep.mode = mode;
    rep.trials = trials;
    rep.seed = seed;
    return rep;
}

void apply_fault(BracketPolynomial &bp, const BracketPerturbation &fault) {
    if (bp.is_zero())
        throw std::invalid_argument("cannot perturb an empty bracket polynomial");
    auto it = bp.terms().begin();
    std::advance(it, static_cast<long>(fault.term % bp.size()));
    BracketMonomial m{1, it->first};
    bp.add(m, fault.delta);
}

// Symbolic coordinate images of the generic coefficients a_i and b_k.
std::map<std::string, MultiPoly> coordinate_images(int n) {
    std::map<std::string, MultiPoly> images;
    auto a = expand_form_coefficients(Family::Alpha, n);
    for (int i = 0; i <= n; ++i)
        images.emplace("a" + std::to_string(i), a[i]);
    if (n >= 3) {
        auto b = expand_form_coefficients(Family::Beta, n - 2);
        for (int k = 0; k <= n - 2; ++k)
            images.emplace("b" + std::to_string(k), b[k]);
    }
    return images;
}

void require_symbolic_budget(int n) {
    if (n > kSymbolicMaxN)
        throw BudgetExceeded("symbolic checks are limited to n <= " + std::to_string(kSymbolicMaxN));
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::Numeric ? "numeric" : "symbolic"; }

Mode parse_mode(const std::string &text) {
    if (text == "numeric")
        return Mode::Numeric;
    if (text == "symbolic")
        return Mode::Symbolic;
    throw std::invalid_argument("unknown mode '" + text + "'");
}

VerificationReport verify_theorem1(int n, int trials, std::uint64_t seed, Mode mode,
                                   std::optional<BracketPerturbation> fault) {
    if (n < 2)
        throw std::invalid_argument("verify_theorem1 needs n >= 2");
    auto rep = make_report("theorem1", n, mode, trials, seed);

    std::vector<std::optional<BracketPolynomial>> sums(n + 1);
    for (int r = 0; r <= n; ++r) {
        if (n == 2 && r == 2)
            continue;
        sums[r] = dr_bracket_sum(n, r);
        if (fault && fault->r == r)
            apply_fault(*sums[r], *fault);
    }

    if (mode == Mode::Symbolic) {
        require_symbolic_budget(n);
        auto f = generic_form("a", n);
        auto g = generic_form("b", n - 2);
        auto series = dr_series(f, g);
        auto images = coordinate_images(n);
        for (int r = 0; r <= n; ++r) {
            ++rep.checks;
            MultiPoly expected, actual;
            if (n == 2 && r == 2) {
                expected = pow(MultiPoly::variable("b0"), 2);
                actual = series.entries[r];
            } else {
                expected = bracket_poly_to_multipoly(*sums[r]);
                actual = series.entries[r].substitute(images);
            }
            if (!(expected == actual)) {
                VerificationFailure fail;
                fail.r = r;
                fail.expected = clip(expected.to_string());
                fail.actual = clip(actual.to_string());
                fail.message = "difference: " + clip((actual - expected).to_string());
                rep.failures.push_back(std::move(fail));
            }
        }
        return rep;
    }

    // sign relation per r: counts of exact agreement and of agreement up to -1
    std::vector<int> equal(n + 1, 0), negated(n + 1, 0);
    for (int trial = 0; trial < trials; ++trial) {
        auto assignment = random_generic_assignment(n, mix_seed(seed, static_cast<std::uint64_t>(trial)));
        auto [f, g] = forms_from_assignment(assignment, n);
        auto series = dr_series(f, g);
        for (int r = 0; r <= n; ++r) {
            ++rep.checks;
            Rational expected = (n == 2 && r == 2) ? pow(assignment.constant_form, 2)
                                                   : eval_bracket_poly(*sums[r], assignment);
            const Rational &actual = series.entries[r];
            if (actual == expected) {
                ++equal[r];
                continue;
            }
            if (actual == -expected)
                ++negated[r];
            VerificationFailure fail;
            fail.trial = static_cast<std::uint64_t>(trial);
            fail.r = r;
            fail.expected = expected.to_string();
            fail.actual = actual.to_string();
            fail.message = "dr_series entry differs from the bracket sum";
            fail.witness = assignment;
            rep.failures.push_back(std::move(fail));
        }
    }
    for (int r = 0; r <= n; ++r) {
        std::string relation = equal[r] == trials ? "+1" : negated[r] == trials ? "-1" : "mixed";
        rep.notes.push_back("r=" + std::to_string(r) + " sign relation " + relation);
    }
    return rep;
}

VerificationReport verify_vanishing(int n, int trials, std::uint64_t seed, Mode mode) {
    if (n < 2)
        throw std::invalid_argument("verify_vanishing needs n >= 2");
    auto rep = make_report("vanishing", n, mode, trials, seed);
    auto sum = dr_bracket_sum(n, 1);

    if (mode == Mode::Symbolic) {
        require_symbolic_budget(n);
        auto series = dr_series(generic_form("a", n), generic_form("b", n - 2));
        ++rep.checks;
        if (!series.entries[1].is_zero()) {
            rep.failures.push_back({0, 1, "0", clip(series.entries[1].to_string()),
                                    "dr_series coefficient of t is not identically zero", std::nullopt});
        }
        ++rep.checks;
        auto expanded = bracket_poly_to_multipoly(sum);
        if (!expanded.is_zero()) {
            rep.failures.push_back({0, 1, "0", clip(expanded.to_string()),
                                    "bracket sum for r=1 does not cancel", std::nullopt});
        }
        return rep;
    }

    for (int trial = 0; trial < trials; ++trial) {
        auto assignment = random_generic_assignment(n, mix_seed(seed, static_cast<std::uint64_t>(trial)));
        auto [f, g] = forms_from_assignment(assignment, n);
        Rational from_series = dr_series(f, g).entries[1];
        Rational from_brackets = eval_bracket_poly(sum, assignment);
        rep.checks += 2;
        if (!from_series.is_zero())
            rep.failures.push_back({static_cast<std::uint64_t>(trial), 1, "0", from_series.to_string(),
                                    "dr_series coefficient of t is nonzero", assignment});
        if (!from_brackets.is_zero())
            rep.failures.push_back({static_cast<std::uint64_t>(trial), 1, "0", from_brackets.to_string(),
                                    "bracket sum for r=1 is nonzero", assignment});
    }
    return rep;
}

VerificationReport verify_plucker(int n, int trials, std::uint64_t seed) {
    auto rep = make_report("plucker", n, Mode::Numeric, trials, seed);
    auto symbols = all_symbols(std::max(n, 3));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-50, 50);

    auto check = [&](const std::array<SymbolId, 4> &q, const SymbolAssignment &a, std::uint64_t trial) {
        auto rel = plucker_relation(q[0], q[1], q[2], q[3]);
        Rational value = eval_bracket_poly(rel, a);
        ++rep.checks;
        if (!value.is_zero())
            rep.failures.push_back({trial, -1, "0", value.to_string(),
                                    "Plucker relation nonzero on " + q[0].name() + "," + q[1].name() + "," +
                                        q[2].name() + "," + q[3].name(),
                                    a});
    };

    // standard basis pairs first
    {
        std::array<SymbolId, 4> q{symbols[0], symbols[1], symbols[2], symbols[3]};
        SymbolAssignment a;
        const SymbolCoords basis[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
        for (int i = 0; i < 4; ++i)
            a.bind(q[i], basis[i]);
        check(q, a, 0);
    }
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<SymbolId> pool = symbols;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::array<SymbolId, 4> q{pool[0], pool[1], pool[2], pool[3]};
        SymbolAssignment a;
        for (auto s : q)
            a.bind(s, {Rational(coord(rng)), Rational(coord(rng))});
        check(q, a, static_cast<std::uint64_t>(trial));
    }
    return rep;
}

Mat2 random_unimodular(std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    auto param = [&] { return Rational(Integer(num(rng)), Integer(den(rng))); };
    auto mul = [](const Mat2 &x, const Mat2 &y) {
        return Mat2{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                    x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    };
    Mat2 g{1, 0, 0, 1};
    for (int i = 0; i < 3; ++i) {
        g = mul(g, Mat2{1, param(), 0, 1});
        g = mul(g, Mat2{1, 0, param(), 1});
    }
    return g;
}

std::pair<BinaryForm<Rational>, BinaryForm<Rational>> random_form_pair(int n, std::mt19937_64 &rng, long bound) {
    std::uniform_int_distribution<long> coef(-bound, bound);
    auto draw = [&](int m, bool nonzero_ends) {
        std::vector<Rational> c;
        for (int i = 0; i <= m; ++i) {
            long v = coef(rng);
            while (nonzero_ends && (i == 0 || i == m) && v == 0)
                v = coef(rng);
            c.emplace_back(v);
        }
        return BinaryForm<Rational>(std::move(c));
    };
    auto f = draw(n, true);
    return {f, draw(n - 2, false)};
}

VerificationReport verify_invariance(int n, int trials, std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("verify_invariance needs n >= 2");
    auto rep = make_report("invariance", n, Mode::Numeric, trials, seed);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> scalar(-6, 6);
    int resampled = 0;
    for (int trial = 0; trial < trials; ++trial) {
        auto [f, g] = random_form_pair(n, rng);
        auto base = dr_series(f, g);
        auto t = static_cast<std::uint64_t>(trial);

        // resample until the substitution keeps a_0 a_n != 0
        Mat2 m = random_unimodular(rng);
        auto fm = act(m, f);
        while ((fm[0] * fm[n]).is_zero()) {
            ++resampled;
            m = random_unimodular(rng);
            fm = act(m, f);
        }
        auto moved = dr_series(fm, act(m, g));
        for (int r = 0; r <= n; ++r) {
            ++rep.checks;
            if (moved.entries[r] != base.entries[r])
                rep.failures.push_back({t, r, base.entries[r].to_string(), moved.entries[r].to_string(),
                                        "SL2 substitution changed the value", std::nullopt});
        }

        long lam = 0, mu = 0;
        while (lam == 0)
            lam = scalar(rng);
        while (mu == 0)
            mu = scalar(rng);
        auto scaled = dr_series(scale(f, Rational(lam)), scale(g, Rational(mu)));
        for (int r = 0; r <= n; ++r) {
            ++rep.checks;
            Rational expected = pow(Rational(lam), 2 * n - 2 - r) * pow(Rational(mu), r) * base.entries[r];
            if (scaled.entries[r] != expected)
                rep.failures.push_back({t, r, expected.to_string(), scaled.entries[r].to_string(),
                                        "bi-degree scaling law violated", std::nullopt});
        }
    }
    if (resampled > 0)
        rep.notes.push_back(std::to_string(resampled) + " substitutions resampled (a_0 a_n vanished after the move)");
    return rep;
}

}  // namespace drlab
