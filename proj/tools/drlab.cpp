#include "drlab/errors.hpp"
#include "drlab/independence.hpp"
#include "drlab/laurent.hpp"
#include "drlab/serialize.hpp"
#include "drlab/theorem_check.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace drlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultJacobianPoints = 10;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    std::string target;
    int n = 2;
    std::optional<int> r;
    int trials = 100;
    std::uint64_t seed = 1;
    std::string mode = "numeric";
    std::string format = "json";
    double budget = 0;  // seconds, 0 = unlimited
    std::string out;
    std::string in;
    bool inject_fault = false;
};

struct Outcome {
    Json result;
    std::string text;
    int exit_code = kExitOk;
};

Json config_json(const RunConfig &c) {
    Json j{{"command", c.command}};
    if (!c.target.empty())
        j["target"] = c.target;
    j["n"] = c.n;
    if (c.r)
        j["r"] = *c.r;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["mode"] = c.mode;
    j["format"] = c.format;
    j["budget"] = c.budget;
    if (!c.out.empty())
        j["out"] = c.out;
    if (!c.in.empty())
        j["in"] = c.in;
    if (c.inject_fault)
        j["inject_fault"] = true;
    return j;
}

Json read_input(const std::string &in) {
    std::string text = in;
    auto first = in.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || in[first] != '{') {
        std::ifstream file(in);
        if (!file)
            throw UsageError("cannot open input file '" + in + "'");
        std::stringstream ss;
        ss << file.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw UsageError(std::string("malformed JSON input: ") + e.what());
    }
}

// ---------------------------------------------------------------- dr-series

Outcome cmd_dr_series(const RunConfig &c) {
    Outcome o;
    Mode mode = parse_mode(c.mode);
    std::ostringstream text;
    Json forms;
    Json entries = Json::array();
    int n = c.n;

    auto keep = [&](int r) { return !c.r || *c.r == r; };

    if (mode == Mode::Symbolic) {
        if (!c.in.empty())
            throw UsageError("--in takes numeric forms; use --mode numeric");
        if (n > kSymbolicMaxN)
            throw UsageError("symbolic dr-series is limited to n <= " + std::to_string(kSymbolicMaxN));
        auto f = generic_form("a", n);
        auto g = generic_form("b", n - 2);
        auto series = dr_series(f, g);
        forms = Json{{"f", to_json(f)}, {"g", to_json(g)}};
        for (int r = 0; r <= n; ++r)
            if (keep(r)) {
                entries.push_back(Json{{"r", r}, {"value", to_json(series.entries[r])}});
                text << "DR_{" << n << "," << r << "} = " << series.entries[r] << "\n";
            }
    } else {
        if (c.in.empty())
            throw UsageError("numeric dr-series needs --in with {\"f\": form, \"g\": form}");
        Json input = read_input(c.in);
        if (!input.is_object() || !input.contains("f") || !input.contains("g"))
            throw UsageError("input must be an object with keys \"f\" and \"g\"");
        BinaryForm<Rational> f, g;
        try {
            f = binary_form_from_json(input["f"]);
            g = binary_form_from_json(input["g"]);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        n = f.degree();
        if (n < 2 || g.degree() != n - 2)
            throw UsageError("forms must have degrees n >= 2 and n - 2");
        auto series = dr_series(f, g);
        forms = Json{{"f", to_json(f)}, {"g", to_json(g)}};
        for (int r = 0; r <= n; ++r)
            if (keep(r)) {
                entries.push_back(Json{{"r", r}, {"value", to_json(series.entries[r])}});
                text << "DR_{" << n << "," << r << "} = " << series.entries[r] << "\n";
            }
    }
    if (c.r && (*c.r < 0 || *c.r > n))
        throw UsageError("--r must lie in [0, n]");
    o.result = Json{{"n", n}, {"forms", std::move(forms)}, {"entries", std::move(entries)}};
    o.text = text.str();
    return o;
}

// ------------------------------------------------------------------- verify

std::string report_text(const VerificationReport &rep) {
    std::ostringstream os;
    os << rep.target << "  n=" << rep.n << "  mode=" << to_string(rep.mode) << "  trials=" << rep.trials
       << "  seed=" << rep.seed << "\n";
    os << "checks: " << rep.checks << "  failures: " << rep.failures.size() << "\n";
    for (const auto &note : rep.notes)
        os << "note: " << note << "\n";
    for (const auto &f : rep.failures) {
        os << "FAIL trial " << f.trial;
        if (f.r >= 0)
            os << " r=" << f.r;
        os << ": " << f.message << "\n  expected " << f.expected << "\n  actual   " << f.actual << "\n";
        if (f.witness)
            os << "  witness " << to_json(*f.witness).dump() << "\n";
    }
    os << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

Outcome cmd_verify(const RunConfig &c) {
    Mode mode = parse_mode(c.mode);
    VerificationReport rep;
    if (mode == Mode::Symbolic && c.n > kSymbolicMaxN && (c.target == "theorem1" || c.target == "vanishing"))
        throw UsageError("symbolic verification is limited to n <= " + std::to_string(kSymbolicMaxN));
    if (mode == Mode::Symbolic && c.target != "theorem1" && c.target != "vanishing")
        throw UsageError("target '" + c.target + "' only runs in numeric mode");
    if (c.inject_fault && c.target != "theorem1")
        throw UsageError("--inject-fault applies to theorem1 only");

    if (c.target == "theorem1") {
        std::optional<BracketPerturbation> fault;
        if (c.inject_fault)
            fault = BracketPerturbation{0, 0, Rational(1)};
        rep = verify_theorem1(c.n, c.trials, c.seed, mode, fault);
    } else if (c.target == "vanishing") {
        rep = verify_vanishing(c.n, c.trials, c.seed, mode);
    } else if (c.target == "plucker") {
        rep = verify_plucker(c.n, c.trials, c.seed);
    } else if (c.target == "invariance") {
        rep = verify_invariance(c.n, c.trials, c.seed);
    } else if (c.target == "laurent") {
        if (c.n < 3)
            throw UsageError("the polygon model needs n >= 3");
        rep = verify_laurent(c.n, c.trials, c.seed);
    } else {
        throw UsageError("unknown verification target '" + c.target + "'");
    }
    Outcome o;
    o.result = to_json(rep);
    o.text = report_text(rep);
    o.exit_code = rep.passed() ? kExitOk : kExitFailed;
    return o;
}

// ------------------------------------------------------------- independence

Outcome cmd_independence(const RunConfig &c) {
    if (c.n < 3)
        throw UsageError("the independence suite starts at n = 3");
    auto t0 = std::chrono::steady_clock::now();
    auto suite = run_independence_suite(c.n, c.seed, c.trials, kJacobianMaxN, c.n);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto &e = suite.front();

    Json cert = to_json(e.certificate);
    Json result{{"n", e.n}, {"seed", c.seed}, {"matrix_P", to_json(e.P)}, {"certificate", std::move(cert)}};
    if (e.jacobian)
        result["jacobian"] = to_json(*e.jacobian);
    auto reading = check_a_prime_reading(e.n);
    result["a_prime_reading"] = Json{{"deg_A_equals_a_prime_minus_c", reading.minus_form_holds},
                                     {"deg_A_minus_deg_C_equals_a_prime", reading.literal_definition_holds}};
    result["proof_vectors"] = proof_vectors(e.n);
    result["verdict"] = e.independent ? "independent" : "dependent";

    std::ostringstream os;
    os << "n=" << e.n << "  matrix P (" << (e.P.method == DegreeMethod::Direct ? "direct" : "closed form") << ")\n";
    os << std::setw(4) << "r";
    for (const auto &v : e.P.columns)
        os << std::setw(5) << v.name();
    os << "\n";
    for (std::size_t i = 0; i < e.P.rows.size(); ++i) {
        os << std::setw(4) << e.P.rows[i];
        for (int d : e.P.degrees[i])
            os << std::setw(5) << d;
        os << "\n";
    }
    os << "rank " << e.certificate.rank << " of " << e.P.rows.size() << ": " << to_string(e.certificate.verdict)
       << "\n";
    if (e.jacobian)
        os << "jacobian: max rank " << e.jacobian->max_rank << " over " << e.jacobian->points.size()
           << " points (" << e.jacobian->rows << "x" << e.jacobian->columns << ")\n";
    else
        os << "jacobian: skipped (n > " << kJacobianMaxN << ")\n";
    os << "verdict: " << (e.independent ? "independent" : "dependent") << "\n";
    os << std::fixed << std::setprecision(3) << "time: " << seconds << " s\n";

    Outcome o;
    o.result = std::move(result);
    o.text = os.str();
    o.exit_code = e.independent ? kExitOk : kExitFailed;
    return o;
}

Outcome dispatch(const RunConfig &c) {
    if (c.n < 2)
        throw UsageError("--n must be at least 2");
    if (c.trials < 1)
        throw UsageError("--trials must be at least 1");
    if (c.command == "dr-series")
        return cmd_dr_series(c);
    if (c.command == "verify")
        return cmd_verify(c);
    return cmd_independence(c);
}

Outcome run_with_budget(const RunConfig &c) {
    if (c.budget <= 0)
        return dispatch(c);
    auto job = std::async(std::launch::async, [&c] { return dispatch(c); });
    if (job.wait_for(std::chrono::duration<double>(c.budget)) == std::future_status::timeout) {
        std::cerr << "error: budget of " << c.budget << " s exceeded\n";
        std::cerr.flush();
        std::_Exit(kExitFailed);
    }
    return job.get();
}

int emit(const RunConfig &c, const Outcome &o) {
    std::string body;
    if (c.format == "json") {
        Json doc{{"tool", "drlab"}, {"version", DRLAB_VERSION}, {"config", config_json(c)}, {"result", o.result}};
        doc["exit_code"] = o.exit_code;
        body = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "drlab " << DRLAB_VERSION << "  " << config_json(c).dump() << "\n" << o.text;
        body = os.str();
    }
    if (c.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream file(c.out);
        if (!file) {
            std::cerr << "error: cannot write '" << c.out << "'\n";
            return kExitUsage;
        }
        file << body;
    }
    return o.exit_code;
}

void add_common(CLI::App *sub, RunConfig &c) {
    sub->add_option("--n", c.n, "degree n of the first form")->capture_default_str();
    sub->add_option("--r", c.r, "restrict to one coefficient index r");
    sub->add_option("--trials", c.trials, "random trials (Jacobian points for independence)")
        ->capture_default_str();
    sub->add_option("--seed", c.seed, "master seed")->capture_default_str();
    sub->add_option("--mode", c.mode, "numeric or symbolic")
        ->check(CLI::IsMember({"numeric", "symbolic"}))
        ->capture_default_str();
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--budget", c.budget, "wall-clock limit in seconds (0 = none)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--out", c.out, "write output to this file");
    sub->add_option("--in", c.in, "input forms: file path or inline JSON");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Discriminant-resultant laboratory"};
    app.set_version_flag("--version", DRLAB_VERSION);
    app.require_subcommand(1);
    RunConfig c;

    auto *series = app.add_subcommand("dr-series", "coefficients DR_{n,0..n} of a form pair");
    add_common(series, c);

    auto *verify = app.add_subcommand("verify", "check an identity and report failures");
    verify->add_option("target", c.target, "theorem1, vanishing, plucker, invariance or laurent")
        ->required()
        ->check(CLI::IsMember({"theorem1", "vanishing", "plucker", "invariance", "laurent"}));
    add_common(verify, c);
    verify->add_flag("--inject-fault", c.inject_fault, "corrupt one bracket coefficient")->group("");

    auto *indep = app.add_subcommand("independence", "rank certificates for the DR_{n,r} family");
    add_common(indep, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    c.command = app.get_subcommands().front()->get_name();
    if (c.command == "independence" && app.get_subcommands().front()->count("--trials") == 0)
        c.trials = kDefaultJacobianPoints;

    try {
        return emit(c, run_with_budget(c));
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericDegenerate &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailed;
    }
}
