#include "drlab/serialize.hpp"

#include <stdexcept>

namespace drlab {

namespace {

Json integer_json(const Integer &z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

template <class T>
Json form_json(const BinaryForm<T> &f) {
    Json coeffs = Json::array();
    for (const auto &c : f.coefficients)
        coeffs.push_back(to_json(c));
    return Json{{"degree", f.degree()}, {"coefficients", std::move(coeffs)}};
}

template <class T>
Json series_json(const DRSeries<T> &s) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < s.entries.size(); ++r)
        entries.push_back(Json{{"r", r}, {"value", to_json(s.entries[r])}});
    return Json{{"n", s.n}, {"entries", std::move(entries)}};
}

}  // namespace

Json to_json(const Rational &q) { return q.to_string(); }

Rational rational_from_json(const Json &j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

Json to_json(const MultiPoly &p) {
    Json out = Json::array();
    const auto &vars = p.variables();
    for (const auto &t : p.terms()) {
        Json exps = Json::object();
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (t.exponents[i] != 0)
                exps[vars[i]] = t.exponents[i];
        out.push_back(Json{{"coefficient", to_json(t.coefficient)}, {"exponents", std::move(exps)}});
    }
    return out;
}

MultiPoly multipoly_from_json(const Json &j) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial must be a list of terms");
    MultiPoly out;
    for (const auto &t : j) {
        if (!t.is_object() || !t.contains("coefficient"))
            throw std::invalid_argument("term needs a coefficient");
        MultiPoly term(rational_from_json(t["coefficient"]));
        if (t.contains("exponents")) {
            for (const auto &[var, e] : t["exponents"].items()) {
                if (!e.is_number_integer() || e.get<long>() < 0)
                    throw std::invalid_argument("exponents must be non-negative integers");
                term = term * pow(MultiPoly::variable(var), e.get<long>());
            }
        }
        out += term;
    }
    return out;
}

Json to_json(const BinaryForm<Rational> &f) { return form_json(f); }
Json to_json(const BinaryForm<MultiPoly> &f) { return form_json(f); }

BinaryForm<Rational> binary_form_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
        throw std::invalid_argument("binary form needs a coefficients list");
    std::vector<Rational> c;
    for (const auto &x : j["coefficients"])
        c.push_back(rational_from_json(x));
    if (c.empty())
        throw std::invalid_argument("binary form needs at least one coefficient");
    if (j.contains("degree")) {
        if (!j["degree"].is_number_integer() || j["degree"].get<long>() != static_cast<long>(c.size()) - 1)
            throw std::invalid_argument("degree does not match the number of coefficients");
    }
    return BinaryForm<Rational>(std::move(c));
}

Json to_json(const DRSeries<Rational> &s) { return series_json(s); }
Json to_json(const DRSeries<MultiPoly> &s) { return series_json(s); }

Json to_json(const SymbolAssignment &a) {
    Json out = Json::object();
    bool has_beta = false;
    for (const auto &[s, c] : a.coords()) {
        out[s.name()] = Json::array({to_json(c.u), to_json(c.v)});
        has_beta = has_beta || s.family == Family::Beta;
    }
    if (!has_beta)
        out["f0"] = to_json(a.constant_form);
    return out;
}

Json to_json(const BracketPolynomial &bp) {
    Json out = Json::array();
    for (const auto &[factors, coefficient] : bp.terms()) {
        Json fs = Json::array();
        for (const auto &[s, t] : factors)
            fs.push_back(Json::array({s.name(), t.name()}));
        out.push_back(Json{{"sign", coefficient.sign() < 0 ? -1 : 1},
                           {"factors", std::move(fs)},
                           {"coefficient", to_json(coefficient.sign() < 0 ? -coefficient : coefficient)}});
    }
    return out;
}

Json to_json(const LaurentMonomial &m, const PolygonModel &model) {
    Json exps = Json::object();
    const auto &vars = model.variables();
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (m.exponents.at(i) != 0)
            exps[vars[i].name()] = m.exponents[i];
    return exps;
}

Json to_json(const LaurentPoly &p, const PolygonModel &model) {
    Json out = Json::array();
    for (const auto &t : p.terms())
        out.push_back(Json{{"exponents", to_json(t.monomial, model)}, {"coefficient", to_json(t.coefficient)}});
    return out;
}

Json to_json(const DegreeMatrix &P) {
    Json cols = Json::array();
    for (const auto &v : P.columns)
        cols.push_back(v.name());
    Json rows = Json::array();
    for (std::size_t i = 0; i < P.rows.size(); ++i)
        rows.push_back(Json{{"r", P.rows[i]}, {"degrees", P.degrees[i]}});
    return Json{{"n", P.n},
                {"method", P.method == DegreeMethod::ClosedForm ? "closed_form" : "direct"},
                {"columns", std::move(cols)},
                {"rows", std::move(rows)}};
}

Json to_json(const VerificationReport &rep) {
    Json failures = Json::array();
    for (const auto &f : rep.failures) {
        Json jf{{"trial", f.trial}};
        if (f.r >= 0)
            jf["r"] = f.r;
        jf["expected"] = f.expected;
        jf["actual"] = f.actual;
        jf["message"] = f.message;
        if (f.witness)
            jf["assignment"] = to_json(*f.witness);
        failures.push_back(std::move(jf));
    }
    return Json{{"target", rep.target},   {"n", rep.n},           {"mode", to_string(rep.mode)},
                {"trials", rep.trials},   {"seed", rep.seed},     {"checks", rep.checks},
                {"passed", rep.passed()}, {"failures", failures}, {"notes", rep.notes}};
}

Json to_json(const IndependenceCertificate &cert) {
    Json pivots = Json::array();
    for (const auto &[r, c] : cert.pivots)
        pivots.push_back(Json::array({r, c}));
    Json out{{"matrix", cert.matrix},
             {"rank", cert.rank},
             {"pivots", std::move(pivots)},
             {"verdict", to_string(cert.verdict)}};
    if (cert.kernel) {
        Json k = Json::array();
        for (const auto &z : *cert.kernel)
            k.push_back(integer_json(z));
        out["kernel"] = std::move(k);
    }
    return out;
}

Json to_json(const JacobianReport &rep) {
    Json points = Json::array();
    for (const auto &p : rep.points)
        points.push_back(Json{{"a", p.a}, {"b", p.b}, {"rank", p.rank}});
    return Json{{"n", rep.n},
                {"seed", rep.seed},
                {"rows", rep.rows},
                {"columns", rep.columns},
                {"max_rank", rep.max_rank},
                {"resampled", rep.resampled},
                {"points", std::move(points)}};
}

}  // namespace drlab
