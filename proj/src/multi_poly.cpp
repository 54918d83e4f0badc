#include "drlab/multi_poly.hpp"

#include "drlab/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace drlab {

namespace {

using Exponents = MultiPoly::Exponents;
using Term = MultiPoly::Term;

struct ExponentHash {
    std::size_t operator()(const Exponents &e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : e) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

bool lex_greater(const Term &a, const Term &b) { return a.exponents > b.exponents; }

// Sorted, merged, zero-free.
std::vector<Term> normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), lex_greater);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (!out.empty() && out.back().exponents == t.exponents)
            out.back().coefficient += t.coefficient;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term &t) { return t.coefficient.is_zero(); });
    return out;
}

bool divides(const Exponents &d, const Exponents &e) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i])
            return false;
    return true;
}

}  // namespace

std::shared_ptr<const MultiPoly::Namespace> MultiPoly::empty_namespace() {
    static const auto empty = std::make_shared<const Namespace>();
    return empty;
}

MultiPoly::MultiPoly(const Rational &constant) {
    if (!constant.is_zero())
        terms_.push_back({{}, constant});
}

MultiPoly MultiPoly::variable(const std::string &name) {
    MultiPoly p;
    p.vars_ = std::make_shared<const Namespace>(Namespace{name});
    p.terms_.push_back({{1}, Rational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(Namespace vars, std::vector<Term> terms) {
    for (const auto &t : terms)
        if (t.exponents.size() != vars.size())
            throw std::invalid_argument("exponent vector does not match the namespace");
    MultiPoly p;
    p.vars_ = std::make_shared<const Namespace>(std::move(vars));
    p.terms_ = normalize(std::move(terms));
    return p;
}

const MultiPoly::Namespace &MultiPoly::variables() const { return *vars_; }

bool MultiPoly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    return std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                       [](auto e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
    if (!is_constant())
        throw std::domain_error("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational() : terms_[0].coefficient;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t best = 0;
    for (const auto &t : terms_) {
        std::uint32_t d = 0;
        for (auto e : t.exponents)
            d += e;
        best = std::max(best, d);
    }
    return best;
}

std::uint32_t MultiPoly::degree_in(const std::string &var) const {
    auto it = std::find(vars_->begin(), vars_->end(), var);
    if (it == vars_->end())
        return 0;
    auto idx = static_cast<std::size_t>(it - vars_->begin());
    std::uint32_t best = 0;
    for (const auto &t : terms_)
        best = std::max(best, t.exponents[idx]);
    return best;
}

std::shared_ptr<const MultiPoly::Namespace> MultiPoly::merged(const MultiPoly &a, const MultiPoly &b) {
    if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_)
        return a.vars_;
    if (a.vars_->empty())
        return b.vars_;
    if (b.vars_->empty())
        return a.vars_;
    Namespace u = *a.vars_;
    for (const auto &v : *b.vars_)
        if (std::find(u.begin(), u.end(), v) == u.end())
            u.push_back(v);
    if (u == *a.vars_)
        return a.vars_;
    return std::make_shared<const Namespace>(std::move(u));
}

MultiPoly MultiPoly::with_namespace(std::shared_ptr<const Namespace> target) const {
    MultiPoly out = *this;
    out.align_to(target);
    return out;
}

void MultiPoly::align_to(const std::shared_ptr<const Namespace> &ns) {
    if (vars_ == ns)
        return;
    if (*vars_ == *ns) {
        vars_ = ns;
        return;
    }
    std::vector<std::size_t> where(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        auto it = std::find(ns->begin(), ns->end(), (*vars_)[i]);
        if (it == ns->end()) {
            bool used = std::any_of(terms_.begin(), terms_.end(),
                                    [i](const Term &t) { return t.exponents[i] != 0; });
            if (used)
                throw std::invalid_argument("target namespace lacks variable " + (*vars_)[i]);
            where[i] = ns->size();
        } else {
            where[i] = static_cast<std::size_t>(it - ns->begin());
        }
    }
    for (auto &t : terms_) {
        Exponents e(ns->size(), 0);
        for (std::size_t i = 0; i < where.size(); ++i)
            if (where[i] < ns->size())
                e[where[i]] = t.exponents[i];
        t.exponents = std::move(e);
    }
    vars_ = ns;
    std::sort(terms_.begin(), terms_.end(), lex_greater);
}

void MultiPoly::add_scaled(const MultiPoly &o, int sign) {
    if (o.terms_.empty())
        return;
    auto ns = merged(*this, o);
    align_to(ns);
    const MultiPoly *rhs = &o;
    MultiPoly aligned;
    if (o.vars_ != ns) {
        aligned = o.with_namespace(ns);
        rhs = &aligned;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs->terms_.size());
    auto a = terms_.begin();
    auto b = rhs->terms_.begin();
    while (a != terms_.end() || b != rhs->terms_.end()) {
        if (b == rhs->terms_.end() || (a != terms_.end() && a->exponents > b->exponents)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exponents > a->exponents) {
            out.push_back({b->exponents, sign > 0 ? b->coefficient : -b->coefficient});
            ++b;
        } else {
            Rational c = sign > 0 ? a->coefficient + b->coefficient : a->coefficient - b->coefficient;
            if (!c.is_zero())
                out.push_back({std::move(a->exponents), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
    add_scaled(o, +1);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
    add_scaled(o, -1);
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
    if (a.is_zero() || b.is_zero())
        return MultiPoly();
    auto ns = MultiPoly::merged(a, b);
    MultiPoly lhs = a.with_namespace(ns);
    MultiPoly rhs = b.with_namespace(ns);
    std::unordered_map<Exponents, mpq_class, ExponentHash> acc;
    acc.reserve(lhs.terms_.size() * rhs.terms_.size());
    Exponents e(ns->size());
    for (const auto &s : lhs.terms_) {
        for (const auto &t : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = s.exponents[i] + t.exponents[i];
            acc[e] += s.coefficient.raw() * t.coefficient.raw();
        }
    }
    MultiPoly out;
    out.vars_ = ns;
    out.terms_.reserve(acc.size());
    for (auto &[exps, c] : acc)
        if (sgn(c) != 0)
            out.terms_.push_back({exps, Rational(c)});
    std::sort(out.terms_.begin(), out.terms_.end(), lex_greater);
    return out;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o) {
    *this = *this * o;
    return *this;
}

MultiPoly operator-(const MultiPoly &a) {
    MultiPoly out = a;
    for (auto &t : out.terms_)
        t.coefficient = -t.coefficient;
    return out;
}

MultiPoly MultiPoly::scaled(const Rational &c) const {
    if (c.is_zero())
        return MultiPoly();
    MultiPoly out = *this;
    for (auto &t : out.terms_)
        t.coefficient *= c;
    return out;
}

MultiPoly MultiPoly::derivative(const std::string &var) const {
    auto it = std::find(vars_->begin(), vars_->end(), var);
    if (it == vars_->end())
        return MultiPoly();
    auto idx = static_cast<std::size_t>(it - vars_->begin());
    std::vector<Term> out;
    for (const auto &t : terms_) {
        if (t.exponents[idx] == 0)
            continue;
        Term d = t;
        d.coefficient *= Rational(static_cast<long>(t.exponents[idx]));
        d.exponents[idx] -= 1;
        out.push_back(std::move(d));
    }
    MultiPoly p;
    p.vars_ = vars_;
    p.terms_ = normalize(std::move(out));
    return p;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly> &images) const {
    const auto &vars = *vars_;
    // Powers are cached per variable since the same exponents recur.
    std::vector<std::vector<MultiPoly>> powers(vars.size());
    std::vector<const MultiPoly *> image(vars.size(), nullptr);
    std::vector<MultiPoly> kept(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = images.find(vars[i]);
        if (it != images.end()) {
            image[i] = &it->second;
        } else {
            kept[i] = MultiPoly::variable(vars[i]);
            image[i] = &kept[i];
        }
        powers[i].push_back(MultiPoly(1));
    }
    auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly & {
        while (powers[i].size() <= e)
            powers[i].push_back(powers[i].back() * *image[i]);
        return powers[i][e];
    };
    MultiPoly out;
    for (const auto &t : terms_) {
        MultiPoly m(t.coefficient);
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (t.exponents[i] != 0)
                m *= power(i, t.exponents[i]);
        out += m;
    }
    return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational> &point) const {
    const auto &vars = *vars_;
    std::vector<const Rational *> value(vars.size(), nullptr);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = point.find(vars[i]);
        if (it != point.end())
            value[i] = &it->second;
    }
    Rational sum;
    for (const auto &t : terms_) {
        Rational m = t.coefficient;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (t.exponents[i] == 0)
                continue;
            if (!value[i])
                throw std::out_of_range("no binding for variable " + vars[i]);
            m *= pow(*value[i], t.exponents[i]);
        }
        sum += m;
    }
    return sum;
}

DualScalar MultiPoly::eval_with_dual(const std::map<std::string, Rational> &point,
                                     const std::string &direction) const {
    if (!point.contains(direction))
        throw std::out_of_range("unknown direction variable " + direction);
    const auto &vars = *vars_;
    std::vector<DualScalar> value(vars.size());
    std::vector<bool> bound(vars.size(), false);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = point.find(vars[i]);
        if (it == point.end())
            continue;
        bound[i] = true;
        value[i] = DualScalar(it->second, vars[i] == direction ? Rational(1) : Rational());
    }
    DualScalar sum;
    for (const auto &t : terms_) {
        DualScalar m(t.coefficient);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (t.exponents[i] == 0)
                continue;
            if (!bound[i])
                throw std::out_of_range("no binding for variable " + vars[i]);
            for (std::uint32_t k = 0; k < t.exponents[i]; ++k)
                m *= value[i];
        }
        sum += m;
    }
    return sum;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms_) {
        Rational c = t.coefficient;
        bool negative = c.sign() < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool has_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i] == 0)
                continue;
            if (has_var)
                mono << '*';
            mono << (*vars_)[i];
            if (t.exponents[i] > 1)
                mono << '^' << t.exponents[i];
            has_var = true;
        }
        if (!has_var)
            os << c;
        else if (c == Rational(1))
            os << mono.str();
        else
            os << c << '*' << mono.str();
    }
    return os.str();
}

bool operator==(const MultiPoly &a, const MultiPoly &b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_)
        return a.terms_ == b.terms_;
    auto ns = MultiPoly::merged(a, b);
    return a.with_namespace(ns).terms_ == b.with_namespace(ns).terms_;
}

MultiPoly pow(const MultiPoly &base, long exponent) {
    if (exponent < 0)
        throw std::invalid_argument("negative exponent in pow");
    MultiPoly result(1);
    MultiPoly b = base;
    while (exponent > 0) {
        if (exponent & 1)
            result *= b;
        exponent >>= 1;
        if (exponent > 0)
            b *= b;
    }
    return result;
}

MultiPoly exact_divide(const MultiPoly &p, const MultiPoly &q) {
    if (q.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (p.is_zero())
        return MultiPoly();
    auto ns = MultiPoly::merged(p, q);
    MultiPoly num = p.with_namespace(ns);
    MultiPoly den = q.with_namespace(ns);
    const Term &lead = den.terms_.front();
    std::map<Exponents, Rational, std::greater<>> rem;
    for (auto &t : num.terms_)
        rem.emplace(std::move(t.exponents), std::move(t.coefficient));
    std::vector<Term> quotient;
    Exponents e(ns->size());
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!divides(lead.exponents, top->first))
            throw NotDivisible("exact division failed: " + p.to_string() + " / " + q.to_string());
        Term qt;
        qt.exponents.resize(ns->size());
        for (std::size_t i = 0; i < e.size(); ++i)
            qt.exponents[i] = top->first[i] - lead.exponents[i];
        qt.coefficient = top->second / lead.coefficient;
        for (const auto &d : den.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = d.exponents[i] + qt.exponents[i];
            auto it = rem.find(e);
            Rational delta = qt.coefficient * d.coefficient;
            if (it == rem.end()) {
                rem.emplace(e, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero())
                    rem.erase(it);
            }
        }
        quotient.push_back(std::move(qt));
    }
    MultiPoly out;
    out.vars_ = ns;
    out.terms_ = std::move(quotient);
    return out;
}

}  // namespace drlab
