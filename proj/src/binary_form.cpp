#include "drlab/resultant.hpp"

namespace drlab {

BinaryForm<MultiPoly> generic_form(const std::string &prefix, int degree) {
    if (degree < 0)
        throw std::invalid_argument("negative form degree");
    std::vector<MultiPoly> c;
    for (int i = 0; i <= degree; ++i)
        c.push_back(MultiPoly::variable(prefix + std::to_string(i)));
    return BinaryForm<MultiPoly>(std::move(c));
}

BinaryForm<Rational> evaluate(const BinaryForm<MultiPoly> &f, const std::map<std::string, Rational> &point) {
    std::vector<Rational> c;
    for (const auto &a : f.coefficients)
        c.push_back(a.evaluate(point));
    return BinaryForm<Rational>(std::move(c));
}

}  // namespace drlab
