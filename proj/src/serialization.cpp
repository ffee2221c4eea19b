#include "wpvol/polynomial.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace wpvol {

// The writer is hand-rolled so cache files and golden comparisons are
// byte-exact: terms ordered by exponent vector (lexicographic) then pi power,
// coefficients as GMP canonical "p" / "p/q" strings, no whitespace, one
// trailing newline.
std::string canonical_json(const VolumePolynomial& p) {
    std::ostringstream os;
    os << "{\"g\":" << p.genus() << ",\"n\":" << p.boundary_count() << ",\"terms\":[";
    bool first = true;
    for (const auto& [exps, coeff] : p.monomials()) {
        for (const auto& [pi_pow, rat] : coeff.terms()) {
            if (!first) os << ",";
            first = false;
            os << "{\"exps\":[";
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (i) os << ",";
                os << exps[i];
            }
            os << "],\"pi_pow\":" << pi_pow << ",\"coeff\":\"" << rat.get_str() << "\"}";
        }
    }
    os << "]}\n";
    return os.str();
}

VolumePolynomial parse_canonical_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("g") || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("polynomial json: missing g/n/terms");
    VolumePolynomial p(j.at("g").get<int>(), j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
        ExponentVector exps = term.at("exps").get<std::vector<int>>();
        int pi_pow = term.at("pi_pow").get<int>();
        Rational c = rational_from_string(term.at("coeff").get<std::string>());
        p.add_monomial(exps, PiScalar::pi_power(pi_pow, c));
    }
    return p;
}

std::string render_text(const VolumePolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [exps, coeff] : p.monomials()) {
        for (const auto& [pi_pow, rat] : coeff.terms()) {
            if (!first_term) os << " + ";
            first_term = false;
            if (rat.get_den() == 1)
                os << rat.get_num().get_str();
            else
                os << "(" << rat.get_str() << ")";
            if (pi_pow > 0) os << "*pi^" << pi_pow;
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                os << "*L" << (i + 1) << "^" << 2 * exps[i];
            }
        }
    }
    return os.str();
}

} // namespace wpvol
