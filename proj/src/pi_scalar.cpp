#include "wpvol/pi_scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wpvol {

PiScalar PiScalar::pi_power(int exponent, const Rational& coeff) {
    PiScalar s;
    s.add_term(exponent, coeff);
    return s;
}

void PiScalar::add_term(int exponent, const Rational& coeff) {
    if (exponent < 0 || exponent % 2 != 0)
        throw std::invalid_argument("pi exponent must be even and non-negative");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool PiScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PiScalar::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

PiScalar& PiScalar::operator+=(const PiScalar& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
    return *this;
}

PiScalar& PiScalar::operator*=(const PiScalar& other) {
    PiScalar result;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) result.add_term(ea + eb, ca * cb);
    terms_ = std::move(result.terms_);
    return *this;
}

PiScalar& PiScalar::operator*=(const Rational& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scale;
    return *this;
}

PiScalar PiScalar::operator-() const {
    PiScalar r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

PiScalar PiScalar::pow(unsigned exponent) const {
    PiScalar result(Rational(1));
    PiScalar base = *this;
    unsigned e = exponent;
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

double PiScalar::to_double() const {
    double value = 0.0;
    for (const auto& [e, c] : terms_) value += c.get_d() * std::pow(std::numbers::pi, e);
    return value;
}

std::string PiScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.get_str() << ")";
        if (e > 0) os << "*pi^" << e;
        first = false;
    }
    return os.str();
}

} // namespace wpvol
