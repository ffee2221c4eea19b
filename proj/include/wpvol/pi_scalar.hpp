#pragma once

#include "wpvol/rational.hpp"

#include <map>

namespace wpvol {

// Element of Q[pi^2]: a finite sum of rational multiples of even powers of pi.
// Keys are the pi exponents (0, 2, 4, ...); zero coefficients are never stored.
class PiScalar {
  public:
    PiScalar() = default;
    PiScalar(const Rational& r) { add_term(0, r); } // NOLINT: implicit by design
    PiScalar(long v) { add_term(0, Rational(v)); }  // NOLINT

    static PiScalar pi_power(int exponent, const Rational& coeff = Rational(1));

    void add_term(int exponent, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Highest pi exponent present (0 for the zero scalar).
    int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    const std::map<int, Rational>& terms() const { return terms_; }

    /// Coefficient of pi^exponent (zero if absent).
    Rational coefficient(int exponent) const;

    PiScalar& operator+=(const PiScalar& other);
    PiScalar& operator-=(const PiScalar& other);
    PiScalar& operator*=(const PiScalar& other);
    PiScalar& operator*=(const Rational& scale);

    friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
    friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
    friend PiScalar operator*(PiScalar a, const PiScalar& b) { return a *= b; }
    friend PiScalar operator*(PiScalar a, const Rational& s) { return a *= s; }
    friend PiScalar operator*(const Rational& s, PiScalar a) { return a *= s; }
    PiScalar operator-() const;

    PiScalar pow(unsigned exponent) const;

    bool operator==(const PiScalar& other) const { return terms_ == other.terms_; }
    bool operator!=(const PiScalar& other) const { return !(*this == other); }

    /// Numeric value with pi instantiated as a double.
    double to_double() const;

    std::string str() const;

  private:
    std::map<int, Rational> terms_;
};

} // namespace wpvol
