#pragma once

#include "wpvol/labels.hpp"
#include "wpvol/pi_scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace wpvol {

using ExponentVector = std::vector<int>; // exponent of L_j^2 per variable

// Multivariate even polynomial in the boundary lengths: a map from exponent
// vectors (k_1, ..., k_n), meaning prod_j (L_j^2)^{k_j}, to Q[pi^2]
// coefficients, tagged by the moduli-space indices (g, n).
class VolumePolynomial {
  public:
    VolumePolynomial() = default;
    VolumePolynomial(int genus, int n_vars) : g_(genus), n_(n_vars) {}

    static VolumePolynomial constant(int genus, int n_vars, const PiScalar& value);

    int genus() const { return g_; }
    int boundary_count() const { return n_; }
    void retag(int genus, int n_vars);

    bool is_zero() const { return monomials_.empty(); }
    std::size_t term_count() const;
    const std::map<ExponentVector, PiScalar>& monomials() const { return monomials_; }

    void add_monomial(const ExponentVector& exps, const PiScalar& coeff);
    PiScalar coefficient(const ExponentVector& exps) const;
    /// Coefficient of the all-zero exponent vector.
    PiScalar constant_term() const { return coefficient(ExponentVector(n_, 0)); }

    VolumePolynomial& operator+=(const VolumePolynomial& other);
    VolumePolynomial& operator-=(const VolumePolynomial& other);
    VolumePolynomial& operator*=(const Rational& scale);
    VolumePolynomial& operator*=(const PiScalar& scale);

    bool operator==(const VolumePolynomial& other) const {
        return n_ == other.n_ && monomials_ == other.monomials_;
    }

    /// Max over monomials of (sum of exponents + half the pi power of each coefficient term).
    int total_weight() const;
    bool is_symmetric() const;
    bool coefficients_nonnegative() const;

    std::string str() const;

  private:
    int g_ = 0;
    int n_ = 0;
    std::map<ExponentVector, PiScalar> monomials_;
};

VolumePolynomial add(const VolumePolynomial& p, const VolumePolynomial& q);
VolumePolynomial multiply(const VolumePolynomial& p, const VolumePolynomial& q);

/// Substitute L_j^2 := value (j is 1-based); the variable is removed.
VolumePolynomial substitute_square(const VolumePolynomial& p, int j, const PiScalar& value);

/// Termwise integral int_0^{L_k} x * p(.., x, ..) dx in variable k (1-based):
/// (x^2)^m integrates to L^{2m+2} / (2m+2).
VolumePolynomial integrate_against_length(const VolumePolynomial& p, int k);

/// The even polynomial Q with dp/dL_j = L_j * Q (j is 1-based).
VolumePolynomial odd_derivative_factor(const VolumePolynomial& p, int j);

/// Evaluate with boundary data: Geodesic(l) -> L^2 = l^2, Cusp -> 0, Cone(theta) -> -theta^2.
double numeric_eval(const VolumePolynomial& p, const Labels& labels);

/// Exact evaluation; every label must be a cusp or a cone with exact pi multiple.
PiScalar exact_eval(const VolumePolynomial& p, const Labels& labels);

/// Re-index p's variables into a wider frame: variable i of p becomes
/// variable slots[i] of an n_total-variable polynomial.
VolumePolynomial embed(const VolumePolynomial& p, const std::vector<int>& slots, int n_total);

/// p with every variable L_j^2 replaced by -T_j (T_j standing for theta_j^2):
/// the evaluation of the polynomial at purely imaginary boundary lengths.
VolumePolynomial to_theta_squared(const VolumePolynomial& p);

// Canonical serialization (stable ordering, bit-exact round trip):
// {"g":G,"n":N,"terms":[{"exps":[..],"pi_pow":P,"coeff":"p/q"},..]}
std::string canonical_json(const VolumePolynomial& p);
VolumePolynomial parse_canonical_json(const std::string& text);

/// Human-readable rendering with deterministic term order.
std::string render_text(const VolumePolynomial& p);

} // namespace wpvol
