#include "wpvol/kernel.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace wpvol {

Rational bernoulli(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    while (static_cast<int>(cache.size()) <= m) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        int next = static_cast<int>(cache.size());
        Rational sum(0);
        for (int j = 0; j < next; ++j) sum += Rational(binomial(next + 1, j)) * cache[j];
        cache.push_back(-sum / Rational(next + 1));
    }
    return cache[m];
}

Rational zeta_even_coefficient(int i) {
    if (i < 0) throw std::invalid_argument("zeta_even_coefficient: negative index");
    if (i == 0) return make_rational(-1, 2);
    // zeta(2i) = (-1)^{i+1} B_{2i} (2 pi)^{2i} / (2 (2i)!)
    Rational c = bernoulli(2 * i) * Rational(Integer(1) << (2 * i)) / Rational(2 * factorial(2 * i));
    if (i % 2 == 0) c = -c;
    return c;
}

PiScalar zeta_even(int i) { return PiScalar::pi_power(2 * i, zeta_even_coefficient(i)); }

std::vector<PiScalar> kernel_moment_coefficients(int k) {
    if (k < 0) throw std::invalid_argument("kernel_moment: negative index");
    // coeff of t^{2m}, m = k+1-i
    std::vector<PiScalar> coeffs(k + 2);
    const Rational fact_odd(factorial(2 * k + 1));
    for (int i = 0; i <= k + 1; ++i) {
        const int t_exp = 2 * k + 2 - 2 * i;
        Rational weight = zeta_even_coefficient(i) * Rational((Integer(1) << (2 * i + 1)) - 4);
        Rational c = fact_odd * weight / Rational(factorial(t_exp));
        coeffs[t_exp / 2] += PiScalar::pi_power(2 * i, c);
    }
    return coeffs;
}

VolumePolynomial kernel_moment(int k) {
    VolumePolynomial f(0, 1);
    auto coeffs = kernel_moment_coefficients(k);
    for (int m = 0; m < static_cast<int>(coeffs.size()); ++m)
        if (!coeffs[m].is_zero()) f.add_monomial({m}, coeffs[m]);
    return f;
}

Rational kernel_pair_weight(int a, int b) {
    return Rational(factorial(2 * a + 1) * factorial(2 * b + 1)) /
           Rational(factorial(2 * a + 2 * b + 3));
}

double kernel_h(double x, double t) {
    return 1.0 / (1.0 + std::exp((x + t) / 2.0)) + 1.0 / (1.0 + std::exp((x - t) / 2.0));
}

} // namespace wpvol
