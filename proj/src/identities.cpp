#include "wpvol/identities.hpp"

#include <sstream>

namespace wpvol {

namespace {

std::string key_str(ConfigKey k) {
    std::ostringstream os;
    os << "(" << k.g << "," << k.n << ")";
    return os.str();
}

const PiScalar& minus_four_pi_sq() {
    static const PiScalar v = PiScalar::pi_power(2, Rational(-4));
    return v;
}

IdentityReport from_discrepancy(std::string name, ConfigKey key, VolumePolynomial diff) {
    IdentityReport r;
    r.name = std::move(name);
    r.key = key;
    r.pass = diff.is_zero();
    r.discrepancy = std::move(diff);
    return r;
}

} // namespace

IdentityReport check_limit_integral(ConfigKey target, VolumeTable& table) {
    const int n = target.n - 1;
    if (!target.stable()) throw std::invalid_argument("unstable target " + key_str(target));
    ConfigKey small{target.g, n};
    if (n == 0 && target.g < 2)
        throw std::invalid_argument("limit integral undefined: no boundary to integrate for " +
                                    key_str(target));
    const VolumePolynomial& big = table.volume(target);
    VolumePolynomial lhs = substitute_square(big, target.n, minus_four_pi_sq());
    VolumePolynomial rhs(target.g, n);
    if (n > 0) {
        const VolumePolynomial& v = table.volume(small);
        for (int k = 1; k <= n; ++k) rhs += integrate_against_length(v, k);
    } else {
        table.closed_surface_volume(target.g); // must exist; the empty sum is 0
    }
    lhs -= rhs;
    return from_discrepancy("limit-integral", target, std::move(lhs));
}

IdentityReport check_limit_derivative(ConfigKey target, VolumeTable& table) {
    const int n = target.n - 1;
    if (!target.stable()) throw std::invalid_argument("unstable target " + key_str(target));
    const VolumePolynomial& big = table.volume(target);
    VolumePolynomial q = odd_derivative_factor(big, target.n);
    VolumePolynomial lhs = substitute_square(q, target.n, minus_four_pi_sq());
    VolumePolynomial rhs(target.g, n);
    if (n > 0) {
        rhs = table.volume({target.g, n});
    } else {
        if (target.g < 2)
            throw std::invalid_argument("limit derivative undefined for " + key_str(target));
        rhs = VolumePolynomial::constant(target.g, 0, table.closed_surface_volume(target.g));
    }
    rhs *= Rational(2L * target.g - 2 + n);
    lhs -= rhs;
    return from_discrepancy("limit-derivative", target, std::move(lhs));
}

IdentityReport check_two_pi_corollary(int g, int n, VolumeTable& table) {
    ConfigKey small{g, n};
    const bool closed = (n == 0 && g >= 2);
    if (!small.stable() && !closed)
        throw std::invalid_argument("corollary needs a stable reduced space, got " + key_str(small));
    ConfigKey target{g, n + 1};
    const VolumePolynomial& big = table.volume(target);

    // Restrict to (0^n, i theta): all but the last variable set to zero.
    VolumePolynomial p = big;
    for (int j = n; j >= 1; --j) p = substitute_square(p, j, PiScalar());

    // Part 1: value at theta = 2 pi, i.e. L^2 = -4 pi^2.
    PiScalar at_limit = substitute_square(p, 1, minus_four_pi_sq()).constant_term();

    // Part 2 (derivative, common factor 2 pi removed and both sides scaled
    // by 2 pi): with p = sum c_m (L^2)^m and L^2 = -theta^2,
    //   d/dtheta p(i theta) |_{2 pi} * 2 pi = sum c_m (-1)^m 2m (4 pi^2)^m,
    // which must equal 4 pi^2 (2 - 2g - n) V_{g,n}(0^n).
    PiScalar lhs_deriv;
    const PiScalar four_pi_sq = PiScalar::pi_power(2, Rational(4));
    for (const auto& [e, c] : p.monomials()) {
        const int m = e[0];
        if (m == 0) continue;
        PiScalar term = c * Rational(2L * m);
        if (m % 2 != 0) term = -term;
        lhs_deriv += term * four_pi_sq.pow(static_cast<unsigned>(m));
    }
    PiScalar v_small = closed ? table.closed_surface_volume(g)
                              : exact_eval(table.volume(small), Labels(n, BoundaryLabel::cusp()));
    PiScalar rhs_deriv = four_pi_sq * Rational(2L - 2 * g - n) * v_small;

    VolumePolynomial diff(g, 0);
    diff.add_monomial({}, at_limit);
    diff.add_monomial({}, lhs_deriv - rhs_deriv);
    IdentityReport r = from_discrepancy("two-pi-corollary", target, std::move(diff));
    if (!r.pass) {
        r.detail = "value at 2pi: " + at_limit.str() + "; derivative gap: " +
                   (lhs_deriv - rhs_deriv).str();
    }
    return r;
}

IdentityReport check_v05_factorizations(VolumeTable& table) {
    const VolumePolynomial v05_theta = to_theta_squared(table.volume({0, 5}));

    const PiScalar four_pi_sq = PiScalar::pi_power(2, Rational(4));
    const PiScalar pi_sq = PiScalar::pi_power(2, Rational(1));
    const PiScalar pi_4 = PiScalar::pi_power(4, Rational(1));

    auto linear = [&](const PiScalar& constant, std::initializer_list<int> vars,
                      const Rational& sign) {
        // constant + sign * sum theta_v^2
        VolumePolynomial p(0, 5);
        p.add_monomial(ExponentVector(5, 0), constant);
        for (int v : vars) {
            ExponentVector e(5, 0);
            e[v] = 1;
            p.add_monomial(e, PiScalar(sign));
        }
        return p;
    };

    // 15-summand form: (1/24) sum (4pi^2 - t_j - t_k - t_l)(4pi^2 - t_j - t_m - t_n)
    // over partitions {j}{k,l}{m,n} of {0..4}, the two triples sharing j.
    VolumePolynomial first(0, 5);
    for (int j = 0; j < 5; ++j) {
        std::vector<int> rest;
        for (int v = 0; v < 5; ++v)
            if (v != j) rest.push_back(v);
        // split rest = {a,b,c,d} into unordered pairs: partner of rest[0]
        for (int p2 = 1; p2 <= 3; ++p2) {
            std::vector<int> pair1{rest[0], rest[p2]}, pair2;
            for (int t = 1; t <= 3; ++t)
                if (t != p2) pair2.push_back(rest[t]);
            first += multiply(linear(four_pi_sq, {j, pair1[0], pair1[1]}, Rational(-1)),
                              linear(four_pi_sq, {j, pair2[0], pair2[1]}, Rational(-1)));
        }
    }
    first *= make_rational(1, 24);

    // Pair form: (1/4) sum_{j<k} [3(pi^2 - t_j)(pi^2 - t_k) + pi^4 - t_j t_k]
    //            + (1/8) sum t_j^2  (t_j standing for theta_j^2).
    VolumePolynomial second(0, 5);
    for (int j = 0; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) {
            VolumePolynomial term =
                multiply(linear(pi_sq, {j}, Rational(-1)), linear(pi_sq, {k}, Rational(-1)));
            term *= Rational(3);
            VolumePolynomial cross(0, 5);
            cross.add_monomial(ExponentVector(5, 0), pi_4);
            ExponentVector e(5, 0);
            e[j] = 1;
            e[k] = 1;
            cross.add_monomial(e, PiScalar(Rational(-1)));
            term += cross;
            second += term;
        }
    second *= make_rational(1, 4);
    for (int j = 0; j < 5; ++j) {
        ExponentVector e(5, 0);
        e[j] = 2;
        second.add_monomial(e, PiScalar(make_rational(1, 8)));
    }

    VolumePolynomial diff1 = first;
    diff1 -= v05_theta;
    VolumePolynomial diff2 = second;
    diff2 -= v05_theta;
    VolumePolynomial combined = diff1;
    combined += diff2; // both must vanish; report the union
    IdentityReport r = from_discrepancy("v05-factorizations", {0, 5}, std::move(combined));
    r.pass = diff1.is_zero() && diff2.is_zero();
    if (!r.pass)
        r.detail = "first form terms off: " + std::to_string(diff1.term_count()) +
                   ", second: " + std::to_string(diff2.term_count());
    return r;
}

std::vector<ConfigKey> identity_targets(const VolumeTable& table, bool integral) {
    std::vector<ConfigKey> targets;
    for (int dim = 1; dim <= table.max_dim(); ++dim)
        for (int g = 0; 3 * g - 3 <= dim; ++g) {
            ConfigKey target{g, dim - 3 * g + 3};
            if (!target.stable() || target.dimension() != dim) continue;
            const int n = target.n - 1;
            ConfigKey small{g, n};
            bool reachable = small.stable() || (n == 0 && g >= 2);
            if (integral && n == 0 && g < 2) reachable = false;
            if (reachable) targets.push_back(target);
        }
    return targets;
}

std::vector<IdentityReport> run_identity_suite(VolumeTable& table) {
    std::vector<IdentityReport> reports;
    for (ConfigKey t : identity_targets(table, /*integral=*/true))
        reports.push_back(check_limit_integral(t, table));
    for (ConfigKey t : identity_targets(table, /*integral=*/false))
        reports.push_back(check_limit_derivative(t, table));
    for (ConfigKey t : identity_targets(table, /*integral=*/false))
        reports.push_back(check_two_pi_corollary(t.g, t.n - 1, table));
    reports.push_back(check_v05_factorizations(table));
    return reports;
}

} // namespace wpvol
