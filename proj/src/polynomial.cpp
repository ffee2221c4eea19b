#include "wpvol/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wpvol {

VolumePolynomial VolumePolynomial::constant(int genus, int n_vars, const PiScalar& value) {
    VolumePolynomial p(genus, n_vars);
    p.add_monomial(ExponentVector(n_vars, 0), value);
    return p;
}

void VolumePolynomial::retag(int genus, int n_vars) {
    if (n_vars != n_ && !monomials_.empty())
        throw std::invalid_argument("cannot retag a non-empty polynomial to a different variable count");
    g_ = genus;
    n_ = n_vars;
}

std::size_t VolumePolynomial::term_count() const {
    std::size_t count = 0;
    for (const auto& [e, c] : monomials_) count += c.terms().size();
    return count;
}

void VolumePolynomial::add_monomial(const ExponentVector& exps, const PiScalar& coeff) {
    if (static_cast<int>(exps.size()) != n_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = monomials_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) monomials_.erase(it);
    }
}

PiScalar VolumePolynomial::coefficient(const ExponentVector& exps) const {
    auto it = monomials_.find(exps);
    return it == monomials_.end() ? PiScalar() : it->second;
}

VolumePolynomial& VolumePolynomial::operator+=(const VolumePolynomial& other) {
    if (other.n_ != n_) throw std::invalid_argument("variable count mismatch in add");
    for (const auto& [e, c] : other.monomials_) add_monomial(e, c);
    return *this;
}

VolumePolynomial& VolumePolynomial::operator-=(const VolumePolynomial& other) {
    if (other.n_ != n_) throw std::invalid_argument("variable count mismatch in subtract");
    for (const auto& [e, c] : other.monomials_) add_monomial(e, -c);
    return *this;
}

VolumePolynomial& VolumePolynomial::operator*=(const Rational& scale) {
    if (scale == 0) {
        monomials_.clear();
        return *this;
    }
    for (auto& [e, c] : monomials_) c *= scale;
    return *this;
}

VolumePolynomial& VolumePolynomial::operator*=(const PiScalar& scale) {
    std::map<ExponentVector, PiScalar> scaled;
    for (const auto& [e, c] : monomials_) {
        PiScalar v = c * scale;
        if (!v.is_zero()) scaled.emplace(e, std::move(v));
    }
    monomials_ = std::move(scaled);
    return *this;
}

int VolumePolynomial::total_weight() const {
    int best = 0;
    for (const auto& [e, c] : monomials_) {
        int deg = 0;
        for (int k : e) deg += k;
        best = std::max(best, deg + c.degree() / 2);
    }
    return best;
}

bool VolumePolynomial::is_symmetric() const {
    if (n_ <= 1) return true;
    // The adjacent transposition (1 2) and the full cycle generate S_n.
    auto check = [&](auto permute) {
        for (const auto& [e, c] : monomials_) {
            ExponentVector pe = permute(e);
            auto it = monomials_.find(pe);
            if (it == monomials_.end() || !(it->second == c)) return false;
        }
        return true;
    };
    bool swap_ok = check([](ExponentVector e) {
        std::swap(e[0], e[1]);
        return e;
    });
    bool cycle_ok = check([](ExponentVector e) {
        std::rotate(e.begin(), e.begin() + 1, e.end());
        return e;
    });
    return swap_ok && cycle_ok;
}

bool VolumePolynomial::coefficients_nonnegative() const {
    for (const auto& [e, c] : monomials_)
        for (const auto& [pe, r] : c.terms())
            if (r < 0) return false;
    return true;
}

std::string VolumePolynomial::str() const { return render_text(*this); }

VolumePolynomial add(const VolumePolynomial& p, const VolumePolynomial& q) {
    if (p.boundary_count() != q.boundary_count())
        throw std::invalid_argument("variable count mismatch in add");
    VolumePolynomial r = p;
    r += q;
    return r;
}

VolumePolynomial multiply(const VolumePolynomial& p, const VolumePolynomial& q) {
    if (p.boundary_count() != q.boundary_count())
        throw std::invalid_argument("variable count mismatch in multiply");
    const int n = p.boundary_count();
    VolumePolynomial r(p.genus(), n);
    for (const auto& [ea, ca] : p.monomials()) {
        for (const auto& [eb, cb] : q.monomials()) {
            ExponentVector e(n);
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_monomial(e, ca * cb);
        }
    }
    return r;
}

VolumePolynomial substitute_square(const VolumePolynomial& p, int j, const PiScalar& value) {
    const int n = p.boundary_count();
    if (j < 1 || j > n) throw std::out_of_range("substitute_square: index out of range");
    const int idx = j - 1;
    VolumePolynomial r(p.genus(), n - 1);
    for (const auto& [e, c] : p.monomials()) {
        ExponentVector rest;
        rest.reserve(n - 1);
        for (int i = 0; i < n; ++i)
            if (i != idx) rest.push_back(e[i]);
        r.add_monomial(rest, c * value.pow(static_cast<unsigned>(e[idx])));
    }
    return r;
}

VolumePolynomial integrate_against_length(const VolumePolynomial& p, int k) {
    const int n = p.boundary_count();
    if (k < 1 || k > n) throw std::out_of_range("integrate_against_length: index out of range");
    const int idx = k - 1;
    VolumePolynomial r(p.genus(), n);
    for (const auto& [e, c] : p.monomials()) {
        ExponentVector raised = e;
        raised[idx] += 1;
        r.add_monomial(raised, c * make_rational(1, 2L * e[idx] + 2));
    }
    return r;
}

VolumePolynomial odd_derivative_factor(const VolumePolynomial& p, int j) {
    const int n = p.boundary_count();
    if (j < 1 || j > n) throw std::out_of_range("odd_derivative_factor: index out of range");
    const int idx = j - 1;
    VolumePolynomial r(p.genus(), n);
    for (const auto& [e, c] : p.monomials()) {
        if (e[idx] == 0) continue; // constant in L_j
        ExponentVector lowered = e;
        lowered[idx] -= 1;
        r.add_monomial(lowered, c * Rational(2L * e[idx]));
    }
    return r;
}

double numeric_eval(const VolumePolynomial& p, const Labels& labels) {
    if (static_cast<int>(labels.size()) != p.boundary_count())
        throw std::invalid_argument("label count must equal the number of boundary components");
    std::vector<double> squares(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        switch (labels[i].kind) {
        case BoundaryKind::Geodesic: squares[i] = labels[i].magnitude * labels[i].magnitude; break;
        case BoundaryKind::Cusp: squares[i] = 0.0; break;
        case BoundaryKind::Cone: squares[i] = -labels[i].magnitude * labels[i].magnitude; break;
        }
    }
    double total = 0.0;
    for (const auto& [e, c] : p.monomials()) {
        double term = c.to_double();
        for (std::size_t i = 0; i < squares.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= squares[i];
        total += term;
    }
    return total;
}

PiScalar exact_eval(const VolumePolynomial& p, const Labels& labels) {
    if (static_cast<int>(labels.size()) != p.boundary_count())
        throw std::invalid_argument("label count must equal the number of boundary components");
    VolumePolynomial cur = p;
    for (std::size_t i = labels.size(); i-- > 0;) {
        const BoundaryLabel& l = labels[i];
        PiScalar value;
        if (l.is_cusp()) {
            value = PiScalar();
        } else if (l.is_cone() && l.pi_multiple) {
            // L^2 = -theta^2 = -(p/q)^2 pi^2
            value = PiScalar::pi_power(2, -pow_rational(*l.pi_multiple, 2));
        } else {
            throw std::invalid_argument("exact evaluation needs cusps or exact-pi cone angles");
        }
        cur = substitute_square(cur, static_cast<int>(i) + 1, value);
    }
    return cur.constant_term();
}

VolumePolynomial embed(const VolumePolynomial& p, const std::vector<int>& slots, int n_total) {
    if (static_cast<int>(slots.size()) != p.boundary_count())
        throw std::invalid_argument("embed: slot list length mismatch");
    VolumePolynomial r(p.genus(), n_total);
    for (const auto& [e, c] : p.monomials()) {
        ExponentVector wide(n_total, 0);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (slots[i] < 0 || slots[i] >= n_total) throw std::out_of_range("embed: bad slot");
            wide[slots[i]] += e[i];
        }
        r.add_monomial(wide, c);
    }
    return r;
}

VolumePolynomial to_theta_squared(const VolumePolynomial& p) {
    VolumePolynomial r(p.genus(), p.boundary_count());
    for (const auto& [e, c] : p.monomials()) {
        int degree = 0;
        for (int k : e) degree += k;
        r.add_monomial(e, (degree % 2 == 0) ? c : -c);
    }
    return r;
}

} // namespace wpvol
