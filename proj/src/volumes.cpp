#include "wpvol/volumes.hpp"

#include "wpvol/kernel.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace wpvol {

VolumePolynomial base_case(ConfigKey key) {
    if (key.g == 0 && key.n == 3) return VolumePolynomial::constant(0, 3, PiScalar(Rational(1)));
    if (key.g == 1 && key.n == 1) {
        VolumePolynomial v(1, 1);
        v.add_monomial({1}, PiScalar(make_rational(1, 48)));
        v.add_monomial({0}, PiScalar::pi_power(2, make_rational(1, 12)));
        return v;
    }
    std::ostringstream os;
    os << "(" << key.g << "," << key.n << ") is not a base case";
    throw std::invalid_argument(os.str());
}

namespace {

// Integrate x y H(x+y, L1) against W(x, y, L_2..L_n): each monomial
// x^{2a} y^{2b} pairs to kernel_pair_weight(a,b) * F_{2a+2b+3}(L1).
// W lives in an (n+1)-variable frame (x, y, hat L); the result is in the
// n-variable target frame with L1 in slot 0.
VolumePolynomial pair_off_xy(const VolumePolynomial& w, int n_target) {
    VolumePolynomial out(0, n_target);
    std::map<int, std::vector<PiScalar>> f_cache;
    for (const auto& [e, c] : w.monomials()) {
        const int a = e[0];
        const int b = e[1];
        auto [it, fresh] = f_cache.try_emplace(a + b);
        if (fresh) it->second = kernel_moment_coefficients(a + b + 1);
        const auto& f = it->second;
        const PiScalar paired = c * kernel_pair_weight(a, b);
        for (int m = 0; m < static_cast<int>(f.size()); ++m) {
            if (f[m].is_zero()) continue;
            ExponentVector target(n_target, 0);
            target[0] = m;
            for (int i = 2; i < static_cast<int>(e.size()); ++i) target[i - 1] = e[i];
            out.add_monomial(target, paired * f[m]);
        }
    }
    return out;
}

// The boundary pairing against x (H(x, L1+Lj) + H(x, L1-Lj)) for one j:
// F_{2a+1}(L1+Lj) + F_{2a+1}(L1-Lj) expands over even binomials; the odd
// binomial terms cancel in the sum.  W lives in an (n-1)-variable frame
// (x, hat L_{1j}); j_target is the 0-based target slot of L_j.
VolumePolynomial boundary_pairing(const VolumePolynomial& w, int j_target, int n_target) {
    VolumePolynomial out(0, n_target);
    std::map<int, std::vector<PiScalar>> f_cache;
    // target slots of hat L_{1j}, in order
    std::vector<int> rest_slots;
    for (int v = 1; v < n_target; ++v)
        if (v != j_target) rest_slots.push_back(v);
    for (const auto& [e, c] : w.monomials()) {
        const int a = e[0];
        auto [it, fresh] = f_cache.try_emplace(a);
        if (fresh) it->second = kernel_moment_coefficients(a);
        const auto& f = it->second;
        for (int m = 0; m < static_cast<int>(f.size()); ++m) {
            if (f[m].is_zero()) continue;
            for (int q = 0; q <= m; ++q) {
                // (L1+Lj)^{2m} + (L1-Lj)^{2m} = 2 sum_q C(2m, 2q) L1^{2m-2q} Lj^{2q};
                // the factor 2 cancels the global 1/2 of the boundary term.
                ExponentVector target(n_target, 0);
                target[0] = m - q;
                target[j_target] += q;
                for (std::size_t i = 1; i < e.size(); ++i) target[rest_slots[i - 1]] += e[i];
                out.add_monomial(target, c * f[m] * Rational(binomial(2 * m, 2 * q)));
            }
        }
    }
    return out;
}

void validate(ConfigKey key, const VolumePolynomial& v) {
    if (!v.is_symmetric()) throw std::runtime_error("recursion output is not symmetric");
    if (v.total_weight() > key.dimension())
        throw std::runtime_error("recursion output violates the dimension bound");
    if (!v.coefficients_nonnegative())
        throw std::runtime_error("recursion output has a negative coefficient");
}

} // namespace

VolumePolynomial compute_volume(ConfigKey key, VolumeTable& table) {
    if (!key.stable()) {
        std::ostringstream os;
        os << "unstable key (" << key.g << "," << key.n << ")";
        throw std::invalid_argument(os.str());
    }
    if ((key.g == 0 && key.n == 3) || (key.g == 1 && key.n == 1)) return base_case(key);

    const int n = key.n;

    // W(x, y, hat L) collects the non-separating term and all stable ordered
    // splittings; frame slots: 0 = x, 1 = y, 1+v = target variable v.
    VolumePolynomial w(0, n + 1);
    if (key.g >= 1) {
        ConfigKey sub{key.g - 1, n + 1};
        if (sub.stable()) w += table.volume(sub);
    }
    const int hat = n - 1; // variables L_2..L_n as target slots 1..n-1
    for (unsigned mask = 0; mask < (1u << hat); ++mask) {
        std::vector<int> in_i, in_j;
        for (int v = 1; v <= hat; ++v)
            ((mask >> (v - 1)) & 1u ? in_i : in_j).push_back(v);
        for (int g1 = 0; g1 <= key.g; ++g1) {
            ConfigKey part1{g1, static_cast<int>(in_i.size()) + 1};
            ConfigKey part2{key.g - g1, static_cast<int>(in_j.size()) + 1};
            if (!part1.stable() || !part2.stable()) continue;
            std::vector<int> slots1{0}, slots2{1};
            for (int v : in_i) slots1.push_back(v + 1);
            for (int v : in_j) slots2.push_back(v + 1);
            w += multiply(embed(table.volume(part1), slots1, n + 1),
                          embed(table.volume(part2), slots2, n + 1));
        }
    }

    VolumePolynomial rhs = pair_off_xy(w, n);
    rhs *= make_rational(1, 2);

    for (int j = 1; j <= hat; ++j) {
        ConfigKey sub{key.g, n - 1};
        if (!sub.stable()) continue;
        rhs += boundary_pairing(table.volume(sub), j, n);
    }

    // rhs = d/dL1 (L1 V); termwise L1^{2m} -> L1^{2m} / (2m+1).
    VolumePolynomial v(key.g, n);
    for (const auto& [e, c] : rhs.monomials())
        v.add_monomial(e, c * make_rational(1, 2L * e[0] + 1));

    validate(key, v);
    return v;
}

VolumeTable::VolumeTable(int max_dim, std::optional<std::filesystem::path> cache_dir)
    : max_dim_(max_dim), cache_dir_(std::move(cache_dir)) {
    if (max_dim_ < 1) throw std::invalid_argument("max_dim must be at least 1");
    if (cache_dir_) std::filesystem::create_directories(*cache_dir_);
}

std::filesystem::path VolumeTable::cache_file(const std::filesystem::path& dir, ConfigKey key) {
    std::ostringstream os;
    os << "vol_g" << key.g << "_n" << key.n << ".json";
    return dir / os.str();
}

std::optional<VolumePolynomial> VolumeTable::try_load(ConfigKey key) const {
    if (!cache_dir_) return std::nullopt;
    auto path = cache_file(*cache_dir_, key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        VolumePolynomial p = parse_canonical_json(buffer.str());
        if (p.genus() != key.g || p.boundary_count() != key.n)
            throw std::runtime_error("key mismatch");
        validate(key, p);
        return p;
    } catch (const std::exception& e) {
        std::cerr << "wpvol: corrupt cache entry " << path.string() << " (" << e.what()
                  << "), recomputing\n";
        return std::nullopt;
    }
}

void VolumeTable::store_to_disk(ConfigKey key, const VolumePolynomial& value) const {
    if (!cache_dir_) return;
    auto path = cache_file(*cache_dir_, key);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << canonical_json(value);
}

const VolumePolynomial& VolumeTable::insert(ConfigKey key, VolumePolynomial value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::move(value));
    return it->second; // first result wins; duplicates are identical
}

bool VolumeTable::contains(ConfigKey key) const {
    std::shared_lock lock(mutex_);
    return entries_.count(key) > 0;
}

const VolumePolynomial& VolumeTable::volume(ConfigKey key) {
    if (!key.stable()) {
        std::ostringstream os;
        os << "unstable key (" << key.g << "," << key.n << ")";
        throw std::invalid_argument(os.str());
    }
    if (key.dimension() > max_dim_) {
        std::ostringstream os;
        os << "key (" << key.g << "," << key.n << ") exceeds the dimension cap " << max_dim_;
        throw std::invalid_argument(os.str());
    }
    {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
    }
    if (auto loaded = try_load(key)) return insert(key, std::move(*loaded));
    VolumePolynomial computed = compute_volume(key, *this);
    store_to_disk(key, computed);
    return insert(key, std::move(computed));
}

std::vector<ConfigKey> VolumeTable::all_keys() const {
    std::vector<ConfigKey> keys;
    for (int dim = 0; dim <= max_dim_; ++dim)
        for (int g = 0; 3 * g - 3 <= dim; ++g) {
            int n = dim - 3 * g + 3;
            ConfigKey key{g, n};
            if (key.stable() && key.dimension() == dim) keys.push_back(key);
        }
    return keys;
}

void VolumeTable::compute_all() {
    for (ConfigKey key : all_keys()) volume(key);
}

PiScalar VolumeTable::closed_surface_volume(int g) {
    if (g < 2) throw std::invalid_argument("closed surface volume needs genus >= 2");
    {
        std::shared_lock lock(mutex_);
        auto it = closed_.find(g);
        if (it != closed_.end()) return it->second;
    }
    const VolumePolynomial& v_g1 = volume({g, 1});
    VolumePolynomial q = odd_derivative_factor(v_g1, 1);
    PiScalar minus_four_pi_sq = PiScalar::pi_power(2, Rational(-4));
    PiScalar value = substitute_square(q, 1, minus_four_pi_sq).constant_term();
    value *= make_rational(1, 2L * g - 2);
    std::unique_lock lock(mutex_);
    return closed_.emplace(g, value).first->second;
}

VolumeTable volume_table_up_to(int max_dim, std::optional<std::filesystem::path> cache_dir) {
    VolumeTable table(max_dim, std::move(cache_dir));
    table.compute_all();
    return table;
}

} // namespace wpvol
