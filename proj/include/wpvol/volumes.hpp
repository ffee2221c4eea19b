#pragma once

#include "wpvol/polynomial.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>

namespace wpvol {

struct ConfigKey {
    int g = 0;
    int n = 0;
    bool stable() const { return n >= 1 && 2 * g - 2 + n > 0; }
    int dimension() const { return 3 * g - 3 + n; }
    auto operator<=>(const ConfigKey&) const = default;
};

/// V_{0,3} = 1 and V_{1,1} = L^2/48 + pi^2/12; throws for any other key.
VolumePolynomial base_case(ConfigKey key);

// Memoized store of volume polynomials, optionally persisted as one JSON
// file per key (vol_g{g}_n{n}.json, canonical serialization).  Entries are
// immutable once computed; readers share, a writer fills missing keys.
class VolumeTable {
  public:
    explicit VolumeTable(int max_dim = 6,
                         std::optional<std::filesystem::path> cache_dir = std::nullopt);

    int max_dim() const { return max_dim_; }
    const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }

    /// The polynomial for a stable key with dimension within the bound;
    /// computed (recursively) on first use.
    const VolumePolynomial& volume(ConfigKey key);

    /// Every stable (g, n) with 3g-3+n <= max_dim, computed and cached.
    std::vector<ConfigKey> all_keys() const;
    void compute_all();

    bool contains(ConfigKey key) const;

    /// Constant volume of the closed surface of genus g >= 2, obtained from
    /// V_{g,1} through the derivative relation at the 2*pi substitution
    /// (the common factor 2*pi*i removed): Q(-4pi^2) = (2g-2) V_{g,0}.
    PiScalar closed_surface_volume(int g);

    static std::filesystem::path cache_file(const std::filesystem::path& dir, ConfigKey key);

  private:
    const VolumePolynomial& insert(ConfigKey key, VolumePolynomial value);
    std::optional<VolumePolynomial> try_load(ConfigKey key) const;
    void store_to_disk(ConfigKey key, const VolumePolynomial& value) const;

    int max_dim_;
    std::optional<std::filesystem::path> cache_dir_;
    mutable std::shared_mutex mutex_;
    std::map<ConfigKey, VolumePolynomial> entries_;
    std::map<int, PiScalar> closed_;
};

/// One step of the recursion: assemble d/dL1 (L1 V_{g,n}) from lower entries,
/// antidifferentiate, and validate (symmetry, degree bound, sign).
VolumePolynomial compute_volume(ConfigKey key, VolumeTable& table);

/// Convenience: a fully computed table (all keys of dimension <= max_dim).
VolumeTable volume_table_up_to(int max_dim,
                               std::optional<std::filesystem::path> cache_dir = std::nullopt);

} // namespace wpvol
