#ifndef ONEPI_RECURSION_HPP
#define ONEPI_RECURSION_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "onepi/field_hopf.hpp"
#include "onepi/graph.hpp"

namespace onepi {

enum class SumKind { OneVI, Bouquet, OnePI, Gamma };

std::string to_string(SumKind kind);

/// Identifies one memoised sum: V^{l,v}, B^{l,v,k}, I^{l,v} or Gamma^{l+l',v}
/// applied to a fixed leg monomial.
struct SumKey {
  SumKind kind;
  int l = 0;
  int v = 0;
  int k = 0;       // Bouquet only
  int lprime = 0;  // Gamma only
  std::vector<std::string> legs = {};  // Gamma only, sorted

  auto operator<=>(const SumKey &) const = default;
};

struct CacheCorruption : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bumped whenever the cached sums could change.
inline constexpr int kCacheVersion = 1;

/// Memo table SumKey -> GraphSum with an optional on-disk mirror (one JSON
/// file per key, guarded by an FNV-1a checksum of the serialized sum).
class SumCache {
 public:
  explicit SumCache(std::optional<std::filesystem::path> dir = std::nullopt);
  SumCache(const SumCache &) = delete;
  SumCache &operator=(const SumCache &) = delete;

  /// Memory first, then disk. Throws CacheCorruption when a file on disk
  /// fails its checksum or does not match the key.
  std::optional<GraphSum> lookup(const SumKey &key);
  void store(const SumKey &key, const GraphSum &sum);

  void evict(const SumKey &key);
  void clear_memory();
  std::size_t memory_size() const;

  const std::optional<std::filesystem::path> &directory() const { return dir_; }

  static std::string file_name(const SumKey &key);

  struct Entry {
    std::filesystem::path file;
    std::string header;  // human readable key
    bool checksum_ok = false;
    std::optional<GraphSum> sum;
  };
  /// Reads every cache file in `dir` in file-name order.
  static std::vector<Entry> scan(const std::filesystem::path &dir);

 private:
  std::optional<GraphSum> read_file(const SumKey &key) const;
  void write_file(const SumKey &key, const GraphSum &sum) const;

  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mutex_;
  std::map<SumKey, GraphSum> memory_;
};

/// FNV-1a 64-bit hash, hex encoded.
std::string checksum(const std::string &data);

/// Memoised recursions generating 1VI, bouquet, 1PI and dressed 1PI sums.
/// All prefactors are exact.
class Recursion {
 public:
  explicit Recursion(std::optional<std::filesystem::path> cache_dir = std::nullopt);
  /// Uses $ONEPI_CACHE_DIR when set.
  static std::optional<std::filesystem::path> cache_dir_from_environment();

  /// V^{l,v}: weighted sum of all 1VI graphs with l loops on v vertices.
  GraphSum onevi(int l, int v);
  /// B^{l,v,k}: connected graphs with k blocks sharing vertex v.
  GraphSum bouquet(int l, int v, int k);
  /// I^{l,v}: weighted sum of all 1PI graphs with l loops on v vertices.
  GraphSum onepi(int l, int v);
  /// Gamma^{l+l',v}(phi(x_1)...phi(x_n)): 1PI graphs with l loops, l' self
  /// loops and the given legs.
  GraphSum dressed(int l, int lprime, int v, const Monomial &legs);

  SumCache &cache() { return cache_; }

 private:
  GraphSum bouquet_or_zero(int l, int v, int k);
  template <class Compute>
  GraphSum memo(const SumKey &key, Compute compute);

  SumCache cache_;
};

/// Convenience wrappers over a process-wide engine configured from the
/// environment.
Recursion &default_recursion();
GraphSum onevi_sum(int l, int v);
GraphSum bouquet_sum(int l, int v, int k);
GraphSum onepi_sum(int l, int v);
GraphSum dressed_sum(int l, int lprime, int v, const Monomial &legs);

}  // namespace onepi

#endif  // ONEPI_RECURSION_HPP
