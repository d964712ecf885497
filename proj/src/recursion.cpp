#include "onepi/recursion.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

#include "onepi/tensor_ops.hpp"

namespace onepi {
namespace {

void require(bool ok, const std::string &what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string params(int l, int v) {
  return "(l=" + std::to_string(l) + ", v=" + std::to_string(v) + ")";
}

}  // namespace

Recursion::Recursion(std::optional<std::filesystem::path> cache_dir)
    : cache_(std::move(cache_dir)) {}

std::optional<std::filesystem::path> Recursion::cache_dir_from_environment() {
  if (const char *dir = std::getenv("ONEPI_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
  return std::nullopt;
}

template <class Compute>
GraphSum Recursion::memo(const SumKey &key, Compute compute) {
  try {
    if (auto hit = cache_.lookup(key)) return *hit;
  } catch (const CacheCorruption &e) {
    // recompute and overwrite the damaged entry
    std::cerr << "onepi: discarding cache entry: " << e.what() << '\n';
  }
  GraphSum value = compute();
  cache_.store(key, value);
  return value;
}

GraphSum Recursion::onevi(int l, int v) {
  require(l >= 0 && v >= 2, "onevi_sum: need l >= 0 and v >= 2 " + params(l, v));
  return memo(SumKey{.kind = SumKind::OneVI, .l = l, .v = v}, [&] {
    GraphSum out(v);
    if (v == 2) {
      Graph banana(2);
      banana.add_edge(1, 2, l + 1);
      out.add(banana, make_rational(1, 2 * factorial(l + 1)));
      return out;
    }
    if (l == 0) return out;

    for (int rho = 1; rho <= l; ++rho) {
      const GraphSum smaller = onevi(l + 1 - rho, v - 1);
      for (int i = 1; i <= v - 1; ++i) out += q_map(smaller, i, rho);
    }
    // absent for v < 4 or l < 2 (empty ranges)
    for (int k = 2; k <= v - 2; ++k)
      for (int rho = 1; rho <= l - k + 1; ++rho)
        out += qhat_map(bouquet_or_zero(l + 1 - rho, v - 1, k), v - 1, rho);

    out *= make_rational(1, l + v - 1);
    return out;
  });
}

GraphSum Recursion::bouquet(int l, int v, int k) {
  require(k >= 2 && v >= k + 1 && l >= 0,
          "bouquet_sum: need k >= 2, v >= k + 1, l >= 0 " + params(l, v) +
              " k=" + std::to_string(k));
  return bouquet_or_zero(l, v, k);
}

GraphSum Recursion::bouquet_or_zero(int l, int v, int k) {
  if (k < 2 || v < k + 1 || l < k) return GraphSum(v);
  return memo(SumKey{.kind = SumKind::Bouquet, .l = l, .v = v, .k = k}, [&] {
    GraphSum out(v);
    for (int lp = 1; lp <= l - 1; ++lp)
      for (int vp = 2; vp <= v - 1; ++vp) {
        const GraphSum core = onevi(lp, vp);
        if (core.empty()) continue;
        const Rational weight = lp + vp - 1;
        const int rest_v = v - vp + 1;
        if (k == 2) {
          const GraphSum rest = onevi(l - lp, rest_v);
          for (int i = 1; i <= vp; ++i)
            for (int j = 1; j <= rest_v; ++j) out += weight * glue(core, i, rest, j);
        } else {
          const GraphSum rest = bouquet_or_zero(l - lp, rest_v, k - 1);
          if (rest.empty()) continue;
          for (int i = 1; i <= vp; ++i) out += weight * glue(core, i, rest, rest_v);
        }
      }
    out *= make_rational(1, l + v - 1);
    return out;
  });
}

GraphSum Recursion::onepi(int l, int v) {
  require(l >= 1 && v >= 2, "onepi_sum: need l >= 1 and v >= 2 " + params(l, v));
  return memo(SumKey{.kind = SumKind::OnePI, .l = l, .v = v}, [&] {
    GraphSum out = onevi(l, v);
    if (v == 2) return out;
    GraphSum correction(v);
    for (int lp = 1; lp <= l - 1; ++lp)
      for (int vp = 2; vp <= v - 1; ++vp) {
        const GraphSum core = onevi(lp, vp);
        if (core.empty()) continue;
        const int rest_v = v - vp + 1;
        const GraphSum rest = onepi(l - lp, rest_v);
        const Rational weight = lp + vp - 1;
        for (int i = 1; i <= rest_v; ++i) correction += weight * merge_map(core, rest, i);
      }
    correction *= make_rational(1, l + v - 1);
    out += correction;
    return out;
  });
}

GraphSum Recursion::dressed(int l, int lprime, int v, const Monomial &legs) {
  require((v == 1 && l == 0) || (v >= 2 && l >= 1),
          "dressed_sum: need (v = 1, l = 0) or (v >= 2, l >= 1) " + params(l, v));
  require(lprime >= 0, "dressed_sum: self-loop count must be >= 0");
  require(legs.has_distinct_labels(), "dressed_sum: leg labels must be distinct");
  return memo(SumKey{SumKind::Gamma, l, v, 0, lprime, legs.labels()}, [&] {
    const Rational pre = make_rational(1, factorial(lprime));
    GraphSum base = v == 1 ? selfloop_coproduct(lprime, 1)
                           : onepi(l, v) * selfloop_coproduct(lprime, v);
    base *= pre;
    return distribute_legs(legs, base);
  });
}

Recursion &default_recursion() {
  static Recursion engine(Recursion::cache_dir_from_environment());
  return engine;
}

GraphSum onevi_sum(int l, int v) { return default_recursion().onevi(l, v); }
GraphSum bouquet_sum(int l, int v, int k) { return default_recursion().bouquet(l, v, k); }
GraphSum onepi_sum(int l, int v) { return default_recursion().onepi(l, v); }
GraphSum dressed_sum(int l, int lprime, int v, const Monomial &legs) {
  return default_recursion().dressed(l, lprime, v, legs);
}

}  // namespace onepi
