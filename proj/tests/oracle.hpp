#pragma once

// Naive name-based re-implementations of the derivation operators, used as
// independent oracles against the bitset implementation. Kept deliberately
// dumb: string sets, quadratic loops, no shared code with the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "core/context.hpp"

namespace oracle {

using StrSet = std::set<std::string>;

struct NaiveContext {
  std::vector<std::string> objects, attributes;
  std::set<std::pair<std::string, std::string>> incidence;

  static NaiveContext of(const kcw::Context& ctx) {
    NaiveContext out;
    out.objects = ctx.objects();
    out.attributes = ctx.attributes();
    for (int g = 0; g < ctx.size_g(); ++g)
      for (int m = 0; m < ctx.size_m(); ++m)
        if (ctx.incidence(g, m)) out.incidence.insert({out.objects[g], out.attributes[m]});
    return out;
  }

  StrSet derive_objects(const StrSet& a) const {
    StrSet out;
    for (const auto& m : attributes) {
      bool shared = true;
      for (const auto& g : a)
        if (!incidence.count({g, m})) shared = false;
      if (shared) out.insert(m);
    }
    return out;
  }

  StrSet derive_attributes(const StrSet& b) const {
    StrSet out;
    for (const auto& g : objects) {
      bool has_all = true;
      for (const auto& m : b)
        if (!incidence.count({g, m})) has_all = false;
      if (has_all) out.insert(g);
    }
    return out;
  }
};

inline StrSet names(const std::vector<std::string>& v) { return StrSet(v.begin(), v.end()); }

inline StrSet object_set(const kcw::Context& ctx, kcw::Mask mask) {
  return names(ctx.object_names(mask));
}

inline StrSet attribute_set(const kcw::Context& ctx, kcw::Mask mask) {
  return names(ctx.attribute_names(mask));
}

inline kcw::Mask object_mask(const kcw::Context& ctx, const StrSet& s) {
  kcw::Mask out = 0;
  for (const auto& name : s) out = kcw::with_bit(out, *ctx.object_index(name));
  return out;
}

inline kcw::Mask attribute_mask(const kcw::Context& ctx, const StrSet& s) {
  kcw::Mask out = 0;
  for (const auto& name : s) out = kcw::with_bit(out, *ctx.attribute_index(name));
  return out;
}

// Deterministic PRNG for property tests (splitmix64).
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline kcw::Context random_context(Rng& rng, int max_g, int max_m) {
  int g = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_g))) + 1;
  int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m))) + 1;
  std::vector<std::string> objects, attributes;
  for (int i = 0; i < g; ++i) objects.push_back("g" + std::to_string(i));
  for (int i = 0; i < m; ++i) attributes.push_back("m" + std::to_string(i));
  std::vector<kcw::Mask> rows;
  for (int i = 0; i < g; ++i) rows.push_back(rng.next() & kcw::full_mask(m));
  return kcw::Context(objects, attributes, rows);
}

inline std::vector<kcw::Mask> random_relation(Rng& rng, int n) {
  std::vector<kcw::Mask> rows;
  for (int i = 0; i < n; ++i) rows.push_back(rng.next() & kcw::full_mask(n));
  return rows;
}

inline std::vector<kcw::Mask> reflexive_transitive_closure(std::vector<kcw::Mask> rows) {
  int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) rows[i] = kcw::with_bit(rows[i], i);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j : kcw::mask_indices(rows[i]))
        if (!kcw::subset(rows[j], rows[i])) {
          rows[i] |= rows[j];
          changed = true;
        }
  }
  return rows;
}

}  // namespace oracle
