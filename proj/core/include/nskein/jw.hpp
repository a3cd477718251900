#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "nskein/tl.hpp"

namespace nsk {

/// Symbolic label for an idempotent object of the completed category:
/// F(m) = f_m for 0 <= m <= r-1, G(m) = g_m for r <= m <= 2r-2.
struct JWLabel {
  enum Kind { F, G } kind;
  int m;

  int width() const { return m; }
  bool operator==(const JWLabel& o) const { return kind == o.kind && m == o.m; }
  bool operator<(const JWLabel& o) const {
    return kind != o.kind ? kind < o.kind : m < o.m;
  }
  std::string name() const;
  /// Projective labels generate the ideal of f_{r-1}.
  bool projective(int r) const { return kind == G || m == r - 1; }
};

/// Memoized idempotents for one field. Values are verified on insert
/// (f^2 = f, g^2 = g, h^2 = 0) and immutable afterwards. Concurrent reads;
/// construction of a missing entry is serialized.
class JWCache {
public:
  explicit JWCache(FieldPtr field) : field_(std::move(field)) {}

  const Field* field() const { return field_.get(); }
  int level() const { return field_->level(); }

  /// Simple Jones-Wenzl idempotent f_m, 0 <= m <= r-1.
  const TLMorphism& simple_jw(int m);
  /// Non-semisimple Jones-Wenzl idempotent g_m, r <= m <= 2r-2.
  const TLMorphism& nonss_jw(int m);
  /// Nilpotent endomorphism h_m, r <= m <= 2r-2.
  const TLMorphism& nilpotent_h(int m);
  /// Idempotent for a label (f_m or g_m).
  const TLMorphism& idempotent(const JWLabel& l);

  /// (term count, multiset of coefficients) of a cached expansion.
  /// Key of the multiset is the exact coefficient, value its multiplicity.
  std::pair<size_t, std::map<std::string, int>> expansion_stats(
      const std::string& which, int m);

private:
  const TLMorphism& get_or_build(const std::string& key,
                                 TLMorphism (*build)(JWCache&, int), int m);

  FieldPtr field_;
  std::mutex mu_;
  std::map<std::string, TLMorphism> cache_;
};

/// Process-wide shared cache per level. Idempotents are expensive at the
/// top widths; every consumer should go through here.
JWCache& shared_jw(int r);
/// The field backing the shared cache for this level.
FieldPtr shared_field(int r);

}  // namespace nsk
