#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "nskein/cyclotomic.hpp"

namespace nsk {

/// A loop-free planar (m,m')-diagram: a non-crossing perfect matching on the
/// m bottom + m' top boundary points. Points are numbered 0..m-1 along the
/// bottom (left to right) and m..m+m'-1 along the top (left to right).
/// Diagrams are interned; DiagId is the handle.
using DiagId = uint32_t;

struct DiagData {
  int src = 0;   // m
  int dst = 0;   // m'
  std::vector<int> pair;  // pair[i] = partner of point i
};

/// Process-wide intern table. Concurrent reads, synchronized inserts.
class DiagTable {
public:
  static DiagTable& instance();
  DiagId intern(const DiagData& d);
  const DiagData& get(DiagId id) const;

private:
  DiagTable() = default;
  struct Impl;
  Impl* impl_;
};

DiagId intern_diagram(int src, int dst, std::vector<int> pairing);
const DiagData& diagram(DiagId id);

/// True if the matching is planar in the rectangle (no two chords cross).
bool is_planar_pairing(int src, int dst, const std::vector<int>& pair);

/// Number of planar pairings between m bottom and m' top points.
long planar_pairing_count(int m, int mp);

/// A morphism of the Temperley-Lieb category over the field F: a finite
/// linear combination of planar (src,dst)-diagrams with Cyc coefficients.
/// Zero coefficients are never stored.
class TLMorphism {
public:
  TLMorphism() : field_(nullptr), src_(0), dst_(0) {}
  TLMorphism(const Field* f, int src, int dst) : field_(f), src_(src), dst_(dst) {}

  const Field* field() const { return field_; }
  int src() const { return src_; }
  int dst() const { return dst_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::unordered_map<DiagId, Cyc>& terms() const { return terms_; }

  void add_term(DiagId d, const Cyc& c);
  Cyc coeff(DiagId d) const;

  bool operator==(const TLMorphism& o) const;
  bool operator!=(const TLMorphism& o) const { return !(*this == o); }

  TLMorphism operator+(const TLMorphism& o) const;
  TLMorphism operator-(const TLMorphism& o) const;
  TLMorphism operator*(const Cyc& s) const;
  TLMorphism operator-() const;

  /// Stable order for printing and golden tests: terms sorted by the chord
  /// encoding of their diagram.
  std::vector<std::pair<DiagId, Cyc>> sorted_terms() const;
  /// Chord-list format "[(b1,b3),(t1,t2)]"; bottom points b1.., top t1..
  static std::string diagram_string(DiagId d);
  std::string to_string() const;

private:
  const Field* field_;
  int src_, dst_;
  std::unordered_map<DiagId, Cyc> terms_;
};

/// Identity on m strands.
TLMorphism tl_id(const Field* f, int m);
/// Morphism m -> m+2 inserting a cup at position i (1-based, 1 <= i <= m+1).
TLMorphism tl_cup(const Field* f, int m, int i);
/// Morphism m+2 -> m capping positions i, i+1 (1-based).
TLMorphism tl_cap(const Field* f, int m, int i);
/// The turn-back generator e_i in TL(m): cap at (i,i+1) followed by cup.
TLMorphism tl_e(const Field* f, int m, int i);
/// Kauffman resolution of a crossing in TL(2):
/// +1 -> A id + A^{-1} E, -1 -> A^{-1} id + A E, with A = q^{(r+1)/2}.
TLMorphism tl_crossing(const Field* f, int sign);

/// f after g (stack g below f). Loops contribute factors of delta.
TLMorphism compose(const TLMorphism& f, const TLMorphism& g);
/// Horizontal juxtaposition.
TLMorphism tensor(const TLMorphism& f, const TLMorphism& g);
/// Dual by pi-rotation; involutive anti-functor.
TLMorphism rotate_dual(const TLMorphism& u);
/// Close off the rightmost k strands of an endomorphism.
TLMorphism partial_trace(const TLMorphism& u, int k);

/// Nested cup rainbow 0 -> 2k: arcs (i, 2k+1-i) in 1-based positions.
TLMorphism nested_cups(const Field* f, int k);
/// Nested cap rainbow 2k -> 0.
TLMorphism nested_caps(const Field* f, int k);

}  // namespace nsk
