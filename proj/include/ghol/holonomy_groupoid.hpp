#pragma once

#include <memory>
#include <random>

#include "ghol/local_subgroupoid.hpp"
#include "ghol/rewrite.hpp"

namespace ghol {

// Presentation of a (possibly infinite) vertex group.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> relations;

  bool is_free() const { return relations.empty(); }
  int rank() const { return static_cast<int>(generators.size()); }
};

// The holonomy groupoid of an atlas of pieces: reduced words over the
// disjoint union of the pieces modulo identity deletion, in-piece
// composition and the overlap identifications, together with the covering
// morphism onto the globalised subgroupoid.
class HolonomyGroupoid {
 public:
  HolonomyGroupoid(std::shared_ptr<const FiniteGroupoid> g,
                   std::vector<Subgroupoid> pieces,
                   std::map<std::pair<int, int>, std::vector<std::vector<int>>>
                       overlap_opens);

  const WordSystem& words() const { return *words_; }
  const FiniteGroupoid& base() const { return words_->base(); }

  // arrows as (source object, normalized word); identity = empty word
  Word normalize(const Word& w) const { return words_->normalize(w); }
  int evaluate(int object, const Word& w) const {
    return words_->evaluate(object, w);
  }

  // distinct normalized words from `object`, breadth-first by length
  std::vector<std::pair<int, Word>> enumerate_words(int max_len,
                                                    std::size_t cap) const;

  // pi_1-style presentation of the vertex group at an object, computed
  // from a spanning tree of the letter graph with merge relations as
  // 2-cells, then Tietze-simplified
  Presentation vertex_presentation(int object) const;

  struct MorphismCheck {
    bool ok = true;
    long long pairs = 0;
    std::string first_failure;
  };
  // random composable normalized pairs: evaluate(w1 * w2) = ev(w1) ev(w2)
  MorphismCheck check_covering_morphism(int object_count_hint, int pairs,
                                        unsigned seed) const;

 private:
  std::shared_ptr<WordSystem> words_;
};

struct GlobaliseResult {
  Subgroupoid glob;
  std::shared_ptr<HolonomyGroupoid> hol;
};

// glob(S) = subgroupoid generated by the union of the atlas pieces; the
// holonomy groupoid resolves it at the word level. Overlap opens default
// to the connected components of pairwise chart overlaps.
GlobaliseResult globalise(
    std::shared_ptr<const FiniteGroupoid> g, std::vector<Subgroupoid> pieces,
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> overlap_opens);

GlobaliseResult globalise(const LocalSubgroupoid& s);

}  // namespace ghol
