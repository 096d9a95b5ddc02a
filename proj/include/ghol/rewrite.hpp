#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ghol/groupoid.hpp"

namespace ghol {

// Letters of the amalgamation words: a parent arrow together with the
// class of atlas pieces it is read in (pieces glued along the declared
// overlap identification opens).
struct Letter {
  int cls = -1;    // canonical piece index of the glued class
  int arrow = -1;  // parent arrow
};

using Word = std::vector<int>;  // letter indices

// Rewriting system over amalgamation letters: identity deletion, in-piece
// merging, and length-preserving rules added by completion. Termination
// comes from the (length, lexicographic) order; local confluence is
// verified on all overlapping applications, with failed critical pairs
// resolved by adding oriented rules until stable (or NonConfluentRules).
class WordSystem {
 public:
  WordSystem(std::shared_ptr<const FiniteGroupoid> g,
             std::vector<Subgroupoid> pieces,
             std::map<std::pair<int, int>, std::vector<std::vector<int>>>
                 overlap_opens,
             std::size_t budget = 100000);

  const FiniteGroupoid& base() const { return *g_; }
  const std::vector<Subgroupoid>& pieces() const { return pieces_; }

  int num_letters() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(int i) const { return letters_[i]; }
  int letter_src(int i) const;  // parent object
  int letter_tgt(int i) const;
  int inverse_letter(int i) const;
  bool is_identity_letter(int i) const;
  std::string letter_name(int i) const;

  // letter for an arrow read in a piece (class resolved)
  int letter_of(int piece, int arrow) const;

  std::optional<int> merge(int l1, int l2) const;

  bool composable(const Word& w) const;
  Word normalize(Word w) const;
  int word_src(const Word& w) const;  // for empty words: -1
  int word_tgt(const Word& w) const;

  // evaluation in the parent groupoid (the covering morphism on arrows)
  int evaluate(int object, const Word& w) const;

  long long critical_pairs_checked() const { return critical_pairs_; }
  int completion_rules_added() const { return static_cast<int>(extra_rules_.size()); }

 private:
  void build_letters();
  void verify_overlap_agreement() const;
  void complete(std::size_t budget);
  bool apply_extra(Word& w, std::size_t i) const;

  std::shared_ptr<const FiniteGroupoid> g_;
  std::vector<Subgroupoid> pieces_;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> overlap_opens_;

  std::vector<Letter> letters_;
  std::map<std::pair<int, int>, int> letter_index_;     // (cls, arrow) -> letter
  std::vector<std::vector<int>> pieces_of_letter_;      // pieces in the class
  std::map<std::pair<int, int>, int> merge_;            // (l1, l2) -> letter
  std::map<std::pair<int, int>, std::pair<int, int>> extra_rules_;
  long long critical_pairs_ = 0;
};

}  // namespace ghol
