#include "ghol/holonomy_groupoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace ghol {

HolonomyGroupoid::HolonomyGroupoid(
    std::shared_ptr<const FiniteGroupoid> g, std::vector<Subgroupoid> pieces,
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> overlap_opens)
    : words_(std::make_shared<WordSystem>(std::move(g), std::move(pieces),
                                          std::move(overlap_opens))) {}

std::vector<std::pair<int, Word>> HolonomyGroupoid::enumerate_words(
    int max_len, std::size_t cap) const {
  const WordSystem& ws = *words_;
  std::set<std::pair<int, Word>> seen;
  std::deque<std::pair<int, Word>> queue;
  for (int x = 0; x < base().num_objects(); ++x) {
    seen.insert({x, {}});
    queue.push_back({x, {}});
  }
  std::vector<std::pair<int, Word>> out(queue.begin(), queue.end());
  while (!queue.empty()) {
    auto [obj, w] = queue.front();
    queue.pop_front();
    if (static_cast<int>(w.size()) >= max_len) continue;
    int at = w.empty() ? obj : ws.letter_tgt(w.back());
    for (int l = 0; l < ws.num_letters(); ++l) {
      if (ws.letter_src(l) != at) continue;
      Word next = w;
      next.push_back(l);
      next = ws.normalize(next);
      auto key = std::make_pair(obj, next);
      if (seen.insert(key).second) {
        queue.push_back(key);
        out.push_back(key);
        if (out.size() > cap)
          throw BudgetExceeded("word enumeration exceeded its cap");
      }
    }
  }
  return out;
}

Presentation HolonomyGroupoid::vertex_presentation(int object) const {
  const WordSystem& ws = *words_;

  // letter graph restricted to the object's connected component
  std::vector<int> letters;
  for (int l = 0; l < ws.num_letters(); ++l)
    if (!ws.is_identity_letter(l)) letters.push_back(l);

  // spanning tree by BFS from `object`
  std::map<int, Word> tree_path;  // object -> word from root
  tree_path[object] = {};
  std::deque<int> queue = {object};
  std::set<int> tree_letters;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int l : letters) {
      if (ws.letter_src(l) != x) continue;
      int y = ws.letter_tgt(l);
      if (tree_path.count(y)) continue;
      Word w = tree_path[x];
      w.push_back(l);
      tree_path[y] = std::move(w);
      tree_letters.insert(l);
      tree_letters.insert(ws.inverse_letter(l));
      queue.push_back(y);
    }
  }

  // generators: non-tree letters (one per inverse pair) within the component
  std::map<int, int> gen_of_letter;  // letter -> signed generator id (1-based)
  std::vector<int> gen_rep;
  for (int l : letters) {
    if (!tree_path.count(ws.letter_src(l))) continue;
    if (tree_letters.count(l) || gen_of_letter.count(l)) continue;
    int inv = ws.inverse_letter(l);
    int id = static_cast<int>(gen_rep.size()) + 1;
    gen_rep.push_back(l);
    gen_of_letter[l] = id;
    if (inv != l) gen_of_letter[inv] = -id;
  }

  // rewrite a loop word at `object` into generator indices
  auto loop_to_gens = [&](const Word& w) {
    std::vector<int> out;
    for (int l : w) {
      if (tree_letters.count(l)) continue;  // tree letters die
      auto it = gen_of_letter.find(l);
      if (it == gen_of_letter.end()) continue;
      out.push_back(it->second);
    }
    // free reduction
    std::vector<int> red;
    for (int g : out) {
      if (!red.empty() && red.back() == -g)
        red.pop_back();
      else
        red.push_back(g);
    }
    return red;
  };

  // relations from merges: l1 l2 (l3)^-1 closed up through the tree
  std::vector<std::vector<int>> relations;
  for (int l1 : letters) {
    if (!tree_path.count(ws.letter_src(l1))) continue;
    for (int l2 : letters) {
      if (ws.letter_tgt(l1) != ws.letter_src(l2)) continue;
      auto m = ws.merge(l1, l2);
      if (!m || ws.is_identity_letter(*m)) {
        if (!m) continue;
        // l1 l2 = identity: close the loop through the tree
      }
      Word loop = tree_path[ws.letter_src(l1)];
      loop.push_back(l1);
      loop.push_back(l2);
      if (!ws.is_identity_letter(*m)) loop.push_back(ws.inverse_letter(*m));
      Word back = tree_path[ws.letter_src(l1)];
      for (auto it = back.rbegin(); it != back.rend(); ++it)
        loop.push_back(ws.inverse_letter(*it));
      std::vector<int> rel = loop_to_gens(loop);
      if (!rel.empty()) relations.push_back(std::move(rel));
    }
  }

  // Tietze simplification: drop duplicates, eliminate generators that
  // appear exactly once in some relation
  bool changed = true;
  std::set<int> dropped;
  while (changed) {
    changed = false;
    std::sort(relations.begin(), relations.end());
    relations.erase(std::unique(relations.begin(), relations.end()),
                    relations.end());
    for (std::size_t r = 0; r < relations.size() && !changed; ++r) {
      std::map<int, int> count;
      for (int g : relations[r]) ++count[std::abs(g)];
      for (auto [g, c] : count) {
        if (c != 1) continue;
        // solve relation for g and substitute everywhere
        std::vector<int> rel = relations[r];
        // rotate so the solitary generator is in front
        std::size_t pos = 0;
        while (std::abs(rel[pos]) != g) ++pos;
        std::rotate(rel.begin(), rel.begin() + pos, rel.end());
        bool negated = rel[0] < 0;
        std::vector<int> replacement;  // g = replacement (reversed inverses)
        for (std::size_t k = rel.size(); k-- > 1;)
          replacement.push_back(negated ? rel[k] : -rel[k]);
        if (negated) std::reverse(replacement.begin(), replacement.end());
        // substitute in every other relation
        std::vector<std::vector<int>> next;
        for (std::size_t s = 0; s < relations.size(); ++s) {
          if (s == r) continue;
          std::vector<int> out;
          for (int x : relations[s]) {
            if (std::abs(x) != g) {
              out.push_back(x);
            } else if (x > 0) {
              out.insert(out.end(), replacement.begin(), replacement.end());
            } else {
              for (auto it = replacement.rbegin(); it != replacement.rend();
                   ++it)
                out.push_back(-*it);
            }
          }
          std::vector<int> red;
          for (int gg : out) {
            if (!red.empty() && red.back() == -gg)
              red.pop_back();
            else
              red.push_back(gg);
          }
          if (!red.empty()) next.push_back(std::move(red));
        }
        relations = std::move(next);
        dropped.insert(g);
        changed = true;
        break;
      }
    }
  }

  Presentation pres;
  for (std::size_t i = 0; i < gen_rep.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (dropped.count(id)) continue;
    pres.generators.push_back("a" + std::to_string(id));
  }
  for (const auto& rel : relations) {
    std::string text;
    for (int g : rel) {
      text += (g > 0 ? "a" : "a") + std::to_string(std::abs(g));
      if (g < 0) text += "^-1";
      text += " ";
    }
    if (!text.empty()) text.pop_back();
    pres.relations.push_back(text);
  }
  return pres;
}

HolonomyGroupoid::MorphismCheck HolonomyGroupoid::check_covering_morphism(
    int, int pairs, unsigned seed) const {
  MorphismCheck check;
  const WordSystem& ws = *words_;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_letter(0, ws.num_letters() - 1);
  std::uniform_int_distribution<int> pick_len(0, 5);

  auto random_word_from = [&](int at, int len) {
    Word w;
    for (int k = 0; k < len; ++k) {
      std::vector<int> options;
      for (int l = 0; l < ws.num_letters(); ++l)
        if (ws.letter_src(l) == at) options.push_back(l);
      if (options.empty()) break;
      int l = options[pick_letter(rng) % options.size()];
      w.push_back(l);
      at = ws.letter_tgt(l);
    }
    return w;
  };

  const FiniteGroupoid& g = base();
  std::uniform_int_distribution<int> pick_obj(0, g.num_objects() - 1);
  for (int k = 0; k < pairs; ++k) {
    int x = pick_obj(rng);
    Word w1 = random_word_from(x, pick_len(rng));
    int mid = w1.empty() ? x : ws.letter_tgt(w1.back());
    Word w2 = random_word_from(mid, pick_len(rng));
    ++check.pairs;
    Word w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    int lhs = ws.evaluate(x, ws.normalize(w12));
    int rhs = g.compose(ws.evaluate(x, ws.normalize(w1)),
                        ws.evaluate(mid, ws.normalize(w2)));
    if (lhs != rhs) {
      check.ok = false;
      if (check.first_failure.empty())
        check.first_failure = "covering morphism fails on a word pair at " +
                              g.object(x);
      break;
    }
  }
  return check;
}

GlobaliseResult globalise(
    std::shared_ptr<const FiniteGroupoid> g, std::vector<Subgroupoid> pieces,
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> overlap_opens) {
  std::vector<int> generators;
  for (const Subgroupoid& p : pieces)
    generators.insert(generators.end(), p.arrows.begin(), p.arrows.end());
  Subgroupoid glob = generated_subgroupoid(g, generators);
  auto hol = std::make_shared<HolonomyGroupoid>(g, std::move(pieces),
                                                std::move(overlap_opens));
  return {std::move(glob), std::move(hol)};
}

GlobaliseResult globalise(const LocalSubgroupoid& s) {
  std::vector<Subgroupoid> pieces;
  for (const AtlasPiece& piece : s.atlas) pieces.push_back(piece.piece);
  return globalise(s.g, std::move(pieces), s.overlap_opens);
}

}  // namespace ghol
