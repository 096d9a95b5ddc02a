#include "ghol/rewrite.hpp"

#include <algorithm>
#include <set>

namespace ghol {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

WordSystem::WordSystem(
    std::shared_ptr<const FiniteGroupoid> g, std::vector<Subgroupoid> pieces,
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> overlap_opens,
    std::size_t budget)
    : g_(std::move(g)),
      pieces_(std::move(pieces)),
      overlap_opens_(std::move(overlap_opens)) {
  for (const Subgroupoid& p : pieces_) {
    if (p.parent.get() != g_.get() && !(*p.parent == *g_))
      throw Error("piece over a different parent groupoid");
    p.check_closed();
  }
  verify_overlap_agreement();
  build_letters();
  complete(budget);
}

void WordSystem::verify_overlap_agreement() const {
  for (const auto& [pair, opens] : overlap_opens_) {
    auto [i, j] = pair;
    for (const auto& w : opens) {
      Subgroupoid a = pieces_[i].restrict_to(w);
      Subgroupoid b = pieces_[j].restrict_to(w);
      if (!(a == b))
        throw OverlapIncoherence("pieces " + std::to_string(i) + " and " +
                                 std::to_string(j) +
                                 " disagree on a declared overlap open");
    }
  }
}

void WordSystem::build_letters() {
  const int n_pieces = static_cast<int>(pieces_.size());

  // per arrow: pieces containing it, glued along overlap opens
  std::map<int, std::vector<int>> piece_class;  // arrow -> per piece: class
  std::map<int, std::vector<int>> containing;
  for (int a = 0; a < g_->num_arrows(); ++a) {
    for (int p = 0; p < n_pieces; ++p)
      if (pieces_[p].contains_arrow(a)) containing[a].push_back(p);
  }
  auto glue_classes = [&](int arrow) {
    const auto& pcs = containing[arrow];
    UnionFind uf(n_pieces);
    for (const auto& [pair, opens] : overlap_opens_) {
      auto [i, j] = pair;
      if (!pieces_[i].contains_arrow(arrow) ||
          !pieces_[j].contains_arrow(arrow))
        continue;
      int src = g_->arrow(arrow).src, tgt = g_->arrow(arrow).tgt;
      for (const auto& w : opens) {
        bool src_in = std::find(w.begin(), w.end(), src) != w.end();
        bool tgt_in = std::find(w.begin(), w.end(), tgt) != w.end();
        if (src_in && tgt_in) uf.unite(i, j);
      }
    }
    std::vector<int> cls(n_pieces, -1);
    for (int p : pcs) cls[p] = uf.find(p);
    return cls;
  };
  for (const auto& [arrow, pcs] : containing) {
    (void)pcs;
    piece_class[arrow] = glue_classes(arrow);
  }

  // letters: one per (class representative, arrow)
  for (const auto& [arrow, cls] : piece_class) {
    std::set<int> reps;
    for (int p = 0; p < n_pieces; ++p)
      if (cls[p] >= 0) reps.insert(cls[p]);
    for (int rep : reps) {
      int idx = static_cast<int>(letters_.size());
      letters_.push_back({rep, arrow});
      letter_index_[{rep, arrow}] = idx;
      std::vector<int> members;
      for (int p = 0; p < n_pieces; ++p)
        if (cls[p] == rep) members.push_back(p);
      pieces_of_letter_.push_back(std::move(members));
    }
  }

  // merge table, coarsening classes when a pair merges ambiguously
  bool stable = false;
  while (!stable) {
    stable = true;
    merge_.clear();
    for (int l1 = 0; l1 < num_letters(); ++l1)
      for (int l2 = 0; l2 < num_letters(); ++l2) {
        int a = letters_[l1].arrow, b = letters_[l2].arrow;
        if (!g_->composable(a, b)) continue;
        std::set<int> results;
        for (int p : pieces_of_letter_[l1])
          if (std::find(pieces_of_letter_[l2].begin(),
                        pieces_of_letter_[l2].end(),
                        p) != pieces_of_letter_[l2].end()) {
            int ab = g_->compose(a, b);
            // class of ab containing p
            for (int l3 = 0; l3 < num_letters(); ++l3)
              if (letters_[l3].arrow == ab &&
                  std::find(pieces_of_letter_[l3].begin(),
                            pieces_of_letter_[l3].end(),
                            p) != pieces_of_letter_[l3].end())
                results.insert(l3);
          }
        if (results.empty()) continue;
        if (results.size() > 1) {
          // provably equal letters: fuse their classes and restart
          int ab = g_->compose(a, b);
          std::vector<int> fused;
          for (int l : results)
            fused.insert(fused.end(), pieces_of_letter_[l].begin(),
                         pieces_of_letter_[l].end());
          std::sort(fused.begin(), fused.end());
          int keep = *results.begin();
          for (int l : results) {
            if (l == keep) continue;
            letter_index_.erase({letters_[l].cls, ab});
          }
          // rebuild letter list without the dropped letters
          std::vector<Letter> new_letters;
          std::vector<std::vector<int>> new_pieces;
          std::map<std::pair<int, int>, int> new_index;
          for (int l = 0; l < num_letters(); ++l) {
            if (results.count(l) && l != keep) continue;
            Letter lt = letters_[l];
            std::vector<int> mem =
                (l == keep) ? fused : pieces_of_letter_[l];
            if (l == keep) lt.cls = fused.front();
            new_index[{lt.cls, lt.arrow}] = static_cast<int>(new_letters.size());
            new_letters.push_back(lt);
            new_pieces.push_back(std::move(mem));
          }
          letters_ = std::move(new_letters);
          pieces_of_letter_ = std::move(new_pieces);
          letter_index_ = std::move(new_index);
          stable = false;
          break;
        }
        merge_[{l1, l2}] = *results.begin();
      }
  }
}

int WordSystem::letter_src(int i) const { return g_->arrow(letters_[i].arrow).src; }
int WordSystem::letter_tgt(int i) const { return g_->arrow(letters_[i].arrow).tgt; }

int WordSystem::inverse_letter(int i) const {
  int inv = g_->inverse(letters_[i].arrow);
  // the inverse arrow carries the same glued piece set
  for (int l = 0; l < num_letters(); ++l)
    if (letters_[l].arrow == inv &&
        pieces_of_letter_[l] == pieces_of_letter_[i])
      return l;
  throw Error("letter has no inverse letter");
}

bool WordSystem::is_identity_letter(int i) const {
  const Arrow& a = g_->arrow(letters_[i].arrow);
  return a.src == a.tgt && letters_[i].arrow == g_->identity(a.src);
}

std::string WordSystem::letter_name(int i) const {
  return "[" + std::to_string(letters_[i].cls) + ":" +
         g_->arrow(letters_[i].arrow).id + "]";
}

int WordSystem::letter_of(int piece, int arrow) const {
  for (int l = 0; l < num_letters(); ++l)
    if (letters_[l].arrow == arrow &&
        std::find(pieces_of_letter_[l].begin(), pieces_of_letter_[l].end(),
                  piece) != pieces_of_letter_[l].end())
      return l;
  throw Error("arrow is not in the given piece");
}

std::optional<int> WordSystem::merge(int l1, int l2) const {
  auto it = merge_.find({l1, l2});
  if (it == merge_.end()) return std::nullopt;
  return it->second;
}

bool WordSystem::composable(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (letter_tgt(w[i]) != letter_src(w[i + 1])) return false;
  return true;
}

bool WordSystem::apply_extra(Word& w, std::size_t i) const {
  if (i + 1 >= w.size()) return false;
  auto it = extra_rules_.find({w[i], w[i + 1]});
  if (it == extra_rules_.end()) return false;
  w[i] = it->second.first;
  w[i + 1] = it->second.second;
  return true;
}

Word WordSystem::normalize(Word w) const {
  if (!composable(w)) throw NonComposable("word letters do not chain");
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (is_identity_letter(w[i])) {
        w.erase(w.begin() + i);
        changed = true;
        break;
      }
      if (i + 1 < w.size()) {
        auto m = merge(w[i], w[i + 1]);
        if (m) {
          w[i] = *m;
          w.erase(w.begin() + i + 1);
          changed = true;
          break;
        }
        Word trial = w;
        if (apply_extra(trial, i) && trial < w) {
          w = std::move(trial);
          changed = true;
          break;
        }
      }
    }
  }
  return w;
}

int WordSystem::word_src(const Word& w) const {
  return w.empty() ? -1 : letter_src(w.front());
}

int WordSystem::word_tgt(const Word& w) const {
  return w.empty() ? -1 : letter_tgt(w.back());
}

int WordSystem::evaluate(int object, const Word& w) const {
  int arrow = g_->identity(object);
  for (int l : w) arrow = g_->compose(arrow, letters_[l].arrow);
  return arrow;
}

void WordSystem::complete(std::size_t budget) {
  // critical pairs from overlapping applications on 3-letter windows and
  // from pairs of rules on the same 2-letter window
  bool stable = false;
  std::size_t rounds = 0;
  while (!stable) {
    stable = true;
    if (++rounds > 64)
      throw NonConfluentRules("completion did not stabilize");
    // (a b c) with (ab) and (bc) both reducible
    for (int a = 0; a < num_letters(); ++a)
      for (int b = 0; b < num_letters(); ++b) {
        if (letter_tgt(a) != letter_src(b)) continue;
        bool ab_red = merge_.count({a, b}) || extra_rules_.count({a, b});
        for (int c = 0; c < num_letters(); ++c) {
          if (letter_tgt(b) != letter_src(c)) continue;
          if (critical_pairs_ > static_cast<long long>(budget))
            throw NonConfluentRules("confluence budget exceeded");
          bool bc_red = merge_.count({b, c}) || extra_rules_.count({b, c});
          if (!ab_red || !bc_red) continue;
          ++critical_pairs_;
          Word left = normalize({a, b, c});
          Word w1 = {a, b, c};
          // force the right-hand reduction first
          Word right;
          {
            Word t = {b, c};
            auto m = merge(b, c);
            if (m)
              t = {*m};
            else {
              auto it = extra_rules_.find({b, c});
              t = {it->second.first, it->second.second};
            }
            right = {a};
            right.insert(right.end(), t.begin(), t.end());
            right = normalize(right);
          }
          if (left == right) continue;
          // orient: larger word rewrites to smaller
          Word big = std::max(left, right);
          Word small = std::min(left, right);
          if (big.size() == 2 && small.size() == 2) {
            extra_rules_[{big[0], big[1]}] = {small[0], small[1]};
            stable = false;
          } else if (big.size() == small.size() + 1 && small.size() == 1) {
            // a derived merge
            merge_[{big[0], big[1]}] = small[0];
            stable = false;
          } else {
            throw NonConfluentRules(
                "critical pair resolves to incompatible shapes");
          }
        }
      }
  }
}

}  // namespace ghol
