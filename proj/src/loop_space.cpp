#include "ghol/loop_space.hpp"

#include <algorithm>

namespace ghol {

namespace {

std::string phase_class_key(const Homotopy& h, const Phase& phase) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "|%.9f", phase.turns_value());
  return h.from().normal_form_key() + ">" + h.to().normal_form_key() + buf;
}

}  // namespace

LoopSpaceResult loop_space_groupoids(const GerbeData& gerbe,
                                     const std::vector<Homotopy>& generators,
                                     std::size_t budget) {
  std::vector<CylindricalArrow> cylinder_arrows;
  bool morphism_ok = true;
  long long pairs_checked = 0;
  std::string first_failure;

  struct Entry {
    Homotopy rep;
    Phase phase;
  };
  std::map<std::string, Entry> family;
  std::vector<std::string> worklist;

  auto add = [&](const Homotopy& h) {
    Phase phase = loop_transport_phase(gerbe, h);
    std::string key = phase_class_key(h, phase);
    if (family.count(key)) return;
    if (family.size() >= budget)
      throw BudgetExceeded("homotopy family closure exceeds budget");
    family.emplace(key, Entry{h, phase});
    worklist.push_back(key);
  };

  for (const Homotopy& h : generators) {
    add(h);
    add(reverse(h));
    add(Homotopy::identity(h.space, h.from()));
    add(Homotopy::identity(h.space, h.to()));
  }
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    Entry a = family.at(worklist[i]);
    std::vector<std::string> keys;
    for (const auto& [k, e] : family) {
      (void)e;
      keys.push_back(k);
    }
    for (const std::string& k : keys) {
      Entry b = family.at(k);
      if (thin_equal(a.rep.to(), b.rep.from())) add(stack(a.rep, b.rep));
      if (thin_equal(b.rep.to(), a.rep.from())) add(stack(b.rep, a.rep));
    }
  }

  // pre-quotient arrows: distinct reduced homotopy words in the family
  {
    std::map<std::string, char> seen;
    for (const auto& [key, e] : family) {
      (void)key;
      std::string w = e.rep.word_key();
      if (seen.count(w)) continue;
      seen[w] = 1;
      cylinder_arrows.push_back({w, e.rep.from().normal_form_key(),
                                 e.rep.to().normal_form_key(), e.phase});
    }
    std::sort(cylinder_arrows.begin(), cylinder_arrows.end(),
              [](const CylindricalArrow& a, const CylindricalArrow& b) {
                return a.word < b.word;
              });
  }

  // quotient morphism: evaluated phase of a stacked word equals the
  // composite phase in the thin quotient
  for (const auto& [ka, a] : family)
    for (const auto& [kb, b] : family) {
      (void)ka;
      (void)kb;
      if (!thin_equal(a.rep.to(), b.rep.from())) continue;
      ++pairs_checked;
      Phase direct = loop_transport_phase(gerbe, stack(a.rep, b.rep));
      Phase composed = a.phase + b.phase;
      if (!(direct == composed)) {
        morphism_ok = false;
        if (first_failure.empty())
          first_failure = "stacking " + a.rep.word_key() + " with " +
                          b.rep.word_key();
      }
    }

  std::vector<TransportClassEntry> entries;
  for (const auto& [key, e] : family)
    entries.push_back({key, e.rep.from().normal_form_key(),
                       e.rep.to().normal_form_key(), e.phase});
  auto compose_key = [&](const std::string& ka, const std::string& kb) {
    Homotopy ab = stack(family.at(ka).rep, family.at(kb).rep);
    return phase_class_key(ab, loop_transport_phase(gerbe, ab));
  };
  AssembledConnection assembled =
      assemble_connection_double(entries, compose_key, budget);
  return {std::move(cylinder_arrows), std::move(assembled), morphism_ok,
          pairs_checked, std::move(first_failure)};
}

}  // namespace ghol
