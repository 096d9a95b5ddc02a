#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ghol/groupoid.hpp"

namespace ghol {

class CrossedModule;

// Payload of a square: an abelian phase, or an element of a crossed
// module's totally disconnected groupoid M (object index + element index).
struct SquarePayload {
  bool is_phase = true;
  Phase phase;
  int obj = -1;
  int elt = 0;

  static SquarePayload from_phase(Phase p) { return {true, p, -1, 0}; }
  static SquarePayload from_element(int obj, int elt) {
    return {false, Phase(), obj, elt};
  }
  bool equals(const SquarePayload& o) const;
  std::string str() const;
};

struct Square {
  int up = -1;     // H arrow
  int down = -1;   // H arrow
  int left = -1;   // V arrow
  int right = -1;  // V arrow
  SquarePayload payload;

  std::string key() const;  // canonical identity (boundary + payload)
  bool same_as(const Square& o) const {
    return up == o.up && down == o.down && left == o.left && right == o.right &&
           payload.equals(o.payload);
  }
};

// Double groupoid on a common object set: squares with horizontal edge
// groupoid H (up/down) and vertical edge groupoid V (left/right).
// compose1 glues along a shared H edge (down of s = up of t); compose2
// along a shared V edge (right of s = left of t).
class DoubleGroupoid {
 public:
  DoubleGroupoid(std::shared_ptr<const FiniteGroupoid> horiz,
                 std::shared_ptr<const FiniteGroupoid> vert,
                 std::vector<Square> squares,
                 std::shared_ptr<const CrossedModule> payload_cm = nullptr);

  const FiniteGroupoid& horiz() const { return *horiz_; }
  const FiniteGroupoid& vert() const { return *vert_; }
  std::shared_ptr<const FiniteGroupoid> horiz_ptr() const { return horiz_; }
  std::shared_ptr<const FiniteGroupoid> vert_ptr() const { return vert_; }
  const std::vector<Square>& squares() const { return squares_; }
  const CrossedModule* payload_cm() const { return payload_cm_.get(); }

  bool edge_symmetric() const { return *horiz_ == *vert_; }

  void check_square_boundary(const Square& s) const;

  bool composable1(const Square& s, const Square& t) const;
  bool composable2(const Square& s, const Square& t) const;
  Square compose1(const Square& s, const Square& t) const;
  Square compose2(const Square& s, const Square& t) const;
  Square inverse1(const Square& s) const;
  Square inverse2(const Square& s) const;
  Square eps1(int h_arrow) const;  // degenerate on an H edge
  Square eps2(int v_arrow) const;  // degenerate on a V edge

  std::optional<int> find_square(const Square& s) const;
  bool contains(const Square& s) const { return find_square(s).has_value(); }

  SquarePayload trivial_payload_at(int obj) const;

  // exhaustive law checks over the enumerated square set
  struct LawReport {
    bool pass = true;
    long long checked_pairs = 0;
    long long checked_interchange = 0;
    std::string first_failure;
  };
  LawReport check_laws(long long budget = 2'000'000) const;

 private:
  SquarePayload compose_payload1(const Square& s, const Square& t) const;
  SquarePayload compose_payload2(const Square& s, const Square& t) const;

  std::shared_ptr<const FiniteGroupoid> horiz_;
  std::shared_ptr<const FiniteGroupoid> vert_;
  std::vector<Square> squares_;
  std::map<std::string, int> index_;
  std::shared_ptr<const CrossedModule> payload_cm_;
};

// Connection pair (transport Upsilon, holonomy Hol) on a double groupoid.
struct ConnectionPair {
  std::map<int, int> hol;        // V arrow -> H arrow
  std::map<int, Square> upsilon; // V arrow -> transport square

  const Square& ups(int v_arrow) const;
  int hol_of(int v_arrow) const;
};

struct TransportLawReport {
  bool pass = true;
  long long pairs_checked = 0;
  long long boundary_checked = 0;
  std::string first_failure;
};

// Verifies boundary conditions of every Upsilon square, functoriality of
// Hol, and the transport law on every composable pair of V arrows.
TransportLawReport check_transport_law(const ConnectionPair& cp,
                                       const DoubleGroupoid& dg);

// Connection pair with Hol = identity and degenerate transport squares;
// requires an edge-symmetric double groupoid.
ConnectionPair special_connection(const DoubleGroupoid& dg);

// Assembly of the transported-lift double groupoid from a closed family
// of transport classes: V arrows are the classes, H arrows the realized
// (source, target, holonomy) gauge arrows, squares the transport lifts
// plus degeneracies, closed under both compositions within `budget`.
struct TransportClassEntry {
  std::string class_key;
  std::string src;
  std::string tgt;
  Phase hol;
};

struct AssembledConnection {
  DoubleGroupoid dg;
  ConnectionPair cp;
  std::map<std::string, int> v_arrow_of_class;
};

AssembledConnection assemble_connection_double(
    const std::vector<TransportClassEntry>& entries,
    const std::function<std::string(const std::string&, const std::string&)>&
        compose_class_key,
    std::size_t budget = 4096);

}  // namespace ghol
