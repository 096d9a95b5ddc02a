#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ghol {

// Finite group given by its multiplication table. Element 0 is the unit.
class GroupTable {
 public:
  GroupTable() = default;
  GroupTable(std::vector<std::string> names, std::vector<std::vector<int>> mul);

  static GroupTable trivial();
  static GroupTable cyclic(int n);
  static GroupTable klein4();
  static GroupTable dihedral(int n);  // order 2n
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int unit() const { return 0; }
  const std::string& name(int a) const { return names_[a]; }

  bool is_abelian() const;

  // Checks the table really is a group (laws + bijectivity of rows/cols).
  void check_laws() const;

  // Element-wise isomorphism search by generator-image backtracking.
  // Returns the image vector iso with iso[unit]=unit, or nullopt.
  static std::optional<std::vector<int>> isomorphism(const GroupTable& g,
                                                     const GroupTable& h);

  // True when `m` is a homomorphism g -> h (m indexed by g-elements).
  static bool is_homomorphism(const GroupTable& g, const GroupTable& h,
                              const std::vector<int>& m);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
};

}  // namespace ghol
