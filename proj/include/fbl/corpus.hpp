#pragma once

#include <string>
#include <vector>

#include "fbl/isg.hpp"

namespace fbl::corpus {

// Cyclic group Z/k, identity at index 0.
MulTable cyclic_group(int k);

// Chain semilattice of k elements with index 0 on top; the product of i and
// j is max(i, j), so index k-1 is the zero.
MulTable chain_semilattice(int k);

// Symmetric inverse monoid I_n: all partial bijections on {0,...,n-1} with
// product = function composition, (st)(x) = s(t(x)).
struct SymInvMonoid {
  MulTable table;
  // maps[i][x] is the image of x under element i, or -1 outside the domain.
  std::vector<std::vector<int>> maps;
};

// Element order: idempotents first (by domain bitmask ascending), then the
// remaining elements by (domain bitmask, image tuple lexicographic). This
// puts the empty map (the zero) at index 0 and makes E a prefix.
SymInvMonoid symmetric_inverse_monoid(int points);

// Index of the element with the given partial map, or -1.
int find_map(const SymInvMonoid& m, const std::vector<int>& image);

// The idempotent semilattice of S as a standalone table, together with the
// map from new indices to S indices.
struct SubSemilattice {
  MulTable table;
  std::vector<int> to_parent;
};
SubSemilattice idempotent_semilattice(const InverseSemigroup& s);

// Named corpus semigroups: "z2", "e3", "i2", "i3", "e_i2".
MulTable named_semigroup(const std::string& name);
std::vector<std::string> semigroup_names();

}  // namespace fbl::corpus
