#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbl/common.hpp"

namespace fbl {

// Finite magma given by its full multiplication table. Entry at(s, t)
// is the index of the product st.
struct MulTable {
  int n = 0;
  std::vector<int> prod;  // row-major, n*n

  int at(int s, int t) const { return prod[static_cast<size_t>(s) * n + t]; }
  int& at(int s, int t) { return prod[static_cast<size_t>(s) * n + t]; }

  static MulTable zeros(int n) {
    MulTable t;
    t.n = n;
    t.prod.assign(static_cast<size_t>(n) * n, 0);
    return t;
  }
};

// A validated finite inverse semigroup. All derived structure (inverses,
// idempotents, zero, natural partial order) is precomputed eagerly so that
// every later query is a table lookup.
struct InverseSemigroup {
  MulTable table;
  std::vector<int> inverse;
  std::vector<int> idempotents;  // ascending element indices
  std::vector<char> idem_flag;
  std::optional<int> zero;
  std::vector<char> leq_table;  // n*n, leq_table[s*n+t] == 1 iff s <= t

  int n() const { return table.n; }
  int mul(int s, int t) const { return table.at(s, t); }
  int inv(int s) const { return inverse[s]; }
  bool is_idempotent(int s) const { return idem_flag[s] != 0; }
  bool leq(int s, int t) const { return leq_table[static_cast<size_t>(s) * n() + t] != 0; }
  int range_proj(int s) const { return mul(s, inv(s)); }   // ss*
  int domain_proj(int s) const { return mul(inv(s), s); }  // s*s

  bool is_zero(int s) const { return zero && *zero == s; }
  std::vector<int> nonzero_idempotents() const;
};

// Checks associativity, regularity and commuting idempotents (equivalent to
// unique inverses), then derives the full structure. Throws Error with code
// not_associative or not_inverse, carrying a witness in the message.
InverseSemigroup validate_inverse_semigroup(const MulTable& table);

bool natural_leq(const InverseSemigroup& s, int a, int b);

// D(u) = { s : ss* <= u*u }
std::vector<int> domain_set(const InverseSemigroup& s, int u);
// S_e = { s : s*s = e }; throws if e is not idempotent.
std::vector<int> s_fiber(const InverseSemigroup& s, int e);

// Partial bijection on {0,...,n-1}; image[x] == -1 means x is outside the
// domain.
struct PartialBijection {
  std::vector<int> image;

  bool defined(int x) const { return image[x] >= 0; }
  int at(int x) const { return image[x]; }
  bool operator==(const PartialBijection& other) const { return image == other.image; }
};

PartialBijection compose(const PartialBijection& f, const PartialBijection& g);
PartialBijection invert(const PartialBijection& f);

// gamma_u : D(u) -> D(u*), s -> us.
PartialBijection wagner_preston(const InverseSemigroup& s, int u);

struct EStarWitness {
  int e;  // nonzero idempotent
  int s;  // non-idempotent element with e <= s
};

// Returns a witness pair if S is not E*-unitary (first in scan order over
// (e, s) with both indices ascending), or nullopt if S is E*-unitary.
std::optional<EStarWitness> e_star_unitary_witness(const InverseSemigroup& s);
bool is_e_star_unitary(const InverseSemigroup& s);

struct Grading {
  MulTable group;
  int identity = 0;
  std::vector<int> sigma;  // sigma[s] for s in S^x; entry for the zero is -1
};

// Throws not_a_group unless the table is a finite group.
void validate_group(const MulTable& g);
int group_identity(const MulTable& g);
int group_inverse(const MulTable& g, int x);

// Backtracking search for an idempotent pure grading sigma : S^x -> G.
// Elements are explored in index order and group values in index order, with
// forced propagation along products and inverses, so the result is
// deterministic. Returns nullopt when no grading into G exists.
std::optional<Grading> search_idempotent_pure_grading(const InverseSemigroup& s,
                                                      const MulTable& g);

// Re-verifies the two grading invariants verbatim; throws not_a_grading.
void verify_grading(const InverseSemigroup& s, const Grading& g);

// Filter in the idempotent semilattice: a nonempty, meet-closed, upward
// closed subset of E. For finite E every filter is the principal up-set of
// its least element.
struct Filter {
  std::vector<int> elements;  // ascending element indices
  int least = -1;

  bool contains(int e) const;
};

std::vector<Filter> enumerate_filters(const InverseSemigroup& s);

// Characters of E as indicator maps of filters, indexed like
// s.idempotents: characters(s)[k][i] == 1 iff s.idempotents[i] lies in the
// k-th filter.
std::vector<std::vector<char>> characters(const InverseSemigroup& s);

}  // namespace fbl
