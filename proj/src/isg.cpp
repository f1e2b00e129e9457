#include "fbl/isg.hpp"

#include <algorithm>
#include <cassert>

namespace fbl {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

std::vector<int> InverseSemigroup::nonzero_idempotents() const {
  std::vector<int> out;
  for (int e : idempotents)
    if (!is_zero(e)) out.push_back(e);
  return out;
}

InverseSemigroup validate_inverse_semigroup(const MulTable& table) {
  const int n = table.n;
  if (n <= 0 || table.prod.size() != static_cast<size_t>(n) * n)
    throw Error(errc::parse_error, "multiplication table has wrong shape");
  for (int v : table.prod)
    if (v < 0 || v >= n)
      throw Error(errc::parse_error, "table entry out of range");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table.at(table.at(a, b), c) != table.at(a, table.at(b, c)))
          throw Error(errc::not_associative, "witness " + triple(a, b, c));

  InverseSemigroup s;
  s.table = table;
  s.idem_flag.assign(n, 0);
  for (int e = 0; e < n; ++e)
    if (table.at(e, e) == e) {
      s.idem_flag[e] = 1;
      s.idempotents.push_back(e);
    }

  // unique inverses <=> regular + commuting idempotents
  for (int e : s.idempotents)
    for (int f : s.idempotents)
      if (table.at(e, f) != table.at(f, e))
        throw Error(errc::not_inverse,
                    "idempotents do not commute, witness (" + std::to_string(e) + "," +
                        std::to_string(f) + ")");

  s.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (table.at(table.at(a, x), a) == a && table.at(table.at(x, a), x) == x) {
        s.inverse[a] = x;
        break;
      }
    }
    if (s.inverse[a] < 0)
      throw Error(errc::not_inverse, "no inverse for element " + std::to_string(a));
  }

  // uniqueness holds given the checks above; assert it outright since the
  // scan is cheap at this scale
  for (int a = 0; a < n; ++a) {
    int count = 0;
    for (int x = 0; x < n; ++x)
      if (table.at(table.at(a, x), a) == a && table.at(table.at(x, a), x) == x) ++count;
    if (count != 1)
      throw Error(errc::not_inverse,
                  "element " + std::to_string(a) + " has " + std::to_string(count) + " inverses");
  }

  for (int z = 0; z < n; ++z) {
    bool absorbing = true;
    for (int t = 0; t < n && absorbing; ++t)
      absorbing = table.at(z, t) == z && table.at(t, z) == z;
    if (absorbing) {
      s.zero = z;
      break;
    }
  }

  s.leq_table.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    int ra = table.at(a, s.inverse[a]);  // aa*
    for (int b = 0; b < n; ++b)
      s.leq_table[static_cast<size_t>(a) * n + b] = (table.at(ra, b) == a) ? 1 : 0;
  }

  return s;
}

bool natural_leq(const InverseSemigroup& s, int a, int b) { return s.leq(a, b); }

std::vector<int> domain_set(const InverseSemigroup& s, int u) {
  std::vector<int> out;
  int du = s.domain_proj(u);  // u*u
  for (int t = 0; t < s.n(); ++t)
    if (s.leq(s.range_proj(t), du)) out.push_back(t);
  return out;
}

std::vector<int> s_fiber(const InverseSemigroup& s, int e) {
  if (!s.is_idempotent(e))
    throw Error(errc::parse_error, "element " + std::to_string(e) + " is not idempotent");
  std::vector<int> out;
  for (int t = 0; t < s.n(); ++t)
    if (s.domain_proj(t) == e) out.push_back(t);
  return out;
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  PartialBijection out;
  out.image.assign(g.image.size(), -1);
  for (size_t x = 0; x < g.image.size(); ++x)
    if (g.image[x] >= 0 && f.image[g.image[x]] >= 0) out.image[x] = f.image[g.image[x]];
  return out;
}

PartialBijection invert(const PartialBijection& f) {
  PartialBijection out;
  out.image.assign(f.image.size(), -1);
  for (size_t x = 0; x < f.image.size(); ++x)
    if (f.image[x] >= 0) out.image[f.image[x]] = static_cast<int>(x);
  return out;
}

PartialBijection wagner_preston(const InverseSemigroup& s, int u) {
  PartialBijection out;
  out.image.assign(s.n(), -1);
  for (int t : domain_set(s, u)) out.image[t] = s.mul(u, t);
  return out;
}

std::optional<EStarWitness> e_star_unitary_witness(const InverseSemigroup& s) {
  for (int e : s.nonzero_idempotents())
    for (int t = 0; t < s.n(); ++t)
      if (s.leq(e, t) && !s.is_idempotent(t)) return EStarWitness{e, t};
  return std::nullopt;
}

bool is_e_star_unitary(const InverseSemigroup& s) { return !e_star_unitary_witness(s); }

void validate_group(const MulTable& g) {
  const int n = g.n;
  if (n <= 0 || g.prod.size() != static_cast<size_t>(n) * n)
    throw Error(errc::not_a_group, "table has wrong shape");
  for (int v : g.prod)
    if (v < 0 || v >= n) throw Error(errc::not_a_group, "table entry out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
          throw Error(errc::not_a_group, "not associative, witness " + triple(a, b, c));
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.at(e, a) == a && g.at(a, e) == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw Error(errc::not_a_group, "no identity element");
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int x = 0; x < n && !has_inv; ++x)
      has_inv = g.at(a, x) == id && g.at(x, a) == id;
    if (!has_inv)
      throw Error(errc::not_a_group, "element " + std::to_string(a) + " has no inverse");
  }
}

int group_identity(const MulTable& g) {
  for (int e = 0; e < g.n; ++e) {
    bool ok = true;
    for (int a = 0; a < g.n && ok; ++a) ok = g.at(e, a) == a && g.at(a, e) == a;
    if (ok) return e;
  }
  throw Error(errc::not_a_group, "no identity element");
}

int group_inverse(const MulTable& g, int x) {
  int id = group_identity(g);
  for (int y = 0; y < g.n; ++y)
    if (g.at(x, y) == id && g.at(y, x) == id) return y;
  throw Error(errc::not_a_group, "element " + std::to_string(x) + " has no inverse");
}

namespace {

// Closes a partial assignment under sigma(st) = sigma(s)sigma(t) for nonzero
// products and sigma(s*) = sigma(s)^{-1}. Returns false on conflict.
bool propagate(const InverseSemigroup& s, const MulTable& g, std::vector<int>& sigma) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < s.n(); ++a) {
      if (sigma[a] < 0) continue;
      int ai = s.inv(a);
      int want = group_inverse(g, sigma[a]);
      if (sigma[ai] < 0) {
        sigma[ai] = want;
        changed = true;
      } else if (sigma[ai] != want) {
        return false;
      }
      for (int b = 0; b < s.n(); ++b) {
        if (sigma[b] < 0) continue;
        int ab = s.mul(a, b);
        if (s.is_zero(ab)) continue;
        int val = g.at(sigma[a], sigma[b]);
        if (sigma[ab] < 0) {
          sigma[ab] = val;
          changed = true;
        } else if (sigma[ab] != val) {
          return false;
        }
      }
    }
  }
  return true;
}

bool extend(const InverseSemigroup& s, const MulTable& g, std::vector<int> sigma,
            std::vector<int>* out) {
  if (!propagate(s, g, sigma)) return false;
  int next = -1;
  for (int a = 0; a < s.n(); ++a)
    if (!s.is_zero(a) && sigma[a] < 0) {
      next = a;
      break;
    }
  if (next < 0) {
    *out = sigma;
    return true;
  }
  int id = group_identity(g);
  for (int v = 0; v < g.n; ++v) {
    if (v == id) continue;  // identity values are reserved for idempotents
    std::vector<int> trial = sigma;
    trial[next] = v;
    if (extend(s, g, std::move(trial), out)) return true;
  }
  return false;
}

}  // namespace

std::optional<Grading> search_idempotent_pure_grading(const InverseSemigroup& s,
                                                      const MulTable& g) {
  validate_group(g);
  int id = group_identity(g);
  std::vector<int> sigma(s.n(), -1);
  for (int e : s.nonzero_idempotents()) sigma[e] = id;
  std::vector<int> found;
  if (!extend(s, g, std::move(sigma), &found)) return std::nullopt;
  Grading grading;
  grading.group = g;
  grading.identity = id;
  grading.sigma = std::move(found);
  if (s.zero) grading.sigma[*s.zero] = -1;
  verify_grading(s, grading);
  return grading;
}

void verify_grading(const InverseSemigroup& s, const Grading& g) {
  validate_group(g.group);
  int id = group_identity(g.group);
  for (int a = 0; a < s.n(); ++a) {
    if (s.is_zero(a)) continue;
    if (g.sigma[a] < 0 || g.sigma[a] >= g.group.n)
      throw Error(errc::not_a_grading, "sigma undefined on element " + std::to_string(a));
    bool idem = s.is_idempotent(a);
    if (idem != (g.sigma[a] == id))
      throw Error(errc::not_a_grading, "grading is not idempotent pure at " + std::to_string(a));
  }
  for (int a = 0; a < s.n(); ++a) {
    if (s.is_zero(a)) continue;
    for (int b = 0; b < s.n(); ++b) {
      if (s.is_zero(b)) continue;
      int ab = s.mul(a, b);
      if (s.is_zero(ab)) continue;
      if (g.sigma[ab] != g.group.at(g.sigma[a], g.sigma[b]))
        throw Error(errc::not_a_grading,
                    "sigma not multiplicative at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
    }
  }
}

bool Filter::contains(int e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

std::vector<Filter> enumerate_filters(const InverseSemigroup& s) {
  // every filter of a finite semilattice is the up-set of its least element
  std::vector<Filter> out;
  for (int e : s.idempotents) {
    Filter f;
    f.least = e;
    for (int x : s.idempotents)
      if (s.leq(e, x)) f.elements.push_back(x);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::vector<char>> characters(const InverseSemigroup& s) {
  std::vector<std::vector<char>> out;
  for (const Filter& f : enumerate_filters(s)) {
    std::vector<char> ind(s.idempotents.size(), 0);
    for (size_t i = 0; i < s.idempotents.size(); ++i)
      ind[i] = f.contains(s.idempotents[i]) ? 1 : 0;
    out.push_back(std::move(ind));
  }
  return out;
}

}  // namespace fbl
