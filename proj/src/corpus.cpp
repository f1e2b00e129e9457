#include "fbl/corpus.hpp"

#include <algorithm>

namespace fbl::corpus {

MulTable cyclic_group(int k) {
  MulTable t = MulTable::zeros(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t.at(i, j) = (i + j) % k;
  return t;
}

MulTable chain_semilattice(int k) {
  MulTable t = MulTable::zeros(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t.at(i, j) = std::max(i, j);
  return t;
}

namespace {

std::vector<int> compose_maps(const std::vector<int>& s, const std::vector<int>& t) {
  std::vector<int> out(t.size(), -1);
  for (size_t x = 0; x < t.size(); ++x)
    if (t[x] >= 0 && s[t[x]] >= 0) out[x] = s[t[x]];
  return out;
}

// idempotent partial bijections are exactly the partial identities
bool is_idempotent_map(const std::vector<int>& m) {
  for (size_t x = 0; x < m.size(); ++x)
    if (m[x] >= 0 && m[x] != static_cast<int>(x)) return false;
  return true;
}

int domain_mask(const std::vector<int>& m) {
  int mask = 0;
  for (size_t x = 0; x < m.size(); ++x)
    if (m[x] >= 0) mask |= 1 << x;
  return mask;
}

void enumerate_partial_bijections(int points, int x, std::vector<int>& cur,
                                  std::vector<char>& used,
                                  std::vector<std::vector<int>>& out) {
  if (x == points) {
    out.push_back(cur);
    return;
  }
  cur[x] = -1;
  enumerate_partial_bijections(points, x + 1, cur, used, out);
  for (int y = 0; y < points; ++y) {
    if (used[y]) continue;
    used[y] = 1;
    cur[x] = y;
    enumerate_partial_bijections(points, x + 1, cur, used, out);
    cur[x] = -1;
    used[y] = 0;
  }
}

}  // namespace

SymInvMonoid symmetric_inverse_monoid(int points) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur(points, -1);
  std::vector<char> used(points, 0);
  enumerate_partial_bijections(points, 0, cur, used, all);

  auto key = [](const std::vector<int>& m) {
    return std::make_tuple(is_idempotent_map(m) ? 0 : 1, domain_mask(m), m);
  };
  std::sort(all.begin(), all.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });

  SymInvMonoid m;
  m.maps = std::move(all);
  const int n = static_cast<int>(m.maps.size());
  m.table = MulTable::zeros(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.table.at(i, j) = find_map(m, compose_maps(m.maps[i], m.maps[j]));
  return m;
}

int find_map(const SymInvMonoid& m, const std::vector<int>& image) {
  for (size_t i = 0; i < m.maps.size(); ++i)
    if (m.maps[i] == image) return static_cast<int>(i);
  return -1;
}

SubSemilattice idempotent_semilattice(const InverseSemigroup& s) {
  SubSemilattice sub;
  sub.to_parent = s.idempotents;
  const int k = static_cast<int>(sub.to_parent.size());
  std::vector<int> pos(s.n(), -1);
  for (int i = 0; i < k; ++i) pos[sub.to_parent[i]] = i;
  sub.table = MulTable::zeros(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      sub.table.at(i, j) = pos[s.mul(sub.to_parent[i], sub.to_parent[j])];
  return sub;
}

MulTable named_semigroup(const std::string& name) {
  if (name == "z2") return cyclic_group(2);
  if (name == "e3") return chain_semilattice(3);
  if (name == "i2") return symmetric_inverse_monoid(2).table;
  if (name == "i3") return symmetric_inverse_monoid(3).table;
  if (name == "e_i2") {
    auto s = validate_inverse_semigroup(symmetric_inverse_monoid(2).table);
    return idempotent_semilattice(s).table;
  }
  throw Error(errc::parse_error, "unknown corpus semigroup '" + name + "'");
}

std::vector<std::string> semigroup_names() { return {"z2", "e3", "i2", "i3", "e_i2"}; }

}  // namespace fbl::corpus
