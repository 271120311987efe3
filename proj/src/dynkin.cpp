#include "cmpreproj/dynkin.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cmpreproj/errors.hpp"

namespace cmpreproj {

VertexSet DynkinSpec::apply_iota(const VertexSet& j) const {
  VertexSet out;
  for (int v : j) out.push_back(involution(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> DynkinSpec::neighbours() const {
  std::vector<std::vector<int>> nb(n + 1);
  for (auto [i, j] : edges) {
    nb[i].push_back(j);
    nb[j].push_back(i);
  }
  return nb;
}

DynkinSpec dynkin_spec(char family, int n) {
  DynkinSpec d;
  d.family = family;
  d.n = n;
  d.iota.resize(n);
  for (int i = 1; i <= n; ++i) d.iota[i - 1] = i;
  switch (family) {
    case 'A':
      if (n < 1) throw InvalidRank("type A needs n >= 1");
      for (int i = 1; i < n; ++i) d.edges.emplace_back(i, i + 1);
      for (int i = 1; i <= n; ++i) d.iota[i - 1] = n + 1 - i;
      d.coxeter = n + 1;
      break;
    case 'D':
      if (n < 4) throw InvalidRank("type D needs n >= 4");
      d.edges = {{1, 3}, {2, 3}};
      for (int i = 3; i < n; ++i) d.edges.emplace_back(i, i + 1);
      if (n % 2 == 1) std::swap(d.iota[0], d.iota[1]);
      d.coxeter = 2 * n - 2;
      break;
    case 'E':
      if (n < 6 || n > 8) throw InvalidRank("type E needs n in {6,7,8}");
      for (int i = 1; i < n - 1; ++i) d.edges.emplace_back(i, i + 1);
      // branch vertex: 3 for E6, 4 for E7, 5 for E8
      d.edges.emplace_back(n - 3, n);
      if (n == 6) {
        d.iota = {5, 4, 3, 2, 1, 6};
        d.coxeter = 12;
      } else {
        d.coxeter = n == 7 ? 18 : 30;
      }
      break;
    default:
      throw InvalidRank(std::string("unknown Dynkin family ") + family);
  }
  return d;
}

DynkinSpec parse_dynkin(const std::string& s) {
  if (s.size() < 2) throw InvalidInput("Dynkin type expected, e.g. A6");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw InvalidInput("trailing characters");
  } catch (const std::exception&) {
    throw InvalidInput("bad Dynkin type '" + s + "'");
  }
  return dynkin_spec(fam, n);
}

VertexSet parse_vertex_set(const std::string& s, int n) {
  VertexSet out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) throw InvalidInput("bad vertex");
    } catch (const std::exception&) {
      throw InvalidInput("bad vertex '" + item + "'");
    }
    if (v < 1 || v > n) throw InvalidInput("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw InvalidInput("repeated vertex in subset");
  if (out.empty()) throw EmptySubset("vertex subset must be nonempty");
  return out;
}

std::string set_string(const VertexSet& j) {
  std::string s;
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
  return s;
}

int preprojective_dimension(const DynkinSpec& d) { return d.n * d.coxeter * (d.coxeter + 1) / 6; }

Presentation preprojective_presentation(const DynkinSpec& d) {
  Presentation p;
  p.quiver.vertex_count = d.n;
  const int m = static_cast<int>(d.edges.size());
  for (int k = 0; k < m; ++k) {
    auto [i, j] = d.edges[k];
    p.quiver.arrows.push_back({i - 1, j - 1, "a" + std::to_string(k + 1)});
  }
  for (int k = 0; k < m; ++k) {
    auto [i, j] = d.edges[k];
    p.quiver.arrows.push_back({j - 1, i - 1, "b" + std::to_string(k + 1)});
  }
  for (int v = 1; v <= d.n; ++v) {
    Relation r;
    for (int k = 0; k < m; ++k) {
      auto [i, j] = d.edges[k];
      if (i == v) r.terms.emplace_back(1, PathWord{v - 1, v - 1, {k, m + k}});
      if (j == v) r.terms.emplace_back(-1, PathWord{v - 1, v - 1, {m + k, k}});
    }
    if (!r.terms.empty()) p.relations.push_back(std::move(r));
  }
  return p;
}

template <class F>
AlgPtr<F> preprojective_algebra(const F& f, const DynkinSpec& d) {
  auto p = preprojective_presentation(d);
  return build_quotient(f, p.quiver, p.relations, d.coxeter - 1, "Pi(" + d.name() + ")");
}

FrozenSplit frozen_split(const DynkinSpec& d, const VertexSet& j) {
  if (j.empty()) throw EmptySubset("J must be nonempty");
  FrozenSplit s;
  s.J = j;
  std::vector<bool> in_j(d.n + 1, false), in_ij(d.n + 1, false);
  for (int v : j) in_j[v] = true;
  for (int v : d.apply_iota(j)) in_ij[v] = true;
  auto nb = d.neighbours();
  for (int i : j) {
    bool frozen = in_ij[i];
    std::vector<bool> seen(d.n + 1, false);
    std::deque<int> queue{i};
    seen[i] = true;
    while (!queue.empty() && !frozen) {
      int u = queue.front();
      queue.pop_front();
      for (int w : nb[u]) {
        if (seen[w] || in_j[w]) continue;
        if (in_ij[w]) {
          frozen = true;
          break;
        }
        seen[w] = true;
        queue.push_back(w);
      }
    }
    (frozen ? s.frozen : s.mutable_).push_back(i);
  }
  return s;
}

bool is_impartial(const DynkinSpec& d, const VertexSet& j) {
  if (d.family == 'A') {
    bool left = std::all_of(j.begin(), j.end(), [&](int v) { return 2 * v < d.n + 1; });
    bool right = std::all_of(j.begin(), j.end(), [&](int v) { return 2 * v > d.n + 1; });
    return !(left || right);
  }
  if (d.family == 'D' && d.n % 2 == 1) return !(j == VertexSet{1} || j == VertexSet{2});
  if (d.family == 'E' && d.n == 6) return !(j == VertexSet{1} || j == VertexSet{5});
  return true;
}

std::string pattern(const DynkinSpec& d, const VertexSet& j) {
  auto s = frozen_split(d, j);
  std::string p(d.n, '.');
  for (int v : s.frozen) p[v - 1] = 'f';
  for (int v : s.mutable_) p[v - 1] = 'm';
  return p;
}

std::vector<int> tree_path(const DynkinSpec& d, int a, int b) {
  auto nb = d.neighbours();
  std::vector<int> parent(d.n + 1, 0);
  std::deque<int> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : nb[u])
      if (!parent[w]) {
        parent[w] = u;
        queue.push_back(w);
      }
  }
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool frozen_path_property(const DynkinSpec& d, const VertexSet& j) {
  auto s = frozen_split(d, j);
  std::vector<bool> fr(d.n + 1, false), ifr(d.n + 1, false);
  for (int v : s.frozen) fr[v] = true;
  for (int v : d.apply_iota(s.frozen)) ifr[v] = true;
  for (int a : j)
    for (int b : j) {
      auto path = tree_path(d, a, d.involution(b));
      bool hit_f = false, hit_if = false;
      for (int v : path) {
        hit_f = hit_f || fr[v];
        hit_if = hit_if || ifr[v];
      }
      if (!hit_f || !hit_if) return false;
    }
  return true;
}

std::pair<DynkinSpec, VertexSet> impartial_reduction(const DynkinSpec& d, const VertexSet& j) {
  if (d.family != 'A' || is_impartial(d, j)) return {d, j};
  VertexSet left = j;
  if (2 * j.front() > d.n + 1) left = d.apply_iota(j);
  const int m = 2 * left.back() - 1;
  return {dynkin_spec('A', m), left};
}

template <class F>
AlgPtr<F> contracted_algebra(const F& f, const DynkinSpec& d, const VertexSet& j, bool reduce) {
  if (j.empty()) throw EmptySubset("J must be nonempty");
  DynkinSpec dd = d;
  VertexSet jj = j;
  if (reduce) std::tie(dd, jj) = impartial_reduction(d, j);
  auto pi = preprojective_algebra(f, dd);
  std::vector<int> zero_based;
  for (int v : jj) zero_based.push_back(v - 1);
  return contract(pi, zero_based);
}

std::vector<VertexSet> subsets_up_to_symmetry(const DynkinSpec& d) {
  std::vector<VertexSet> out;
  for (unsigned mask = 1; mask < (1u << d.n); ++mask) {
    VertexSet j;
    for (int i = 0; i < d.n; ++i)
      if (mask & (1u << i)) j.push_back(i + 1);
    if (j <= d.apply_iota(j)) out.push_back(j);
  }
  return out;
}

template AlgPtr<PrimeField> preprojective_algebra<PrimeField>(const PrimeField&, const DynkinSpec&);
template AlgPtr<RationalField> preprojective_algebra<RationalField>(const RationalField&, const DynkinSpec&);
template AlgPtr<PrimeField> contracted_algebra<PrimeField>(const PrimeField&, const DynkinSpec&, const VertexSet&,
                                                           bool);
template AlgPtr<RationalField> contracted_algebra<RationalField>(const RationalField&, const DynkinSpec&,
                                                                 const VertexSet&, bool);

}  // namespace cmpreproj
