#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmpreproj/algebra.hpp"

namespace cmpreproj {

// Vertices are numbered 1..n in this header; subsets are sorted vectors.
using VertexSet = std::vector<int>;

struct DynkinSpec {
  char family = 'A';
  int n = 1;
  std::vector<std::pair<int, int>> edges;  // (i, j) with i < j
  std::vector<int> iota;                   // iota[i-1] = image of vertex i
  int coxeter = 2;

  std::string name() const { return std::string(1, family) + std::to_string(n); }
  int involution(int v) const { return iota[v - 1]; }
  VertexSet apply_iota(const VertexSet& j) const;
  std::vector<std::vector<int>> neighbours() const;  // 1-based adjacency, index 0 unused
};

DynkinSpec dynkin_spec(char family, int n);
// "A6", "D5", "E8"
DynkinSpec parse_dynkin(const std::string& s);
// "1,2,3,6"; rejects out-of-range and repeated vertices
VertexSet parse_vertex_set(const std::string& s, int n);
std::string set_string(const VertexSet& j);

// dim Pi = n h (h+1) / 6
int preprojective_dimension(const DynkinSpec& d);

// quiver with arrows a_k: i -> j and b_k: j -> i for edge k, plus the mesh relations
Presentation preprojective_presentation(const DynkinSpec& d);

template <class F>
AlgPtr<F> preprojective_algebra(const F& f, const DynkinSpec& d);

struct FrozenSplit {
  VertexSet J, frozen, mutable_;
};
FrozenSplit frozen_split(const DynkinSpec& d, const VertexSet& j);
bool is_impartial(const DynkinSpec& d, const VertexSet& j);
// f for frozen, m for mutable, . for absent
std::string pattern(const DynkinSpec& d, const VertexSet& j);
bool frozen_path_property(const DynkinSpec& d, const VertexSet& j);
// vertices of the unique simple path from a to b
std::vector<int> tree_path(const DynkinSpec& d, int a, int b);

// For one-sided J in type A, the equivalent (rank, subset) with m = 2 max J - 1,
// reflecting J first when it lies on the right half.
std::pair<DynkinSpec, VertexSet> impartial_reduction(const DynkinSpec& d, const VertexSet& j);

// e Pi e for e = sum of e_i, i in J; with `reduce`, the type A reduction is applied first
template <class F>
AlgPtr<F> contracted_algebra(const F& f, const DynkinSpec& d, const VertexSet& j, bool reduce = false);

// nonempty subsets in binary order, keeping the smaller of J and iota(J)
std::vector<VertexSet> subsets_up_to_symmetry(const DynkinSpec& d);

}  // namespace cmpreproj
