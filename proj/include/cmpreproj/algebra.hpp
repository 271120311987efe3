#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cmpreproj/matrix.hpp"

namespace cmpreproj {

struct Arrow {
  int source = 0;
  int target = 0;
  std::string label;
};

// Vertices are 0-based internally; text formats use 1-based numbering.
struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  void validate() const;
  int arrow_index(const std::string& label) const;  // -1 if absent
};

// Arrow sequence read left to right: ab means a then b.
struct PathWord {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
  int length() const { return static_cast<int>(arrows.size()); }
};

// Integer-coefficient combination of parallel paths of length >= 2.
struct Relation {
  std::vector<std::pair<long long, PathWord>> terms;
  bool homogeneous() const;
};

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
};

// Text format: optional `vertices: n`, arrow lines `a: i -> j`, every other
// non-comment line is a relation such as `ab - ba`, `c^2 + bacba`, `2 a1a2`.
Presentation parse_presentation(const std::string& text);
Relation parse_relation(const Quiver& q, const std::string& text);
std::string word_string(const Quiver& q, const std::vector<int>& arrows);

struct BasisTag {
  int source = 0;
  int target = 0;
  int degree = 0;
  std::string word;
};

template <class F>
using SparseVec = std::vector<std::pair<int, typename F::Elem>>;

template <class F>
class FDAlgebra;

template <class F>
using AlgPtr = std::shared_ptr<const FDAlgebra<F>>;

// Basic algebra with basis adapted to a complete set of primitive idempotents:
// basis elements 0..n-1 are e_1..e_n and every other basis element lies in the radical.
template <class F>
class FDAlgebra {
 public:
  using Elem = typename F::Elem;

  FDAlgebra(const F& f, int vertex_count, std::vector<BasisTag> basis,
            std::vector<SparseVec<F>> products, std::string name);

  const F& field() const { return f_; }
  int vertex_count() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisTag& tag(int x) const { return basis_[x]; }
  const std::vector<BasisTag>& basis() const { return basis_; }
  const std::string& name() const { return name_; }

  // x * y as a sparse combination of basis elements (empty when zero)
  const SparseVec<F>& product(int x, int y) const {
    return products_[static_cast<std::size_t>(x) * basis_.size() + y];
  }
  // basis elements of e_s A e_t in basis order
  const std::vector<int>& block(int s, int t) const { return blocks_[s * n_ + t]; }
  // basis elements with the given source, i.e. a basis of e_s A
  const std::vector<int>& from(int s) const { return from_[s]; }
  // basis elements spanning a complement of rad^2 inside rad
  const std::vector<int>& generators() const { return generators_; }
  int max_degree() const;

  // original labels of vertices (1-based numbers of the ambient algebra)
  const std::vector<int>& vertex_labels() const { return vertex_labels_; }
  void set_vertex_labels(std::vector<int> labels) { vertex_labels_ = std::move(labels); }
  // arrow label -> basis element, for algebras built from a presentation
  const std::map<std::string, int>& arrows() const { return arrows_; }
  void set_arrows(std::map<std::string, int> a) { arrows_ = std::move(a); }

  Vec<F> multiply(const Vec<F>& a, const Vec<F>& b) const;
  // checks (xy)z = x(yz) on all triples (or `samples` random ones when > 0)
  bool verify_associativity(int samples, Rng* rng) const;

  // opposite algebra, cached so that opposite(opposite(A)) is A itself
  static AlgPtr<F> opposite(const AlgPtr<F>& a);

 private:
  F f_;
  int n_;
  std::vector<BasisTag> basis_;
  std::vector<SparseVec<F>> products_;
  std::string name_;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::vector<int>> from_;
  std::vector<int> generators_;
  std::vector<int> vertex_labels_;
  std::map<std::string, int> arrows_;

  mutable std::mutex op_mu_;
  mutable std::shared_ptr<const FDAlgebra> op_cache_;
  mutable std::weak_ptr<const FDAlgebra> op_of_;
};

template <class F>
struct AlgebraElement {
  AlgPtr<F> alg;
  Vec<F> coeffs;
};

template <class F>
AlgebraElement<F> basis_element(const AlgPtr<F>& a, int x);

template <class F>
AlgebraElement<F> multiply(const AlgebraElement<F>& a, const AlgebraElement<F>& b);

template <class F>
AlgPtr<F> build_quotient(const F& f, const Quiver& q, const std::vector<Relation>& rels,
                         int degree_cutoff, const std::string& name = "");

// same algebra computed by truncating the path algebra, for any admissible relations
template <class F>
AlgPtr<F> build_by_path_enumeration(const F& f, const Quiver& q, const std::vector<Relation>& rels,
                                    int degree_cutoff, const std::string& name = "");

// default cutoff for generic presentations
int default_cutoff(const Quiver& q);

// eAe for e the sum of e_j, j in `subset` (0-based vertices)
template <class F>
AlgPtr<F> contract(const AlgPtr<F>& a, const std::vector<int>& subset);

template <class F>
AlgPtr<F> opposite(const AlgPtr<F>& a) {
  return FDAlgebra<F>::opposite(a);
}

// entry (i,j) = dim e_i A e_j, the multiplicity of S_j in P_i
template <class F>
std::vector<std::vector<int>> cartan_matrix(const FDAlgebra<F>& a);

// deterministic text dump of basis and structure constants
template <class F>
std::string serialize(const FDAlgebra<F>& a);

}  // namespace cmpreproj
