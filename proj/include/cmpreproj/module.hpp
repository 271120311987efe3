#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmpreproj/algebra.hpp"

namespace cmpreproj {

template <class F>
class FDModule;

template <class F>
using Mod = std::shared_ptr<const FDModule<F>>;

// Minimal projective presentation data of a module M.
//   generators m_k in M_{v_k} map onto a basis of top M;
//   P0 = sum_k e_{v_k} A, whose vertex-w space has rows (k, a) with a in e_{v_k} A e_w;
//   relations span a complement of rad K in K = ker(P0 -> M).
template <class F>
struct ModulePresentation {
  std::vector<int> gen_vertex;
  std::vector<Vec<F>> gen_vec;
  std::vector<std::vector<std::pair<int, int>>> rows;  // per vertex: (k, basis element)
  std::vector<Matrix<F>> pi;                           // per vertex: |rows| x dim M_w
  std::vector<Matrix<F>> section;                      // per vertex: dim M_w x |rows|, section*pi = 1
  std::vector<Subspace<F>> kernel;                     // per vertex, inside P0_w
  std::vector<std::pair<int, Vec<F>>> relations;       // (vertex, vector in P0_w)
  std::vector<int> kernel_dims() const;
};

// Right module: basis element x in e_s A e_t acts M_s -> M_t by the
// dims[s] x dims[t] matrix act(x) on row vectors.
template <class F>
class FDModule {
 public:
  FDModule(AlgPtr<F> a, std::vector<int> dims, std::vector<Matrix<F>> action);

  const AlgPtr<F>& algebra() const { return alg_; }
  const F& field() const { return alg_->field(); }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return total_; }
  bool is_zero() const { return total_ == 0; }
  const Matrix<F>& act(int x) const { return action_[x]; }

  // act(e_v) = 1 and act(x)act(y) = act(xy); all pairs when samples <= 0
  bool verify(int samples, Rng* rng) const;
  const ModulePresentation<F>& presentation() const;

 private:
  AlgPtr<F> alg_;
  std::vector<int> dims_;
  int total_ = 0;
  std::vector<Matrix<F>> action_;
  mutable std::once_flag pres_once_;
  mutable std::unique_ptr<ModulePresentation<F>> pres_;
};

template <class F>
struct ModuleMap {
  Mod<F> src, tgt;
  std::vector<Matrix<F>> blocks;  // per vertex: dim src_v x dim tgt_v

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  int rank() const;
  // intertwining check on all basis elements
  bool verify() const;
};

template <class F>
ModuleMap<F> zero_map(const Mod<F>& s, const Mod<F>& t);
template <class F>
ModuleMap<F> identity_map(const Mod<F>& m);
// f then g
template <class F>
ModuleMap<F> compose(const ModuleMap<F>& f, const ModuleMap<F>& g);
template <class F>
ModuleMap<F> add_maps(const ModuleMap<F>& f, const ModuleMap<F>& g, const typename F::Elem& c);

// ---------------------------------------------------------------- construction

template <class F>
Mod<F> zero_module(const AlgPtr<F>& a);
template <class F>
Mod<F> simple_module(const AlgPtr<F>& a, int v);
// e_v A
template <class F>
Mod<F> projective_module(const AlgPtr<F>& a, int v);
// D(A e_v), the dual of the A^op projective at v
template <class F>
Mod<F> injective_module(const AlgPtr<F>& a, int v);
template <class F>
Mod<F> regular_module(const AlgPtr<F>& a);
// D(A_A) as a right A-module
template <class F>
Mod<F> dual_regular_module(const AlgPtr<F>& a);

template <class F>
struct RegularAndInjectives {
  Mod<F> regular;
  std::vector<Mod<F>> projectives, injectives;
};
template <class F>
RegularAndInjectives<F> regular_and_injectives(const AlgPtr<F>& a);

// module from arrow matrices; each basis word is evaluated through the arrows
template <class F>
Mod<F> module_from_arrows(const AlgPtr<F>& a, const std::vector<int>& dims,
                          const std::map<std::string, Matrix<F>>& arrows);

template <class F>
struct SumData {
  Mod<F> sum;
  std::vector<ModuleMap<F>> inclusions, projections;
};
template <class F>
SumData<F> direct_sum_data(const AlgPtr<F>& a, const std::vector<Mod<F>>& parts);
template <class F>
Mod<F> direct_sum(const AlgPtr<F>& a, const std::vector<Mod<F>>& parts);

// D M over the opposite algebra
template <class F>
Mod<F> dual(const Mod<F>& m);
// D f : D tgt -> D src, with explicitly supplied dual modules
template <class F>
ModuleMap<F> dual_map(const ModuleMap<F>& f, const Mod<F>& dtgt, const Mod<F>& dsrc);

// M* = Hom_A(M, A) as a module over the opposite algebra
template <class F>
Mod<F> hom_to_regular(const Mod<F>& m);
// left multiplication by basis element x in e_s A e_t, as a map P_t -> P_s
template <class F>
ModuleMap<F> left_multiplication(const std::vector<Mod<F>>& projectives, int x);

template <class F>
struct SubData {
  Mod<F> module;
  ModuleMap<F> map;  // inclusion for submodules, projection for quotients
};
// per-vertex subspaces closed under the action
template <class F>
SubData<F> submodule(const Mod<F>& m, const std::vector<Subspace<F>>& parts);
template <class F>
SubData<F> quotient(const Mod<F>& m, const std::vector<Subspace<F>>& parts);
template <class F>
SubData<F> kernel(const ModuleMap<F>& f);
template <class F>
SubData<F> cokernel(const ModuleMap<F>& f);
template <class F>
SubData<F> image(const ModuleMap<F>& f);

template <class F>
std::vector<Subspace<F>> radical_spaces(const Mod<F>& m);
template <class F>
std::vector<Subspace<F>> socle_spaces(const Mod<F>& m);
template <class F>
SubData<F> radical(const Mod<F>& m);
template <class F>
SubData<F> top(const Mod<F>& m);
template <class F>
SubData<F> socle(const Mod<F>& m);
template <class F>
std::vector<int> top_vector(const Mod<F>& m);
template <class F>
std::vector<int> socle_vector(const Mod<F>& m);
// Loewy length
template <class F>
int loewy_length(const Mod<F>& m);

// ---------------------------------------------------------------- Hom

template <class F>
class HomSpace {
 public:
  HomSpace(Mod<F> src, Mod<F> tgt);
  int dim() const { return sol_.dim(); }
  const Mod<F>& src() const { return src_; }
  const Mod<F>& tgt() const { return tgt_; }
  ModuleMap<F> map(int i) const;
  ModuleMap<F> combination(const Vec<F>& coeffs) const;
  ModuleMap<F> random(Rng& rng) const;
  Vec<F> coordinates(const ModuleMap<F>& f) const;
  // generator images of f, concatenated
  Vec<F> images(const ModuleMap<F>& f) const;
  std::vector<ModuleMap<F>> basis() const;

 private:
  ModuleMap<F> from_images(const Vec<F>& y) const;
  Mod<F> src_, tgt_;
  std::vector<int> offset_;
  Subspace<F> sol_;
};

template <class F>
std::vector<ModuleMap<F>> hom_basis(const Mod<F>& m, const Mod<F>& n);
template <class F>
int hom_dim(const Mod<F>& m, const Mod<F>& n);

// ---------------------------------------------------------------- covers and resolutions

template <class F>
ModuleMap<F> projective_cover(const Mod<F>& m);
template <class F>
ModuleMap<F> injective_envelope(const Mod<F>& m);
template <class F>
Mod<F> syzygy(const Mod<F>& m, int n = 1);
template <class F>
Mod<F> cosyzygy(const Mod<F>& m, int n = 1);
// multiplicity of P_v in the projective cover, i.e. top dimension vector
template <class F>
std::vector<int> cover_vertices(const Mod<F>& m);
template <class F>
std::vector<int> envelope_vertices(const Mod<F>& m);
template <class F>
bool is_projective(const Mod<F>& m);
template <class F>
bool is_injective(const Mod<F>& m);
template <class F>
bool is_selfinjective(const AlgPtr<F>& a);

enum class Direction { Projective, Injective };

// Minimal resolution as a list of maps between consecutive terms.
template <class F>
struct Resolution {
  Direction direction;
  std::vector<ModuleMap<F>> maps;
  std::vector<Mod<F>> terms;  // P_0, P_1, ... (or I^0, I^1, ...)
  bool minimal = true;
};
template <class F>
Resolution<F> projective_resolution(const Mod<F>& m, int length);
template <class F>
Resolution<F> injective_coresolution(const Mod<F>& m, int length);
// top vectors of the first `length` terms of the minimal projective resolution
template <class F>
std::vector<std::vector<int>> projective_terms(const Mod<F>& m, int length);
// socle vectors of the first terms of the minimal injective coresolution
template <class F>
std::vector<std::vector<int>> injective_terms(const Mod<F>& m, int length);

struct DimReport {
  enum class Kind { Finite, Infinite, Undetermined };
  Kind kind = Kind::Finite;
  int value = 0;         // Finite
  // Infinite: an indecomposable summand of Omega^first recurs in Omega^second (0, 0 for selfinjective)
  int first = 0, second = 0;
  int bound = 0;         // Undetermined

  static DimReport finite(int d) { return {Kind::Finite, d, 0, 0, 0}; }
  static DimReport infinite(int m, int n) { return {Kind::Infinite, 0, m, n, 0}; }
  static DimReport undetermined(int b) { return {Kind::Undetermined, 0, 0, 0, b}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  std::string str() const;
  bool operator==(const DimReport& o) const;
};
DimReport max_report(const DimReport& a, const DimReport& b);

template <class F>
DimReport pdim(const Mod<F>& m, int bound, Rng& rng);
template <class F>
DimReport idim(const Mod<F>& m, int bound, Rng& rng);
// idim of A_A and pdim of D(A_A)
template <class F>
DimReport algebra_idim(const AlgPtr<F>& a, int bound, Rng& rng);
template <class F>
DimReport algebra_pdim_dual(const AlgPtr<F>& a, int bound, Rng& rng);
template <class F>
DimReport dominant_dim(const AlgPtr<F>& a, int bound);
template <class F>
DimReport module_dominant_dim(const Mod<F>& m, int bound);

template <class F>
int ext_dim(const Mod<F>& m, const Mod<F>& n, int i);
// dim Ext^i for i = 0..upto, sharing the syzygy chain
template <class F>
std::vector<int> ext_dims(const Mod<F>& m, const Mod<F>& n, int upto);

// ---------------------------------------------------------------- decomposition

template <class F>
struct Indecomposable {
  Mod<F> module;
  int multiplicity = 1;
  std::string key;
};
template <class F>
struct Decomposition {
  std::vector<Indecomposable<F>> parts;
  int count() const;
};

// radical of End(M) for M with local endomorphism ring; nullopt otherwise
template <class F>
std::optional<std::vector<ModuleMap<F>>> local_radical(const Mod<F>& m);
template <class F>
bool is_indecomposable(const Mod<F>& m, Rng& rng);
template <class F>
Decomposition<F> decompose(const Mod<F>& m, Rng& rng);
template <class F>
bool is_isomorphic(const Mod<F>& m, const Mod<F>& n, Rng& rng);
// random search only; true is a certificate, false proves nothing
template <class F>
bool find_isomorphism(const Mod<F>& m, const Mod<F>& n, Rng& rng, int tries = 6);
template <class F>
std::string iso_key(const Mod<F>& m);
// one copy of each indecomposable summand
template <class F>
std::vector<Mod<F>> basic_summands(const Mod<F>& m, Rng& rng);
template <class F>
Mod<F> basic_part(const Mod<F>& m, Rng& rng);
template <class F>
bool has_projective_summand(const Mod<F>& m, Rng& rng);

// ---------------------------------------------------------------- approximations

// Minimal right add(V)-approximation of x where V is given by pairwise
// non-isomorphic indecomposables.
template <class F>
ModuleMap<F> right_approx(const std::vector<Mod<F>>& summands, const Mod<F>& x);
template <class F>
ModuleMap<F> left_approx(const std::vector<Mod<F>>& summands, const Mod<F>& x);
// same, decomposing v first
template <class F>
ModuleMap<F> right_approx(const Mod<F>& v, const Mod<F>& x, Rng& rng);
template <class F>
ModuleMap<F> left_approx(const Mod<F>& v, const Mod<F>& x, Rng& rng);

template <class F>
bool in_fac(const Mod<F>& y, const Mod<F>& x);
// x in add{A, Omega^n(mod A)}. Exact for n <= 2; for larger n the n-torsionfree
// test is sufficient and membership in Omega^2 is necessary, and SyzygyUndecided
// is thrown when neither settles the question.
template <class F>
bool is_nth_syzygy(const Mod<F>& x, int n, Rng& rng);
// n-torsionfree: successive minimal left add(A)-approximations are injective n times
template <class F>
bool is_torsionfree(const Mod<F>& x, int n);

// dimension vector as a string "(1,2,2,1)"
std::string dims_string(const std::vector<int>& d);

}  // namespace cmpreproj
