#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmpreproj/dynkin.hpp"
#include "cmpreproj/module.hpp"

namespace cmpreproj {

// pdim I^i(A) <= i (resp. <= i + 1) for 0 <= i < n
template <class F>
bool is_n_gorenstein(const AlgPtr<F>& a, int n, int bound, Rng& rng);
template <class F>
bool is_quasi_n_gorenstein(const AlgPtr<F>& a, int n, int bound, Rng& rng);
// the same condition for the minimal injective coresolution of a module
template <class F>
bool is_module_n_gorenstein(const Mod<F>& m, int n, int bound, Rng& rng);
// pdim of the first n terms of the minimal injective coresolution
template <class F>
std::vector<DimReport> coresolution_pdims(const Mod<F>& m, int n, int bound, Rng& rng);

// basic part of (P_0(DA) + ... + P_{n-1}(DA)) + Omega^n(DA)
template <class F>
Mod<F> gorenstein_cotilting(const AlgPtr<F>& a, int n, int bound, Rng& rng);

// injective dimension d when u is cotilting, nullopt otherwise
template <class F>
std::optional<int> is_cotilting(const Mod<F>& u, int bound, Rng& rng);
template <class F>
bool is_ext_maximal(const Mod<F>& u, Rng& rng);

// v + kernels of the minimal right add(v)-approximations of the summands of u outside add(v)
template <class F>
Mod<F> mutate_plus(const Mod<F>& u, const Mod<F>& v, Rng& rng);

// 0 -> U -> I' -> I'' -> I_x -> 0 from two approximations by the frozen injectives
template <class F>
struct FourTermSequence {
  int vertex = 0;  // 1-based label in the diagram
  Mod<F> kernel, first_source, second_source, injective;
  ModuleMap<F> first, second;  // first: I'' -> I_x, second: I' -> ker(first)
};

template <class F>
struct DualizingCandidate {
  DynkinSpec spec;
  FrozenSplit split;
  AlgPtr<F> algebra;
  std::vector<Mod<F>> frozen_injectives;
  std::vector<FourTermSequence<F>> sequences;  // one per mutable vertex
  Mod<F> module;                               // basic
};

// W = mu^+ applied twice to DA with respect to the frozen injectives over Pi(d, J)
template <class F>
DualizingCandidate<F> dualizing_candidate(const F& f, const DynkinSpec& d, const VertexSet& j, Rng& rng);

// End_A(W) with product "f then g"; vertices are the indecomposable summands of W
template <class F>
struct EndAlgebra {
  AlgPtr<F> algebra;
  std::vector<Mod<F>> summands;
  Mod<F> module;  // W as a right module over `algebra`
};
template <class F>
EndAlgebra<F> end_algebra(const Mod<F>& w, Rng& rng);

enum class Verdict { Pass, Fail };
const char* verdict_string(Verdict v);

template <class F>
struct Certificate {
  Verdict cond_i = Verdict::Fail, cond_ii = Verdict::Fail, cond_iii = Verdict::Fail;
  // cond_iii failed for a reason that rules out End_A(W) = A
  bool cond_iii_definitive = false;
  std::optional<ModuleMap<F>> witness;  // h : DA -> W
  DimReport idim_w, idim_w_end;         // over A and over the endomorphism side
  std::vector<std::string> notes;

  bool passed() const {
    return cond_i == Verdict::Pass && cond_ii == Verdict::Pass && cond_iii == Verdict::Pass;
  }
};

template <class F>
Certificate<F> certify_dualizing(const Mod<F>& w, int bound, Rng& rng);

// entry (i,j) = dim Hom(W_i, W_j); the summands are taken in the given order
template <class F>
std::vector<std::vector<int>> end_cartan(const std::vector<Mod<F>>& summands);
// some vertex permutation p with x[i][j] = y[p i][p j]
std::optional<std::vector<int>> matching_permutation(const std::vector<std::vector<int>>& x,
                                                     const std::vector<std::vector<int>>& y);

// Ext^i(x, w) = 0 for 1 <= i <= d
template <class F>
bool in_cm(const Mod<F>& x, const Mod<F>& w, int d);

// eAe for e running over the projective-injective vertices; requires domdim >= 2
template <class F>
AlgPtr<F> base_algebra(const AlgPtr<F>& a, int bound);

struct Triple {
  DimReport idim, fidim, domdim;
  std::string str() const;  // "inf,2,2"
  bool operator==(const Triple& o) const;
};

// case analysis of the classification
Triple predicted_triple(const DynkinSpec& d, const VertexSet& j);

template <class F>
struct Classification {
  Triple predicted, computed;
  Certificate<F> certificate;
  bool match = false;
};
template <class F>
Classification<F> classify_dynkin(const F& f, const DynkinSpec& d, const VertexSet& j, int bound, Rng& rng);

template <class F>
struct SampleOutcome {
  std::string label;
  Mod<F> module;
  bool cm = false;
  bool syzygy = false;
  bool undecided = false;  // syzygy membership undecided for d > 2
};
template <class F>
struct SyzygyCmReport {
  std::vector<SampleOutcome<F>> samples;
  int agree = 0, disagree = 0, undecided = 0;
  bool all_agree() const { return disagree == 0 && undecided == 0; }
};

// simples, their syzygies to depth 4, summands of W and DA, and random extensions
template <class F>
std::vector<std::pair<std::string, Mod<F>>> sample_corpus(const Mod<F>& w, int dim_cap, Rng& rng);
template <class F>
SyzygyCmReport<F> check_syzygy_cm_equality(const Mod<F>& w, int d, Rng& rng, int dim_cap = 24);

}  // namespace cmpreproj
