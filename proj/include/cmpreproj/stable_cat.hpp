#pragma once

#include <string>
#include <vector>

#include "cmpreproj/dynkin.hpp"
#include "cmpreproj/module.hpp"

namespace cmpreproj {

// proj Pi viewed as the stable category of the singularity: objects X_1..X_n,
// Hom(X_i, X_j) = e_j Pi e_i, composition is multiplication, suspension is iota.
template <class F>
struct StableCat {
  DynkinSpec spec;
  AlgPtr<F> pi;

  int hom_dim(int i, int j) const;
  int suspend(int i) const { return spec.involution(i); }
};

template <class F>
StableCat<F> stable_cat(const F& f, const DynkinSpec& d);

// dim of Hom(X_i, X_j) modulo maps factoring through add{X_k : k in through}
template <class F>
int quotient_hom_dim(const StableCat<F>& c, int i, int j, const VertexSet& through);

// (c): no nonzero maps between X_{iota i} and X_j (both directions) modulo the frozen part
template <class F>
bool check_axiom_c(const StableCat<F>& c, const VertexSet& J);

struct AxiomDWitness {
  VertexSet through;  // J_f minus one vertex
  int from_suspended_source = 0, from_suspended_target = 0;  // pair with Hom(X_{iota i}, X_j) != 0
  int to_suspended_source = 0, to_suspended_target = 0;      // pair with Hom(X_i, X_{iota j}) != 0
  bool ok = false;
};

// (d): for every maximal proper subset F' of J_f both quotient pairings are nonzero
template <class F>
std::vector<AxiomDWitness> axiom_d_witnesses(const StableCat<F>& c, const VertexSet& J);
template <class F>
bool check_axiom_d(const StableCat<F>& c, const VertexSet& J);

// basis elements of Pi kept by the contraction at `subset` (0-based), in order
template <class F>
std::vector<int> contraction_embedding(const FDAlgebra<F>& pi, const std::vector<int>& subset);

// M e as a module over e Pi e, where `a` is the contraction at `subset` (0-based)
template <class F>
Mod<F> restrict_module(const Mod<F>& m, const AlgPtr<F>& a, const std::vector<int>& subset);

// T(M, X_i) = e_i Pi e as a right module over e Pi e; i is 1-based
template <class F>
Mod<F> hom_module_over_contraction(const StableCat<F>& c, const AlgPtr<F>& a, const VertexSet& J, int i);

}  // namespace cmpreproj
