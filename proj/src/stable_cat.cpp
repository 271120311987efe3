#include "cmpreproj/stable_cat.hpp"

#include "cmpreproj/errors.hpp"

namespace cmpreproj {

template <class F>
int StableCat<F>::hom_dim(int i, int j) const {
  return static_cast<int>(pi->block(j - 1, i - 1).size());
}

template <class F>
StableCat<F> stable_cat(const F& f, const DynkinSpec& d) {
  return {d, preprojective_algebra(f, d)};
}

template <class F>
int quotient_hom_dim(const StableCat<F>& c, int i, int j, const VertexSet& through) {
  const auto& pi = *c.pi;
  const F& f = pi.field();
  const auto& target = pi.block(j - 1, i - 1);
  const int d = static_cast<int>(target.size());
  if (d == 0) return 0;
  std::vector<int> pos(pi.dim(), -1);
  for (int k = 0; k < d; ++k) pos[target[k]] = k;
  std::vector<Vec<F>> rows;
  for (int v : through) {
    // g in e_j Pi e_v after h in e_v Pi e_i
    for (int g : pi.block(j - 1, v - 1))
      for (int h : pi.block(v - 1, i - 1)) {
        const auto& p = pi.product(g, h);
        if (p.empty()) continue;
        Vec<F> r(d, f.zero());
        for (auto& [z, coef] : p) r[pos[z]] = coef;
        rows.push_back(std::move(r));
      }
  }
  if (rows.empty()) return d;
  return d - rank(Matrix<F>::from_rows(f, d, rows));
}

template <class F>
bool check_axiom_c(const StableCat<F>& c, const VertexSet& J) {
  auto fr = frozen_split(c.spec, J).frozen;
  for (int i : J)
    for (int j : J) {
      if (quotient_hom_dim(c, c.suspend(i), j, fr) != 0) return false;
      if (quotient_hom_dim(c, i, c.suspend(j), fr) != 0) return false;
    }
  return true;
}

template <class F>
std::vector<AxiomDWitness> axiom_d_witnesses(const StableCat<F>& c, const VertexSet& J) {
  auto fr = frozen_split(c.spec, J).frozen;
  std::vector<AxiomDWitness> out;
  for (std::size_t drop = 0; drop < fr.size(); ++drop) {
    AxiomDWitness w;
    for (std::size_t k = 0; k < fr.size(); ++k)
      if (k != drop) w.through.push_back(fr[k]);
    bool first = false, second = false;
    for (int i : J)
      for (int j : J) {
        if (!first && quotient_hom_dim(c, c.suspend(i), j, w.through) > 0) {
          first = true;
          w.from_suspended_source = c.suspend(i);
          w.from_suspended_target = j;
        }
        if (!second && quotient_hom_dim(c, i, c.suspend(j), w.through) > 0) {
          second = true;
          w.to_suspended_source = i;
          w.to_suspended_target = c.suspend(j);
        }
      }
    w.ok = first && second;
    out.push_back(std::move(w));
  }
  return out;
}

template <class F>
bool check_axiom_d(const StableCat<F>& c, const VertexSet& J) {
  for (auto& w : axiom_d_witnesses(c, J))
    if (!w.ok) return false;
  return true;
}

template <class F>
std::vector<int> contraction_embedding(const FDAlgebra<F>& pi, const std::vector<int>& subset) {
  std::vector<bool> in(pi.vertex_count(), false);
  for (int v : subset) in[v] = true;
  std::vector<int> keep;
  for (int x = 0; x < pi.dim(); ++x)
    if (in[pi.tag(x).source] && in[pi.tag(x).target]) keep.push_back(x);
  return keep;
}

template <class F>
Mod<F> restrict_module(const Mod<F>& m, const AlgPtr<F>& a, const std::vector<int>& subset) {
  const auto& pi = *m->algebra();
  auto keep = contraction_embedding(pi, subset);
  if (static_cast<int>(keep.size()) != a->dim()) throw AlgebraMismatch("contraction does not match the subset");
  std::vector<int> dims;
  for (int v : subset) dims.push_back(m->dims()[v]);
  std::vector<Matrix<F>> act;
  for (int x : keep) act.push_back(m->act(x));
  return std::make_shared<FDModule<F>>(a, dims, std::move(act));
}

template <class F>
Mod<F> hom_module_over_contraction(const StableCat<F>& c, const AlgPtr<F>& a, const VertexSet& J, int i) {
  std::vector<int> subset;
  for (int v : J) subset.push_back(v - 1);
  return restrict_module(projective_module(c.pi, i - 1), a, subset);
}

#define CMPREPROJ_INSTANTIATE(F)                                                                \
  template struct StableCat<F>;                                                                 \
  template StableCat<F> stable_cat<F>(const F&, const DynkinSpec&);                             \
  template int quotient_hom_dim<F>(const StableCat<F>&, int, int, const VertexSet&);            \
  template bool check_axiom_c<F>(const StableCat<F>&, const VertexSet&);                        \
  template std::vector<AxiomDWitness> axiom_d_witnesses<F>(const StableCat<F>&, const VertexSet&); \
  template bool check_axiom_d<F>(const StableCat<F>&, const VertexSet&);                        \
  template std::vector<int> contraction_embedding<F>(const FDAlgebra<F>&, const std::vector<int>&); \
  template Mod<F> restrict_module<F>(const Mod<F>&, const AlgPtr<F>&, const std::vector<int>&); \
  template Mod<F> hom_module_over_contraction<F>(const StableCat<F>&, const AlgPtr<F>&, const VertexSet&, int);

CMPREPROJ_INSTANTIATE(PrimeField)
CMPREPROJ_INSTANTIATE(RationalField)

}  // namespace cmpreproj
