#include "cmpreproj/module.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cmpreproj/errors.hpp"

namespace cmpreproj {

std::string dims_string(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

namespace {

// position of each basis element inside its block e_s A e_t
template <class F>
std::vector<int> block_positions(const FDAlgebra<F>& a) {
  std::vector<int> pos(a.dim(), 0);
  for (int s = 0; s < a.vertex_count(); ++s)
    for (int t = 0; t < a.vertex_count(); ++t) {
      const auto& b = a.block(s, t);
      for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = static_cast<int>(i);
    }
  return pos;
}

// row offsets of the summand e_{v_k} A inside the vertex-w space of P0
std::vector<std::vector<int>> p0_offsets(const std::vector<int>& gen_vertex, int n,
                                         const std::function<int(int, int)>& block_size) {
  std::vector<std::vector<int>> off(n, std::vector<int>(gen_vertex.size() + 1, 0));
  for (int w = 0; w < n; ++w)
    for (std::size_t k = 0; k < gen_vertex.size(); ++k)
      off[w][k + 1] = off[w][k] + block_size(gen_vertex[k], w);
  return off;
}

// Action of P0 = sum_k e_{v_k} A on sparse rows, without materializing P0.
template <class F>
struct FreeAction {
  const FDAlgebra<F>& a;
  std::vector<int> gen_vertex;
  std::vector<int> pos;
  std::vector<std::vector<int>> off;
  std::vector<std::vector<std::pair<int, int>>> rows;  // per vertex: (k, basis element)

  FreeAction(const FDAlgebra<F>& alg, std::vector<int> gens) : a(alg), gen_vertex(std::move(gens)) {
    const int n = a.vertex_count();
    pos = block_positions(a);
    off = p0_offsets(gen_vertex, n, [&](int v, int w) { return static_cast<int>(a.block(v, w).size()); });
    rows.assign(n, {});
    for (int w = 0; w < n; ++w)
      for (std::size_t k = 0; k < gen_vertex.size(); ++k)
        for (int x : a.block(gen_vertex[k], w)) rows[w].emplace_back(static_cast<int>(k), x);
  }
  int size(int w) const { return static_cast<int>(rows[w].size()); }

  // v in P0_s times basis element x of e_s A e_t
  Vec<F> apply(const typename F::Elem* v, int s, int x) const {
    const F& f = a.field();
    const int t = a.tag(x).target;
    Vec<F> out(size(t), f.zero());
    for (int i = 0; i < size(s); ++i) {
      if (f.is_zero(v[i])) continue;
      auto [k, y] = rows[s][i];
      for (auto& [z, c] : a.product(y, x)) {
        auto& o = out[off[t][k] + pos[z]];
        o = f.add(o, f.mul(v[i], c));
      }
    }
    return out;
  }
};

template <class F>
Subspace<F> span_rows(const F& f, int cols, const std::vector<Vec<F>>& rows) {
  if (rows.empty()) return Subspace<F>(f, cols);
  return Subspace<F>::span(Matrix<F>::from_rows(f, cols, rows));
}

// a basis of a complement of `small` inside `big` made of elements of `big`
template <class F>
std::vector<Vec<F>> complement_in(const Subspace<F>& big, const Subspace<F>& small) {
  const F& f = big.field();
  std::vector<Vec<F>> red;
  for (int i = 0; i < big.dim(); ++i) {
    auto r = small.reduce(big.basis().row(i));
    if (!vec_is_zero(f, r)) red.push_back(std::move(r));
  }
  auto sp = span_rows(f, big.ambient(), red);
  std::vector<Vec<F>> out;
  for (int i = 0; i < sp.dim(); ++i) out.push_back(sp.basis().row(i));
  return out;
}

template <class F>
std::vector<Subspace<F>> radical_spaces_of(const FDModule<F>& m) {
  const auto& a = *m.algebra();
  const F& f = m.field();
  const int n = a.vertex_count();
  std::vector<std::vector<Vec<F>>> rows(n);
  for (int g : a.generators()) {
    const auto& t = a.tag(g);
    const auto& act = m.act(g);
    for (int i = 0; i < act.rows(); ++i) {
      auto r = act.row(i);
      if (!vec_is_zero(f, r)) rows[t.target].push_back(std::move(r));
    }
  }
  std::vector<Subspace<F>> out;
  for (int w = 0; w < n; ++w) out.push_back(span_rows(f, m.dims()[w], rows[w]));
  return out;
}

// submodule of m spanned per vertex by rref bases
template <class F>
Mod<F> sub_from_spaces(const FDModule<F>& m, const std::vector<Subspace<F>>& parts) {
  const auto& a = *m.algebra();
  const F& f = m.field();
  std::vector<int> dims;
  for (auto& p : parts) dims.push_back(p.dim());
  std::vector<Matrix<F>> act(a.dim());
  for (int x = 0; x < a.dim(); ++x) {
    const auto& t = a.tag(x);
    const auto& ps = parts[t.source];
    const auto& pt = parts[t.target];
    if (ps.dim() == 0 || pt.dim() == 0) {
      act[x] = Matrix<F>(f, ps.dim(), pt.dim());
      continue;
    }
    act[x] = (ps.basis() * m.act(x)).select_cols(pt.pivots());
  }
  return std::make_shared<FDModule<F>>(m.algebra(), dims, std::move(act));
}

}  // namespace

// ---------------------------------------------------------------- FDModule

template <class F>
FDModule<F>::FDModule(AlgPtr<F> a, std::vector<int> dims, std::vector<Matrix<F>> action)
    : alg_(std::move(a)), dims_(std::move(dims)), action_(std::move(action)) {
  if (static_cast<int>(dims_.size()) != alg_->vertex_count())
    throw InvalidModule("dimension vector length differs from the number of vertices");
  if (static_cast<int>(action_.size()) != alg_->dim()) throw InvalidModule("one action matrix per basis element required");
  for (int d : dims_) {
    if (d < 0) throw InvalidModule("negative dimension");
    total_ += d;
  }
  for (int x = 0; x < alg_->dim(); ++x) {
    const auto& t = alg_->tag(x);
    if (action_[x].rows() != dims_[t.source] || action_[x].cols() != dims_[t.target])
      throw InvalidModule("action matrix of basis element " + std::to_string(x) + " has the wrong shape");
  }
}

template <class F>
bool FDModule<F>::verify(int samples, Rng* rng) const {
  const auto& a = *alg_;
  const F& f = field();
  for (int v = 0; v < a.vertex_count(); ++v)
    if (action_[v] != Matrix<F>::identity(f, dims_[v])) return false;
  auto check = [&](int x, int y) {
    const auto& tx = a.tag(x);
    const auto& ty = a.tag(y);
    Matrix<F> rhs(f, dims_[tx.source], dims_[ty.target]);
    for (auto& [z, c] : a.product(x, y)) rhs.add_scaled(action_[z], c);
    return action_[x] * action_[y] == rhs;
  };
  if (samples <= 0) {
    for (int x = 0; x < a.dim(); ++x)
      for (int y : a.from(a.tag(x).target))
        if (!check(x, y)) return false;
    return true;
  }
  for (int i = 0; i < samples; ++i) {
    int x = static_cast<int>((*rng)() % a.dim());
    const auto& ys = a.from(a.tag(x).target);
    if (!check(x, ys[(*rng)() % ys.size()])) return false;
  }
  return true;
}

template <class F>
std::vector<int> ModulePresentation<F>::kernel_dims() const {
  std::vector<int> d;
  for (auto& k : kernel) d.push_back(k.dim());
  return d;
}

template <class F>
const ModulePresentation<F>& FDModule<F>::presentation() const {
  std::call_once(pres_once_, [this] {
    const auto& a = *alg_;
    const F& f = field();
    const int n = a.vertex_count();
    auto p = std::make_unique<ModulePresentation<F>>();
    auto rad = radical_spaces_of(*this);
    for (int v = 0; v < n; ++v)
      for (int c : rad[v].non_pivot_columns()) {
        Vec<F> m(dims_[v], f.zero());
        m[c] = f.one();
        p->gen_vertex.push_back(v);
        p->gen_vec.push_back(std::move(m));
      }
    FreeAction<F> fa(a, p->gen_vertex);
    p->rows = fa.rows;
    for (int w = 0; w < n; ++w) {
      const int r = fa.size(w);
      Matrix<F> pi(f, r, dims_[w]);
      for (int i = 0; i < r; ++i) {
        auto [k, x] = fa.rows[w][i];
        pi.set_row(i, vec_mul(p->gen_vec[k], action_[x]));
      }
      if (dims_[w] > 0) {
        p->section.push_back(left_inverse(pi));
      } else {
        p->section.push_back(Matrix<F>(f, 0, r));
      }
      p->kernel.push_back(dims_[w] > 0 ? left_kernel(pi) : Subspace<F>::full(f, r));
      p->pi.push_back(std::move(pi));
    }
    // relations: complement of rad K inside K
    std::vector<std::vector<Vec<F>>> radk(n);
    for (int g : a.generators()) {
      const auto& t = a.tag(g);
      const auto& ks = p->kernel[t.source];
      for (int i = 0; i < ks.dim(); ++i) {
        auto r = fa.apply(ks.basis().row_ptr(i), t.source, g);
        if (!vec_is_zero(f, r)) radk[t.target].push_back(std::move(r));
      }
    }
    for (int w = 0; w < n; ++w) {
      auto rk = span_rows(f, fa.size(w), radk[w]);
      for (auto& v : complement_in(p->kernel[w], rk)) p->relations.emplace_back(w, std::move(v));
    }
    pres_ = std::move(p);
  });
  return *pres_;
}

// ---------------------------------------------------------------- maps

template <class F>
int ModuleMap<F>::rank() const {
  int r = 0;
  for (auto& b : blocks) r += cmpreproj::rank(b);
  return r;
}

template <class F>
bool ModuleMap<F>::is_zero() const {
  for (auto& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

template <class F>
bool ModuleMap<F>::is_injective() const {
  return rank() == src->dim();
}

template <class F>
bool ModuleMap<F>::is_surjective() const {
  return rank() == tgt->dim();
}

template <class F>
bool ModuleMap<F>::verify() const {
  if (src->algebra() != tgt->algebra()) return false;
  const auto& a = *src->algebra();
  for (int v = 0; v < a.vertex_count(); ++v)
    if (blocks[v].rows() != src->dims()[v] || blocks[v].cols() != tgt->dims()[v]) return false;
  for (int x = 0; x < a.dim(); ++x) {
    const auto& t = a.tag(x);
    if (blocks[t.source] * tgt->act(x) != src->act(x) * blocks[t.target]) return false;
  }
  return true;
}

template <class F>
ModuleMap<F> zero_map(const Mod<F>& s, const Mod<F>& t) {
  if (s->algebra() != t->algebra()) throw AlgebraMismatch("zero_map");
  ModuleMap<F> m{s, t, {}};
  for (int v = 0; v < s->algebra()->vertex_count(); ++v)
    m.blocks.emplace_back(s->field(), s->dims()[v], t->dims()[v]);
  return m;
}

template <class F>
ModuleMap<F> identity_map(const Mod<F>& m) {
  ModuleMap<F> id{m, m, {}};
  for (int d : m->dims()) id.blocks.push_back(Matrix<F>::identity(m->field(), d));
  return id;
}

template <class F>
ModuleMap<F> compose(const ModuleMap<F>& f, const ModuleMap<F>& g) {
  if (f.tgt->algebra() != g.src->algebra()) throw AlgebraMismatch("compose");
  ModuleMap<F> h{f.src, g.tgt, {}};
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] * g.blocks[v]);
  return h;
}

template <class F>
ModuleMap<F> add_maps(const ModuleMap<F>& f, const ModuleMap<F>& g, const typename F::Elem& c) {
  ModuleMap<F> h = f;
  for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v].add_scaled(g.blocks[v], c);
  return h;
}

// ---------------------------------------------------------------- constructions

template <class F>
Mod<F> zero_module(const AlgPtr<F>& a) {
  std::vector<Matrix<F>> act;
  for (int x = 0; x < a->dim(); ++x) act.emplace_back(a->field(), 0, 0);
  return std::make_shared<FDModule<F>>(a, std::vector<int>(a->vertex_count(), 0), std::move(act));
}

template <class F>
Mod<F> simple_module(const AlgPtr<F>& a, int v) {
  if (v < 0 || v >= a->vertex_count()) throw InvalidInput("vertex out of range");
  std::vector<int> dims(a->vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix<F>> act;
  for (int x = 0; x < a->dim(); ++x) {
    const auto& t = a->tag(x);
    act.emplace_back(a->field(), dims[t.source], dims[t.target]);
  }
  act[v](0, 0) = a->field().one();
  return std::make_shared<FDModule<F>>(a, dims, std::move(act));
}

template <class F>
Mod<F> projective_module(const AlgPtr<F>& a, int v) {
  if (v < 0 || v >= a->vertex_count()) throw InvalidInput("vertex out of range");
  const F& f = a->field();
  auto pos = block_positions(*a);
  std::vector<int> dims;
  for (int w = 0; w < a->vertex_count(); ++w) dims.push_back(static_cast<int>(a->block(v, w).size()));
  std::vector<Matrix<F>> act;
  for (int x = 0; x < a->dim(); ++x) {
    const auto& t = a->tag(x);
    Matrix<F> m(f, dims[t.source], dims[t.target]);
    const auto& rows = a->block(v, t.source);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (auto& [z, c] : a->product(rows[i], x)) m(static_cast<int>(i), pos[z]) = c;
    act.push_back(std::move(m));
  }
  return std::make_shared<FDModule<F>>(a, dims, std::move(act));
}

template <class F>
Mod<F> dual(const Mod<F>& m) {
  auto op = opposite(m->algebra());
  std::vector<Matrix<F>> act;
  for (int x = 0; x < op->dim(); ++x) act.push_back(m->act(x).transpose());
  return std::make_shared<FDModule<F>>(op, m->dims(), std::move(act));
}

template <class F>
ModuleMap<F> dual_map(const ModuleMap<F>& f, const Mod<F>& dtgt, const Mod<F>& dsrc) {
  if (dtgt->dims() != f.tgt->dims() || dsrc->dims() != f.src->dims() || dtgt->algebra() != dsrc->algebra())
    throw InvalidModule("dual_map: supplied duals do not match");
  ModuleMap<F> d{dtgt, dsrc, {}};
  for (auto& b : f.blocks) d.blocks.push_back(b.transpose());
  return d;
}

template <class F>
Mod<F> injective_module(const AlgPtr<F>& a, int v) {
  return dual(projective_module(opposite(a), v));
}

template <class F>
Mod<F> regular_module(const AlgPtr<F>& a) {
  std::vector<Mod<F>> ps;
  for (int v = 0; v < a->vertex_count(); ++v) ps.push_back(projective_module(a, v));
  return direct_sum(a, ps);
}

template <class F>
Mod<F> dual_regular_module(const AlgPtr<F>& a) {
  return dual(regular_module(opposite(a)));
}

template <class F>
RegularAndInjectives<F> regular_and_injectives(const AlgPtr<F>& a) {
  RegularAndInjectives<F> r;
  for (int v = 0; v < a->vertex_count(); ++v) {
    r.projectives.push_back(projective_module(a, v));
    r.injectives.push_back(injective_module(a, v));
  }
  r.regular = direct_sum(a, r.projectives);
  return r;
}

template <class F>
Mod<F> module_from_arrows(const AlgPtr<F>& a, const std::vector<int>& dims,
                          const std::map<std::string, Matrix<F>>& arrows) {
  const F& f = a->field();
  if (static_cast<int>(dims.size()) != a->vertex_count()) throw InvalidModule("dimension vector has the wrong length");
  const auto& labels = a->arrows();
  if (labels.empty() && a->dim() > a->vertex_count())
    throw InvalidModule("algebra has no arrow labels; use full action matrices");
  for (auto& [lab, m] : arrows) {
    auto it = labels.find(lab);
    if (it == labels.end()) throw InvalidModule("unknown arrow " + lab);
    const auto& t = a->tag(it->second);
    if (m.rows() != dims[t.source] || m.cols() != dims[t.target])
      throw InvalidModule("matrix of arrow " + lab + " has the wrong shape");
  }
  auto arrow_matrix = [&](const std::string& lab) {
    auto it = arrows.find(lab);
    if (it != arrows.end()) return it->second;
    const auto& t = a->tag(labels.at(lab));
    return Matrix<F>(f, dims[t.source], dims[t.target]);
  };
  std::vector<Matrix<F>> act;
  for (int x = 0; x < a->dim(); ++x) {
    const auto& t = a->tag(x);
    if (x < a->vertex_count()) {
      act.push_back(Matrix<F>::identity(f, dims[x]));
      continue;
    }
    Matrix<F> m = Matrix<F>::identity(f, dims[t.source]);
    std::size_t i = 0;
    const auto& w = t.word;
    while (i < w.size()) {
      std::string best;
      for (auto& [lab, idx] : labels)
        if (lab.size() > best.size() && w.compare(i, lab.size(), lab) == 0) best = lab;
      if (best.empty()) throw InvalidModule("basis word " + w + " is not a path in the arrows");
      m = m * arrow_matrix(best);
      i += best.size();
    }
    act.push_back(std::move(m));
  }
  auto mod = std::make_shared<FDModule<F>>(a, dims, std::move(act));
  if (!mod->verify(0, nullptr)) throw InvalidModule("arrow matrices violate the relations");
  return mod;
}

template <class F>
SumData<F> direct_sum_data(const AlgPtr<F>& a, const std::vector<Mod<F>>& parts) {
  const F& f = a->field();
  const int n = a->vertex_count();
  std::vector<int> dims(n, 0);
  std::vector<std::vector<int>> off(parts.size(), std::vector<int>(n, 0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i]->algebra() != a) throw AlgebraMismatch("direct_sum");
    for (int v = 0; v < n; ++v) {
      off[i][v] = dims[v];
      dims[v] += parts[i]->dims()[v];
    }
  }
  std::vector<Matrix<F>> act;
  for (int x = 0; x < a->dim(); ++x) {
    const auto& t = a->tag(x);
    Matrix<F> m(f, dims[t.source], dims[t.target]);
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i]->dims()[t.source] && parts[i]->dims()[t.target])
        m.set_block(off[i][t.source], off[i][t.target], parts[i]->act(x));
    act.push_back(std::move(m));
  }
  SumData<F> sd;
  sd.sum = std::make_shared<FDModule<F>>(a, dims, std::move(act));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ModuleMap<F> inc{parts[i], sd.sum, {}}, proj{sd.sum, parts[i], {}};
    for (int v = 0; v < n; ++v) {
      const int d = parts[i]->dims()[v];
      Matrix<F> in(f, d, dims[v]), pr(f, dims[v], d);
      for (int j = 0; j < d; ++j) {
        in(j, off[i][v] + j) = f.one();
        pr(off[i][v] + j, j) = f.one();
      }
      inc.blocks.push_back(std::move(in));
      proj.blocks.push_back(std::move(pr));
    }
    sd.inclusions.push_back(std::move(inc));
    sd.projections.push_back(std::move(proj));
  }
  return sd;
}

template <class F>
Mod<F> direct_sum(const AlgPtr<F>& a, const std::vector<Mod<F>>& parts) {
  if (parts.size() == 1) return parts[0];
  return direct_sum_data(a, parts).sum;
}

template <class F>
SubData<F> submodule(const Mod<F>& m, const std::vector<Subspace<F>>& parts) {
  SubData<F> sd;
  sd.module = sub_from_spaces(*m, parts);
  sd.map = ModuleMap<F>{sd.module, m, {}};
  for (auto& p : parts) sd.map.blocks.push_back(p.basis());
  return sd;
}

template <class F>
SubData<F> quotient(const Mod<F>& m, const std::vector<Subspace<F>>& parts) {
  const auto& a = *m->algebra();
  const F& f = m->field();
  const int n = a.vertex_count();
  std::vector<std::vector<int>> keep(n);
  std::vector<Matrix<F>> proj;
  std::vector<int> dims;
  for (int v = 0; v < n; ++v) {
    keep[v] = parts[v].non_pivot_columns();
    dims.push_back(static_cast<int>(keep[v].size()));
    Matrix<F> p(f, m->dims()[v], dims[v]);
    for (int i = 0; i < m->dims()[v]; ++i) {
      Vec<F> e(m->dims()[v], f.zero());
      e[i] = f.one();
      auto r = parts[v].reduce(e);
      for (int j = 0; j < dims[v]; ++j) p(i, j) = r[keep[v][j]];
    }
    proj.push_back(std::move(p));
  }
  std::vector<Matrix<F>> act;
  for (int x = 0; x < a.dim(); ++x) {
    const auto& t = a.tag(x);
    if (dims[t.source] == 0 || dims[t.target] == 0) {
      act.emplace_back(f, dims[t.source], dims[t.target]);
      continue;
    }
    act.push_back(m->act(x).select_rows(keep[t.source]) * proj[t.target]);
  }
  SubData<F> sd;
  sd.module = std::make_shared<FDModule<F>>(m->algebra(), dims, std::move(act));
  sd.map = ModuleMap<F>{m, sd.module, std::move(proj)};
  return sd;
}

template <class F>
SubData<F> kernel(const ModuleMap<F>& f) {
  std::vector<Subspace<F>> parts;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    if (f.blocks[v].cols() == 0)
      parts.push_back(Subspace<F>::full(f.src->field(), f.blocks[v].rows()));
    else
      parts.push_back(left_kernel(f.blocks[v]));
  }
  return submodule(f.src, parts);
}

template <class F>
SubData<F> image(const ModuleMap<F>& f) {
  std::vector<Subspace<F>> parts;
  for (auto& b : f.blocks) parts.push_back(Subspace<F>::span(b));
  return submodule(f.tgt, parts);
}

template <class F>
SubData<F> cokernel(const ModuleMap<F>& f) {
  std::vector<Subspace<F>> parts;
  for (auto& b : f.blocks) parts.push_back(Subspace<F>::span(b));
  return quotient(f.tgt, parts);
}

template <class F>
std::vector<Subspace<F>> radical_spaces(const Mod<F>& m) {
  return radical_spaces_of(*m);
}

template <class F>
std::vector<Subspace<F>> socle_spaces(const Mod<F>& m) {
  const auto& a = *m->algebra();
  const F& f = m->field();
  std::vector<Subspace<F>> out;
  for (int v = 0; v < a.vertex_count(); ++v) {
    std::vector<Matrix<F>> acts;
    int cols = 0;
    for (int g : a.generators())
      if (a.tag(g).source == v && m->act(g).cols() > 0) {
        acts.push_back(m->act(g));
        cols += m->act(g).cols();
      }
    if (cols == 0)
      out.push_back(Subspace<F>::full(f, m->dims()[v]));
    else
      out.push_back(left_kernel(Matrix<F>::hstack(f, m->dims()[v], acts)));
  }
  return out;
}

template <class F>
SubData<F> radical(const Mod<F>& m) {
  return submodule(m, radical_spaces(m));
}

template <class F>
SubData<F> top(const Mod<F>& m) {
  return quotient(m, radical_spaces(m));
}

template <class F>
SubData<F> socle(const Mod<F>& m) {
  return submodule(m, socle_spaces(m));
}

template <class F>
std::vector<int> top_vector(const Mod<F>& m) {
  std::vector<int> t(m->algebra()->vertex_count(), 0);
  for (int v : m->presentation().gen_vertex) ++t[v];
  return t;
}

template <class F>
std::vector<int> socle_vector(const Mod<F>& m) {
  std::vector<int> s;
  for (auto& sp : socle_spaces(m)) s.push_back(sp.dim());
  return s;
}

template <class F>
int loewy_length(const Mod<F>& m) {
  int ll = 0;
  Mod<F> cur = m;
  while (!cur->is_zero()) {
    cur = radical(cur).module;
    ++ll;
  }
  return ll;
}

// ---------------------------------------------------------------- Hom

template <class F>
HomSpace<F>::HomSpace(Mod<F> src, Mod<F> tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {
  if (src_->algebra() != tgt_->algebra()) throw AlgebraMismatch("Hom between modules over different algebras");
  const F& f = src_->field();
  const auto& p = src_->presentation();
  const auto& nd = tgt_->dims();
  offset_.assign(p.gen_vertex.size() + 1, 0);
  for (std::size_t k = 0; k < p.gen_vertex.size(); ++k) offset_[k + 1] = offset_[k] + nd[p.gen_vertex[k]];
  const int U = offset_.back();
  int cols = 0;
  for (auto& [w, kappa] : p.relations) cols += nd[w];
  if (U == 0) {
    sol_ = Subspace<F>(f, 0);
    return;
  }
  if (cols == 0) {
    sol_ = Subspace<F>::full(f, U);
    return;
  }
  Matrix<F> c(f, U, cols);
  int col0 = 0;
  for (auto& [w, kappa] : p.relations) {
    const int dw = nd[w];
    if (dw == 0) continue;
    for (std::size_t i = 0; i < kappa.size(); ++i) {
      if (f.is_zero(kappa[i])) continue;
      auto [k, x] = p.rows[w][i];
      const auto& act = tgt_->act(x);
      for (int r = 0; r < act.rows(); ++r) {
        const auto* src_row = act.row_ptr(r);
        auto* dst = c.row_ptr(offset_[k] + r) + col0;
        for (int j = 0; j < dw; ++j)
          if (!f.is_zero(src_row[j])) dst[j] = f.add(dst[j], f.mul(kappa[i], src_row[j]));
      }
    }
    col0 += dw;
  }
  sol_ = left_kernel(c);
}

template <class F>
ModuleMap<F> HomSpace<F>::from_images(const Vec<F>& y) const {
  const F& f = src_->field();
  const auto& p = src_->presentation();
  const int n = src_->algebra()->vertex_count();
  ModuleMap<F> m{src_, tgt_, {}};
  for (int w = 0; w < n; ++w) {
    const int r = static_cast<int>(p.rows[w].size());
    const int dm = src_->dims()[w], dn = tgt_->dims()[w];
    if (dm == 0 || dn == 0) {
      m.blocks.emplace_back(f, dm, dn);
      continue;
    }
    Matrix<F> phi(f, r, dn);
    for (int i = 0; i < r; ++i) {
      auto [k, x] = p.rows[w][i];
      const int vk = p.gen_vertex[k];
      Vec<F> yk(y.begin() + offset_[k], y.begin() + offset_[k] + tgt_->dims()[vk]);
      if (vec_is_zero(f, yk)) continue;
      phi.set_row(i, vec_mul(yk, tgt_->act(x)));
    }
    m.blocks.push_back(p.section[w] * phi);
  }
  return m;
}

template <class F>
ModuleMap<F> HomSpace<F>::map(int i) const {
  return from_images(sol_.basis().row(i));
}

template <class F>
ModuleMap<F> HomSpace<F>::combination(const Vec<F>& coeffs) const {
  const F& f = src_->field();
  Vec<F> y(sol_.ambient(), f.zero());
  for (int i = 0; i < dim(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    const auto* r = sol_.basis().row_ptr(i);
    for (int j = 0; j < sol_.ambient(); ++j) y[j] = f.add(y[j], f.mul(coeffs[i], r[j]));
  }
  return from_images(y);
}

template <class F>
ModuleMap<F> HomSpace<F>::random(Rng& rng) const {
  const F& f = src_->field();
  Vec<F> c(dim());
  for (auto& x : c) x = f.random(rng);
  return combination(c);
}

template <class F>
Vec<F> HomSpace<F>::images(const ModuleMap<F>& m) const {
  const auto& p = src_->presentation();
  Vec<F> y;
  y.reserve(offset_.back());
  for (std::size_t k = 0; k < p.gen_vertex.size(); ++k) {
    auto r = vec_mul(p.gen_vec[k], m.blocks[p.gen_vertex[k]]);
    y.insert(y.end(), r.begin(), r.end());
  }
  return y;
}

template <class F>
Vec<F> HomSpace<F>::coordinates(const ModuleMap<F>& m) const {
  return sol_.coordinates(images(m));
}

template <class F>
std::vector<ModuleMap<F>> HomSpace<F>::basis() const {
  std::vector<ModuleMap<F>> out;
  for (int i = 0; i < dim(); ++i) out.push_back(map(i));
  return out;
}

template <class F>
std::vector<ModuleMap<F>> hom_basis(const Mod<F>& m, const Mod<F>& n) {
  return HomSpace<F>(m, n).basis();
}

template <class F>
int hom_dim(const Mod<F>& m, const Mod<F>& n) {
  return HomSpace<F>(m, n).dim();
}

// ---------------------------------------------------------------- covers

template <class F>
ModuleMap<F> projective_cover(const Mod<F>& m) {
  const auto& p = m->presentation();
  std::vector<Mod<F>> ps;
  for (int v : p.gen_vertex) ps.push_back(projective_module(m->algebra(), v));
  Mod<F> p0 = ps.empty() ? zero_module(m->algebra()) : direct_sum(m->algebra(), ps);
  return ModuleMap<F>{p0, m, p.pi};
}

template <class F>
ModuleMap<F> injective_envelope(const Mod<F>& m) {
  auto dm = dual(m);
  auto c = projective_cover(dm);
  return dual_map(c, m, dual(c.src));
}

template <class F>
Mod<F> syzygy(const Mod<F>& m, int n) {
  Mod<F> cur = m;
  for (int i = 0; i < n; ++i) {
    const auto& p = cur->presentation();
    const auto& a = *cur->algebra();
    const F& f = cur->field();
    FreeAction<F> fa(a, p.gen_vertex);
    std::vector<int> dims = p.kernel_dims();
    std::vector<Matrix<F>> act;
    for (int x = 0; x < a.dim(); ++x) {
      const auto& t = a.tag(x);
      const auto& ks = p.kernel[t.source];
      const auto& kt = p.kernel[t.target];
      Matrix<F> mx(f, ks.dim(), kt.dim());
      if (ks.dim() && kt.dim())
        for (int r = 0; r < ks.dim(); ++r) {
          auto img = fa.apply(ks.basis().row_ptr(r), t.source, x);
          for (int j = 0; j < kt.dim(); ++j) mx(r, j) = img[kt.pivots()[j]];
        }
      act.push_back(std::move(mx));
    }
    cur = std::make_shared<FDModule<F>>(cur->algebra(), dims, std::move(act));
  }
  return cur;
}

template <class F>
Mod<F> cosyzygy(const Mod<F>& m, int n) {
  return dual(syzygy(dual(m), n));
}

template <class F>
std::vector<int> cover_vertices(const Mod<F>& m) {
  return top_vector(m);
}

template <class F>
std::vector<int> envelope_vertices(const Mod<F>& m) {
  return socle_vector(m);
}

template <class F>
bool is_projective(const Mod<F>& m) {
  const auto& p = m->presentation();
  int d = 0;
  for (int v : p.gen_vertex) d += static_cast<int>(m->algebra()->from(v).size());
  return d == m->dim();
}

template <class F>
bool is_injective(const Mod<F>& m) {
  return is_projective(dual(m));
}

template <class F>
bool is_selfinjective(const AlgPtr<F>& a) {
  for (int v = 0; v < a->vertex_count(); ++v)
    if (!is_projective(injective_module(a, v))) return false;
  return true;
}

template <class F>
Resolution<F> projective_resolution(const Mod<F>& m, int length) {
  Resolution<F> r{Direction::Projective, {}, {}, true};
  Mod<F> cur = m;
  std::optional<ModuleMap<F>> incl;
  for (int i = 0; i < length && !cur->is_zero(); ++i) {
    auto c = projective_cover(cur);
    r.terms.push_back(c.src);
    r.maps.push_back(incl ? compose(c, *incl) : c);
    auto k = kernel(c);
    incl = k.map;
    cur = k.module;
  }
  return r;
}

template <class F>
Resolution<F> injective_coresolution(const Mod<F>& m, int length) {
  auto pr = projective_resolution(dual(m), length);
  Resolution<F> r{Direction::Injective, {}, {}, true};
  for (auto& t : pr.terms) r.terms.push_back(dual(t));
  for (std::size_t i = 0; i < pr.maps.size(); ++i) {
    const Mod<F>& src = i == 0 ? m : r.terms[i - 1];
    r.maps.push_back(dual_map(pr.maps[i], src, r.terms[i]));
  }
  return r;
}

template <class F>
std::vector<std::vector<int>> projective_terms(const Mod<F>& m, int length) {
  std::vector<std::vector<int>> out;
  Mod<F> cur = m;
  for (int i = 0; i < length && !cur->is_zero(); ++i) {
    out.push_back(top_vector(cur));
    cur = syzygy(cur);
  }
  return out;
}

template <class F>
std::vector<std::vector<int>> injective_terms(const Mod<F>& m, int length) {
  return projective_terms(dual(m), length);
}

// ---------------------------------------------------------------- dimensions

std::string DimReport::str() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(value);
    case Kind::Infinite:
      return "inf";
    case Kind::Undetermined:
      return "?>=" + std::to_string(bound);
  }
  return "";
}

bool DimReport::operator==(const DimReport& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Finite) return value == o.value;
  if (kind == Kind::Undetermined) return bound == o.bound;
  return true;
}

DimReport max_report(const DimReport& a, const DimReport& b) {
  if (a.is_infinite()) return a;
  if (b.is_infinite()) return b;
  if (a.kind == DimReport::Kind::Undetermined) return a;
  if (b.kind == DimReport::Kind::Undetermined) return b;
  return a.value >= b.value ? a : b;
}

template <class F>
ModuleMap<F> left_multiplication(const std::vector<Mod<F>>& projectives, int x) {
  const auto& a = projectives.front()->algebra();
  const F& f = a->field();
  const auto& tag = a->tag(x);
  auto pos = block_positions(*a);
  ModuleMap<F> out{projectives[tag.target], projectives[tag.source], {}};
  for (int w = 0; w < a->vertex_count(); ++w) {
    const auto& rows = a->block(tag.target, w);
    Matrix<F> b(f, static_cast<int>(rows.size()), static_cast<int>(a->block(tag.source, w).size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (auto& [z, c] : a->product(x, rows[i])) b(static_cast<int>(i), pos[z]) = c;
    out.blocks.push_back(std::move(b));
  }
  return out;
}

template <class F>
Mod<F> hom_to_regular(const Mod<F>& m) {
  const auto& a = m->algebra();
  const int n = a->vertex_count();
  std::vector<Mod<F>> proj;
  for (int v = 0; v < n; ++v) proj.push_back(projective_module(a, v));
  std::vector<HomSpace<F>> spaces;
  std::vector<std::vector<ModuleMap<F>>> bases;
  std::vector<int> dims;
  for (int v = 0; v < n; ++v) {
    spaces.emplace_back(m, proj[v]);
    bases.push_back(spaces.back().basis());
    dims.push_back(spaces.back().dim());
  }
  auto op = opposite(a);
  std::vector<Matrix<F>> act;
  for (int x = 0; x < a->dim(); ++x) {
    // x in e_s A e_t acts Hom(M, P_t) -> Hom(M, P_s) by post-composition
    const auto& tag = a->tag(x);
    auto lam = left_multiplication(proj, x);
    Matrix<F> mx(a->field(), dims[tag.target], dims[tag.source]);
    for (int i = 0; i < dims[tag.target]; ++i) mx.set_row(i, spaces[tag.source].coordinates(compose(bases[tag.target][i], lam)));
    act.push_back(std::move(mx));
  }
  return std::make_shared<FDModule<F>>(op, dims, std::move(act));
}

template <class F>
DimReport pdim(const Mod<F>& m, int bound, Rng& rng) {
  if (bound < 1) throw InvalidInput("bound must be positive");
  // Graph on iso classes of non-projective indecomposable summands of the
  // syzygies, with edges X -> summands of Omega X. A cycle means some X is a
  // summand of Omega^d X, so pdim X is infinite.
  struct Node {
    Mod<F> module;
    int depth = 0;
    bool expanded = false;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  auto locate = [&](const Mod<F>& x, int depth) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].module->dims() == x->dims() && is_isomorphic(nodes[i].module, x, rng)) return static_cast<int>(i);
    nodes.push_back({x, depth, false, {}});
    return static_cast<int>(nodes.size()) - 1;
  };
  auto summands = [&](const Mod<F>& x, int depth) {
    std::vector<int> ids;
    if (x->is_zero()) return ids;
    for (auto& part : decompose(x, rng).parts)
      if (!is_projective(part.module)) ids.push_back(locate(part.module, depth));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  };
  if (m->is_zero() || is_projective(m)) return DimReport::finite(0);
  auto roots = summands(m, 0);
  bool truncated = false;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].depth >= bound) {
      truncated = true;
      continue;
    }
    auto kids = summands(syzygy(nodes[i].module), nodes[i].depth + 1);
    nodes[i].children = kids;
    nodes[i].expanded = true;
  }
  // cycle search, recording the first stage at which a cycle vertex appears
  const int n = static_cast<int>(nodes.size());
  std::vector<int> colour(n, 0), height(n, 0);
  int best_first = -1, best_len = 0;
  std::vector<int> stack;
  std::function<void(int)> visit = [&](int u) {
    colour[u] = 1;
    stack.push_back(u);
    int h = 1;
    for (int w : nodes[u].children) {
      if (colour[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        int len = static_cast<int>(stack.end() - it);
        if (best_first < 0 || nodes[w].depth < best_first) {
          best_first = nodes[w].depth;
          best_len = len;
        }
      } else {
        if (colour[w] == 0) visit(w);
        h = std::max(h, 1 + height[w]);
      }
    }
    height[u] = h;
    stack.pop_back();
    colour[u] = 2;
  };
  for (int r : roots)
    if (colour[r] == 0) visit(r);
  if (best_first >= 0) return DimReport::infinite(best_first, best_first + best_len);
  if (truncated) return DimReport::undetermined(bound);
  int d = 0;
  for (int r : roots) d = std::max(d, height[r]);
  return DimReport::finite(d);
}

template <class F>
DimReport idim(const Mod<F>& m, int bound, Rng& rng) {
  return pdim(dual(m), bound, rng);
}

template <class F>
DimReport algebra_idim(const AlgPtr<F>& a, int bound, Rng& rng) {
  DimReport r = DimReport::finite(0);
  for (int v = 0; v < a->vertex_count(); ++v) {
    r = max_report(r, idim(projective_module(a, v), bound, rng));
    if (r.is_infinite()) break;
  }
  return r;
}

template <class F>
DimReport algebra_pdim_dual(const AlgPtr<F>& a, int bound, Rng& rng) {
  DimReport r = DimReport::finite(0);
  for (int v = 0; v < a->vertex_count(); ++v) {
    r = max_report(r, pdim(injective_module(a, v), bound, rng));
    if (r.is_infinite()) break;
  }
  return r;
}

template <class F>
DimReport module_dominant_dim(const Mod<F>& m, int bound) {
  const auto& a = m->algebra();
  auto op = opposite(a);
  // I^i(M) is projective iff the matching term over the opposite side is injective
  std::vector<bool> proj_inj(a->vertex_count());
  for (int v = 0; v < a->vertex_count(); ++v) proj_inj[v] = is_injective(projective_module(op, v));
  Mod<F> cur = dual(m);
  for (int i = 0; i < bound; ++i) {
    if (cur->is_zero()) return DimReport::infinite(i, i);
    auto t = top_vector(cur);
    for (int v = 0; v < a->vertex_count(); ++v)
      if (t[v] > 0 && !proj_inj[v]) return DimReport::finite(i);
    cur = syzygy(cur);
  }
  return DimReport::undetermined(bound);
}

template <class F>
DimReport dominant_dim(const AlgPtr<F>& a, int bound) {
  if (bound < 1) throw InvalidInput("bound must be positive");
  if (is_selfinjective(a)) return DimReport::infinite(0, 0);
  return module_dominant_dim(regular_module(a), bound);
}

template <class F>
std::vector<int> ext_dims(const Mod<F>& m, const Mod<F>& n, int upto) {
  std::vector<int> out;
  Mod<F> cur = m;
  int prev_hom = 0, prev_proj = 0;
  for (int i = 0; i <= upto; ++i) {
    int h = hom_dim(cur, n);
    if (i == 0)
      out.push_back(h);
    else
      out.push_back(h - prev_proj + prev_hom);
    if (i == upto) break;
    auto t = top_vector(cur);
    prev_proj = 0;
    for (std::size_t v = 0; v < t.size(); ++v) prev_proj += t[v] * n->dims()[v];
    prev_hom = h;
    cur = syzygy(cur);
  }
  return out;
}

template <class F>
int ext_dim(const Mod<F>& m, const Mod<F>& n, int i) {
  if (i < 0) throw InvalidInput("negative Ext degree");
  return ext_dims(m, n, i).back();
}

#define CMPREPROJ_INSTANTIATE(F)                                                                 \
  template class FDModule<F>;                                                                    \
  template struct ModulePresentation<F>;                                                         \
  template struct ModuleMap<F>;                                                                  \
  template class HomSpace<F>;                                                                    \
  template ModuleMap<F> zero_map<F>(const Mod<F>&, const Mod<F>&);                               \
  template ModuleMap<F> identity_map<F>(const Mod<F>&);                                          \
  template ModuleMap<F> compose<F>(const ModuleMap<F>&, const ModuleMap<F>&);                    \
  template ModuleMap<F> add_maps<F>(const ModuleMap<F>&, const ModuleMap<F>&, const F::Elem&);   \
  template Mod<F> zero_module<F>(const AlgPtr<F>&);                                              \
  template Mod<F> simple_module<F>(const AlgPtr<F>&, int);                                       \
  template Mod<F> projective_module<F>(const AlgPtr<F>&, int);                                   \
  template Mod<F> injective_module<F>(const AlgPtr<F>&, int);                                    \
  template Mod<F> regular_module<F>(const AlgPtr<F>&);                                           \
  template Mod<F> dual_regular_module<F>(const AlgPtr<F>&);                                      \
  template RegularAndInjectives<F> regular_and_injectives<F>(const AlgPtr<F>&);                  \
  template Mod<F> module_from_arrows<F>(const AlgPtr<F>&, const std::vector<int>&,               \
                                        const std::map<std::string, Matrix<F>>&);                \
  template SumData<F> direct_sum_data<F>(const AlgPtr<F>&, const std::vector<Mod<F>>&);          \
  template Mod<F> direct_sum<F>(const AlgPtr<F>&, const std::vector<Mod<F>>&);                   \
  template Mod<F> dual<F>(const Mod<F>&);                                                        \
  template Mod<F> hom_to_regular<F>(const Mod<F>&);                                              \
  template ModuleMap<F> left_multiplication<F>(const std::vector<Mod<F>>&, int);                 \
  template ModuleMap<F> dual_map<F>(const ModuleMap<F>&, const Mod<F>&, const Mod<F>&);          \
  template SubData<F> submodule<F>(const Mod<F>&, const std::vector<Subspace<F>>&);              \
  template SubData<F> quotient<F>(const Mod<F>&, const std::vector<Subspace<F>>&);               \
  template SubData<F> kernel<F>(const ModuleMap<F>&);                                            \
  template SubData<F> cokernel<F>(const ModuleMap<F>&);                                          \
  template SubData<F> image<F>(const ModuleMap<F>&);                                             \
  template std::vector<Subspace<F>> radical_spaces<F>(const Mod<F>&);                            \
  template std::vector<Subspace<F>> socle_spaces<F>(const Mod<F>&);                              \
  template SubData<F> radical<F>(const Mod<F>&);                                                 \
  template SubData<F> top<F>(const Mod<F>&);                                                     \
  template SubData<F> socle<F>(const Mod<F>&);                                                   \
  template std::vector<int> top_vector<F>(const Mod<F>&);                                        \
  template std::vector<int> socle_vector<F>(const Mod<F>&);                                      \
  template int loewy_length<F>(const Mod<F>&);                                                   \
  template std::vector<ModuleMap<F>> hom_basis<F>(const Mod<F>&, const Mod<F>&);                 \
  template int hom_dim<F>(const Mod<F>&, const Mod<F>&);                                         \
  template ModuleMap<F> projective_cover<F>(const Mod<F>&);                                      \
  template ModuleMap<F> injective_envelope<F>(const Mod<F>&);                                    \
  template Mod<F> syzygy<F>(const Mod<F>&, int);                                                 \
  template Mod<F> cosyzygy<F>(const Mod<F>&, int);                                               \
  template std::vector<int> cover_vertices<F>(const Mod<F>&);                                    \
  template std::vector<int> envelope_vertices<F>(const Mod<F>&);                                 \
  template bool is_projective<F>(const Mod<F>&);                                                 \
  template bool is_injective<F>(const Mod<F>&);                                                  \
  template bool is_selfinjective<F>(const AlgPtr<F>&);                                           \
  template Resolution<F> projective_resolution<F>(const Mod<F>&, int);                           \
  template Resolution<F> injective_coresolution<F>(const Mod<F>&, int);                          \
  template std::vector<std::vector<int>> projective_terms<F>(const Mod<F>&, int);                \
  template std::vector<std::vector<int>> injective_terms<F>(const Mod<F>&, int);                 \
  template DimReport pdim<F>(const Mod<F>&, int, Rng&);                                          \
  template DimReport idim<F>(const Mod<F>&, int, Rng&);                                          \
  template DimReport algebra_idim<F>(const AlgPtr<F>&, int, Rng&);                               \
  template DimReport algebra_pdim_dual<F>(const AlgPtr<F>&, int, Rng&);                          \
  template DimReport dominant_dim<F>(const AlgPtr<F>&, int);                                     \
  template DimReport module_dominant_dim<F>(const Mod<F>&, int);                                 \
  template int ext_dim<F>(const Mod<F>&, const Mod<F>&, int);                                    \
  template std::vector<int> ext_dims<F>(const Mod<F>&, const Mod<F>&, int);

CMPREPROJ_INSTANTIATE(PrimeField)
CMPREPROJ_INSTANTIATE(RationalField)

}  // namespace cmpreproj
