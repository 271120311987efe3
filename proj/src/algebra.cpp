#include "cmpreproj/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "cmpreproj/errors.hpp"

namespace cmpreproj {

// ---------------------------------------------------------------- quivers

void Quiver::validate() const {
  if (vertex_count <= 0) throw InvalidInput("quiver needs at least one vertex");
  std::set<std::string> seen;
  for (auto& a : arrows) {
    if (a.source < 0 || a.source >= vertex_count || a.target < 0 || a.target >= vertex_count)
      throw InvalidInput("arrow " + a.label + " has an endpoint out of range");
    if (a.label.empty()) throw InvalidInput("empty arrow label");
    if (!seen.insert(a.label).second) throw InvalidInput("duplicate arrow label " + a.label);
  }
}

int Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return static_cast<int>(i);
  return -1;
}

bool Relation::homogeneous() const {
  for (auto& t : terms)
    if (t.second.length() != terms.front().second.length()) return false;
  return true;
}

std::string word_string(const Quiver& q, const std::vector<int>& arrows) {
  std::string s;
  for (int a : arrows) s += q.arrows[a].label;
  return s;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

Relation parse_relation(const Quiver& q, const std::string& text) {
  Relation rel;
  std::size_t i = 0;
  const std::string s = text;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_int = [&](long long& v) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    v = std::stoll(s.substr(start, i - start));
    return true;
  };
  skip_ws();
  bool first = true;
  while (i < s.size()) {
    long long sign = 1;
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected + or - in relation '" + text + "'");
    }
    first = false;
    skip_ws();
    long long coeff = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      read_int(coeff);
      skip_ws();
      if (i < s.size() && s[i] == '*') ++i;
      skip_ws();
    }
    std::vector<int> word;
    while (i < s.size() && is_label_char(s[i])) {
      // greedy longest label match
      int best = -1;
      std::size_t best_len = 0;
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& lab = q.arrows[a].label;
        if (lab.size() > best_len && s.compare(i, lab.size(), lab) == 0) {
          best = static_cast<int>(a);
          best_len = lab.size();
        }
      }
      if (best < 0) throw ParseError("unknown arrow at '" + s.substr(i) + "'");
      i += best_len;
      long long power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_int(power) || power < 1) throw ParseError("bad exponent in '" + text + "'");
      }
      for (long long k = 0; k < power; ++k) word.push_back(best);
      skip_ws();
    }
    if (word.empty()) throw ParseError("empty term in relation '" + text + "'");
    PathWord w;
    w.source = q.arrows[word.front()].source;
    w.target = q.arrows[word.back()].target;
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (q.arrows[word[k]].target != q.arrows[word[k + 1]].source)
        throw ParseError("non-composable path " + word_string(q, word));
    w.arrows = word;
    rel.terms.emplace_back(sign * coeff, std::move(w));
    skip_ws();
  }
  if (rel.terms.empty()) throw ParseError("empty relation");
  for (auto& t : rel.terms) {
    if (t.second.length() < 2) throw InvalidInput("relation term of length < 2 (not admissible): " + text);
    if (t.second.source != rel.terms[0].second.source || t.second.target != rel.terms[0].second.target)
      throw InvalidInput("relation terms are not parallel: " + text);
  }
  return rel;
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> rel_lines;
  int declared = 0;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("vertices", 0) == 0) {
      std::string rest = trim(line.substr(8));
      if (!rest.empty() && rest[0] == ':') rest = trim(rest.substr(1));
      try {
        declared = std::stoi(rest);
      } catch (...) {
        throw ParseError("bad vertex count line: " + line);
      }
      continue;
    }
    auto colon = line.find(':');
    auto arrow = line.find("->");
    if (colon != std::string::npos && arrow != std::string::npos && colon < arrow) {
      Arrow a;
      a.label = trim(line.substr(0, colon));
      for (char c : a.label)
        if (!is_label_char(c)) throw ParseError("bad arrow label '" + a.label + "'");
      try {
        a.source = std::stoi(trim(line.substr(colon + 1, arrow - colon - 1))) - 1;
        a.target = std::stoi(trim(line.substr(arrow + 2))) - 1;
      } catch (...) {
        throw ParseError("bad arrow line: " + line);
      }
      if (a.source < 0 || a.target < 0) throw ParseError("vertices are numbered from 1: " + line);
      p.quiver.arrows.push_back(a);
      continue;
    }
    rel_lines.push_back(line);
  }
  int n = declared;
  for (auto& a : p.quiver.arrows) n = std::max({n, a.source + 1, a.target + 1});
  p.quiver.vertex_count = n;
  p.quiver.validate();
  for (auto& l : rel_lines) p.relations.push_back(parse_relation(p.quiver, l));
  return p;
}

int default_cutoff(const Quiver& q) { return 3 * (static_cast<int>(q.arrows.size()) + 5); }

// ---------------------------------------------------------------- FDAlgebra

template <class F>
FDAlgebra<F>::FDAlgebra(const F& f, int vertex_count, std::vector<BasisTag> basis,
                        std::vector<SparseVec<F>> products, std::string name)
    : f_(f), n_(vertex_count), basis_(std::move(basis)), products_(std::move(products)),
      name_(std::move(name)) {
  const int d = dim();
  if (d < n_ || static_cast<std::size_t>(d) * d != products_.size())
    throw InvalidInput("inconsistent algebra data");
  for (int v = 0; v < n_; ++v) {
    if (basis_[v].source != v || basis_[v].target != v || basis_[v].degree != 0)
      throw InvalidInput("first basis elements must be the vertex idempotents");
    const auto& sq = product(v, v);
    if (sq.size() != 1 || sq[0].first != v || !f_.is_one(sq[0].second))
      throw InvalidInput("vertex element is not idempotent");
  }
  blocks_.assign(static_cast<std::size_t>(n_) * n_, {});
  from_.assign(n_, {});
  for (int x = 0; x < d; ++x) {
    blocks_[basis_[x].source * n_ + basis_[x].target].push_back(x);
    from_[basis_[x].source].push_back(x);
  }
  vertex_labels_.resize(n_);
  for (int v = 0; v < n_; ++v) vertex_labels_[v] = v + 1;

  // generators: complement of rad^2 inside rad, block by block
  for (int s = 0; s < n_; ++s)
    for (int t = 0; t < n_; ++t) {
      std::vector<int> rad;
      for (int x : block(s, t))
        if (x >= n_) rad.push_back(x);
      if (rad.empty()) continue;
      std::map<int, int> local;
      for (std::size_t k = 0; k < rad.size(); ++k) local[rad[k]] = static_cast<int>(k);
      std::vector<Vec<F>> rows;
      for (int u = 0; u < n_; ++u)
        for (int x : block(s, u)) {
          if (x < n_) continue;
          for (int y : block(u, t)) {
            if (y < n_) continue;
            const auto& pr = product(x, y);
            if (pr.empty()) continue;
            Vec<F> r(rad.size(), f_.zero());
            for (auto& [z, c] : pr) {
              auto it = local.find(z);
              if (it == local.end()) throw InvalidInput("radical is not closed under products");
              r[it->second] = c;
            }
            rows.push_back(std::move(r));
          }
        }
      Subspace<F> sq(f_, static_cast<int>(rad.size()));
      if (!rows.empty()) sq = Subspace<F>::span(Matrix<F>::from_rows(f_, static_cast<int>(rad.size()), rows));
      for (int c : sq.non_pivot_columns()) generators_.push_back(rad[c]);
    }
  std::sort(generators_.begin(), generators_.end());
}

template <class F>
int FDAlgebra<F>::max_degree() const {
  int m = 0;
  for (auto& t : basis_) m = std::max(m, t.degree);
  return m;
}

template <class F>
Vec<F> FDAlgebra<F>::multiply(const Vec<F>& a, const Vec<F>& b) const {
  Vec<F> out(dim(), f_.zero());
  for (int x = 0; x < dim(); ++x) {
    if (f_.is_zero(a[x])) continue;
    for (int y : from_[basis_[x].target]) {
      if (f_.is_zero(b[y])) continue;
      auto c = f_.mul(a[x], b[y]);
      for (auto& [z, k] : product(x, y)) out[z] = f_.add(out[z], f_.mul(c, k));
    }
  }
  return out;
}

template <class F>
bool FDAlgebra<F>::verify_associativity(int samples, Rng* rng) const {
  const int d = dim();
  auto check = [&](int x, int y, int z) {
    Vec<F> ex(d, f_.zero()), ey(d, f_.zero()), ez(d, f_.zero());
    ex[x] = ey[y] = ez[z] = f_.one();
    return multiply(multiply(ex, ey), ez) == multiply(ex, multiply(ey, ez));
  };
  if (samples <= 0) {
    for (int x = 0; x < d; ++x)
      for (int y : from_[basis_[x].target])
        for (int z : from_[basis_[y].target])
          if (!check(x, y, z)) return false;
    return true;
  }
  for (int i = 0; i < samples; ++i) {
    int x = static_cast<int>((*rng)() % d);
    const auto& ys = from_[basis_[x].target];
    int y = ys[(*rng)() % ys.size()];
    const auto& zs = from_[basis_[y].target];
    int z = zs[(*rng)() % zs.size()];
    if (!check(x, y, z)) return false;
  }
  return true;
}

template <class F>
AlgPtr<F> FDAlgebra<F>::opposite(const AlgPtr<F>& a) {
  std::lock_guard<std::mutex> lock(a->op_mu_);
  if (auto back = a->op_of_.lock()) return back;
  if (a->op_cache_) return a->op_cache_;
  const int d = a->dim();
  std::vector<BasisTag> tags = a->basis_;
  for (auto& t : tags) std::swap(t.source, t.target);
  std::vector<SparseVec<F>> prods(static_cast<std::size_t>(d) * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) prods[static_cast<std::size_t>(x) * d + y] = a->product(y, x);
  auto op = std::make_shared<FDAlgebra<F>>(a->f_, a->n_, std::move(tags), std::move(prods),
                                           a->name_ + "^op");
  op->vertex_labels_ = a->vertex_labels_;
  op->arrows_ = a->arrows_;
  op->op_of_ = a;
  a->op_cache_ = op;
  return op;
}

template <class F>
AlgebraElement<F> basis_element(const AlgPtr<F>& a, int x) {
  AlgebraElement<F> e{a, Vec<F>(a->dim(), a->field().zero())};
  e.coeffs[x] = a->field().one();
  return e;
}

template <class F>
AlgebraElement<F> multiply(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  if (a.alg != b.alg) throw AlgebraMismatch("elements belong to different algebras");
  return {a.alg, a.alg->multiply(a.coeffs, b.coeffs)};
}

// ---------------------------------------------------------------- quotient engines

namespace {

struct PathKey {
  int source;
  std::vector<int> word;
  bool operator<(const PathKey& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    if (source != o.source) return source < o.source;
    return word < o.word;
  }
};

std::string vertex_word(int v) { return "e" + std::to_string(v + 1); }

// Homogeneous relations: A_d = (A_{d-1} x arrows) / image of (A_{d-k} x R_k).
template <class F>
AlgPtr<F> build_graded(const F& f, const Quiver& q, const std::vector<Relation>& rels, int cutoff,
                       const std::string& name) {
  const int n = q.vertex_count;
  const int m = static_cast<int>(q.arrows.size());
  struct Elt {
    int source, target, degree;
    std::vector<int> word;
    int parent = -1, arrow = -1;
  };
  std::vector<Elt> elts;
  std::vector<int> level_start{0};
  for (int v = 0; v < n; ++v) elts.push_back({v, v, 0, {}, -1, -1});
  level_start.push_back(n);
  // rmul[g][x]: normal form of x*g in global indices
  std::vector<std::vector<SparseVec<F>>> rmul(m);
  auto apply = [&](const SparseVec<F>& v, int g) {
    std::map<int, typename F::Elem> acc;
    for (auto& [x, c] : v) {
      if (x >= static_cast<int>(rmul[g].size())) continue;
      for (auto& [y, k] : rmul[g][x]) {
        auto it = acc.emplace(y, f.zero()).first;
        it->second = f.add(it->second, f.mul(c, k));
      }
    }
    SparseVec<F> out;
    for (auto& [y, c] : acc)
      if (!f.is_zero(c)) out.emplace_back(y, c);
    return out;
  };
  for (int d = 1;; ++d) {
    const int lo = level_start[d - 1], hi = level_start[d];
    // candidates x*g
    struct Cand {
      int x, g;
      PathKey key;
    };
    std::vector<Cand> cands;
    for (int x = lo; x < hi; ++x)
      for (int g = 0; g < m; ++g)
        if (q.arrows[g].source == elts[x].target) {
          auto w = elts[x].word;
          w.push_back(g);
          cands.push_back({x, g, {elts[x].source, w}});
        }
    for (auto& r : rmul) r.resize(hi);
    if (cands.empty()) break;
    if (d > cutoff) throw CutoffExceeded("nonzero paths persist beyond degree " + std::to_string(cutoff));
    // columns: descending key order so that pivots fall on the largest words
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return b.key < a.key; });
    std::map<std::pair<int, int>, int> col;
    for (std::size_t c = 0; c < cands.size(); ++c) col[{cands[c].x, cands[c].g}] = static_cast<int>(c);
    const int C = static_cast<int>(cands.size());
    std::vector<Vec<F>> rows;
    for (auto& rel : rels) {
      const int k = rel.terms.front().second.length();
      if (k > d) continue;
      const int s = rel.terms.front().second.source;
      const int ylo = level_start[d - k], yhi = level_start[d - k + 1];
      for (int y = ylo; y < yhi; ++y) {
        if (elts[y].target != s) continue;
        Vec<F> row(C, f.zero());
        bool nonzero = false;
        for (auto& [coef, w] : rel.terms) {
          SparseVec<F> z{{y, f.one()}};
          for (int t = 0; t + 1 < k && !z.empty(); ++t) z = apply(z, w.arrows[t]);
          const int g = w.arrows.back();
          for (auto& [zi, zc] : z) {
            int cc = col.at({zi, g});
            row[cc] = f.add(row[cc], f.mul(f.from_int(coef), zc));
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    RrefResult<F> red;
    if (!rows.empty()) red = rref(Matrix<F>::from_rows(f, C, rows));
    std::vector<int> pivot_row(C, -1);
    for (int i = 0; i < red.rank; ++i) pivot_row[red.pivots[i]] = i;
    std::vector<int> free_cols;
    for (int c = 0; c < C; ++c)
      if (pivot_row[c] < 0) free_cols.push_back(c);
    std::sort(free_cols.begin(), free_cols.end(),
              [&](int a, int b) { return cands[a].key < cands[b].key; });
    std::map<int, int> global_of;
    for (int c : free_cols) {
      global_of[c] = static_cast<int>(elts.size());
      elts.push_back({cands[c].key.source, q.arrows[cands[c].g].target, d, cands[c].key.word,
                      cands[c].x, cands[c].g});
    }
    level_start.push_back(static_cast<int>(elts.size()));
    for (int c = 0; c < C; ++c) {
      SparseVec<F> nf;
      if (pivot_row[c] < 0) {
        nf.emplace_back(global_of[c], f.one());
      } else {
        for (int fc : free_cols) {
          const auto& e = red.m(pivot_row[c], fc);
          if (!f.is_zero(e)) nf.emplace_back(global_of[fc], f.neg(e));
        }
        std::sort(nf.begin(), nf.end(), [](auto& a, auto& b) { return a.first < b.first; });
      }
      rmul[cands[c].g][cands[c].x] = std::move(nf);
    }
    if (free_cols.empty()) break;
  }
  const int D = static_cast<int>(elts.size());
  for (auto& r : rmul) r.resize(D);
  std::vector<BasisTag> tags;
  for (auto& e : elts)
    tags.push_back({e.source, e.target, e.degree, e.word.empty() ? vertex_word(e.source) : word_string(q, e.word)});
  std::vector<SparseVec<F>> prods(static_cast<std::size_t>(D) * D);
  for (int y = 0; y < D; ++y)
    for (int x = 0; x < D; ++x) {
      if (elts[x].target != elts[y].source) continue;
      auto& out = prods[static_cast<std::size_t>(x) * D + y];
      if (y < n) {
        out = {{x, f.one()}};
      } else {
        const auto& pre = prods[static_cast<std::size_t>(x) * D + elts[y].parent];
        if (!pre.empty()) out = apply(pre, elts[y].arrow);
      }
    }
  auto alg = std::make_shared<FDAlgebra<F>>(f, n, std::move(tags), std::move(prods), name);
  std::map<std::string, int> arrows;
  for (int x = n; x < D; ++x)
    if (elts[x].degree == 1) arrows[q.arrows[elts[x].arrow].label] = x;
  alg->set_arrows(std::move(arrows));
  return alg;
}

// General relations: work in kQ / J^N and grow N until J^{N-1} lies in I + J^N.
template <class F>
AlgPtr<F> build_truncated(const F& f, const Quiver& q, const std::vector<Relation>& rels, int cutoff,
                          const std::string& name) {
  const int n = q.vertex_count;
  const int m = static_cast<int>(q.arrows.size());
  int min_rel = 2;
  for (auto& r : rels) {
    int mn = 1 << 30;
    for (auto& t : r.terms) mn = std::min(mn, t.second.length());
    min_rel = std::max(min_rel, mn);
  }
  for (int N = 2; N <= cutoff + 1; ++N) {
    // all paths of length < N, ordered by key
    std::vector<PathKey> paths;
    std::vector<int> ends;
    for (int v = 0; v < n; ++v) {
      paths.push_back({v, {}});
      ends.push_back(v);
    }
    std::size_t lo = 0;
    for (int len = 1; len < N; ++len) {
      std::size_t hi = paths.size();
      for (std::size_t p = lo; p < hi; ++p)
        for (int g = 0; g < m; ++g)
          if (q.arrows[g].source == ends[p]) {
            auto w = paths[p].word;
            w.push_back(g);
            paths.push_back({paths[p].source, w});
            ends.push_back(q.arrows[g].target);
          }
      lo = hi;
    }
    std::vector<int> order(paths.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return paths[b] < paths[a]; });
    std::map<PathKey, int> col;
    std::map<std::vector<int>, int> col_of_word;  // nontrivial words only
    for (std::size_t c = 0; c < order.size(); ++c) {
      col[paths[order[c]]] = static_cast<int>(c);
      if (!paths[order[c]].word.empty()) col_of_word[paths[order[c]].word] = static_cast<int>(c);
    }
    const int C = static_cast<int>(paths.size());
    std::vector<Vec<F>> rows;
    for (auto& rel : rels) {
      int mn = 1 << 30;
      for (auto& t : rel.terms) mn = std::min(mn, t.second.length());
      const int s = rel.terms.front().second.source, t = rel.terms.front().second.target;
      for (int pi = 0; pi < C; ++pi) {
        if (ends[pi] != s) continue;
        const int lp = static_cast<int>(paths[pi].word.size());
        if (lp + mn >= N) continue;
        for (int qi = 0; qi < C; ++qi) {
          if (paths[qi].source != t) continue;
          const int lq = static_cast<int>(paths[qi].word.size());
          if (lp + lq + mn >= N) continue;
          Vec<F> row(C, f.zero());
          for (auto& [coef, w] : rel.terms) {
            if (lp + lq + w.length() >= N) continue;
            std::vector<int> full = paths[pi].word;
            full.insert(full.end(), w.arrows.begin(), w.arrows.end());
            full.insert(full.end(), paths[qi].word.begin(), paths[qi].word.end());
            int c = col_of_word.at(full);
            row[c] = f.add(row[c], f.from_int(coef));
          }
          rows.push_back(std::move(row));
        }
      }
    }
    RrefResult<F> red;
    if (!rows.empty()) red = rref(Matrix<F>::from_rows(f, C, rows));
    std::vector<int> pivot_row(C, -1);
    for (int i = 0; i < red.rank; ++i) pivot_row[red.pivots[i]] = i;
    std::vector<int> free_cols;
    for (int c = 0; c < C; ++c)
      if (pivot_row[c] < 0) free_cols.push_back(c);
    // stop once every path of length N-1 vanishes
    bool done = true;
    for (int c = 0; c < C && done; ++c) {
      if (static_cast<int>(paths[order[c]].word.size()) != N - 1) continue;
      if (pivot_row[c] < 0) {
        done = false;
        break;
      }
      for (int fc : free_cols)
        if (!f.is_zero(red.m(pivot_row[c], fc))) {
          done = false;
          break;
        }
    }
    if (!done) continue;
    std::sort(free_cols.begin(), free_cols.end(),
              [&](int a, int b) { return paths[order[a]] < paths[order[b]]; });
    std::map<int, int> basis_of_col;
    for (std::size_t k = 0; k < free_cols.size(); ++k) basis_of_col[free_cols[k]] = static_cast<int>(k);
    const int D = static_cast<int>(free_cols.size());
    auto normal_form = [&](const std::vector<int>& word, int source) {
      SparseVec<F> nf;
      if (static_cast<int>(word.size()) >= N) return nf;
      int c = word.empty() ? col.at({source, {}}) : col_of_word.at(word);
      if (pivot_row[c] < 0) {
        nf.emplace_back(basis_of_col.at(c), f.one());
        return nf;
      }
      for (int fc : free_cols) {
        const auto& e = red.m(pivot_row[c], fc);
        if (!f.is_zero(e)) nf.emplace_back(basis_of_col.at(fc), f.neg(e));
      }
      std::sort(nf.begin(), nf.end(), [](auto& a, auto& b) { return a.first < b.first; });
      return nf;
    };
    std::vector<BasisTag> tags;
    std::vector<const PathKey*> keys;
    for (int c : free_cols) {
      const auto& k = paths[order[c]];
      keys.push_back(&k);
      int tgt = k.word.empty() ? k.source : q.arrows[k.word.back()].target;
      tags.push_back({k.source, tgt, static_cast<int>(k.word.size()),
                      k.word.empty() ? vertex_word(k.source) : word_string(q, k.word)});
    }
    std::vector<SparseVec<F>> prods(static_cast<std::size_t>(D) * D);
    for (int x = 0; x < D; ++x)
      for (int y = 0; y < D; ++y) {
        if (tags[x].target != tags[y].source) continue;
        std::vector<int> w = keys[x]->word;
        w.insert(w.end(), keys[y]->word.begin(), keys[y]->word.end());
        prods[static_cast<std::size_t>(x) * D + y] = normal_form(w, tags[x].source);
      }
    auto alg = std::make_shared<FDAlgebra<F>>(f, n, std::move(tags), std::move(prods), name);
    std::map<std::string, int> arrows;
    for (int x = n; x < D; ++x)
      if (keys[x]->word.size() == 1) arrows[q.arrows[keys[x]->word[0]].label] = x;
    alg->set_arrows(std::move(arrows));
    return alg;
  }
  throw CutoffExceeded("paths of length " + std::to_string(cutoff) + " do not all vanish");
}

}  // namespace

template <class F>
AlgPtr<F> build_quotient(const F& f, const Quiver& q, const std::vector<Relation>& rels,
                         int degree_cutoff, const std::string& name) {
  q.validate();
  bool homogeneous = true;
  for (auto& r : rels) {
    if (r.terms.empty()) throw InvalidInput("empty relation");
    for (auto& t : r.terms) {
      if (t.second.length() < 2) throw InvalidInput("relation is not admissible");
      if (t.second.source != r.terms[0].second.source || t.second.target != r.terms[0].second.target)
        throw InvalidInput("relation terms are not parallel");
    }
    homogeneous = homogeneous && r.homogeneous();
  }
  if (homogeneous) return build_graded(f, q, rels, degree_cutoff, name);
  return build_truncated(f, q, rels, degree_cutoff, name);
}

// explicit entry to the path-enumeration engine, used as an oracle
template <class F>
AlgPtr<F> build_by_path_enumeration(const F& f, const Quiver& q, const std::vector<Relation>& rels,
                                    int degree_cutoff, const std::string& name) {
  q.validate();
  return build_truncated(f, q, rels, degree_cutoff, name);
}

// ---------------------------------------------------------------- contraction etc.

template <class F>
AlgPtr<F> contract(const AlgPtr<F>& a, const std::vector<int>& subset_in) {
  std::vector<int> subset = subset_in;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw EmptySubset("contraction needs a nonempty vertex set");
  for (int v : subset)
    if (v < 0 || v >= a->vertex_count()) throw InvalidInput("vertex out of range in contraction");
  std::vector<int> new_vertex(a->vertex_count(), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) new_vertex[subset[k]] = static_cast<int>(k);
  std::vector<int> keep, new_index(a->dim(), -1);
  for (int x = 0; x < a->dim(); ++x) {
    const auto& t = a->tag(x);
    if (new_vertex[t.source] >= 0 && new_vertex[t.target] >= 0) {
      new_index[x] = static_cast<int>(keep.size());
      keep.push_back(x);
    }
  }
  const int D = static_cast<int>(keep.size());
  std::vector<BasisTag> tags;
  for (int x : keep) {
    auto t = a->tag(x);
    t.source = new_vertex[t.source];
    t.target = new_vertex[t.target];
    tags.push_back(t);
  }
  std::vector<SparseVec<F>> prods(static_cast<std::size_t>(D) * D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      SparseVec<F> out;
      for (auto& [z, c] : a->product(keep[i], keep[j])) {
        if (new_index[z] < 0) throw Error("contraction is not closed under products");
        out.emplace_back(new_index[z], c);
      }
      prods[static_cast<std::size_t>(i) * D + j] = std::move(out);
    }
  std::string name = a->name() + "[";
  for (std::size_t k = 0; k < subset.size(); ++k)
    name += (k ? "," : "") + std::to_string(a->vertex_labels()[subset[k]]);
  name += "]";
  auto out = std::make_shared<FDAlgebra<F>>(a->field(), static_cast<int>(subset.size()), std::move(tags),
                                            std::move(prods), name);
  std::vector<int> labels;
  for (int v : subset) labels.push_back(a->vertex_labels()[v]);
  out->set_vertex_labels(std::move(labels));
  return out;
}

template <class F>
std::vector<std::vector<int>> cartan_matrix(const FDAlgebra<F>& a) {
  const int n = a.vertex_count();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = static_cast<int>(a.block(i, j).size());
  return c;
}

template <class F>
std::string serialize(const FDAlgebra<F>& a) {
  std::ostringstream os;
  os << "algebra " << a.name() << "\nvertices " << a.vertex_count() << "\ndim " << a.dim() << "\n";
  for (int x = 0; x < a.dim(); ++x) {
    const auto& t = a.tag(x);
    os << "basis " << x << " " << t.source + 1 << " " << t.target + 1 << " " << t.degree << " " << t.word
       << "\n";
  }
  const auto& f = a.field();
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < a.dim(); ++y) {
      const auto& p = a.product(x, y);
      if (p.empty()) continue;
      os << "mul " << x << " " << y << " :";
      for (auto& [z, c] : p) os << " " << f.str(c) << "*" << z;
      os << "\n";
    }
  return os.str();
}

#define CMPREPROJ_INSTANTIATE(F)                                                                     \
  template class FDAlgebra<F>;                                                                       \
  template AlgebraElement<F> basis_element<F>(const AlgPtr<F>&, int);                                \
  template AlgebraElement<F> multiply<F>(const AlgebraElement<F>&, const AlgebraElement<F>&);        \
  template AlgPtr<F> build_quotient<F>(const F&, const Quiver&, const std::vector<Relation>&, int,   \
                                       const std::string&);                                          \
  template AlgPtr<F> build_by_path_enumeration<F>(const F&, const Quiver&,                           \
                                                  const std::vector<Relation>&, int,                 \
                                                  const std::string&);                               \
  template AlgPtr<F> contract<F>(const AlgPtr<F>&, const std::vector<int>&);                         \
  template std::vector<std::vector<int>> cartan_matrix<F>(const FDAlgebra<F>&);                      \
  template std::string serialize<F>(const FDAlgebra<F>&);

CMPREPROJ_INSTANTIATE(PrimeField)
CMPREPROJ_INSTANTIATE(RationalField)

}  // namespace cmpreproj
