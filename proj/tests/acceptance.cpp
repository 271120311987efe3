#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cmpreproj/certify.hpp"
#include "cmpreproj/io.hpp"
#include "cmpreproj/stable_cat.hpp"

using namespace cmpreproj;

namespace {

PrimeField fp(101);
RationalField qq;
const std::string data_dir = CMPREPROJ_DATA_DIR;
const std::string golden_path = CMPREPROJ_GOLDEN;
constexpr int kBound = 30;

// failures collected for one criterion
struct Report {
  int number;
  std::string title;
  std::vector<std::string> failures;
  int checks = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  bool print() const {
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << number << ": " << (failures.empty() ? "PASS" : "FAIL") << "  " << title << "  ("
              << checks << " checks, " << std::fixed;
    std::cout.precision(1);
    std::cout << secs << " s)\n";
    const std::size_t shown = std::min<std::size_t>(failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << failures[i] << "\n";
    if (failures.size() > shown) std::cout << "    ... " << failures.size() - shown << " more\n";
    std::cout.flush();
    return failures.empty();
  }
};

std::map<std::string, std::string> load_golden() {
  std::ifstream in(golden_path);
  std::map<std::string, std::string> out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream s(line);
    std::string type, pat, triple;
    if (std::getline(s, type, '\t') && std::getline(s, pat, '\t') && std::getline(s, triple)) out[type + " " + pat] = triple;
  }
  return out;
}

template <class F>
AlgPtr<F> data_algebra(const F& f, const std::string& name) {
  return load_algebra(f, data_dir + "/" + name + ".alg");
}
template <class F>
Mod<F> data_module(const AlgPtr<F>& a, const std::string& name) {
  return module_from_text(a, read_file(data_dir + "/" + name + ".mod"));
}

VertexSet interval(int a, int b) {
  VertexSet j;
  for (int v = a; v <= b; ++v) j.push_back(v);
  return j;
}

std::string label(const DynkinSpec& d, const VertexSet& j) { return d.name() + " {" + set_string(j) + "}"; }

// one row of the classification sweep
struct SweepRow {
  DynkinSpec spec;
  VertexSet J;
  Triple computed, predicted;
  bool passed = false;
  bool idims_equal = false;
  std::string notes;
};

SweepRow classify_row(const DynkinSpec& d, const VertexSet& j) {
  Rng rng(1);
  auto c = classify_dynkin(fp, d, j, kBound, rng);
  SweepRow r{d, j, c.computed, c.predicted, c.certificate.passed(), c.certificate.idim_w == c.certificate.idim_w_end, ""};
  for (auto& n : c.certificate.notes) r.notes += n + "; ";
  return r;
}

void table_rows(Report& rep, std::vector<SweepRow>& rows, const std::map<std::string, std::string>& golden,
                const std::vector<std::string>& types) {
  for (auto& name : types) {
    auto d = parse_dynkin(name);
    for (auto& j : subsets_up_to_symmetry(d)) {
      auto row = classify_row(d, j);
      auto key = d.name() + " " + pattern(d, j);
      auto it = golden.find(key);
      rep.check(it != golden.end(), label(d, j) + ": no table entry for " + key);
      if (it != golden.end())
        rep.check(row.computed.str() == it->second,
                  label(d, j) + ": computed " + row.computed.str() + ", table " + it->second);
      rows.push_back(row);
    }
  }
}

// ---------------------------------------------------------------- 3

void criterion3(Report& rep, const std::vector<SweepRow>& rows) {
  for (auto& r : rows) {
    auto split = frozen_split(r.spec, r.J);
    rep.check(r.passed, label(r.spec, r.J) + ": certification failed: " + r.notes);
    const int want_fidim = split.frozen == r.J ? 0 : 2;
    rep.check(r.computed.fidim == DimReport::finite(want_fidim),
              label(r.spec, r.J) + ": fidim " + r.computed.fidim.str() + ", expected " + std::to_string(want_fidim));
    const bool selfinjective = r.computed.idim == DimReport::finite(0);
    if (selfinjective) continue;
    // the rule is stated for impartial J; one-sided J in type A is reduced first
    auto [rd, rj] = impartial_reduction(r.spec, r.J);
    auto rsplit = frozen_split(rd, rj);
    const bool want_dd2 = rd.apply_iota(rj) != rj && rd.apply_iota(rsplit.frozen) == rsplit.frozen;
    rep.check((r.computed.domdim == DimReport::finite(2)) == want_dd2,
              label(r.spec, r.J) + ": domdim " + r.computed.domdim.str() + ", expected " + (want_dd2 ? "2" : "not 2"));
  }
}

// ---------------------------------------------------------------- 4

void criterion4(Report& rep) {
  Rng rng(4);
  auto cand = dualizing_candidate(fp, dynkin_spec('A', 6), {1, 2, 3, 6}, rng);
  const auto& a = cand.algebra;
  rep.check(a->dim() == 21, "dim A = " + std::to_string(a->dim()));
  rep.check(cand.split.frozen == VertexSet{1, 3, 6}, "frozen part " + set_string(cand.split.frozen));
  if (cand.sequences.size() != 1) {
    rep.check(false, "expected one mutable vertex");
    return;
  }
  const auto& s = cand.sequences.front();
  rep.check(s.kernel->dims() == std::vector<int>{1, 2, 2, 1}, "dimension vector of U_2");
  rep.check(s.kernel->dim() == 6, "dim U_2 = " + std::to_string(s.kernel->dim()));
  std::vector<int> terms{s.kernel->dim(), s.second_source->dim(), s.first_source->dim(), s.injective->dim()};
  rep.check(terms == std::vector<int>{6, 11, 11, 6}, "four-term dims");
  rep.check(s.first.is_surjective() && s.first_source->dim() - s.injective->dim() == s.second.rank() &&
                s.second_source->dim() - s.second.rank() == s.kernel->dim(),
            "four-term sequence is not exact");
  rep.check(!is_n_gorenstein(a, 1, kBound, rng), "A is 1-Gorenstein");
  // multiplicities of I_1, I_2, I_3, I_6 in the injective hull of A
  rep.check(envelope_vertices(regular_module(a)) == std::vector<int>{1, 0, 2, 3}, "injective hull of A");
}

// ---------------------------------------------------------------- 5

void criterion5(Report& rep) {
  for (int n = 4; n <= 6; ++n) {
    Rng rng(5);
    auto d = dynkin_spec('A', n);
    auto j = interval(1, n - 1);
    auto c = classify_dynkin(fp, d, j, kBound, rng);
    rep.check(c.computed.str() == "inf,2,2", label(d, j) + ": triple " + c.computed.str());
    rep.check(c.certificate.passed(), label(d, j) + ": certification failed");
    auto cand = dualizing_candidate(fp, d, j, rng);
    auto r = check_syzygy_cm_equality(cand.module, 2, rng);
    rep.check(r.all_agree(), label(d, j) + ": " + std::to_string(r.disagree) + " disagreements, " +
                                 std::to_string(r.undecided) + " undecided of " + std::to_string(r.samples.size()));
  }
}

// ---------------------------------------------------------------- 6

void criterion6(Report& rep) {
  Rng rng(6);
  auto c = data_algebra(fp, "e6_12");
  auto e = contracted_algebra(fp, dynkin_spec('E', 6), {1, 2});
  rep.check(c->dim() == e->dim(), "dim of the presented algebra");
  rep.check(cartan_matrix(*c) == cartan_matrix(*e), "Cartan matrix of the presentation");
  auto w = data_module(c, "e6_12_w");
  auto parts = basic_summands(w, rng);
  rep.check(parts.size() == 2, "W has " + std::to_string(parts.size()) + " summands");
  bool has_x = false, has_i = false;
  for (auto& p : parts) {
    if (p->dims() == std::vector<int>{2, 3} && is_indecomposable(p, rng)) has_x = true;
    if (is_isomorphic(p, injective_module(c, 1), rng)) has_i = true;
  }
  rep.check(has_x, "no indecomposable summand with dimension vector [2,3]");
  rep.check(has_i, "no injective summand at the frozen vertex");
  rep.check(in_cm(w, w, 2), "in_cm(W, W) is false");
  rep.check(!is_nth_syzygy(w, 2, rng), "W is a second syzygy");
  rep.check(certify_dualizing(w, kBound, rng).passed(), "W is not certified");
}

// ---------------------------------------------------------------- 7

void criterion7(Report& rep) {
  Rng rng(7);
  auto nak = data_algebra(fp, "nakayama");
  auto w = data_module(nak, "nakayama_w");
  rep.check(is_n_gorenstein(nak, 3, kBound, rng), "not 3-Gorenstein");
  auto d = is_cotilting(w, kBound, rng);
  rep.check(d.has_value() && *d == 3, "W is not cotilting of injective dimension 3");
  rep.check(is_ext_maximal(w, rng), "W is not Ext-maximal");
  auto c = certify_dualizing(w, kBound, rng);
  rep.check(c.cond_i == Verdict::Pass, "condition (i) fails");
  rep.check(c.cond_iii == Verdict::Fail && c.cond_iii_definitive, "condition (iii) is not definitively refuted");
}

// ---------------------------------------------------------------- 8

void criterion8(Report& rep) {
  Rng rng(8);
  auto a = data_algebra(fp, "loop_radical_square");
  auto ca = certify_dualizing(data_module(a, "loop_radical_square_w"), kBound, rng);
  rep.check(ca.cond_i == Verdict::Pass && ca.cond_ii == Verdict::Fail && ca.cond_iii == Verdict::Pass,
            "DA over the loop algebra: expected pass/fail/pass");
  auto b = data_algebra(fp, "two_cycle_aba");
  auto cb = certify_dualizing(data_module(b, "two_cycle_aba_w"), kBound, rng);
  rep.check(cb.cond_i == Verdict::Pass && cb.cond_ii == Verdict::Pass && cb.cond_iii == Verdict::Fail,
            "e_1B + S_2: expected pass/pass/fail");
}

// ---------------------------------------------------------------- 9

void criterion9(Report& rep, const std::vector<std::string>& types) {
  for (auto& name : types) {
    auto d = parse_dynkin(name);
    auto c = stable_cat(fp, d);
    for (auto& j : subsets_up_to_symmetry(d)) {
      rep.check(check_axiom_c(c, j), label(d, j) + ": axiom (c)");
      rep.check(check_axiom_d(c, j), label(d, j) + ": axiom (d)");
    }
  }
  auto c = stable_cat(fp, dynkin_spec('A', 6));
  rep.check(quotient_hom_dim(c, 5, 6, {1, 3}) > 0, "(5,6) modulo {1,3} vanishes");
  rep.check(quotient_hom_dim(c, 3, 4, {1, 6}) > 0, "(3,4) modulo {1,6} vanishes");
  rep.check(quotient_hom_dim(c, 1, 1, {3, 6}) > 0, "(1,1) modulo {3,6} vanishes");
}

// ---------------------------------------------------------------- 10

template <class F>
void ext_duality(Report& rep, const std::string& name, const Mod<F>& w, Rng& rng) {
  auto corpus = sample_corpus(w, 16, rng);
  if (corpus.size() > 10) corpus.resize(10);
  std::vector<Mod<F>> duals;
  for (auto& [l, m] : corpus) duals.push_back(dual(m));
  for (std::size_t x = 0; x < corpus.size(); ++x)
    for (std::size_t y = 0; y < corpus.size(); ++y) {
      auto lhs = ext_dims(corpus[x].second, corpus[y].second, 4);
      auto rhs = ext_dims(duals[y], duals[x], 4);
      rep.check(lhs == rhs, name + ": Ext(" + corpus[x].first + ", " + corpus[y].first + ") vs dual side");
    }
}

void gorenstein_matching(Report& rep, const std::vector<std::string>& types) {
  for (auto& name : types) {
    auto d = parse_dynkin(name);
    for (auto& j : subsets_up_to_symmetry(d)) {
      Rng rng(10);
      auto cand = dualizing_candidate(fp, d, j, rng);
      auto pa = coresolution_pdims(regular_module(cand.algebra), 3, kBound, rng);
      auto pw = coresolution_pdims(cand.module, 3, kBound, rng);
      for (int n = 1; n <= 3; ++n) {
        const bool ga = is_n_gorenstein(cand.algebra, n, kBound, rng);
        const bool gw = is_module_n_gorenstein(cand.module, n, kBound, rng);
        rep.check(ga == gw, label(d, j) + ": n-Gorenstein differs for A and W at n=" + std::to_string(n));
        if (ga)
          for (int i = 0; i < n; ++i)
            rep.check(pa[i] == pw[i], label(d, j) + ": pdim of coresolution term " + std::to_string(i));
      }
    }
  }
}

void preprojective_dims(Report& rep) {
  for (int n = 1; n <= 6; ++n) {
    auto d = dynkin_spec('A', n);
    auto p = preprojective_presentation(d);
    auto t = build_by_path_enumeration(fp, p.quiver, p.relations, 2 * n + 2);
    const int expected = n * (n + 1) * (n + 2) / 6;
    rep.check(t->dim() == expected, "path enumeration for A" + std::to_string(n) + " gives " + std::to_string(t->dim()));
    rep.check(preprojective_algebra(fp, d)->dim() == expected, "quotient engine for A" + std::to_string(n));
  }
}

void round_trip_paths(Report& rep) {
  for (int n = 1; n <= 6; ++n) {
    auto pi = preprojective_algebra(fp, dynkin_spec('A', n));
    const auto& arrows = pi->arrows();
    auto path = [&](int from, int to) {
      Vec<PrimeField> e(pi->dim(), fp.zero());
      e[from - 1] = fp.one();
      for (int v = from; v != to; v += (to > from ? 1 : -1)) {
        std::string l = to > from ? "a" + std::to_string(v) : "b" + std::to_string(v - 1);
        Vec<PrimeField> x(pi->dim(), fp.zero());
        x[arrows.at(l)] = fp.one();
        e = pi->multiply(e, x);
      }
      return e;
    };
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        const bool nonzero = !vec_is_zero(fp, pi->multiply(path(a, b), path(b, a)));
        rep.check(nonzero == (2 * a >= b + 1), "A" + std::to_string(n) + " round trip " + std::to_string(a) + "->" +
                                                   std::to_string(b) + "->" + std::to_string(a));
      }
  }
}

// the rational backend on the dimensions of criteria 1-9
void field_agreement(Report& rep, const std::vector<SweepRow>& rows, const std::vector<std::string>& types) {
  for (auto& r : rows) {
    if (std::find(types.begin(), types.end(), r.spec.name()) == types.end()) continue;
    Rng rng(1);
    auto c = classify_dynkin(qq, r.spec, r.J, kBound, rng);
    rep.check(c.computed == r.computed && c.certificate.passed() == r.passed,
              label(r.spec, r.J) + ": Q gives " + c.computed.str() + " vs F101 " + r.computed.str());
    auto af = contracted_algebra(fp, r.spec, r.J);
    auto aq = contracted_algebra(qq, r.spec, r.J);
    rep.check(cartan_matrix(*af) == cartan_matrix(*aq), label(r.spec, r.J) + ": Cartan matrices differ");
  }
  Rng rng(11);
  auto cand = dualizing_candidate(qq, dynkin_spec('A', 6), {1, 2, 3, 6}, rng);
  const auto& s = cand.sequences.front();
  rep.check(s.kernel->dims() == std::vector<int>{1, 2, 2, 1} && s.second_source->dim() == 11 &&
                s.first_source->dim() == 11 && s.injective->dim() == 6,
            "A6 example over Q");
  rep.check(envelope_vertices(regular_module(cand.algebra)) == std::vector<int>{1, 0, 2, 3}, "A6 hull over Q");

  auto e6 = data_algebra(qq, "e6_12");
  auto w6 = data_module(e6, "e6_12_w");
  rep.check(certify_dualizing(w6, kBound, rng).passed() && in_cm(w6, w6, 2) && !is_nth_syzygy(w6, 2, rng),
            "E6 example over Q");
  auto nak = data_algebra(qq, "nakayama");
  auto cn = certify_dualizing(data_module(nak, "nakayama_w"), kBound, rng);
  rep.check(is_n_gorenstein(nak, 3, kBound, rng) && cn.cond_i == Verdict::Pass && cn.cond_iii == Verdict::Fail &&
                cn.cond_iii_definitive,
            "Nakayama example over Q");
  auto la = data_algebra(qq, "loop_radical_square");
  auto cl = certify_dualizing(data_module(la, "loop_radical_square_w"), kBound, rng);
  rep.check(cl.cond_i == Verdict::Pass && cl.cond_ii == Verdict::Fail && cl.cond_iii == Verdict::Pass,
            "loop algebra over Q");
  auto tb = data_algebra(qq, "two_cycle_aba");
  auto ct = certify_dualizing(data_module(tb, "two_cycle_aba_w"), kBound, rng);
  rep.check(ct.cond_i == Verdict::Pass && ct.cond_ii == Verdict::Pass && ct.cond_iii == Verdict::Fail,
            "two-cycle algebra over Q");
  auto cq = stable_cat(qq, dynkin_spec('A', 6));
  auto cf = stable_cat(fp, dynkin_spec('A', 6));
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      for (VertexSet t : {VertexSet{1, 3}, VertexSet{1, 6}, VertexSet{3, 6}, VertexSet{1, 3, 6}})
        rep.check(quotient_hom_dim(cq, i, j, t) == quotient_hom_dim(cf, i, j, t), "quotient Hom over Q");
}

}  // namespace

int main() {
  const auto golden = load_golden();
  const std::vector<std::string> small{"A3", "A4", "A5", "A6"};
  const std::vector<std::string> large{"D4", "D5", "E6", "E7"};
  std::vector<SweepRow> rows;
  bool ok = true;

  Report r1{1, "type A tables"};
  table_rows(r1, rows, golden, small);
  ok &= r1.print();

  Report r2{2, "types D and E"};
  table_rows(r2, rows, golden, large);
  for (auto& r : rows)
    if (r.spec.name() == "D4" || r.spec.name() == "E7")
      r2.check(r.computed.str() == "0,0,inf", label(r.spec, r.J) + ": not selfinjective");
  ok &= r2.print();

  Report r3{3, "certification over the sweep"};
  criterion3(r3, rows);
  ok &= r3.print();

  Report r4{4, "A6 worked example"};
  criterion4(r4);
  ok &= r4.print();

  Report r5{5, "counterexample family"};
  criterion5(r5);
  ok &= r5.print();

  Report r6{6, "E6 example"};
  criterion6(r6);
  ok &= r6.print();

  Report r7{7, "Nakayama example"};
  criterion7(r7);
  ok &= r7.print();

  Report r8{8, "independence of the three conditions"};
  criterion8(r8);
  ok &= r8.print();

  Report r9{9, "reduction axioms"};
  std::vector<std::string> all = small;
  all.insert(all.end(), large.begin(), large.end());
  criterion9(r9, all);
  ok &= r9.print();

  Report r10{10, "property suites"};
  {
    Rng rng(10);
    auto cand = dualizing_candidate(fp, dynkin_spec('A', 6), {1, 2, 3, 6}, rng);
    ext_duality(r10, "A6 {1,2,3,6}", cand.module, rng);
    auto nak = data_algebra(fp, "nakayama");
    ext_duality(r10, "nakayama", data_module(nak, "nakayama_w"), rng);
    auto e6 = data_algebra(fp, "e6_12");
    ext_duality(r10, "E6 {1,2}", data_module(e6, "e6_12_w"), rng);
  }
  for (auto& r : rows)
    if (r.passed) r10.check(r.idims_equal, label(r.spec, r.J) + ": idim of W differs over A and over End W");
  gorenstein_matching(r10, {"A3", "A4", "A5", "A6", "D4", "D5"});
  preprojective_dims(r10);
  round_trip_paths(r10);
  field_agreement(r10, rows, {"A3", "A4", "A5", "A6", "D4", "D5"});
  ok &= r10.print();

  return ok ? 0 : 1;
}
