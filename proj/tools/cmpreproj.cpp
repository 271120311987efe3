#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmpreproj/certify.hpp"
#include "cmpreproj/errors.hpp"
#include "cmpreproj/io.hpp"
#include "cmpreproj/stable_cat.hpp"

using namespace cmpreproj;
using json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, Failed = 1, BadInput = 2, Undetermined = 3 };

struct Config {
  std::uint32_t characteristic = 101;
  int bound = 30;
  std::uint64_t seed = 1;
  std::string format = "text";
};

struct Args {
  std::string type, family, J, alg, module;
  int n = 0;
  bool sweep = false;
};

bool undetermined(const DimReport& r) { return r.kind == DimReport::Kind::Undetermined; }
bool undetermined(const Triple& t) { return undetermined(t.idim) || undetermined(t.fidim) || undetermined(t.domdim); }

std::string matrix_string(const std::vector<std::vector<int>>& m) {
  std::string s;
  for (auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += "\n";
  }
  return s;
}

json triple_json(const Triple& t) {
  return json{{"idim", t.idim.str()}, {"fidim", t.fidim.str()}, {"domdim", t.domdim.str()}};
}

// subsets to run: the given J, or all subsets up to symmetry with --sweep
std::vector<VertexSet> subsets_for(const DynkinSpec& d, const Args& args) {
  if (args.sweep) return subsets_up_to_symmetry(d);
  if (args.J.empty()) throw InvalidInput("--J is required unless --sweep is given");
  return {parse_vertex_set(args.J, d.n)};
}

template <class F>
json certificate_json(const Certificate<F>& c) {
  json conds{{"i", verdict_string(c.cond_i)}, {"ii", verdict_string(c.cond_ii)}, {"iii", verdict_string(c.cond_iii)}};
  json h = nullptr;
  if (c.witness) {
    h = json::array();
    for (auto& b : c.witness->blocks) {
      json rows = json::array();
      for (int i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < b.cols(); ++j) row.push_back(b.field().str(b(i, j)));
        rows.push_back(row);
      }
      h.push_back(rows);
    }
  }
  return json{{"conditions", conds}, {"witness_h", h}, {"notes", c.notes}};
}

template <class F>
json syzygy_json(const SyzygyCmReport<F>& r, int d) {
  json bad = json::array();
  for (auto& s : r.samples)
    if (s.undecided || s.cm != s.syzygy) bad.push_back(s.label);
  return json{{"d", d}, {"samples", r.samples.size()}, {"agree", r.agree}, {"disagree", r.disagree},
              {"undecided", r.undecided}, {"mismatches", bad}};
}

// ---------------------------------------------------------------- report

template <class F>
int cmd_report(const F& f, const Config& cfg, const Args& args) {
  auto d = parse_dynkin(args.type);
  int code = Ok;
  json all = json::array();
  for (auto& j : subsets_for(d, args)) {
    Rng rng(cfg.seed);
    auto cls = classify_dynkin(f, d, j, cfg.bound, rng);
    auto a = contracted_algebra(f, d, j);
    auto split = frozen_split(d, j);
    const bool semisimple = a->dim() == a->vertex_count();
    if (undetermined(cls.computed)) code = Undetermined;
    json r{{"algebra", {{"type", d.name()}, {"J", j}}},
           {"dim", a->dim()},
           {"cartan", cartan_matrix(*a)},
           {"frozen", split.frozen},
           {"mutable", split.mutable_},
           {"pattern", pattern(d, j)},
           {"impartial", is_impartial(d, j)},
           {"semisimple", semisimple},
           {"selfinjective", is_selfinjective(a)},
           {"dims", triple_json(cls.computed)},
           {"predicted", triple_json(cls.predicted)},
           {"match", cls.match},
           {"certified", cls.certificate.passed()}};
    if (cfg.format == "json") {
      all.push_back(r);
      continue;
    }
    if (cfg.format == "tsv") {
      std::cout << d.name() << "\t" << set_string(j) << "\t" << pattern(d, j) << "\t" << a->dim() << "\t"
                << cls.computed.str() << "\t" << (cls.certificate.passed() ? "certified" : "uncertified") << "\n";
      continue;
    }
    std::cout << "algebra     Pi(" << d.name() << ") at " << set_string(j) << "\n"
              << "dim         " << a->dim() << (semisimple ? " (semisimple)" : "") << "\n"
              << "cartan\n"
              << matrix_string(cartan_matrix(*a)) << "frozen      " << set_string(split.frozen) << "\n"
              << "mutable     " << set_string(split.mutable_) << "\n"
              << "pattern     " << pattern(d, j) << "\n"
              << "impartial   " << (is_impartial(d, j) ? "yes" : "no") << "\n"
              << "selfinj     " << (is_selfinjective(a) ? "yes" : "no") << "\n"
              << "triple      " << cls.computed.str() << " (idim,fidim,domdim) "
              << (cls.certificate.passed() ? "certified" : "not certified") << "\n"
              << "predicted   " << cls.predicted.str() << (cls.match ? "" : "  MISMATCH") << "\n";
    if (args.sweep) std::cout << "\n";
  }
  if (cfg.format == "json") std::cout << (args.sweep ? all : all.front()).dump(2) << "\n";
  return code;
}

// ---------------------------------------------------------------- table

const std::vector<std::string> column_order{"0,0,inf", "2,2,2", "inf,2,2", "inf,2,0", "inf,0,0"};

template <class F>
int cmd_table(const F& f, const Config& cfg, const Args& args) {
  auto d = dynkin_spec(args.family.at(0), args.n);
  std::map<std::string, std::vector<std::string>> columns;
  std::vector<std::pair<std::string, std::string>> rows;
  int code = Ok;
  for (auto& j : subsets_up_to_symmetry(d)) {
    Rng rng(cfg.seed);
    auto cls = classify_dynkin(f, d, j, cfg.bound, rng);
    if (undetermined(cls.computed)) code = Undetermined;
    columns[cls.computed.str()].push_back(pattern(d, j));
    rows.emplace_back(pattern(d, j), cls.computed.str());
  }
  std::vector<std::string> keys = column_order;
  for (auto& [k, v] : columns)
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  const bool any = columns.size() == 1;
  if (cfg.format == "tsv") {
    std::cout << "type\tpattern\tidim,fidim,domdim\n";
    for (auto& [p, t] : rows) std::cout << d.name() << "\t" << p << "\t" << t << "\n";
  } else if (cfg.format == "json") {
    json cols = json::object();
    for (auto& k : keys)
      if (columns.count(k)) cols[k] = any ? json("Any choice") : json(columns[k]);
    std::cout << json{{"type", d.name()}, {"columns", cols}}.dump(2) << "\n";
  } else {
    std::cout << d.name() << "  (f frozen, m mutable, . absent)\n";
    for (auto& k : keys) {
      if (!columns.count(k)) continue;
      std::cout << "(" << k << "):";
      if (any)
        std::cout << " Any choice";
      else
        for (auto& p : columns[k]) std::cout << " " << p;
      std::cout << "\n";
    }
  }
  return code;
}

// ---------------------------------------------------------------- certify

template <class F>
int cmd_certify(const F& f, const Config& cfg, const Args& args) {
  auto d = parse_dynkin(args.type);
  int code = Ok;
  json all = json::array();
  for (auto& j : subsets_for(d, args)) {
    Rng rng(cfg.seed);
    auto cls = classify_dynkin(f, d, j, cfg.bound, rng);
    const auto& cert = cls.certificate;
    json out{{"algebra", {{"type", d.name()}, {"J", j}}}, {"dims", triple_json(cls.computed)}};
    out.update(certificate_json(cert));
    if (cert.passed() && cert.idim_w.is_finite()) {
      auto cand = dualizing_candidate(f, d, j, rng);
      auto rep = check_syzygy_cm_equality(cand.module, cert.idim_w.value, rng);
      out["cm_vs_syzygy"] = syzygy_json(rep, cert.idim_w.value);
    }
    if (!cert.passed()) code = Failed;
    if (cfg.format == "json") {
      all.push_back(out);
      continue;
    }
    std::cout << d.name() << " " << set_string(j) << ": " << (cert.passed() ? "pass" : "FAIL") << "  (i) "
              << verdict_string(cert.cond_i) << "  (ii) " << verdict_string(cert.cond_ii) << "  (iii) "
              << verdict_string(cert.cond_iii) << "  fidim " << cls.computed.fidim.str() << "  triple "
              << cls.computed.str() << "\n";
    if (out.contains("cm_vs_syzygy")) {
      auto& s = out["cm_vs_syzygy"];
      std::cout << "  CM vs Omega^" << s["d"].get<int>() << ": " << s["agree"].get<int>() << " agree, "
                << s["disagree"].get<int>() << " disagree, " << s["undecided"].get<int>() << " undecided\n";
    }
    for (auto& n : cert.notes) std::cout << "  note: " << n << "\n";
  }
  if (cfg.format == "json") std::cout << (args.sweep ? all : all.front()).dump(2) << "\n";
  return code;
}

template <class F>
int cmd_certify_module(const F& f, const Config& cfg, const Args& args) {
  Rng rng(cfg.seed);
  auto a = load_algebra(f, args.alg);
  auto w = module_from_text(a, read_file(args.module));
  auto cert = certify_dualizing(w, cfg.bound, rng);
  Triple t{algebra_idim(a, cfg.bound, rng), cert.passed() ? cert.idim_w : DimReport::undetermined(cfg.bound),
           dominant_dim(a, cfg.bound)};
  json out{{"algebra", {{"file", args.alg}, {"module", args.module}}}, {"dims", triple_json(t)}};
  out.update(certificate_json(cert));
  if (cert.passed() && cert.idim_w.is_finite()) {
    auto rep = check_syzygy_cm_equality(w, cert.idim_w.value, rng);
    out["cm_vs_syzygy"] = syzygy_json(rep, cert.idim_w.value);
  }
  if (cfg.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << a->name() << ": " << (cert.passed() ? "pass" : "FAIL") << "  (i) " << verdict_string(cert.cond_i)
              << "  (ii) " << verdict_string(cert.cond_ii) << "  (iii) " << verdict_string(cert.cond_iii)
              << (cert.cond_iii == Verdict::Fail && cert.cond_iii_definitive ? " (refuted)" : "") << "  idim W "
              << cert.idim_w.str() << "\n";
    for (auto& n : cert.notes) std::cout << "  note: " << n << "\n";
  }
  return cert.passed() ? Ok : Failed;
}

// ---------------------------------------------------------------- axioms

template <class F>
int cmd_axioms(const F& f, const Config& cfg, const Args& args) {
  auto d = parse_dynkin(args.type);
  auto c = stable_cat(f, d);
  int code = Ok;
  json all = json::array();
  for (auto& j : subsets_for(d, args)) {
    auto split = frozen_split(d, j);
    // (c1) Hom(X_{iota i}, X_j) and (c2) Hom(X_i, X_{iota j}) vanish modulo the frozen part
    json c1 = nullptr, c2 = nullptr;
    for (int i : j)
      for (int k : j) {
        if (c1.is_null() && quotient_hom_dim(c, c.suspend(i), k, split.frozen) > 0) c1 = json::array({c.suspend(i), k});
        if (c2.is_null() && quotient_hom_dim(c, i, c.suspend(k), split.frozen) > 0) c2 = json::array({i, c.suspend(k)});
      }
    auto wit = axiom_d_witnesses(c, j);
    json dj = json::array();
    bool d_ok = true;
    for (auto& w : wit) {
      d_ok = d_ok && w.ok;
      json e{{"through", w.through}};
      e["d1"] = w.from_suspended_source ? json::array({w.from_suspended_source, w.from_suspended_target}) : json(nullptr);
      e["d2"] = w.to_suspended_source ? json::array({w.to_suspended_source, w.to_suspended_target}) : json(nullptr);
      dj.push_back(e);
    }
    const bool ok = c1.is_null() && c2.is_null() && d_ok;
    if (!ok) code = Failed;
    json r{{"algebra", {{"type", d.name()}, {"J", j}}}, {"frozen", split.frozen}, {"c1_refuted_by", c1},
           {"c2_refuted_by", c2}, {"d", dj}, {"holds", ok}};
    if (cfg.format == "json") {
      all.push_back(r);
      continue;
    }
    auto pair = [](const json& p) {
      return "(" + std::to_string(p[0].get<int>()) + "," + std::to_string(p[1].get<int>()) + ")";
    };
    std::cout << d.name() << " " << set_string(j) << "  frozen " << set_string(split.frozen) << "\n"
              << "  (c1) " << (c1.is_null() ? "holds" : "fails at " + pair(c1)) << "\n"
              << "  (c2) " << (c2.is_null() ? "holds" : "fails at " + pair(c2)) << "\n";
    for (auto& e : dj) {
      std::cout << "  (d) modulo " << set_string(e["through"].get<VertexSet>()) << ": (d1) "
                << (e["d1"].is_null() ? "fails" : "nonzero at " + pair(e["d1"])) << "  (d2) "
                << (e["d2"].is_null() ? "fails" : "nonzero at " + pair(e["d2"])) << "\n";
    }
    std::cout << "  " << (ok ? "all hold" : "FAILED") << "\n";
  }
  if (cfg.format == "json") std::cout << (args.sweep ? all : all.front()).dump(2) << "\n";
  return code;
}

// ---------------------------------------------------------------- build

template <class F>
int cmd_build(const F& f, const Config&, const Args& args) {
  AlgPtr<F> a;
  if (!args.alg.empty()) {
    a = load_algebra(f, args.alg);
  } else {
    auto d = parse_dynkin(args.type);
    a = args.J.empty() ? preprojective_algebra(f, d) : contracted_algebra(f, d, parse_vertex_set(args.J, d.n));
  }
  std::cout << serialize(*a);
  return Ok;
}

template <class F>
int dispatch(const F& f, const Config& cfg, const std::string& cmd, const Args& args) {
  if (cmd == "report") return cmd_report(f, cfg, args);
  if (cmd == "table") return cmd_table(f, cfg, args);
  if (cmd == "certify") return cmd_certify(f, cfg, args);
  if (cmd == "certify-module") return cmd_certify_module(f, cfg, args);
  if (cmd == "axioms") return cmd_axioms(f, cfg, args);
  return cmd_build(f, cfg, args);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contracted preprojective algebras: homological dimensions and CM certification"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  Args args;
  app.add_option("--char", cfg.characteristic, "field characteristic, 0 for the rationals")->capture_default_str();
  app.add_option("--bound", cfg.bound, "resolution length bound")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed (CMPREPROJ_SEED takes precedence)")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->capture_default_str()->check(CLI::IsMember({"text", "json", "tsv"}));

  auto with_set = [&](CLI::App* sub) {
    sub->add_option("type", args.type, "Dynkin type such as A6 or E7")->required();
    sub->add_option("--J", args.J, "vertex subset such as 1,2,3,6");
    sub->add_flag("--sweep", args.sweep, "all nonempty subsets up to symmetry");
    return sub;
  };
  auto report = with_set(app.add_subcommand("report", "dimensions, Cartan matrix and frozen split"));
  auto certify = with_set(app.add_subcommand("certify", "build and certify the dualizing module"));
  auto axioms = with_set(app.add_subcommand("axioms", "reduction axioms (c) and (d)"));
  auto table = app.add_subcommand("table", "classification table for one Dynkin type");
  table->add_option("family", args.family, "A, D or E (or a full type such as A4)")->required();
  table->add_option("n", args.n, "rank");
  auto cm = app.add_subcommand("certify-module", "certify a module over an algebra read from files");
  cm->add_option("algebra", args.alg, "presentation file")->required()->check(CLI::ExistingFile);
  cm->add_option("--W", args.module, "module file")->required()->check(CLI::ExistingFile);
  auto build = app.add_subcommand("build", "dump basis and structure constants");
  build->add_option("type", args.type, "Dynkin type");
  build->add_option("--J", args.J, "vertex subset");
  build->add_option("--alg", args.alg, "presentation file instead of a Dynkin type")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? Ok : BadInput;
  }
  if (const char* env = std::getenv("CMPREPROJ_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (...) {
      std::cerr << "error: CMPREPROJ_SEED is not a number\n";
      return BadInput;
    }
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "table" && args.n == 0) {
      // "table A4"
      auto d = parse_dynkin(args.family);
      args.family = std::string(1, d.family);
      args.n = d.n;
    }
    if (cmd == "table") dynkin_spec(args.family.at(0), args.n);
    if (cmd == "build" && args.alg.empty() && args.type.empty()) throw InvalidInput("build needs a type or --alg");
    if (cfg.characteristic == 0) return dispatch(RationalField{}, cfg, cmd, args);
    if (!is_prime(cfg.characteristic)) throw InvalidInput("--char must be 0 or a prime");
    return dispatch(PrimeField(cfg.characteristic), cfg, cmd, args);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const EmptySubset& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const InvalidModule& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const UndeterminedDimension& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return Undetermined;
  } catch (const Error& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return Undetermined;
  }
}
