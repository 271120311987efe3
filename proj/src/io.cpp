#include "cmpreproj/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cmpreproj/errors.hpp"

namespace cmpreproj {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
AlgPtr<F> algebra_from_text(const F& f, const std::string& text, const std::string& name) {
  auto p = parse_presentation(text);
  auto a = build_quotient(f, p.quiver, p.relations, default_cutoff(p.quiver), name);
  return a;
}

template <class F>
AlgPtr<F> load_algebra(const F& f, const std::string& path) {
  auto name = path.substr(path.find_last_of('/') + 1);
  return algebra_from_text(f, read_file(path), name.substr(0, name.find('.')));
}

namespace {

std::string strip(std::string s) {
  auto h = s.find('#');
  if (h != std::string::npos) s.erase(h);
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int vertex_arg(std::istringstream& in, int n, const std::string& line) {
  int v = 0;
  if (!(in >> v) || v < 1 || v > n) throw ParseError("bad vertex in '" + line + "'");
  return v - 1;
}

template <class F>
Matrix<F> parse_matrix(const F& f, const std::string& body, int rows, int cols, const std::string& line) {
  Matrix<F> m(f, rows, cols);
  std::istringstream rs(body);
  std::string row;
  int r = 0;
  while (std::getline(rs, row, ';')) {
    if (strip(row).empty() && rows == 0) continue;
    if (r >= rows) throw ParseError("too many rows in '" + line + "'");
    std::istringstream es(row);
    long long v = 0;
    int c = 0;
    while (es >> v) {
      if (c >= cols) throw ParseError("too many entries in '" + line + "'");
      m(r, c++) = f.from_int(v);
    }
    if (!es.eof()) throw ParseError("bad entry in '" + line + "'");
    if (c != cols) throw ParseError("row has " + std::to_string(c) + " entries in '" + line + "'");
    ++r;
  }
  if (r != rows) throw ParseError("expected " + std::to_string(rows) + " rows in '" + line + "'");
  return m;
}

}  // namespace

template <class F>
Mod<F> module_from_text(const AlgPtr<F>& a, const std::string& text) {
  const int n = a->vertex_count();
  std::vector<Mod<F>> parts;
  std::vector<int> dims;
  std::map<std::string, Matrix<F>> arrows;
  bool open = false;
  auto close = [&] {
    if (!open) return;
    auto m = module_from_arrows(a, dims, arrows);
    if (!m->verify(0, nullptr)) throw InvalidModule("arrow matrices violate the relations");
    parts.push_back(m);
    arrows.clear();
    open = false;
  };
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "projective" || word == "injective" || word == "simple") {
      close();
      int v = vertex_arg(ls, n, line);
      parts.push_back(word == "projective" ? projective_module(a, v)
                      : word == "injective" ? injective_module(a, v)
                                            : simple_module(a, v));
    } else if (word == "module") {
      close();
      dims.clear();
      int d = 0;
      while (ls >> d) {
        if (d < 0) throw ParseError("negative dimension in '" + line + "'");
        dims.push_back(d);
      }
      if (static_cast<int>(dims.size()) != n) throw ParseError("dimension vector needs " + std::to_string(n) + " entries");
      open = true;
    } else {
      auto colon = line.find(':');
      if (!open || colon == std::string::npos) throw ParseError("unexpected line '" + line + "'");
      auto label = strip(line.substr(0, colon));
      auto it = a->arrows().find(label);
      if (it == a->arrows().end()) throw ParseError("unknown arrow '" + label + "'");
      const auto& t = a->tag(it->second);
      arrows[label] = parse_matrix(a->field(), line.substr(colon + 1), dims[t.source], dims[t.target], line);
    }
  }
  close();
  if (parts.empty()) throw ParseError("module text has no summands");
  return parts.size() == 1 ? parts.front() : direct_sum(a, parts);
}

#define CMPREPROJ_INSTANTIATE(F)                                                            \
  template AlgPtr<F> algebra_from_text<F>(const F&, const std::string&, const std::string&); \
  template AlgPtr<F> load_algebra<F>(const F&, const std::string&);                          \
  template Mod<F> module_from_text<F>(const AlgPtr<F>&, const std::string&);

CMPREPROJ_INSTANTIATE(PrimeField)
CMPREPROJ_INSTANTIATE(RationalField)

}  // namespace cmpreproj
