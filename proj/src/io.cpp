#include "tropmat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open file: " + path);
  return in;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Matroid load_matroid_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad matroid JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("circuits"))
    fail(ErrorCode::ParseError, "matroid JSON needs \"n\" and \"circuits\"");
  int n = j["n"].get<int>();
  std::vector<Subset> circuits;
  for (const auto& c : j["circuits"]) {
    Subset s;
    for (const auto& e : c) {
      int label = e.get<int>();
      if (label < 1 || label > n)
        fail(ErrorCode::ParseError,
             "circuit element " + std::to_string(label) + " out of 1.." +
                 std::to_string(n));
      s = s.with(label - 1);
    }
    circuits.push_back(s);
  }
  return Matroid::from_circuits(n, std::move(circuits));
}

Matroid load_matroid_file(const std::string& path) {
  auto in = open_or_fail(path);
  return load_matroid_json(in);
}

std::string matroid_to_json(const Matroid& m) {
  nlohmann::json j;
  j["n"] = m.size();
  j["circuits"] = nlohmann::json::array();
  for (Subset c : m.circuits()) j["circuits"].push_back(c.element_labels());
  return j.dump();
}

Graph load_graph(std::istream& in) {
  int v = 0, m = 0;
  if (!(in >> v >> m)) fail(ErrorCode::ParseError, "graph header must be 'V m'");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    int a = 0, b = 0;
    if (!(in >> a >> b))
      fail(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges");
    edges.push_back({a - 1, b - 1});
  }
  return Graph::make(v, std::move(edges));
}

Graph load_graph_file(const std::string& path) {
  auto in = open_or_fail(path);
  return load_graph(in);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

TropMatrix load_trop_matrix(std::istream& in) {
  std::vector<std::vector<TropValue>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    std::vector<TropValue> row;
    for (const auto& t : toks) row.push_back(parse_trop(t));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(ErrorCode::ParseError, "empty matrix");
  TropMatrix a(static_cast<int>(rows.size()),
               static_cast<int>(rows[0].size()));
  for (int i = 0; i < a.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != a.cols())
      fail(ErrorCode::ParseError, "ragged matrix rows");
    for (int j = 0; j < a.cols(); ++j)
      a.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return a;
}

TropMatrix load_trop_matrix_file(const std::string& path) {
  auto in = open_or_fail(path);
  return load_trop_matrix(in);
}

std::string trop_matrix_to_text(const TropMatrix& a) {
  std::ostringstream os;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      os << a.at(i, j).str();
    }
    os << '\n';
  }
  return os.str();
}

FieldMatrix load_field_matrix(std::istream& in) {
  std::vector<FieldVector> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    FieldVector row;
    for (const auto& t : toks) row.push_back(Puiseux::parse(t));
    rows.push_back(std::move(row));
  }
  return FieldMatrix::from_rows(rows);
}

FieldMatrix load_field_matrix_file(const std::string& path) {
  auto in = open_or_fail(path);
  return load_field_matrix(in);
}

std::string field_matrix_to_text(const FieldMatrix& a) {
  std::ostringstream os;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      // Entries are single tokens: no spaces inside.
      std::string e = a.at(i, j).str();
      std::erase(e, ' ');
      os << e;
    }
    os << '\n';
  }
  return os.str();
}

TropPlucker load_plucker(std::istream& in) {
  TropPlucker p;
  if (!(in >> p.d >> p.n))
    fail(ErrorCode::ParseError, "Pluecker header must be 'd n'");
  const std::uint64_t count = binomial(p.n, p.d);
  p.values.assign(count, TropValue::infinity());
  std::vector<char> seen(count, 0);
  for (std::uint64_t r = 0; r < count; ++r) {
    std::string subset_text, value_text;
    if (!(in >> subset_text >> value_text))
      fail(ErrorCode::ParseError,
           "expected " + std::to_string(count) + " 'subset value' lines");
    Subset s;
    std::istringstream ss(subset_text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      int label = std::stoi(part);
      if (label < 1 || label > p.n)
        fail(ErrorCode::ParseError, "subset element out of range");
      s = s.with(label - 1);
    }
    if (s.count() != p.d)
      fail(ErrorCode::ParseError,
           "subset " + subset_text + " is not a " + std::to_string(p.d) +
               "-subset");
    int idx = subset_lex_rank(s, p.n);
    if (seen[static_cast<size_t>(idx)])
      fail(ErrorCode::ParseError, "duplicate subset " + subset_text);
    seen[static_cast<size_t>(idx)] = 1;
    p.values[static_cast<size_t>(idx)] = parse_trop(value_text);
  }
  return p;
}

TropPlucker load_plucker_file(const std::string& path) {
  auto in = open_or_fail(path);
  return load_plucker(in);
}

std::string plucker_to_text(const TropPlucker& p) {
  std::ostringstream os;
  os << p.d << ' ' << p.n << '\n';
  auto subsets = k_subsets(p.n, p.d);
  for (size_t r = 0; r < subsets.size(); ++r) {
    auto labels = subsets[r].element_labels();
    for (size_t i = 0; i < labels.size(); ++i) {
      if (i) os << ',';
      os << labels[i];
    }
    os << ' ' << p.values[r].str() << '\n';
  }
  return os.str();
}

TropPoint parse_point(const std::string& text) {
  std::vector<TropValue> coords;
  std::istringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::erase_if(part, [](unsigned char c) { return std::isspace(c); });
    if (!part.empty()) coords.push_back(parse_trop(part));
  }
  if (coords.empty()) fail(ErrorCode::ParseError, "empty point");
  return TropPoint(std::move(coords));
}

std::string point_to_text(const TropPoint& x) {
  std::ostringstream os;
  for (int i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x.coords()[static_cast<size_t>(i)].str();
  }
  return os.str();
}

}  // namespace tropmat
