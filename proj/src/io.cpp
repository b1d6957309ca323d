#include "chipdual/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "chipdual/errors.hpp"

namespace chipdual {

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const Rational& x) { return json(to_string(x)); }

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(to_json(a.row(i)));
  return out;
}

json to_json(const RatMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(to_json(a.row(i)));
  return out;
}

json to_json(const AbelianGroup& g) {
  json out = json::array();
  const auto& f = g.invariant_factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) out.push_back(to_json(*it));
  return out;
}

json to_json(const PairConfiguration& c) {
  return {{"config", to_json(c.config)},
          {"preimage", to_json(c.preimage)},
          {"floor", to_json(c.floor)},
          {"frac", to_json(c.frac)}};
}

json to_json(const DualityRecord& r) {
  return {{"superstable", to_json(r.superstable)},
          {"critical", to_json(r.critical)},
          {"mu_case", to_string(r.mu_case)}};
}

json to_json(const SignedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.sign > 0 ? "+" : "-"});
  return {{"n", g.vertex_count()}, {"sink", g.sink()}, {"edges", edges}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational (integer or \"a/b\" string), got " + j.dump());
}

Integer integer_from_json(const json& j) {
  const Rational r = rational_from_json(j);
  if (!is_integral(r)) throw InvalidInput("expected an integer, got " + j.dump());
  return r.get_num();
}

IntVector int_vector_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected a vector, got " + j.dump());
  IntVector out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

RatVector rat_vector_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected a vector, got " + j.dump());
  RatVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("expected a nonempty matrix grid");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InvalidInput("ragged matrix grid");
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = integer_from_json(j[i][k]);
  }
  return out;
}

SignedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InvalidInput("graph JSON needs \"n\" and \"edges\"");
  const auto n = j.at("n").get<std::size_t>();
  std::optional<std::size_t> sink;
  if (j.contains("sink")) sink = j.at("sink").get<std::size_t>();
  std::vector<SignedEdge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw InvalidInput("edge must be [u, v, sign]: " + e.dump());
    int sign = 0;
    if (e[2].is_string())
      sign = e[2] == "+" ? 1 : e[2] == "-" ? -1 : 0;
    else if (e[2].is_number_integer())
      sign = e[2].get<int>();
    if (sign != 1 && sign != -1) throw InvalidInput("edge sign must be \"+\" or \"-\": " + e.dump());
    edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), sign});
  }
  return SignedGraph(n, std::move(edges), sink);
}

json pair_to_json(const IntMatrix& l, const IntMatrix& m) {
  return {{"L", to_json(l)}, {"M", to_json(m)}};
}

ChipFiringPair pair_from_json(const json& j) {
  if (j.is_object() && j.contains("edges")) return reduced_laplacians(graph_from_json(j));
  if (!j.is_object() || !j.contains("L") || !j.contains("M"))
    throw InvalidInput("pair JSON needs \"L\" and \"M\"");
  return ChipFiringPair(int_matrix_from_json(j.at("L")), int_matrix_from_json(j.at("M")));
}

json fracket_report(const ChipFiringPair& p, Side side) {
  const FracketPartition part = fracket_partition(p, side);
  const ZeroFracket zero = zero_fracket(p, side);
  const SizeFormulaReport size = zero_fracket_size_formula(p);
  json keys = json::array(), sizes = json::array(), members = json::array();
  for (const auto& f : part.frackets) {
    keys.push_back(to_json(f.key));
    sizes.push_back(f.classes.size());
  }
  for (const auto& v : zero.representatives) members.push_back(to_json(v));
  return {{"side", to_string(side)},
          {"keys", keys},
          {"sizes", sizes},
          {"zero_fracket_members", members},
          {"quotient", to_json(zero.quotient)},
          {"predicted_size", to_json(size.predicted)},
          {"actual_size", to_json(zero.order_from_lattice)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

bool looks_like_json(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

json parse_json(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace

ChipFiringPair load_pair(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) {
    try {
      return pair_from_json(parse_json(text, path));
    } catch (const json::exception& e) {
      throw InvalidInput(path + ": " + e.what());
    }
  }
  return reduced_laplacians(SignedGraph::parse(text));
}

SignedGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) {
    try {
      return graph_from_json(parse_json(text, path));
    } catch (const json::exception& e) {
      throw InvalidInput(path + ": " + e.what());
    }
  }
  return SignedGraph::parse(text);
}

std::string TextTable::render() const {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < width.size(); ++c) {
      if (c) s += " | ";
      const std::string& cell = c < cells.size() ? cells[c] : std::string();
      s += cell + std::string(width[c] - cell.size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(header);
  std::string rule;
  for (std::size_t c = 0; c < width.size(); ++c) {
    if (c) rule += "-+-";
    rule += std::string(width[c], '-');
  }
  out << rule << '\n';
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string TextTable::csv() const {
  auto quote = [](const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string q = "\"";
    for (char ch : cell) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + '"';
  };
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << quote(cells[c]);
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

namespace {

template <class T>
std::string render_grid(const Matrix<T>& a) {
  std::vector<std::vector<std::string>> cells(a.rows(), std::vector<std::string>(a.cols()));
  std::size_t w = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      cells[i][j] = to_string(a(i, j));
      w = std::max(w, cells[i][j].size());
    }
  std::ostringstream out;
  for (const auto& row : cells) {
    out << "[";
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << std::string(w - row[j].size(), ' ') << row[j];
    out << "]\n";
  }
  return out.str();
}

}  // namespace

std::string render_matrix(const IntMatrix& a) { return render_grid(a); }
std::string render_matrix(const RatMatrix& a) { return render_grid(a); }

}  // namespace chipdual
