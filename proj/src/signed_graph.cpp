#include "chipdual/signed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chipdual/errors.hpp"
#include "chipdual/frackets.hpp"
#include "chipdual/parallel.hpp"

namespace chipdual {

SignedGraph::SignedGraph(std::size_t vertex_count, std::vector<SignedEdge> edges,
                         std::optional<std::size_t> sink)
    : n_(vertex_count), edges_(std::move(edges)), sink_(sink.value_or(vertex_count - 1)) {
  if (n_ < 2) throw InvalidInput("a signed graph needs at least two vertices");
  if (sink_ >= n_) throw InvalidInput("sink " + std::to_string(sink_) + " out of range");
  for (SignedEdge& e : edges_) {
    if (e.u >= n_ || e.v >= n_)
      throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u) + " " +
                         std::to_string(e.v));
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1) throw InvalidInput("edge sign must be +1 or -1");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
}

bool SignedGraph::connected() const {
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t parts = n_;
  for (const SignedEdge& e : edges_) {
    std::size_t a = root(e.u), b = root(e.v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

SignedGraph SignedGraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> n, sink;
  std::vector<SignedEdge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    auto bad = [&] { return InvalidInput("edge list line " + std::to_string(lineno) + ": " + line); };
    if (!n) {
      std::string kw_n, kw_sink;
      long long count = -1, s = -1;
      if (!(fields >> kw_n >> count) || kw_n != "n" || count < 0) throw bad();
      if (fields >> kw_sink) {
        if (kw_sink != "sink" || !(fields >> s) || s < 0) throw bad();
        sink = static_cast<std::size_t>(s);
      }
      n = static_cast<std::size_t>(count);
      continue;
    }
    long long u = -1, v = -1;
    std::string sign, rest;
    if (!(fields >> u >> v >> sign) || u < 0 || v < 0 || (fields >> rest)) throw bad();
    if (sign != "+" && sign != "-") throw bad();
    edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), sign == "+" ? 1 : -1});
  }
  if (!n) throw InvalidInput("edge list is missing its 'n <count> sink <id>' header");
  return SignedGraph(*n, std::move(edges), sink);
}

std::string SignedGraph::to_text() const {
  std::ostringstream out;
  out << "n " << n_ << " sink " << sink_ << '\n';
  for (const SignedEdge& e : edges_) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  return out.str();
}

ReducedLaplacians reduced_laplacian_matrices(const SignedGraph& g) {
  if (!g.connected()) throw InvalidInput("underlying graph is not connected");
  const std::size_t n = g.vertex_count();
  IntMatrix l(n, n), m(n, n);
  for (const SignedEdge& e : g.edges()) {
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
    l(e.u, e.v) -= e.sign;
    l(e.v, e.u) -= e.sign;
    m(e.u, e.u) += 1;
    m(e.v, e.v) += 1;
    m(e.u, e.v) -= 1;
    m(e.v, e.u) -= 1;
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v)
    if (v != g.sink()) keep.push_back(v);
  ReducedLaplacians out{IntMatrix(n - 1, n - 1), IntMatrix(n - 1, n - 1)};
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      out.L(i, j) = l(keep[i], keep[j]);
      out.M(i, j) = m(keep[i], keep[j]);
    }
  return out;
}

ChipFiringPair reduced_laplacians(const SignedGraph& g, std::size_t enumeration_cap) {
  ReducedLaplacians r = reduced_laplacian_matrices(g);
  return ChipFiringPair(r.L, r.M, enumeration_cap);
}

std::string to_string(GraphFamily kind) { return kind == GraphFamily::Complete ? "complete" : "cycle"; }

GraphFamily parse_family(const std::string& name) {
  if (name == "complete") return GraphFamily::Complete;
  if (name == "cycle") return GraphFamily::Cycle;
  throw InvalidInput("unknown graph family '" + name + "' (expected complete or cycle)");
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> family_edges(GraphFamily kind, std::size_t n) {
  if (n < 3) throw InvalidInput("graph families need n >= 3");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (kind == GraphFamily::Complete) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  } else {
    for (std::size_t u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    edges.emplace_back(0, n - 1);
  }
  // non-sink edges first, each group in sorted order
  std::stable_sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
    bool sa = a.second == n - 1, sb = b.second == n - 1;
    if (sa != sb) return !sa;
    return a < b;
  });
  return edges;
}

}  // namespace

std::size_t pattern_bits(GraphFamily kind, std::size_t n) {
  std::size_t bits = 0;
  for (const auto& e : family_edges(kind, n))
    if (e.second != n - 1) ++bits;
  return bits;
}

SignedGraph family(GraphFamily kind, std::size_t n, std::uint64_t pattern) {
  const std::size_t bits = pattern_bits(kind, n);
  if (bits < 64 && (pattern >> bits) != 0)
    throw InvalidInput("sign pattern " + std::to_string(pattern) + " has more than " +
                       std::to_string(bits) + " bits");
  std::vector<SignedEdge> edges;
  std::size_t k = 0;
  for (const auto& [u, v] : family_edges(kind, n)) {
    int sign = 1;
    if (v != n - 1) sign = ((pattern >> k++) & 1) ? -1 : 1;
    edges.push_back({u, v, sign});
  }
  return SignedGraph(n, std::move(edges), n - 1);
}

Sweep sweep(GraphFamily kind, std::size_t n, std::size_t threads, std::size_t pattern_cap) {
  const std::size_t bits = pattern_bits(kind, n);
  if (bits >= 63 || (std::uint64_t{1} << bits) > pattern_cap)
    throw EnumerationCapExceeded("sign patterns of " + to_string(kind) + " n=" + std::to_string(n),
                                 pattern_cap);
  const std::uint64_t count = std::uint64_t{1} << bits;

  // Walk the patterns in Gray-code order, flipping one edge of L per step,
  // and file each matrix under its pattern index.
  const ReducedLaplacians base = reduced_laplacian_matrices(family(kind, n, 0));
  std::vector<std::pair<std::size_t, std::size_t>> non_sink;
  for (const auto& e : family_edges(kind, n))
    if (e.second != n - 1) non_sink.push_back(e);
  std::vector<IntMatrix> ls(count, base.L);
  IntMatrix l = base.L;
  std::uint64_t prev = 0;
  for (std::uint64_t step = 1; step < count; ++step) {
    const std::uint64_t gray = step ^ (step >> 1);
    const std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(gray ^ prev));
    const auto [u, v] = non_sink[bit];
    // edge sign flips from s to -s: entry -s becomes s, a change of 2s
    const int delta = (gray >> bit) & 1 ? 2 : -2;
    l(u, v) += delta;
    l(v, u) += delta;
    ls[gray] = l;
    prev = gray;
  }

  const MMatrix m(base.M);
  auto built = parallel_map(count, threads, [&](std::size_t i) -> std::optional<ChipFiringPair> {
    if (determinant(ls[i]) == 0) return std::nullopt;
    return ChipFiringPair(ls[i], m);
  });
  Sweep out{kind, n, {}, {}};
  for (std::uint64_t i = 0; i < count; ++i) {
    if (built[i])
      out.entries.push_back({i, std::move(*built[i])});
    else
      out.singular.push_back(i);
  }
  return out;
}

bool half_n_integral(const ChipFiringPair& p, std::size_t n) {
  return is_integral(scaled(p.l_m_inv(), Rational(static_cast<long>(n / 2))));
}

HalfNReport verify_half_n_integrality(std::size_t n, std::size_t threads) {
  if (n < 4 || n % 2) throw InvalidInput("half-n integrality needs an even n >= 4");
  const Sweep s = sweep(GraphFamily::Complete, n, threads);
  HalfNReport r{n, s.entries.size(), {}};
  auto ok = parallel_map(s.entries.size(), threads,
                         [&](std::size_t i) { return half_n_integral(s.entries[i].pair, n); });
  for (std::size_t i = 0; i < ok.size(); ++i)
    if (!ok[i]) r.failures.push_back(s.entries[i].pattern);
  return r;
}

bool contains_z2_power(const AbelianGroup& g, std::size_t rank) {
  return g.even_factor_count() >= rank;
}

bool Z2SubgroupReport::subgroup_is_z2_power() const {
  const auto& f = subgroup.invariant_factors();
  return f.size() == n - 2 && std::all_of(f.begin(), f.end(), [](const Integer& d) { return d == 2; });
}

bool Z2SubgroupReport::holds() const {
  return generators_are_superstable_preimages && subset_sums_are_superstable_preimages &&
         generators_have_order_le2 && generators_in_zero_fracket && subgroup_is_z2_power() &&
         distinct_subset_sum_classes == (std::size_t{1} << (n - 2)) &&
         contains_z2_power(zero_fracket, n - 2);
}

Z2SubgroupReport kn_z2_subgroup(const ChipFiringPair& p, std::size_t n) {
  if (n < 4 || n % 2) throw InvalidInput("the Z_2 subgroup check needs an even n >= 4");
  if (p.size() != n - 1) throw InvalidInput("pair size does not match K_" + std::to_string(n));
  const std::size_t k = n - 1;
  const Integer half(static_cast<long>(n / 2));

  auto superstable_preimage = [&](const Preimage& x) {
    return p.rplus_member(x) && p.M().is_superstable(floor(x));
  };

  Z2SubgroupReport r;
  r.n = n;
  r.generators_are_superstable_preimages = true;
  r.generators_have_order_le2 = true;
  r.generators_in_zero_fracket = true;
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < k; ++i) {
    const Preimage s = to_rational(scaled(unit_vector(k, i), half));
    if (!superstable_preimage(s)) {
      r.generators_are_superstable_preimages = false;
      continue;
    }
    const IntVector c = p.to_config(s);
    if (!is_zero(to_rational(p.l_classes().class_id(scaled(c, Integer(2))).residues)))
      r.generators_have_order_le2 = false;
    if (!is_zero(frac(p.m_l_inv() * c))) r.generators_in_zero_fracket = false;
    gens.push_back(c);
  }
  if (!r.generators_are_superstable_preimages) return r;

  // subset sums over |I| <= (n-2)/2
  std::set<ClassId> classes;
  r.subset_sums_are_superstable_preimages = true;
  const std::size_t max_size = (n - 2) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_size) continue;
    IntVector x(k, Integer(0));
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) x[i] = half;
    if (!superstable_preimage(to_rational(x))) {
      r.subset_sums_are_superstable_preimages = false;
      continue;
    }
    classes.insert(p.l_classes().class_id(p.to_config(to_rational(x))));
  }
  r.distinct_subset_sum_classes = classes.size();
  r.subgroup = generated_subgroup(p.L(), gens);
  r.zero_fracket = zero_fracket_group(p, Side::L);
  return r;
}

CriticalGroupScan scan_critical_groups(const Sweep& s, std::size_t threads) {
  struct Row {
    AbelianGroup group;
    bool group_ok;
    bool zero_ok;
  };
  const bool complete = s.kind == GraphFamily::Complete;
  const std::size_t rank = s.n >= 2 ? s.n - 2 : 0;
  auto rows = parallel_map(s.entries.size(), threads, [&](std::size_t i) {
    const ChipFiringPair& p = s.entries[i].pair;
    Row row{p.l_classes().group(), true, true};
    if (complete) {
      row.group_ok = contains_z2_power(row.group, rank);
      row.zero_ok = contains_z2_power(zero_fracket_group(p, Side::L), rank);
    }
    return row;
  });
  CriticalGroupScan out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.groups.insert(rows[i].group);
    if (!rows[i].group_ok) out.patterns_without_z2.push_back(s.entries[i].pattern);
    if (!rows[i].zero_ok) out.zero_frackets_without_z2.push_back(s.entries[i].pattern);
  }
  return out;
}

}  // namespace chipdual
