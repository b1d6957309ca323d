#include "chipdual/frackets.hpp"

#include <algorithm>
#include <map>

namespace chipdual {

std::string to_string(Side side) { return side == Side::L ? "L" : "M"; }

const RatMatrix& fracket_map(const ChipFiringPair& p, Side side) {
  return side == Side::L ? p.m_l_inv() : p.l_m_inv();
}

const IntMatrix& side_matrix(const ChipFiringPair& p, Side side) {
  return side == Side::L ? p.L() : p.M().matrix();
}

const ClassIndexer& side_classes(const ChipFiringPair& p, Side side) {
  return side == Side::L ? p.l_classes() : p.M().classes();
}

const Fracket* FracketPartition::find(const RatVector& key) const {
  auto it = std::lower_bound(frackets.begin(), frackets.end(), key,
                             [](const Fracket& f, const RatVector& k) { return f.key < k; });
  return it != frackets.end() && it->key == key ? &*it : nullptr;
}

bool FracketPartition::sizes_equal() const {
  return std::all_of(frackets.begin(), frackets.end(), [&](const Fracket& f) {
    return f.classes.size() == frackets.front().classes.size();
  });
}

std::size_t FracketPartition::class_count() const {
  std::size_t total = 0;
  for (const auto& f : frackets) total += f.classes.size();
  return total;
}

FracketPartition fracket_partition(const ChipFiringPair& p, Side side, std::size_t cap) {
  const ClassIndexer& classes = side_classes(p, side);
  const RatMatrix& map = fracket_map(p, side);
  std::map<RatVector, Fracket> grouped;
  for (IntVector& v : classes.class_representatives(cap)) {
    RatVector key = frac(map * v);
    Fracket& f = grouped[key];
    if (f.key.empty()) f.key = key;
    f.classes.push_back(classes.class_id(v));
    f.representatives.push_back(std::move(v));
  }
  FracketPartition out{side, {}};
  out.frackets.reserve(grouped.size());
  for (auto& [key, f] : grouped) out.frackets.push_back(std::move(f));
  return out;
}

IntMatrix zero_fracket_lattice(const ChipFiringPair& p, Side side) {
  const IntMatrix& own = side_matrix(p, side);
  const IntMatrix& other = side_matrix(p, side == Side::L ? Side::M : Side::L);
  return lattice_intersect_with_zn(to_rational(own) * inverse(other));
}

AbelianGroup fracket_quotient(const ChipFiringPair& p, Side side) {
  return quotient_group(zero_fracket_lattice(p, side));
}

AbelianGroup zero_fracket_group(const ChipFiringPair& p, Side side) {
  return lattice_quotient(zero_fracket_lattice(p, side), side_matrix(p, side));
}

Integer zero_fracket_order(const ChipFiringPair& p, Side side) {
  return side_classes(p, side).order() / fracket_quotient(p, side).order();
}

ZeroFracket zero_fracket(const ChipFiringPair& p, Side side, std::size_t cap) {
  const FracketPartition partition = fracket_partition(p, side, cap);
  ZeroFracket z{side, {}, {}, zero_fracket_lattice(p, side), {}, {}};
  if (const Fracket* f = partition.find(RatVector(p.size(), Rational(0)))) {
    z.representatives = f->representatives;
    z.members = f->classes;
  }
  z.quotient = quotient_group(z.lattice);
  z.order_from_lattice = side_classes(p, side).order() / z.quotient.order();
  return z;
}

Integer flcm(const RatMatrix& a) {
  Integer k = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) k = lcm(k, a(i, j).get_den());
  return k;
}

Integer gcd_entries(const IntMatrix& a) {
  Integer g = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g = gcd(g, a(i, j));
  if (g == 0) throw InvalidInput("gcd of an all-zero matrix");
  return g;
}

Integer gcd_two(const IntMatrix& a, const IntMatrix& b) {
  return gcd(gcd_entries(a), gcd_entries(b));
}

IntMatrix scaled_fracket_map(const ChipFiringPair& p, Side side) {
  return to_integer(scaled(fracket_map(p, side), Rational(side_classes(p, side).order())));
}

LargestFactorReport verify_largest_invariant_factor(const ChipFiringPair& p) {
  return {fracket_quotient(p, Side::L).largest_invariant_factor(), flcm(p.m_l_inv()),
          fracket_quotient(p, Side::M).largest_invariant_factor(), flcm(p.l_m_inv())};
}

SizeFormulaReport zero_fracket_size_formula(const ChipFiringPair& p) {
  SizeFormulaReport r;
  r.gcd_l = gcd_entries(scaled_fracket_map(p, Side::L));
  r.gcd_m = gcd_entries(scaled_fracket_map(p, Side::M));
  r.p_l = fracket_quotient(p, Side::L).product_without_largest();
  r.p_m = fracket_quotient(p, Side::M).product_without_largest();
  r.predicted = gcd(r.gcd_l, r.gcd_m) / gcd(r.p_m, r.p_l);
  r.actual_l = zero_fracket_order(p, Side::L);
  r.actual_m = zero_fracket_order(p, Side::M);
  return r;
}

CyclicShortcut cyclic_shortcut(const ChipFiringPair& p, Side side) {
  return {side, fracket_quotient(p, side).is_cyclic(),
          gcd_entries(scaled_fracket_map(p, side)), zero_fracket_order(p, side)};
}

}  // namespace chipdual
