#include "chipdual/duality.hpp"

#include "chipdual/frackets.hpp"

namespace chipdual {

std::string to_string(MuCase c) { return c == MuCase::Identity ? "identity" : "dual"; }

namespace {

void require_m_superstable(const ChipFiringPair& p, const Configuration& s) {
  if (!p.M().is_superstable(s))
    throw InvalidInput(to_string(s) + " is not a superstable configuration of M");
}

bool mu_fixes(const ChipFiringPair& p, const Configuration& s) {
  const RatMatrix& lm = p.l_m_inv();
  return frac(lm * scaled(s, Integer(2))) == frac(lm * p.M().c_max());
}

}  // namespace

MuCase mu_case(const ChipFiringPair& p, const Configuration& s) {
  require_m_superstable(p, s);
  return mu_fixes(p, s) ? MuCase::Identity : MuCase::Dual;
}

Configuration involution_mu(const ChipFiringPair& p, const Configuration& s) {
  if (mu_case(p, s) == MuCase::Identity) return s;
  return p.M().sstab_of_class(p.M().c_max() - s);
}

Preimage duality(const ChipFiringPair& p, const Preimage& x) {
  if (!p.find_superstable(x))
    throw InvalidInput(to_string(x) + " is not a superstable preimage of the pair");
  const auto [fl, fr] = floor_frac_split(x);
  return (p.M().c_max() - involution_mu(p, fl)) + fr;
}

Preimage duality_inverse(const ChipFiringPair& p, const Preimage& y) {
  if (!p.find_critical(y))
    throw InvalidInput(to_string(y) + " is not a critical preimage of the pair");
  const auto [fl, fr] = floor_frac_split(y);
  return involution_mu(p, p.M().c_max() - fl) + fr;
}

std::vector<DualityRecord> duality_table(const ChipFiringPair& p) {
  std::vector<DualityRecord> out;
  out.reserve(p.superstables().size());
  for (const PairConfiguration& s : p.superstables()) {
    const Preimage image = duality(p, s.preimage);
    const auto slot = p.find_critical(image);
    if (!slot)
      throw VerificationFailure("duality image " + to_string(image) + " is not a critical preimage");
    out.push_back({s, p.criticals()[*slot], mu_case(p, s.floor)});
  }
  return out;
}

std::vector<Configuration> fixed_points(const ChipFiringPair& p) {
  std::vector<Configuration> out;
  for (const Configuration& s : p.M().superstables())
    if (mu_fixes(p, s)) out.push_back(s);
  return out;
}

FixedPointPrediction predicted_fixed_point_count(const ChipFiringPair& p) {
  FixedPointPrediction r;
  r.zero_fracket_order = zero_fracket_order(p, Side::M);
  r.order_le2_count = count_order_le2(fracket_quotient(p, Side::M));
  r.predicted = r.zero_fracket_order * r.order_le2_count;
  r.actual = fixed_points(p).size();
  return r;
}

NonzeroCriteria nonzero_criteria(const ChipFiringPair& p) {
  NonzeroCriteria r;
  const IntMatrix lattice = zero_fracket_lattice(p, Side::M);
  r.quotient = quotient_group(lattice);
  r.c_max_order = element_order(lattice, p.M().c_max());
  const bool even = mpz_even_p(r.c_max_order.get_mpz_t()) != 0;
  r.odd_order_guarantee = !even;
  if (r.quotient.is_cyclic() && even) {
    const Integer ratio = r.quotient.order() / r.c_max_order;
    r.cyclic_even_criterion = mpz_even_p(ratio.get_mpz_t()) != 0;
  }
  r.actual = fixed_points(p).size();
  return r;
}

}  // namespace chipdual
