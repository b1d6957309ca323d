#include "chipdual/pair.hpp"

#include <algorithm>
#include <mutex>

namespace chipdual {

struct ChipFiringPair::State {
  State(const IntMatrix& l_in, const MMatrix& m_in, std::size_t cap_in)
      : l(l_in), m(m_in), cap(cap_in), l_classes(l_in) {}

  IntMatrix l;
  MMatrix m;
  std::size_t cap;
  ClassIndexer l_classes;
  RatMatrix l_m_inv;
  RatMatrix m_l_inv;
  Integer det_l;

  std::once_flag built;
  std::vector<PairConfiguration> superstables;
  std::vector<PairConfiguration> criticals;
  std::vector<std::size_t> sstab_slot;  // L-class linear index -> position
  std::vector<std::size_t> crit_slot;
};

namespace {

IntMatrix checked_l(const IntMatrix& l) {
  if (!l.square() || l.empty()) throw InvalidInput("L must be square");
  if (determinant(l) == 0) throw SingularMatrix("L is singular");
  return l;
}

}  // namespace

ChipFiringPair::ChipFiringPair(const IntMatrix& l, const MMatrix& m, std::size_t cap) {
  if (l.rows() != m.size()) throw InvalidInput("L and M dimensions differ");
  state_ = std::make_shared<State>(checked_l(l), m, cap);
  State& st = *state_;
  st.det_l = determinant(l);
  const RatMatrix l_rat = to_rational(l);
  st.l_m_inv = l_rat * m.inverse();
  st.m_l_inv = to_rational(m.matrix()) * inverse(l);
  if (!(st.l_m_inv * to_rational(m.matrix()) == l_rat) ||
      !(st.m_l_inv * l_rat == to_rational(m.matrix())))
    throw VerificationFailure("transfer matrices inconsistent with L and M");
}

ChipFiringPair::ChipFiringPair(const IntMatrix& l, const IntMatrix& m, std::size_t cap)
    : ChipFiringPair(l, MMatrix(m, cap), cap) {}

const IntMatrix& ChipFiringPair::L() const { return state_->l; }
const MMatrix& ChipFiringPair::M() const { return state_->m; }
std::size_t ChipFiringPair::size() const { return state_->l.rows(); }
const RatMatrix& ChipFiringPair::l_m_inv() const { return state_->l_m_inv; }
const RatMatrix& ChipFiringPair::m_l_inv() const { return state_->m_l_inv; }
const ClassIndexer& ChipFiringPair::l_classes() const { return state_->l_classes; }
const Integer& ChipFiringPair::det_l() const { return state_->det_l; }
const Integer& ChipFiringPair::det_m() const { return state_->m.determinant(); }

bool ChipFiringPair::rplus_member(const Preimage& x) const {
  return x.size() == size() && is_nonnegative(x) && is_integral(state_->l_m_inv * x);
}

bool ChipFiringPair::splus_member(const IntVector& c) const {
  return c.size() == size() && is_nonnegative(state_->m_l_inv * c);
}

Preimage ChipFiringPair::to_preimage(const IntVector& c) const {
  if (c.size() != size()) throw InvalidInput("configuration dimension mismatch");
  return state_->m_l_inv * c;
}

IntVector ChipFiringPair::to_config(const Preimage& x) const {
  if (!rplus_member(x)) throw InvalidInput("to_config: " + to_string(x) + " is not in R+");
  return to_integer(state_->l_m_inv * x);
}

bool ChipFiringPair::ready_to_fire(const Preimage& x, std::size_t site) const {
  if (site >= size()) throw InvalidInput("site index out of range");
  if (!rplus_member(x)) throw InvalidInput("ready_to_fire: preimage is not in R+");
  // x - M e_i maps to c - L e_i, so only nonnegativity can fail; the
  // off-diagonal entries of M only add, leaving coordinate i.
  return x[site] >= Rational(state_->m.matrix()(site, site));
}

Preimage ChipFiringPair::fire_rplus(const Preimage& x, std::size_t site) const {
  if (!ready_to_fire(x, site)) throw InvalidInput("fire_rplus: site is not ready");
  Preimage out = x;
  const IntMatrix& m = state_->m.matrix();
  for (std::size_t i = 0; i < size(); ++i) out[i] -= m(i, site);
  return out;
}

Preimage ChipFiringPair::stabilize_rplus(const Preimage& x) const {
  return stabilize_rplus(x, [](const std::vector<std::size_t>& ready) { return ready.front(); });
}

Preimage ChipFiringPair::stabilize_rplus(const Preimage& x, const SiteChooser& choose) const {
  if (!rplus_member(x)) throw InvalidInput("stabilize_rplus: preimage is not in R+");
  const IntMatrix& m = state_->m.matrix();
  Preimage cur = x;
  for (;;) {
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < size(); ++i)
      if (cur[i] >= Rational(m(i, i))) ready.push_back(i);
    if (ready.empty()) return cur;
    const std::size_t site = choose(ready);
    if (std::find(ready.begin(), ready.end(), site) == ready.end())
      throw InvalidInput("stabilize_rplus: chooser picked a site that is not ready");
    for (std::size_t i = 0; i < size(); ++i) cur[i] -= m(i, site);
  }
}

IntVector ChipFiringPair::fire_splus(const IntVector& c, std::size_t site) const {
  if (!splus_member(c)) throw InvalidInput("fire_splus: configuration is not in S+");
  return to_config(fire_rplus(to_preimage(c), site));
}

IntVector ChipFiringPair::stabilize_splus(const IntVector& c) const {
  if (!splus_member(c)) throw InvalidInput("stabilize_splus: configuration is not in S+");
  return to_config(stabilize_rplus(to_preimage(c)));
}

Classification ChipFiringPair::classify(const IntVector& c) const {
  if (!splus_member(c)) throw InvalidInput("classify: " + to_string(c) + " is not in S+");
  const IntVector fl = floor(to_preimage(c));
  return {state_->m.is_superstable(fl), state_->m.is_critical(fl)};
}

PairConfiguration ChipFiringPair::describe(const Preimage& x) const {
  auto split = floor_frac_split(x);
  return {to_config(x), x, std::move(split.floor), std::move(split.frac)};
}

const ChipFiringPair::State& ChipFiringPair::tables() const {
  State& st = *state_;
  std::call_once(st.built, [&st, this] {
    const std::vector<IntVector> reps = st.l_classes.class_representatives(st.cap);
    for (const IntVector& c : reps) {
      const auto [fl, fr] = floor_frac_split(to_preimage(c));
      // Moving the floor inside its M-class keeps the L-class of the image
      // (L M^-1 M z = L z) and keeps L M^-1 x integral.
      st.superstables.push_back(describe(st.m.sstab_of_class(fl) + fr));
      st.criticals.push_back(describe(st.m.crit_of_class(fl) + fr));
    }
    auto by_config = [](const PairConfiguration& a, const PairConfiguration& b) {
      return a.config < b.config;
    };
    std::sort(st.superstables.begin(), st.superstables.end(), by_config);
    std::sort(st.criticals.begin(), st.criticals.end(), by_config);

    const std::size_t none = reps.size();
    auto index = [&](const std::vector<PairConfiguration>& list, std::vector<std::size_t>& slot,
                     bool want_superstable) {
      slot.assign(none, none);
      for (std::size_t k = 0; k < list.size(); ++k) {
        const Classification cls = classify(list[k].config);
        if (want_superstable ? !cls.is_superstable : !cls.is_critical)
          throw VerificationFailure("enumerated configuration " + to_string(list[k].config) +
                                    " fails the floor criterion");
        auto& s = slot[st.l_classes.linear_index(list[k].config)];
        if (s != none) throw VerificationFailure("two enumerated configurations share an L-class");
        s = k;
      }
    };
    index(st.superstables, st.sstab_slot, true);
    index(st.criticals, st.crit_slot, false);
  });
  return st;
}

const std::vector<PairConfiguration>& ChipFiringPair::superstables() const {
  return tables().superstables;
}

const std::vector<PairConfiguration>& ChipFiringPair::criticals() const {
  return tables().criticals;
}

std::size_t ChipFiringPair::superstable_slot(const IntVector& config) const {
  const State& st = tables();
  return st.sstab_slot[st.l_classes.linear_index(config)];
}

std::size_t ChipFiringPair::critical_slot(const IntVector& config) const {
  const State& st = tables();
  return st.crit_slot[st.l_classes.linear_index(config)];
}

std::optional<std::size_t> ChipFiringPair::find_superstable(const Preimage& x) const {
  if (!rplus_member(x)) return std::nullopt;
  const std::size_t k = superstable_slot(to_config(x));
  if (superstables()[k].preimage != x) return std::nullopt;
  return k;
}

std::optional<std::size_t> ChipFiringPair::find_critical(const Preimage& x) const {
  if (!rplus_member(x)) return std::nullopt;
  const std::size_t k = critical_slot(to_config(x));
  if (criticals()[k].preimage != x) return std::nullopt;
  return k;
}

}  // namespace chipdual
