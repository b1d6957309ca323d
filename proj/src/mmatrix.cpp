#include "chipdual/mmatrix.hpp"

#include <algorithm>
#include <mutex>

namespace chipdual {

bool is_m_matrix(const IntMatrix& m) {
  if (!m.square() || m.empty()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j && sgn(m(i, j)) <= 0) return false;
      if (i != j && sgn(m(i, j)) > 0) return false;
    }
  if (determinant(m) == 0) return false;
  const RatMatrix inv = inverse(m);
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j)
      if (sgn(inv(i, j)) < 0) return false;
  return true;
}

struct MMatrix::State {
  State(const IntMatrix& m, std::size_t cap)
      : matrix(m), inv(chipdual::inverse(m)), classes(m), det(chipdual::determinant(m)), cap(cap) {
    c_max.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) c_max.push_back(m(i, i) - 1);
  }

  IntMatrix matrix;
  RatMatrix inv;
  ClassIndexer classes;
  Integer det;
  Configuration c_max;
  std::size_t cap;

  std::once_flag built;
  std::vector<Configuration> superstables;
  std::vector<Configuration> criticals;
  // class linear index -> position in superstables / criticals
  std::vector<std::size_t> sstab_slot;
  std::vector<std::size_t> crit_slot;
};

MMatrix::MMatrix(const IntMatrix& m, std::size_t enumeration_cap) {
  if (!is_m_matrix(m)) throw InvalidInput("not an M-matrix");
  state_ = std::make_shared<State>(m, enumeration_cap);
}

const IntMatrix& MMatrix::matrix() const { return state_->matrix; }
std::size_t MMatrix::size() const { return state_->matrix.rows(); }
const RatMatrix& MMatrix::inverse() const { return state_->inv; }
const ClassIndexer& MMatrix::classes() const { return state_->classes; }
const Integer& MMatrix::determinant() const { return state_->det; }
const Configuration& MMatrix::c_max() const { return state_->c_max; }

Configuration MMatrix::fire(const Configuration& c, std::size_t site) const {
  const IntMatrix& m = state_->matrix;
  if (site >= m.rows()) throw InvalidInput("site index out of range");
  if (c.size() != m.rows()) throw InvalidInput("configuration dimension mismatch");
  Configuration out = c;
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] -= m(i, site);
  return out;
}

std::vector<std::size_t> MMatrix::ready_sites(const Configuration& c) const {
  const IntMatrix& m = state_->matrix;
  if (c.size() != m.rows()) throw InvalidInput("configuration dimension mismatch");
  // Off-diagonal entries only add chips, so site i may fire iff c_i >= M_ii
  // (for an effective c).
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (c[i] >= m(i, i)) ready.push_back(i);
  return ready;
}

Configuration MMatrix::stabilize(const Configuration& c) const {
  return stabilize(c, [](const std::vector<std::size_t>& ready) { return ready.front(); });
}

Configuration MMatrix::stabilize(const Configuration& c, const SiteChooser& choose) const {
  if (!is_nonnegative(c)) throw InvalidInput("stabilize: configuration is not effective");
  Configuration cur = c;
  for (auto ready = ready_sites(cur); !ready.empty(); ready = ready_sites(cur)) {
    const std::size_t site = choose(ready);
    if (std::find(ready.begin(), ready.end(), site) == ready.end())
      throw InvalidInput("stabilize: chooser picked a site that is not ready");
    cur = fire(cur, site);
  }
  return cur;
}

IntVector MMatrix::superstability_bound(const Configuration& s) const {
  return floor(state_->inv * s);
}

std::optional<IntVector> MMatrix::find_legal_multifiring(const Configuration& s,
                                                         const IntVector& bound) const {
  const IntMatrix& m = state_->matrix;
  const std::size_t n = m.rows();
  if (s.size() != n || bound.size() != n) throw InvalidInput("dimension mismatch");
  if (!is_nonnegative(bound)) return std::nullopt;
  // Odometer over the box, keeping rest = s - M z up to date incrementally.
  IntVector z(n, Integer(0));
  IntVector rest = s;
  for (;;) {
    std::size_t i = n;
    while (i-- > 0) {
      if (z[i] < bound[i]) {
        ++z[i];
        for (std::size_t r = 0; r < n; ++r) rest[r] -= m(r, i);
        break;
      }
      for (std::size_t r = 0; r < n; ++r) rest[r] += z[i] * m(r, i);
      z[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return std::nullopt;
    if (is_nonnegative(rest)) return z;
  }
}

bool MMatrix::is_z_superstable(const Configuration& s) const {
  if (s.size() != size()) throw InvalidInput("configuration dimension mismatch");
  if (!is_nonnegative(s)) throw InvalidInput("z-superstability needs an effective configuration");
  return !find_legal_multifiring(s, superstability_bound(s)).has_value();
}

Configuration MMatrix::classical_dual(const Configuration& v) const { return state_->c_max - v; }

const MMatrix::State& MMatrix::tables() const {
  State& st = *state_;
  std::call_once(st.built, [&st, this] {
    const std::size_t n = st.matrix.rows();
    Integer box = 1;
    for (std::size_t i = 0; i < n; ++i) box *= st.matrix(i, i);
    if (box > st.cap || st.det > st.cap)
      throw EnumerationCapExceeded("stable box too large: " + box.get_str(), st.cap);

    // Superstable implies stable (take z = e_i), so the stable box suffices.
    Configuration s(n, Integer(0));
    const std::size_t total = box.get_ui();
    for (std::size_t k = 0; k < total; ++k) {
      if (is_z_superstable(s)) st.superstables.push_back(s);
      for (std::size_t i = n; i-- > 0;) {
        if (++s[i] < st.matrix(i, i)) break;
        s[i] = 0;
      }
    }
    if (st.superstables.size() != st.det.get_ui())
      throw VerificationFailure("superstable count " + std::to_string(st.superstables.size()) +
                                " != det M = " + st.det.get_str());

    const std::size_t none = st.superstables.size();
    st.sstab_slot.assign(none, none);
    st.crit_slot.assign(none, none);
    for (std::size_t k = 0; k < st.superstables.size(); ++k) {
      st.criticals.push_back(st.c_max - st.superstables[k]);
      auto& s_slot = st.sstab_slot[st.classes.linear_index(st.superstables[k])];
      auto& c_slot = st.crit_slot[st.classes.linear_index(st.criticals[k])];
      if (s_slot != none || c_slot != none)
        throw VerificationFailure("two superstables or criticals share a class");
      s_slot = k;
      c_slot = k;
    }
  });
  return st;
}

const std::vector<Configuration>& MMatrix::superstables() const { return tables().superstables; }
const std::vector<Configuration>& MMatrix::criticals() const { return tables().criticals; }

const Configuration& MMatrix::sstab_of_class(const IntVector& v) const {
  const State& st = tables();
  return st.superstables[st.sstab_slot[st.classes.linear_index(v)]];
}

const Configuration& MMatrix::crit_of_class(const IntVector& v) const {
  const State& st = tables();
  return st.criticals[st.crit_slot[st.classes.linear_index(v)]];
}

bool MMatrix::is_superstable(const Configuration& c) const {
  return c.size() == size() && is_nonnegative(c) && sstab_of_class(c) == c;
}

bool MMatrix::is_critical(const Configuration& c) const {
  return c.size() == size() && is_nonnegative(c) && crit_of_class(c) == c;
}

}  // namespace chipdual
