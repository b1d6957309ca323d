#include "chipdual/lattice.hpp"

#include <optional>
#include <sstream>

namespace chipdual {

namespace {

// Working state of the Smith reduction. Invariant: A = U * W * V, with
// U_inv / V_inv the inverses of U / V.
class SmithWorkspace {
 public:
  explicit SmithWorkspace(const IntMatrix& a)
      : n_(a.rows()),
        w_(a),
        u_(IntMatrix::identity(n_)),
        u_inv_(IntMatrix::identity(n_)),
        v_(IntMatrix::identity(n_)),
        v_inv_(IntMatrix::identity(n_)) {}

  // row_i += k * row_j
  void row_addmul(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < n_; ++c) {
      w_(i, c) += k * w_(j, c);
      u_inv_(i, c) += k * u_inv_(j, c);
      u_(c, j) -= k * u_(c, i);
    }
  }
  void row_swap(std::size_t i, std::size_t j) {
    w_.swap_rows(i, j);
    u_inv_.swap_rows(i, j);
    u_.swap_cols(i, j);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < n_; ++c) {
      w_(i, c) = -w_(i, c);
      u_inv_(i, c) = -u_inv_(i, c);
      u_(c, i) = -u_(c, i);
    }
  }
  // col_i += k * col_j
  void col_addmul(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < n_; ++r) {
      w_(r, i) += k * w_(r, j);
      v_inv_(r, i) += k * v_inv_(r, j);
      v_(j, r) -= k * v_(i, r);
    }
  }
  void col_swap(std::size_t i, std::size_t j) {
    w_.swap_cols(i, j);
    v_inv_.swap_cols(i, j);
    v_.swap_rows(i, j);
  }

  void reduce() {
    for (std::size_t t = 0; t < n_; ++t) {
      for (;;) {
        move_min_pivot(t);
        bool clean = true;
        for (std::size_t i = t + 1; i < n_; ++i) {
          if (sgn(w_(i, t)) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), w_(i, t).get_mpz_t(), w_(t, t).get_mpz_t());
          row_addmul(i, t, -q);
          if (sgn(w_(i, t)) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (sgn(w_(t, j)) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), w_(t, j).get_mpz_t(), w_(t, t).get_mpz_t());
          col_addmul(j, t, -q);
          if (sgn(w_(t, j)) != 0) clean = false;
        }
        if (!clean) continue;
        if (auto bad = non_divisible_row(t)) {
          row_addmul(t, *bad, 1);
          continue;
        }
        break;
      }
      if (sgn(w_(t, t)) < 0) row_negate(t);
    }
  }

  SnfDecomposition result() const { return {u_, w_, v_, u_inv_, v_inv_}; }

 private:
  void move_min_pivot(std::size_t t) {
    std::size_t bi = n_, bj = n_;
    for (std::size_t i = t; i < n_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        if (sgn(w_(i, j)) == 0) continue;
        if (bi == n_ || mpz_cmpabs(w_(i, j).get_mpz_t(), w_(bi, bj).get_mpz_t()) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi == n_) throw SingularMatrix("Smith normal form: matrix is singular");
    row_swap(t, bi);
    col_swap(t, bj);
  }

  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    for (std::size_t i = t + 1; i < n_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (!mpz_divisible_p(w_(i, j).get_mpz_t(), w_(t, t).get_mpz_t())) return i;
    return std::nullopt;
  }

  std::size_t n_;
  IntMatrix w_, u_, u_inv_, v_, v_inv_;
};

Integer positive_mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

IntVector SnfDecomposition::diagonal() const {
  IntVector d(D.rows());
  for (std::size_t i = 0; i < D.rows(); ++i) d[i] = D(i, i);
  return d;
}

SnfDecomposition smith_normal_form(const IntMatrix& a) {
  if (!a.square() || a.empty()) throw InvalidInput("Smith normal form: matrix must be square");
  SmithWorkspace ws(a);
  ws.reduce();
  SnfDecomposition out = ws.result();
  if (!(out.U * out.D * out.V == a))
    throw VerificationFailure("Smith normal form: U*D*V != A");
  return out;
}

IntMatrix hermite_basis(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  const std::size_t m = generators.cols();
  if (m < n) throw InvalidInput("hermite_basis: fewer generators than dimension");
  IntMatrix g = generators;
  auto col_addmul = [&](std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < n; ++r) g(r, i) += k * g(r, j);
  };
  for (std::size_t r = 0; r < n; ++r) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t c = r; c < m; ++c)
        if (sgn(g(r, c)) != 0 && (best == m || mpz_cmpabs(g(r, c).get_mpz_t(), g(r, best).get_mpz_t()) < 0)) best = c;
      if (best == m) throw SingularMatrix("hermite_basis: generators do not span a full-rank lattice");
      g.swap_cols(r, best);
      bool clean = true;
      for (std::size_t c = r + 1; c < m; ++c) {
        if (sgn(g(r, c)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), g(r, c).get_mpz_t(), g(r, r).get_mpz_t());
        col_addmul(c, r, -q);
        if (sgn(g(r, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(g(r, r)) < 0)
      for (std::size_t i = 0; i < n; ++i) g(i, r) = -g(i, r);
    for (std::size_t c = 0; c < r; ++c) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), g(r, c).get_mpz_t(), g(r, r).get_mpz_t());
      if (sgn(q) != 0) col_addmul(c, r, -q);
    }
  }
  IntMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = g(i, j);
  return basis;
}

AbelianGroup::AbelianGroup(std::vector<Integer> invariant_factors) {
  for (auto& d : invariant_factors) {
    if (sgn(d) <= 0) throw InvalidInput("invariant factors must be positive");
    if (d == 1) continue;
    if (!factors_.empty() && !mpz_divisible_p(d.get_mpz_t(), factors_.back().get_mpz_t()))
      throw InvalidInput("invariant factors must form a divisibility chain");
    factors_.push_back(std::move(d));
  }
}

Integer AbelianGroup::order() const {
  Integer p = 1;
  for (const auto& d : factors_) p *= d;
  return p;
}

Integer AbelianGroup::largest_invariant_factor() const {
  return factors_.empty() ? Integer(1) : factors_.back();
}

Integer AbelianGroup::product_without_largest() const {
  Integer p = 1;
  for (std::size_t i = 0; i + 1 < factors_.size(); ++i) p *= factors_[i];
  return p;
}

std::size_t AbelianGroup::even_factor_count() const {
  std::size_t k = 0;
  for (const auto& d : factors_)
    if (mpz_even_p(d.get_mpz_t())) ++k;
  return k;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  // Largest factor first, the way critical groups are usually written.
  for (std::size_t i = factors_.size(); i-- > 0;)
    os << "Z_" << factors_[i].get_str() << (i ? " x " : "");
  return os.str();
}

AbelianGroup quotient_group(const IntMatrix& a) {
  return AbelianGroup(smith_normal_form(a).diagonal());
}

AbelianGroup lattice_quotient(const IntMatrix& outer, const IntMatrix& inner) {
  const RatMatrix t = inverse(outer) * to_rational(inner);
  if (!is_integral(t)) throw InvalidInput("lattice_quotient: inner lattice not contained in outer");
  return quotient_group(to_integer(t));
}

AbelianGroup generated_subgroup(const IntMatrix& a, const std::vector<IntVector>& generators) {
  const std::size_t n = a.rows();
  IntMatrix g(n, generators.size() + n);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != n) throw InvalidInput("generator dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) g(i, j) = generators[j][i];
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) g(i, generators.size() + j) = a(i, j);
  return lattice_quotient(hermite_basis(g), a);
}

ClassIndexer::ClassIndexer(const IntMatrix& a)
    : a_(a), snf_(smith_normal_form(a)), diag_(snf_.diagonal()), order_(1) {
  for (const auto& d : diag_) order_ *= d;
}

AbelianGroup ClassIndexer::group() const { return AbelianGroup(diag_); }

ClassId ClassIndexer::class_id(const IntVector& v) const {
  if (v.size() != dimension()) throw InvalidInput("class_id: dimension mismatch");
  IntVector r = snf_.U_inv * v;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = positive_mod(r[i], diag_[i]);
  return {std::move(r)};
}

bool ClassIndexer::equivalent(const IntVector& v, const IntVector& w) const {
  return class_id(v) == class_id(w);
}

std::uint64_t ClassIndexer::linear_index(const ClassId& id) const {
  if (!order_.fits_ulong_p()) throw EnumerationCapExceeded("class index overflow", 0);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < diag_.size(); ++i)
    idx = idx * diag_[i].get_ui() + id.residues[i].get_ui();
  return idx;
}

std::vector<IntVector> ClassIndexer::class_representatives(std::size_t cap) const {
  if (order_ > cap) throw EnumerationCapExceeded("too many classes: " + order_.get_str(), cap);
  const std::size_t n = dimension();
  const std::size_t count = order_.get_ui();
  std::vector<IntVector> reps;
  reps.reserve(count);
  IntVector r(n, Integer(0));
  for (std::size_t k = 0; k < count; ++k) {
    reps.push_back(snf_.U * r);
    for (std::size_t i = n; i-- > 0;) {
      if (++r[i] < diag_[i]) break;
      r[i] = 0;
    }
  }
  return reps;
}

ClassId class_id(const IntMatrix& a, const IntVector& v, const SnfDecomposition& snf) {
  if (v.size() != a.rows() || snf.size() != a.rows())
    throw InvalidInput("class_id: dimension mismatch");
  IntVector r = snf.U_inv * v;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = positive_mod(r[i], snf.D(i, i));
  return {std::move(r)};
}

std::vector<IntVector> enumerate_class_reps(const IntMatrix& a, std::size_t cap) {
  return ClassIndexer(a).class_representatives(cap);
}

IntMatrix lattice_intersect_with_zn(const RatMatrix& b) {
  if (!b.square() || b.empty()) throw InvalidInput("lattice_intersect_with_zn: square input required");
  Integer k = 1;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) k = lcm(k, b(i, j).get_den());
  const IntMatrix c = to_integer(scaled(b, Rational(k)));
  const SnfDecomposition snf = smith_normal_form(c);
  // y satisfies C y ∈ k Z^n  iff  (V y)_i ≡ 0 mod k / gcd(d_i, k).
  const std::size_t n = b.rows();
  IntMatrix y = snf.V_inv;
  for (std::size_t j = 0; j < n; ++j) {
    const Integer step = k / gcd(snf.D(j, j), k);
    for (std::size_t i = 0; i < n; ++i) y(i, j) *= step;
  }
  return to_integer(b * to_rational(y));
}

Integer count_order_le2(const AbelianGroup& g) {
  Integer count = 1;
  for (const auto& d : g.invariant_factors()) count *= gcd(Integer(2), d);
  return count;
}

Integer element_order(const IntMatrix& lattice, const IntVector& v) {
  const RatVector coords = inverse(lattice) * v;
  Integer k = 1;
  for (const auto& q : coords) k = lcm(k, q.get_den());
  return k;
}

}  // namespace chipdual
