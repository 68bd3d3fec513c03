#include "toricdm/lattice.hpp"

#include <algorithm>
#include <utility>

namespace toricdm {

namespace {

struct Bezout {
  Integer g, s, t;  // g = s*a + t*b, g >= 0
};

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Replace rows (p, k) of M by [[s, t], [-b/g, a/g]] * (row_p, row_k); the
// transform has determinant 1 and clears M(k, col). When a | b a plain
// elimination step is used so the pivot never moves.
void combine_rows(IntMatrix& M, IntMatrix& U, std::size_t p, std::size_t k, std::size_t col) {
  const Integer a = M(p, col), b = M(k, col);
  if (a != 0 && b % a == 0) {
    const Integer q = -b / a;
    M.add_row_multiple(k, p, q);
    U.add_row_multiple(k, p, q);
    return;
  }
  const Bezout bz = bezout(a, b);
  const Integer u = -b / bz.g, v = a / bz.g;
  auto apply = [&](IntMatrix& X) {
    for (std::size_t j = 0; j < X.cols(); ++j) {
      Integer xp = X(p, j), xk = X(k, j);
      X(p, j) = bz.s * xp + bz.t * xk;
      X(k, j) = u * xp + v * xk;
    }
  };
  apply(M);
  apply(U);
}

void combine_cols(IntMatrix& M, IntMatrix& V, std::size_t p, std::size_t k, std::size_t row) {
  const Integer a = M(row, p), b = M(row, k);
  if (a != 0 && b % a == 0) {
    const Integer q = -b / a;
    M.add_col_multiple(k, p, q);
    V.add_col_multiple(k, p, q);
    return;
  }
  const Bezout bz = bezout(a, b);
  const Integer u = -b / bz.g, v = a / bz.g;
  auto apply = [&](IntMatrix& X) {
    for (std::size_t i = 0; i < X.rows(); ++i) {
      Integer xp = X(i, p), xk = X(i, k);
      X(i, p) = bz.s * xp + bz.t * xk;
      X(i, k) = u * xp + v * xk;
    }
  };
  apply(M);
  apply(V);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& M) {
  HermiteForm out{M, IntMatrix::identity(M.rows())};
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    for (std::size_t k = r + 1; k < H.rows(); ++k)
      if (H(k, c) != 0) combine_rows(H, U, r, k, c);
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_quotient(H(i, c), H(r, c));
      if (q != 0) {
        H.add_row_multiple(i, r, -q);
        U.add_row_multiple(i, r, -q);
      }
    }
    ++r;
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& M) {
  SmithForm out{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols())};
  IntMatrix& D = out.D;
  const std::size_t m = D.rows(), n = D.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return out;  // trailing block is zero
      D.swap_rows(t, pi);
      out.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      out.V.swap_cols(t, pj);

      for (std::size_t k = t + 1; k < m; ++k)
        if (D(k, t) != 0) combine_rows(D, out.U, t, k, t);
      for (std::size_t k = t + 1; k < n; ++k)
        if (D(t, k) != 0) combine_cols(D, out.V, t, k, t);

      bool clear = true;
      for (std::size_t k = t + 1; k < m; ++k) clear = clear && D(k, t) == 0;
      if (!clear) continue;

      // divisibility: fold an offending row into row t and go again
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      D.add_row_multiple(t, bad, 1);
      out.U.add_row_multiple(t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      out.U.negate_row(t);
    }
  }
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
  HermiteForm h = hermite_normal_form(U);
  if (!(h.H == IntMatrix::identity(U.rows()))) fail(ErrorCode::Internal, "matrix is not unimodular");
  return h.U;
}

Sublattice Sublattice::span(std::size_t ambient_rank, const std::vector<Degree>& generators) {
  return span(IntMatrix::from_rows(generators, ambient_rank));
}

Sublattice Sublattice::span(const IntMatrix& generator_rows) {
  Sublattice L(generator_rows.cols());
  HermiteForm h = hermite_normal_form(generator_rows);
  std::size_t r = 0;
  while (r < h.H.rows()) {
    bool zero = true;
    for (std::size_t j = 0; j < h.H.cols(); ++j) zero = zero && h.H(r, j) == 0;
    if (zero) break;
    ++r;
  }
  L.basis_ = h.H.submatrix_rows(0, r);
  return L;
}

Sublattice Sublattice::full(std::size_t ambient_rank) { return span(IntMatrix::identity(ambient_rank)); }

bool Sublattice::contains(const Degree& v) const {
  if (v.size() != ambient_rank_) fail(ErrorCode::Internal, "Sublattice::contains: dimension mismatch");
  std::vector<Integer> w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (basis_(i, p) == 0) ++p;
    if (w[p] % basis_(i, p) != 0) return false;
    Integer q = w[p] / basis_(i, p);
    for (std::size_t j = p; j < ambient_rank_; ++j) w[j] -= q * basis_(i, j);
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

Sublattice saturate(const Sublattice& L) {
  if (L.rank() == 0) return L;
  // U B V = D with B the basis rows; the first rank rows of V^{-1} are a
  // basis of the saturation.
  SmithForm s = smith_normal_form(L.basis());
  IntMatrix vinv = unimodular_inverse(s.V);
  return Sublattice::span(vinv.submatrix_rows(0, L.rank()));
}

QuotientGroup quotient(std::size_t ambient_rank, const Sublattice& L) {
  if (L.ambient_rank() != ambient_rank) fail(ErrorCode::Internal, "quotient: ambient rank mismatch");
  QuotientGroup Q(L);
  Q.ambient_rank_ = ambient_rank;
  const std::size_t r = L.rank();
  // U B^T V = D, so x lies in L iff (Ux)_i = 0 mod D_ii for i < r and
  // (Ux)_i = 0 for i >= r.
  SmithForm s = smith_normal_form(L.basis().transpose());
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < r; ++i) {
    if (s.D(i, i) == 0) fail(ErrorCode::Internal, "quotient: dependent basis");
    if (s.D(i, i) > 1) {
      rows.push_back(i);
      Q.torsion_.push_back(s.D(i, i));
      Q.moduli_.push_back(s.D(i, i));
      Q.torsion_rows_.push_back(i);
    }
  }
  for (std::size_t i = r; i < ambient_rank; ++i) {
    rows.push_back(i);
    Q.moduli_.push_back(0);
  }
  Q.free_rank_ = ambient_rank - r;
  Q.projection_ = IntMatrix(rows.size(), ambient_rank);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 0; j < ambient_rank; ++j) Q.projection_(k, j) = s.U(rows[k], j);
  Q.lift_ = unimodular_inverse(s.U);
  Q.projection64_ = Q.projection_.rows_int64();
  for (const auto& m : Q.moduli_) Q.moduli64_.push_back(to_int64(m));
  return Q;
}

std::vector<Integer> QuotientGroup::project(const Degree& v) const {
  std::vector<Integer> out(projection_.rows());
  for (std::size_t k = 0; k < projection_.rows(); ++k) {
    Integer acc = 0;
    for (std::size_t j = 0; j < ambient_rank_; ++j) acc += projection_(k, j) * Integer(static_cast<long>(v[j]));
    if (moduli_[k] != 0) {
      acc %= moduli_[k];
      if (acc < 0) acc += moduli_[k];
    }
    out[k] = acc;
  }
  return out;
}

void QuotientGroup::project_int64(const Degree& v, Degree& out) const {
  out.resize(projection64_.size());
  for (std::size_t k = 0; k < projection64_.size(); ++k) {
    std::int64_t x = dot(projection64_[k], v);
    out[k] = moduli64_[k] != 0 ? mod_floor(x, moduli64_[k]) : x;
  }
}

std::vector<Degree> torsion_coset_reps(const QuotientGroup& Q) {
  const auto& tors = Q.torsion_invariants();
  const std::size_t d = Q.ambient_rank();
  std::vector<Degree> reps;
  std::vector<Integer> digit(tors.size(), 0);
  for (;;) {
    std::vector<Integer> x(d, 0);
    for (std::size_t k = 0; k < tors.size(); ++k)
      for (std::size_t i = 0; i < d; ++i) x[i] += digit[k] * Q.lift_matrix()(i, Q.torsion_rows_[k]);
    Degree rep(d);
    for (std::size_t i = 0; i < d; ++i) rep[i] = to_int64(x[i]);
    reps.push_back(std::move(rep));
    // odometer, last digit fastest
    std::size_t k = tors.size();
    while (k > 0) {
      --k;
      if (++digit[k] < tors[k]) break;
      digit[k] = 0;
      if (k == 0) return reps;
    }
    if (tors.empty()) return reps;
  }
}

}  // namespace toricdm
