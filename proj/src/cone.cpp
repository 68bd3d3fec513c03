#include "toricdm/cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toricdm/lattice.hpp"

namespace toricdm {

namespace {

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int sign_of(const Integer& x) { return sgn(x); }

// Generalized cross product of d-1 vectors in Z^d: n_j = (-1)^j det(M minus column j).
Degree cofactor_normal(const std::vector<Degree>& vecs, std::size_t d) {
  Degree n(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    IntMatrix m(d - 1, d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) m(i, c++) = static_cast<long>(vecs[i][k]);
    }
    Integer det = determinant(m);
    if (j % 2) det = -det;
    n[j] = to_int64(det);
  }
  std::int64_t g = 0;
  for (auto x : n) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : n) x /= g;
  return n;
}

std::size_t column_rank(const std::vector<Degree>& cols, std::size_t d) {
  if (cols.empty()) return 0;
  return rank(IntMatrix::from_columns(cols, d));
}

}  // namespace

std::vector<SupportFunction> compute_facets(const IntMatrix& A) {
  const std::size_t d = A.rows();
  const auto cols = A.columns_int64();
  if (rank(A) < d) fail(ErrorCode::NotFullDimensional, "rank of A is below the ambient dimension");

  std::set<Degree> seen;
  std::vector<SupportFunction> out;
  for_each_subset(cols.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Degree> vecs;
    for (auto i : idx) vecs.push_back(cols[i]);
    if (column_rank(vecs, d) != d - 1) return;
    Degree n = cofactor_normal(vecs, d);
    bool pos = false, neg = false;
    for (const auto& c : cols) {
      std::int64_t v = dot(n, c);
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    if (pos && neg) return;
    if (neg) n = negate(n);
    if (!seen.insert(n).second) return;
    SupportFunction f;
    f.coefficients = n;
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (dot(n, cols[i]) == 0) f.vanishing_columns.push_back(i);
    out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end(), [](const SupportFunction& a, const SupportFunction& b) {
    return a.vanishing_columns < b.vanishing_columns;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].facet_id = i;
  return out;
}

bool facets_pointed(const std::vector<SupportFunction>& facets, std::size_t d) {
  std::vector<Degree> rows;
  for (const auto& f : facets) rows.push_back(f.coefficients);
  if (rows.empty()) return d == 0;
  return rank(IntMatrix::from_rows(rows, d)) == d;
}

FaceLattice::FaceLattice(const IntMatrix& A, const std::vector<SupportFunction>& facets)
    : columns_(A.columns_int64()), facets_(facets) {
  const std::size_t d = A.rows();
  if (!facets_pointed(facets, d)) fail(ErrorCode::NotPointed, "the cone contains a line");

  std::vector<std::size_t> all(columns_.size());
  std::iota(all.begin(), all.end(), 0);

  auto zero_facets_of = [&](const std::vector<std::size_t>& cols) {
    std::vector<std::size_t> z;
    for (const auto& f : facets)
      if (std::includes(f.vanishing_columns.begin(), f.vanishing_columns.end(), cols.begin(), cols.end()))
        z.push_back(f.facet_id);
    return z;
  };

  // close the whole cone under intersection with facets
  std::set<std::vector<std::size_t>> found{all};
  std::vector<std::vector<std::size_t>> todo{all};
  while (!todo.empty()) {
    auto cols = std::move(todo.back());
    todo.pop_back();
    for (const auto& f : facets) {
      std::vector<std::size_t> next;
      std::set_intersection(cols.begin(), cols.end(), f.vanishing_columns.begin(), f.vanishing_columns.end(),
                            std::back_inserter(next));
      if (found.insert(next).second) todo.push_back(std::move(next));
    }
  }

  for (const auto& cols : found) {
    Face face;
    face.column_indices = cols;
    std::vector<Degree> vecs;
    for (auto i : cols) vecs.push_back(columns_[i]);
    face.dim = column_rank(vecs, d);
    face.zero_facets = zero_facets_of(cols);
    for (auto i : cols) {
      face.basis.push_back(columns_[i]);
      if (column_rank(face.basis, d) < face.basis.size()) face.basis.pop_back();
    }
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.column_indices < b.column_indices;
  });
  const std::size_t m = faces_.size();
  for (std::size_t i = 0; i < m; ++i) faces_[i].face_id = i;
  if (faces_.front().dim != 0 || faces_.back().dim != d) fail(ErrorCode::Internal, "face lattice lacks an extremal face");

  order_.assign(m, std::vector<bool>(m, false));
  covers_.assign(m, {});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& a = faces_[i].column_indices;
      const auto& b = faces_[j].column_indices;
      order_[i][j] = std::includes(b.begin(), b.end(), a.begin(), a.end());
      if (order_[i][j] && faces_[j].dim == faces_[i].dim + 1) covers_[i].push_back(j);
    }

  facet_faces_.assign(facets.size(), 0);
  for (const auto& f : facets)
    for (std::size_t i = 0; i < m; ++i)
      if (faces_[i].column_indices == f.vanishing_columns) facet_faces_[f.facet_id] = i;

  // Orientation: tau' is oriented by its basis B, tau by its basis. The sign
  // compares [v, basis(tau)] against B for a column v of tau' outside tau,
  // read on a row subset where B is nonsingular.
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t tp : covers_[t]) {
      const Face& lo = faces_[t];
      const Face& hi = faces_[tp];
      std::size_t v = columns_.size();
      for (auto c : hi.column_indices)
        if (!std::binary_search(lo.column_indices.begin(), lo.column_indices.end(), c)) {
          v = c;
          break;
        }
      if (v == columns_.size()) fail(ErrorCode::Internal, "covering face adds no column");
      std::vector<Degree> ext{columns_[v]};
      ext.insert(ext.end(), lo.basis.begin(), lo.basis.end());
      const std::size_t k = hi.basis.size();
      int sign = 0;
      for_each_subset(d, k, [&](const std::vector<std::size_t>& rows) {
        if (sign != 0) return;
        IntMatrix B(k, k), M(k, k);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) {
            B(r, c) = static_cast<long>(hi.basis[c][rows[r]]);
            M(r, c) = static_cast<long>(ext[c][rows[r]]);
          }
        int sb = sign_of(determinant(B));
        if (sb != 0) sign = sb * sign_of(determinant(M));
      });
      if (sign == 0) fail(ErrorCode::Internal, "degenerate orientation");
      signs_[{t, tp}] = sign;
    }
}

int FaceLattice::incidence_sign(std::size_t tau, std::size_t tau_prime) const {
  auto it = signs_.find({tau, tau_prime});
  return it == signs_.end() ? 0 : it->second;
}

std::size_t FaceLattice::face_of_zero_set(const std::vector<std::size_t>& zero_facets) const {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    bool in = true;
    for (auto s : zero_facets) in = in && dot(facets_[s].coefficients, columns_[i]) == 0;
    if (in) cols.push_back(i);
  }
  for (const auto& f : faces_)
    if (f.column_indices == cols) return f.face_id;
  fail(ErrorCode::Internal, "no face with the requested zero set");
}

std::size_t FaceLattice::smallest_face_containing(const Degree& a, const std::vector<SupportFunction>& facets) const {
  std::vector<std::size_t> z;
  for (const auto& f : facets) {
    std::int64_t v = f(a);
    if (v < 0) fail(ErrorCode::Internal, "point outside the cone");
    if (v == 0) z.push_back(f.facet_id);
  }
  return face_of_zero_set(z);
}

}  // namespace toricdm
