#include "tropcer/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tropcer {

IMat identity_matrix(std::size_t n) {
  IMat I(n, IVec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IMat matrix_product(const IMat& A, const IMat& B) {
  const std::size_t n = A.size();
  const std::size_t k = B.size();
  const std::size_t m = k ? B[0].size() : 0;
  IMat out(n, IVec(m, Int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      const Int& a = A[i][t];
      if (a == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a * B[t][j];
    }
  }
  return out;
}

HnfResult hermite_normal_form(const IMat& M) {
  IMat H = M;
  const std::size_t n = H.size();
  const std::size_t m = n ? H[0].size() : 0;
  IMat U = identity_matrix(n);
  std::size_t pr = 0;  // next pivot row
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m && pr < n; ++c) {
    bool any_nonzero = false;
    for (std::size_t r = pr; r < n; ++r) {
      if (H[r][c] != 0) {
        any_nonzero = true;
        break;
      }
    }
    if (!any_nonzero) continue;
    // gcd-style elimination: repeatedly reduce against the smallest
    // absolute nonzero entry in this column until one row remains.
    std::size_t piv = pr;
    for (;;) {
      std::ptrdiff_t best = -1;
      for (std::size_t r = pr; r < n; ++r) {
        if (H[r][c] != 0 &&
            (best < 0 || abs(H[r][c]) < abs(H[static_cast<std::size_t>(best)][c]))) {
          best = static_cast<std::ptrdiff_t>(r);
        }
      }
      const std::size_t b = static_cast<std::size_t>(best);
      std::vector<std::size_t> nonzeros;
      for (std::size_t r = pr; r < n; ++r) {
        if (H[r][c] != 0 && r != b) nonzeros.push_back(r);
      }
      if (nonzeros.empty()) {
        piv = b;
        break;
      }
      for (std::size_t r : nonzeros) {
        const Int q = floor_div(H[r][c], H[b][c]);
        if (q != 0) {
          for (std::size_t j = 0; j < m; ++j) H[r][j] -= q * H[b][j];
          for (std::size_t j = 0; j < n; ++j) U[r][j] -= q * U[b][j];
        }
      }
    }
    if (piv != pr) {
      std::swap(H[pr], H[piv]);
      std::swap(U[pr], U[piv]);
    }
    if (H[pr][c] < 0) {
      for (auto& x : H[pr]) x = -x;
      for (auto& x : U[pr]) x = -x;
    }
    // reduce the entries above the pivot into [0, pivot)
    const Int p = H[pr][c];
    for (std::size_t r = 0; r < pr; ++r) {
      const Int q = floor_div(H[r][c], p);
      if (q != 0) {
        for (std::size_t j = 0; j < m; ++j) H[r][j] -= q * H[pr][j];
        for (std::size_t j = 0; j < n; ++j) U[r][j] -= q * U[pr][j];
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return HnfResult{std::move(H), std::move(U), std::move(pivots)};
}

SnfResult smith_normal_form(const IMat& M) {
  IMat S = M;
  const std::size_t n = S.size();
  const std::size_t m = n ? S[0].size() : 0;
  IMat U = identity_matrix(n);
  IMat V = identity_matrix(m);

  auto row_op = [&](std::size_t r1, std::size_t r2, const Int& q) {
    for (std::size_t j = 0; j < m; ++j) S[r1][j] -= q * S[r2][j];
    for (std::size_t j = 0; j < n; ++j) U[r1][j] -= q * U[r2][j];
  };
  auto col_op = [&](std::size_t c1, std::size_t c2, const Int& q) {
    for (std::size_t i = 0; i < n; ++i) S[i][c1] -= q * S[i][c2];
    for (std::size_t i = 0; i < m; ++i) V[i][c1] -= q * V[i][c2];
  };
  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    std::swap(S[r1], S[r2]);
    std::swap(U[r1], U[r2]);
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    for (std::size_t i = 0; i < n; ++i) std::swap(S[i][c1], S[i][c2]);
    for (std::size_t i = 0; i < m; ++i) std::swap(V[i][c1], V[i][c2]);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < m; ++j) S[r][j] = -S[r][j];
    for (std::size_t j = 0; j < n; ++j) U[r][j] = -U[r][j];
  };

  std::size_t t = 0;
  while (t < std::min(n, m)) {
    bool found = false;
    for (std::size_t i = t; i < n && !found; ++i) {
      for (std::size_t j = t; j < m && !found; ++j) {
        if (S[i][j] != 0) found = true;
      }
    }
    if (!found) break;
    for (;;) {
      // re-find the smallest absolute nonzero entry each sweep, ties row-major
      std::size_t pi = t, pj = t;
      bool have = false;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < m; ++j) {
          if (S[i][j] != 0 && (!have || abs(S[i][j]) < abs(S[pi][pj]))) {
            pi = i;
            pj = j;
            have = true;
          }
        }
      }
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);
      for (std::size_t i = t + 1; i < n; ++i) {
        const Int q = floor_div(S[i][t], S[t][t]);
        if (q != 0) row_op(i, t, q);
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        const Int q = floor_div(S[t][j], S[t][t]);
        if (q != 0) col_op(j, t, q);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < n && clean; ++i) clean = (S[i][t] == 0);
      for (std::size_t j = t + 1; j < m && clean; ++j) clean = (S[t][j] == 0);
      if (clean) break;
    }
    if (S[t][t] < 0) negate_row(t);
    ++t;
  }

  // enforce the divisibility chain d_i | d_{i+1}
  const std::size_t rank = t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < rank; ++i) {
      const Int a = S[i][i];
      const Int b = S[i + 1][i + 1];
      if (b % a != 0) {
        changed = true;
        col_op(i, i + 1, Int(-1));  // col i += col i+1
        while (S[i + 1][i] != 0) {
          const Int q = floor_div(S[i][i], S[i + 1][i]);
          if (q != 0) row_op(i, i + 1, q);
          if (S[i][i] == 0) {
            swap_rows(i, i + 1);
            continue;
          }
          const Int q2 = floor_div(S[i + 1][i], S[i][i]);
          row_op(i + 1, i, q2);
        }
        for (std::size_t j = i + 1; j < m; ++j) {
          if (S[i][j] != 0) {
            const Int q = floor_div(S[i][j], S[i][i]);
            col_op(j, i, q);
            if (S[i][j] != 0) throw std::runtime_error("snf divisibility cleanup failed");
          }
        }
        for (std::size_t ii = i + 1; ii < n; ++ii) {
          if (S[ii][i] != 0) {
            const Int q = floor_div(S[ii][i], S[i][i]);
            row_op(ii, i, q);
          }
        }
        if (S[i][i] < 0) negate_row(i);
        if (S[i + 1][i + 1] < 0) negate_row(i + 1);
      }
    }
  }
  return SnfResult{std::move(S), std::move(U), std::move(V)};
}

std::vector<IVec> integer_kernel(const IMat& M) {
  const std::size_t n = M.size();
  const std::size_t m = n ? M[0].size() : 0;
  if (m == 0) return {};
  if (n == 0) {
    // everything is in the kernel: the standard basis of Z^m
    std::vector<IVec> out;
    for (std::size_t j = 0; j < m; ++j) {
      IVec e(m, Int(0));
      e[j] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  const SnfResult sn = smith_normal_form(M);
  std::vector<IVec> out;
  for (std::size_t j = 0; j < m; ++j) {
    bool zero_col = true;
    for (std::size_t i = 0; i < n && zero_col; ++i) zero_col = (sn.S[i][j] == 0);
    if (!zero_col) continue;
    IVec v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = sn.V[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

Int common_denominator(const std::vector<RVec>& vecs) {
  Int D = 1;
  for (const auto& v : vecs) {
    for (const auto& x : v) D = int_lcm(D, rat_den(x));
  }
  return D;
}

}  // namespace

Lattice::Lattice(std::size_t n, const std::vector<RVec>& generators) : n_(n), scale_(1) {
  for (const auto& gen : generators) {
    if (gen.size() != n_) throw std::invalid_argument("lattice generator has wrong dimension");
  }
  scale_ = generators.empty() ? Int(1) : common_denominator(generators);
  if (!generators.empty()) {
    IMat rows;
    rows.reserve(generators.size());
    for (const auto& gen : generators) {
      IVec row(n_);
      for (std::size_t j = 0; j < n_; ++j) {
        const Rat scaled = gen[j] * scale_;
        row[j] = rat_num(scaled);  // integral by construction of the scale
      }
      rows.push_back(std::move(row));
    }
    HnfResult h = hermite_normal_form(rows);
    for (auto& r : h.H) {
      bool nonzero = false;
      for (const auto& x : r) {
        if (x != 0) {
          nonzero = true;
          break;
        }
      }
      if (!nonzero) continue;
      std::size_t c = 0;
      while (r[c] == 0) ++c;
      pivots_.push_back(c);
      basis_.push_back(std::move(r));
    }
  }
}

RMat Lattice::basis() const {
  RMat out;
  out.reserve(basis_.size());
  for (const auto& row : basis_) {
    RVec r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = Rat(row[j], scale_);
    out.push_back(std::move(r));
  }
  return out;
}

RVec Lattice::reduce(const RVec& x) const {
  if (x.size() != n_) throw std::invalid_argument("vector has wrong dimension");
  RVec xs(n_);
  for (std::size_t j = 0; j < n_; ++j) xs[j] = x[j] * scale_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const IVec& r = basis_[i];
    const std::size_t c = pivots_[i];
    const Rat q = xs[c] / r[c];
    const Int qf = rat_floor(q);
    if (qf != 0) {
      for (std::size_t j = 0; j < n_; ++j) xs[j] -= Rat(qf) * r[j];
    }
  }
  for (std::size_t j = 0; j < n_; ++j) xs[j] /= scale_;
  return xs;
}

std::optional<RVec> Lattice::span_coords(const RVec& x) const {
  if (x.size() != n_) throw std::invalid_argument("vector has wrong dimension");
  RVec xs(n_);
  for (std::size_t j = 0; j < n_; ++j) xs[j] = x[j] * scale_;
  RVec coords;
  coords.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const IVec& r = basis_[i];
    const std::size_t c = pivots_[i];
    const Rat q = xs[c] / r[c];
    coords.push_back(q);
    if (q != 0) {
      for (std::size_t j = 0; j < n_; ++j) xs[j] -= q * r[j];
    }
  }
  for (const auto& v : xs) {
    if (v != 0) return std::nullopt;
  }
  return coords;
}

bool Lattice::contains(const RVec& x) const {
  const auto coords = span_coords(x);
  if (!coords) return false;
  for (const auto& q : *coords) {
    if (!is_integral(q)) return false;
  }
  return true;
}

std::optional<IVec> Lattice::contains_witness(const RVec& x) const {
  const auto coords = span_coords(x);
  if (!coords) return std::nullopt;
  IVec out;
  out.reserve(coords->size());
  for (const auto& q : *coords) {
    if (!is_integral(q)) return std::nullopt;
    out.push_back(rat_num(q));
  }
  return out;
}

std::optional<Int> Lattice::torsion_order(const RVec& x) const {
  const auto coords = span_coords(x);
  if (!coords) return std::nullopt;
  Int k = 1;
  for (const auto& q : *coords) k = int_lcm(k, rat_den(q));
  return k;
}

Quotient::Quotient(std::size_t n, const std::vector<RVec>& subspace,
                   const std::vector<RVec>& lattice_generators)
    : n_(n), lattice_(0, {}) {
  // canonical projection modulo the subspace: RREF, then zero the pivot
  // coordinates of every vector
  RMat rows = subspace;
  const std::size_t nr = rows.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_ && r < nr; ++c) {
    std::ptrdiff_t sel = -1;
    for (std::size_t i = r; i < nr; ++i) {
      if (rows[i][c] != 0) {
        sel = static_cast<std::ptrdiff_t>(i);
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[static_cast<std::size_t>(sel)]);
    const Rat f = rows[r][c];
    for (auto& x : rows[r]) x /= f;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i != r && rows[i][c] != 0) {
        const Rat f2 = rows[i][c];
        for (std::size_t j = 0; j < n_; ++j) rows[i][j] -= f2 * rows[r][j];
      }
    }
    vpivots_.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) vrows_.push_back(rows[i]);

  std::vector<RVec> proj;
  proj.reserve(lattice_generators.size());
  for (const auto& gen : lattice_generators) {
    RVec p = project_subspace(gen);
    bool nonzero = false;
    for (const auto& x : p) {
      if (x != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) proj.push_back(std::move(p));
  }
  lattice_ = Lattice(n_, proj);
}

RVec Quotient::project_subspace(const RVec& x) const {
  if (x.size() != n_) throw std::invalid_argument("vector has wrong dimension");
  RVec out = x;
  for (std::size_t i = 0; i < vrows_.size(); ++i) {
    const Rat f = out[vpivots_[i]];
    if (f != 0) {
      for (std::size_t j = 0; j < n_; ++j) out[j] -= f * vrows_[i][j];
    }
  }
  return out;
}

RVec Quotient::reduce(const RVec& x) const { return lattice_.reduce(project_subspace(x)); }

bool Quotient::class_eq(const RVec& x, const RVec& y) const { return reduce(x) == reduce(y); }

bool Quotient::is_zero(const RVec& x) const {
  for (const auto& v : reduce(x)) {
    if (v != 0) return false;
  }
  return true;
}

std::optional<Int> Quotient::torsion_order(const RVec& x) const {
  return lattice_.torsion_order(project_subspace(x));
}

CokernelGroup::CokernelGroup(const std::vector<RVec>& relation_cols,
                             const std::vector<RVec>& ambient_cols, std::size_t n)
    : ambient_(n, ambient_cols) {
  r_ = ambient_.rank();
  if (r_ == 0) return;
  std::vector<IVec> rel_int;
  rel_int.reserve(relation_cols.size());
  for (const auto& col : relation_cols) {
    rel_int.push_back(ambient_int_coords(col));
  }
  const std::size_t k = rel_int.size();
  if (k == 0) {
    U_ = identity_matrix(r_);
    diag_.assign(r_, Int(0));
  } else {
    IMat M(r_, IVec(k, Int(0)));
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < r_; ++i) M[i][j] = rel_int[j][i];
    }
    SnfResult sn = smith_normal_form(M);
    U_ = std::move(sn.U);
    diag_.clear();
    for (std::size_t i = 0; i < std::min(r_, k); ++i) diag_.push_back(sn.S[i][i]);
    diag_.resize(r_, Int(0));
  }
  for (std::size_t i = 0; i < r_; ++i) {
    if (diag_[i] == 0) {
      free_idx_.push_back(i);
    } else if (diag_[i] != 1) {
      tor_idx_.push_back(i);
      factors_.push_back(diag_[i]);
    }
  }
  free_rank_ = free_idx_.size();
}

IVec CokernelGroup::ambient_int_coords(const RVec& x) const {
  const auto coords = ambient_.span_coords(x);
  if (!coords) throw std::domain_error("element not in ambient lattice span");
  IVec out;
  out.reserve(coords->size());
  for (const auto& q : *coords) {
    if (!is_integral(q)) throw std::domain_error("element not in ambient group");
    out.push_back(rat_num(q));
  }
  return out;
}

std::pair<IVec, IVec> CokernelGroup::project(const RVec& x) const {
  if (r_ == 0) return {IVec{}, IVec{}};
  const IVec co = ambient_int_coords(x);
  IVec y(r_, Int(0));
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < r_; ++j) y[i] += U_[i][j] * co[j];
  }
  IVec tor, fre;
  tor.reserve(tor_idx_.size());
  fre.reserve(free_idx_.size());
  for (std::size_t i : tor_idx_) tor.push_back(mod_floor(y[i], diag_[i]));
  for (std::size_t i : free_idx_) fre.push_back(y[i]);
  return {std::move(tor), std::move(fre)};
}

bool CokernelGroup::is_zero(const RVec& x) const {
  const auto [tor, fre] = project(x);
  for (const auto& v : tor) {
    if (v != 0) return false;
  }
  for (const auto& v : fre) {
    if (v != 0) return false;
  }
  return true;
}

Int CokernelGroup::exponent() const {
  Int e = 1;
  for (const auto& f : factors_) e = int_lcm(e, f);
  return e;
}

}  // namespace tropcer
