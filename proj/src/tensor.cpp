#include "tropcer/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropcer {

std::vector<IndexTuple> index_combinations(int g, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > g) return out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  IndexTuple cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == g - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

TensorSpace::TensorSpace(int g, int p, int q) : g_(g), p_(p), q_(q) {
  J_ = index_combinations(g, q);
  K_ = index_combinations(g, p);
  for (std::size_t i = 0; i < J_.size(); ++i) jidx_[J_[i]] = i;
  for (std::size_t i = 0; i < K_.size(); ++i) kidx_[K_[i]] = i;
  dim_ = J_.size() * K_.size();
}

std::size_t TensorSpace::index(const IndexTuple& J, const IndexTuple& K) const {
  const auto jit = jidx_.find(J);
  const auto kit = kidx_.find(K);
  if (jit == jidx_.end() || kit == kidx_.end()) {
    throw std::invalid_argument("index tuple outside tensor space");
  }
  return jit->second * K_.size() + kit->second;
}

std::optional<WedgeInsert> wedge_insert(int j, const IndexTuple& K) {
  if (std::find(K.begin(), K.end(), j) != K.end()) return std::nullopt;
  IndexTuple merged = K;
  merged.push_back(j);
  std::sort(merged.begin(), merged.end());
  const int pos = static_cast<int>(std::find(merged.begin(), merged.end(), j) - merged.begin());
  return WedgeInsert{(pos % 2 == 0) ? +1 : -1, std::move(merged)};
}

Rat rational_det(RMat M) {
  const std::size_t n = M.size();
  Rat d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::ptrdiff_t piv = -1;
    for (std::size_t r = c; r < n; ++r) {
      if (M[r][c] != 0) {
        piv = static_cast<std::ptrdiff_t>(r);
        break;
      }
    }
    if (piv < 0) return Rat(0);
    if (static_cast<std::size_t>(piv) != c) {
      std::swap(M[c], M[static_cast<std::size_t>(piv)]);
      d = -d;
    }
    d *= M[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rat f = M[r][c] / M[c][c];
      if (f != 0) {
        for (std::size_t j = 0; j < n; ++j) M[r][j] -= f * M[c][j];
      }
    }
  }
  return d;
}

std::map<IndexTuple, Rat> wedge_vectors(const std::vector<RVec>& vecs, int g) {
  const int k = static_cast<int>(vecs.size());
  std::map<IndexTuple, Rat> out;
  for (const IndexTuple& S : index_combinations(g, k)) {
    RMat sub(k, RVec(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) sub[i][j] = vecs[i][S[j]];
    }
    const Rat d = rational_det(sub);
    if (d != 0) out[S] = d;
  }
  return out;
}

std::pair<TensorSpace, RVec> monodromy_phi(const TensorSpace& space, const RVec& x) {
  if (space.q() < 1) throw std::invalid_argument("monodromy_phi needs a-side degree >= 1");
  TensorSpace out_space(space.g(), space.p() + 1, space.q() - 1);
  RVec out = out_space.zero();
  const auto& Js = space.Jsets();
  const auto& Ks = space.Ksets();
  for (std::size_t Ji = 0; Ji < Js.size(); ++Ji) {
    const IndexTuple& J = Js[Ji];
    for (std::size_t Ki = 0; Ki < Ks.size(); ++Ki) {
      const Rat& c = x[Ji * Ks.size() + Ki];
      if (c == 0) continue;
      const IndexTuple& K = Ks[Ki];
      for (int t = 0; t < space.q(); ++t) {
        const int u = J[t];
        const auto w = wedge_insert(u, K);
        if (!w) continue;
        IndexTuple J2;
        J2.reserve(J.size() - 1);
        for (int idx = 0; idx < static_cast<int>(J.size()); ++idx) {
          if (idx != t) J2.push_back(J[idx]);
        }
        // u is the (t+1)-th smallest factor: sign (-1)^(t+1) for 0-based t
        const int sign = (t % 2 == 0) ? -1 : +1;
        out[out_space.index(J2, w->indices)] += c * sign * w->sign;
      }
    }
  }
  return {std::move(out_space), std::move(out)};
}

}  // namespace tropcer
