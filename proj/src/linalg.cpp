#include "bei/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace bei {

namespace {

inline std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t addp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t subp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t negp(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

// out = u - f*v, all sorted ascending by coordinate
FpCol axpy_sub(const FpCol& u, std::uint32_t f, const FpCol& v, std::uint32_t p) {
  FpCol out;
  out.reserve(u.size() + v.size());
  size_t i = 0, j = 0;
  while (i < u.size() || j < v.size()) {
    if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
      out.push_back(u[i++]);
    } else if (i == u.size() || v[j].first < u[i].first) {
      out.emplace_back(v[j].first, negp(mulp(f, v[j].second, p), p));
      ++j;
    } else {
      std::uint32_t c = subp(u[i].second, mulp(f, v[j].second, p), p);
      if (c != 0) out.emplace_back(u[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

using Combo = std::vector<std::pair<int, std::uint32_t>>;

Combo combo_sub(const Combo& u, std::uint32_t f, const Combo& v, std::uint32_t p) {
  Combo out;
  out.reserve(u.size() + v.size());
  size_t i = 0, j = 0;
  while (i < u.size() || j < v.size()) {
    if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
      out.push_back(u[i++]);
    } else if (i == u.size() || v[j].first < u[i].first) {
      out.emplace_back(v[j].first, negp(mulp(f, v[j].second, p), p));
      ++j;
    } else {
      std::uint32_t c = subp(u[i].second, mulp(f, v[j].second, p), p);
      if (c != 0) out.emplace_back(u[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("fp_inv: zero");
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FpEliminator::FpEliminator(std::uint32_t p, bool record) : p_(p), record_(record) {}

int FpEliminator::find_pivot(const Coord& c) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c,
                             [](const PivotRef& r, const Coord& x) { return r.c < x; });
  if (it == pivots_.end() || !(it->c == c)) return -1;
  return it->idx;
}

bool FpEliminator::add(FpCol col) {
  const int me = inputs_++;
  Combo combo;
  if (record_) combo.emplace_back(me, 1);
  while (!col.empty()) {
    const Coord piv = col.back().first;
    const std::uint32_t pc = col.back().second;
    int k = find_pivot(piv);
    if (k < 0) {
      const std::uint32_t s = fp_inv(pc, p_);
      for (auto& e : col) e.second = mulp(e.second, s, p_);
      if (record_) {
        for (auto& e : combo) e.second = mulp(e.second, s, p_);
        combos_.push_back(std::move(combo));
      }
      auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv,
                                 [](const PivotRef& r, const Coord& x) { return r.c < x; });
      pivots_.insert(it, PivotRef{piv, static_cast<int>(cols_.size())});
      cols_.push_back(std::move(col));
      return true;
    }
    col = axpy_sub(col, pc, cols_[k], p_);
    if (record_) combo = combo_sub(combo, pc, combos_[k], p_);
  }
  if (record_) last_ = std::move(combo);
  return false;
}

int BinomialKernel::node_of(std::uint64_t row) {
  auto it = row_index_.find(row);
  if (it != row_index_.end()) return it->second;
  int id = static_cast<int>(row_keys_.size());
  row_index_.emplace(row, id);
  row_keys_.push_back(row);
  parent_.push_back(id);
  lam_.push_back(1);
  size_.push_back(1);
  saturator_.push_back(-1);
  adj_.emplace_back();
  return id;
}

std::pair<int, std::uint32_t> BinomialKernel::find(int v) const {
  if (parent_[v] == v) return {v, 1};
  auto [r, lp] = find(parent_[v]);
  lam_[v] = mulp(lam_[v], lp, p_);
  parent_[v] = r;
  return {r, lam_[v]};
}

int BinomialKernel::add_column(std::uint64_t rowA, std::uint32_t a) {
  a %= p_;
  if (a == 0) throw std::invalid_argument("BinomialKernel: zero entry");
  return handle(ColInfo{node_of(rowA), a, -1, 0, false});
}

int BinomialKernel::add_column(std::uint64_t rowA, std::uint32_t a, std::uint64_t rowB,
                               std::uint32_t b) {
  a %= p_;
  b %= p_;
  if (a == 0 || b == 0) throw std::invalid_argument("BinomialKernel: zero entry");
  if (rowA == rowB) {
    std::uint32_t c = addp(a, b, p_);
    if (c == 0) {
      // zero column: dependent on nothing, kernel vector is itself
      int id = static_cast<int>(cols_.size());
      cols_.push_back(ColInfo{-1, 0, -1, 0, true});
      return id;
    }
    return handle(ColInfo{node_of(rowA), c, -1, 0, false});
  }
  if (rowB < rowA) {
    std::swap(rowA, rowB);
    std::swap(a, b);
  }
  return handle(ColInfo{node_of(rowA), a, node_of(rowB), b, false});
}

int BinomialKernel::handle(ColInfo info) {
  const int id = static_cast<int>(cols_.size());
  if (info.nB < 0) {
    // single entry alpha*e_A: independent unless the component already spans
    // its whole coordinate space
    auto [r, la] = find(info.nA);
    if (saturator_[r] >= 0) {
      info.dependent = true;
    } else {
      saturator_[r] = id;
      ++rank_;
    }
    cols_.push_back(info);
    return id;
  }
  auto [rA, lA] = find(info.nA);
  auto [rB, lB] = find(info.nB);
  if (rA == rB) {
    if (saturator_[rA] >= 0) {
      info.dependent = true;
    } else {
      // balanced cycle <=> a*lam_A + b*lam_B = 0
      std::uint32_t bal = addp(mulp(info.a, lA, p_), mulp(info.b, lB, p_), p_);
      if (bal == 0) {
        info.dependent = true;
      } else {
        saturator_[rA] = id;
        ++rank_;
      }
    }
    cols_.push_back(info);
    return id;
  }
  // different components: merging column is independent unless both sides
  // already span everything
  if (saturator_[rA] >= 0 && saturator_[rB] >= 0) {
    info.dependent = true;
  } else {
    ++rank_;
  }
  // attach smaller tree under larger; potential for the absorbed root chosen
  // so that a*lam(A) + b*lam(B) = 0 holds in the merged component
  int keep = rA, drop = rB;
  std::uint32_t lKeep = lA, lDrop = lB;
  std::uint32_t aKeep = info.a, aDrop = info.b;
  if (size_[rA] < size_[rB]) {
    std::swap(keep, drop);
    std::swap(lKeep, lDrop);
    std::swap(aKeep, aDrop);
  }
  // solve aKeep*lKeep + aDrop*lDrop*t = 0 for the scaling t of the drop side
  std::uint32_t t =
      mulp(negp(mulp(aKeep, lKeep, p_), p_), fp_inv(mulp(aDrop, lDrop, p_), p_), p_);
  parent_[drop] = keep;
  lam_[drop] = t;
  size_[keep] += size_[drop];
  if (saturator_[keep] < 0) saturator_[keep] = saturator_[drop];
  adj_[info.nA].push_back(ForestEdge{info.nB, id, info.a, info.b});
  adj_[info.nB].push_back(ForestEdge{info.nA, id, info.b, info.a});
  cols_.push_back(info);
  return id;
}

std::uint32_t BinomialKernel::tree_solve(int start,
                                         std::vector<std::pair<int, std::uint32_t>> target,
                                         std::vector<std::pair<int, std::uint32_t>>& expr) const {
  // BFS over the spanning forest from start
  std::vector<int> order;
  std::unordered_map<int, std::pair<int, const ForestEdge*>> up;  // node -> (parent, edge)
  order.push_back(start);
  up.emplace(start, std::pair<int, const ForestEdge*>(-1, nullptr));
  for (size_t h = 0; h < order.size(); ++h) {
    int v = order[h];
    for (const auto& e : adj_[v]) {
      if (up.count(e.to)) continue;
      up.emplace(e.to, std::make_pair(v, &e));
      order.push_back(e.to);
    }
  }
  std::unordered_map<int, std::uint32_t> rho;
  for (auto& [n, c] : target) rho[n] = addp(rho.count(n) ? rho[n] : 0, c, p_);
  for (size_t h = order.size(); h-- > 1;) {
    int v = order[h];
    auto it = rho.find(v);
    if (it == rho.end() || it->second == 0) continue;
    const auto& [par, e] = up[v];
    // e is stored at the parent side: c_here is the coefficient at par, c_to at v
    std::uint32_t c = mulp(it->second, fp_inv(e->c_to, p_), p_);
    expr.emplace_back(e->col, c);
    rho[par] = subp(rho.count(par) ? rho[par] : 0, mulp(c, e->c_here, p_), p_);
    it->second = 0;
  }
  auto it = rho.find(start);
  return it == rho.end() ? 0 : it->second;
}

std::vector<std::vector<std::pair<int, std::uint32_t>>> BinomialKernel::kernel_basis() const {
  std::vector<std::vector<std::pair<int, std::uint32_t>>> out;
  for (int id = 0; id < static_cast<int>(cols_.size()); ++id) {
    const auto& ci = cols_[id];
    if (!ci.dependent) continue;
    std::vector<std::pair<int, std::uint32_t>> vec;
    if (ci.nA < 0) {
      // column was identically zero
      vec.emplace_back(id, 1);
      out.push_back(std::move(vec));
      continue;
    }
    std::vector<std::pair<int, std::uint32_t>> expr;
    auto [root, lroot] = find(ci.nA);
    std::vector<std::pair<int, std::uint32_t>> target;
    target.emplace_back(ci.nA, ci.a);
    if (ci.nB >= 0) target.emplace_back(ci.nB, ci.b);
    std::uint32_t leftover = tree_solve(root, target, expr);
    if (leftover != 0) {
      int sid = saturator_[root];
      assert(sid >= 0 && sid < id);
      const auto& sc = cols_[sid];
      // lambda pairing of the saturating column; nonzero by construction
      auto [r1, lsA] = find(sc.nA);
      std::uint32_t ldot = mulp(sc.a, lsA, p_);
      if (sc.nB >= 0) {
        auto [r2, lsB] = find(sc.nB);
        ldot = addp(ldot, mulp(sc.b, lsB, p_), p_);
      }
      auto [rr, lr] = find(root);
      std::uint32_t mu = mulp(mulp(leftover, lr, p_), fp_inv(ldot, p_), p_);
      expr.emplace_back(sid, mu);
      std::vector<std::pair<int, std::uint32_t>> target2;
      target2.emplace_back(root, leftover);
      target2.emplace_back(sc.nA, negp(mulp(mu, sc.a, p_), p_));
      if (sc.nB >= 0) target2.emplace_back(sc.nB, negp(mulp(mu, sc.b, p_), p_));
      std::uint32_t left2 = tree_solve(root, target2, expr);
      assert(left2 == 0);
      (void)left2;
    }
    // combine duplicate column references, negate, and prepend own unit
    std::sort(expr.begin(), expr.end());
    std::vector<std::pair<int, std::uint32_t>> vec2;
    for (const auto& [c, v] : expr) {
      if (!vec2.empty() && vec2.back().first == c)
        vec2.back().second = addp(vec2.back().second, v, p_);
      else
        vec2.emplace_back(c, v);
    }
    for (auto& [c, v] : vec2) v = negp(v, p_);
    vec2.emplace_back(id, 1);
    std::erase_if(vec2, [](const auto& e) { return e.second == 0; });
    std::sort(vec2.begin(), vec2.end());
    out.push_back(std::move(vec2));
  }
  return out;
}

}  // namespace bei
