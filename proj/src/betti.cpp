#include "bei/betti.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bei/linalg.hpp"

namespace bei {

long BettiTable::beta(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long v, const std::string& src) {
  entries[{i, j}] = v;
  source[{i, j}] = src;
}

long BettiTable::row_total(int i) const {
  long s = 0;
  for (const auto& [k, v] : entries)
    if (k.first == i) s += v;
  return s;
}

bool BettiTable::row_equal(const BettiTable& o, int i) const {
  std::set<int> js;
  for (const auto& [k, v] : entries)
    if (k.first == i) js.insert(k.second);
  for (const auto& [k, v] : o.entries)
    if (k.first == i) js.insert(k.second);
  for (int j : js)
    if (beta(i, j) != o.beta(i, j)) return false;
  return true;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  for (const auto& [k, v] : entries) {
    os << "beta[" << k.first << "][" << k.second << "] = " << v;
    auto it = source.find(k);
    if (it != source.end()) os << "  (" << it->second << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

long choose2(long k) { return k < 2 ? 0 : k * (k - 1) / 2; }
long choose3(long k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; }

}  // namespace

BettiTable closed_form_beta2(const Graph& g) {
  GraphInfo info = analyze(g);
  if (!info.connected) throw std::invalid_argument("closed_form_beta2: disconnected graph");
  BettiTable t;
  const long n = g.n();
  long degsum3 = 0;
  for (int v = 1; v <= g.n(); ++v) degsum3 += choose3(g.degree(v));
  if (info.is_tree) {
    t.set(2, 4, choose2(n - 1) + degsum3, "tree");
    return t;
  }
  if (!info.is_unicyclic)
    throw std::invalid_argument("closed_form_beta2: tree or unicyclic only");
  if (info.girth == 3) {
    t.set(2, 3, 2 * info.k3, "girth-3 cubic");
    long cyc_deg = 0;
    for (int v : info.cycle) cyc_deg += g.degree(v);
    t.set(2, 4, choose2(n) + degsum3 - cyc_deg + 3, "girth-3");
    return t;
  }
  t.set(2, 4, choose2(n) + degsum3 + (info.girth == 4 ? 3 : 0), "girth>=4");
  if (info.girth > 4) t.set(2, info.girth, info.girth - 1, "girth>=4 cycle row");
  return t;
}

namespace {

// per-degree evaluation matrix of monomial multiples of module rows; rows of
// the matrix live in the ambient free module, columns are (row index, monomial)
struct DegreeKernel {
  RingPtr R;
  std::uint32_t p;
  bool bk_mode;
  std::unique_ptr<BinomialKernel> bk;
  std::unique_ptr<FpEliminator> el;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> el_kernels;
  long cols = 0;

  DegreeKernel(RingPtr ring, std::uint32_t prime, bool two_entry)
      : R(std::move(ring)), p(prime), bk_mode(two_entry) {
    if (bk_mode)
      bk = std::make_unique<BinomialKernel>(p);
    else
      el = std::make_unique<FpEliminator>(p, true);
  }

  static std::uint64_t bk_key(const Coord& c, int nslots) {
    // monomial pack uses 4 bits per slot; units ride in the spare high bits
    assert(nslots <= 14);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.unit)) << 56) | c.mono;
  }

  void add(const FpCol& col) {
    ++cols;
    if (bk_mode) {
      const int ns = R->nvars();
      if (col.size() == 1) {
        bk->add_column(bk_key(col[0].first, ns), col[0].second);
      } else if (col.size() == 2) {
        bk->add_column(bk_key(col[0].first, ns), col[0].second, bk_key(col[1].first, ns),
                       col[1].second);
      } else {
        throw std::logic_error("DegreeKernel: column too wide for binomial mode");
      }
      return;
    }
    if (!el->add(col)) el_kernels.push_back(el->last_kernel());
  }

  long rank() const { return bk_mode ? bk->rank() : el->rank(); }

  std::vector<std::vector<std::pair<int, std::uint32_t>>> kernels() const {
    return bk_mode ? bk->kernel_basis() : el_kernels;
  }
};

// module row: one polynomial per ambient unit
using ModRow = std::vector<Poly>;

long total_terms(const ModRow& r) {
  long t = 0;
  for (const auto& c : r) t += static_cast<long>(c.terms().size());
  return t;
}

int row_degree(const ModRow& r, const std::vector<int>& ambient_shifts) {
  int d = -1;
  for (size_t u = 0; u < r.size(); ++u) {
    if (r[u].is_zero()) continue;
    if (!r[u].is_homogeneous()) throw std::logic_error("row_degree: inhomogeneous coordinate");
    int du = r[u].degree() + ambient_shifts[u];
    if (d >= 0 && d != du) throw std::logic_error("row_degree: mixed degrees");
    d = du;
  }
  return d;
}

FpCol row_times_monomial(const Field& F, const ModRow& row, const Monomial& m) {
  FpCol out;
  for (size_t u = 0; u < row.size(); ++u) {
    for (const auto& t : row[u].terms()) {
      out.emplace_back(Coord{static_cast<std::int32_t>(u), Monomial::mul(t.m, m).pack()},
                       fp_value(F, t.c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct LevelData {
  std::vector<ModRow> rows;
  std::vector<int> degrees;
};

// one homological step: minimal generators of the kernel of the evaluation
// map defined by prev.rows, scanned degree by degree
struct LevelScan {
  LevelData found;
  std::map<int, long> counts;
  bool capped = false;  // a cap cut the scan before its quiet window closed
};

LevelScan next_level(const RingPtr& R, const LevelData& prev, const std::vector<int>& ambient_shifts,
                     int quiet, int level_cap, int degree_bound) {
  const Field& F = R->field();
  const std::uint32_t p = F.p;
  LevelScan scan;
  bool two_entry = R->nvars() <= 14 && prev.rows.front().size() <= 255;
  for (const auto& r : prev.rows)
    if (total_terms(r) > 2) two_entry = false;

  int min_shift = *std::min_element(prev.degrees.begin(), prev.degrees.end());
  int last_found = min_shift;  // quiet window counts from here
  int j = min_shift + 1;
  const int hard_cap = std::min(level_cap, degree_bound);
  while (true) {
    if (j > last_found + quiet) break;  // stabilized
    if (j > hard_cap) {
      scan.capped = true;
      break;
    }
    // kernel of the degree-j evaluation matrix
    DegreeKernel dk(R, p, two_entry);
    std::vector<std::pair<int, Monomial>> col_info;
    for (size_t k = 0; k < prev.rows.size(); ++k) {
      int md = j - prev.degrees[k];
      if (md < 0) continue;
      for (const auto& m : graded_basis(R, md)) {
        dk.add(row_times_monomial(F, prev.rows[k], m));
        col_info.emplace_back(static_cast<int>(k), m);
      }
    }
    const long N = dk.cols - dk.rank();
    // span of monomial multiples of generators found so far
    FpEliminator mult(p, false);
    for (size_t k = 0; k < scan.found.rows.size(); ++k) {
      int md = j - scan.found.degrees[k];
      if (md < 1) continue;
      for (const auto& m : graded_basis(R, md)) {
        mult.add(row_times_monomial(F, scan.found.rows[k], m));
      }
    }
    const long Dprime = mult.rank();
    assert(Dprime <= N);
    if (N > Dprime) {
      long grew = 0;
      for (const auto& kv : dk.kernels()) {
        // decode into a module row over prev's index space
        ModRow row(prev.rows.size(), Poly::zero(R));
        std::vector<std::vector<Term>> terms(prev.rows.size());
        for (const auto& [cid, coeff] : kv) {
          const auto& [k, m] = col_info[static_cast<size_t>(cid)];
          terms[static_cast<size_t>(k)].push_back(
              Term{m, scalar_of(F, static_cast<long>(coeff))});
        }
        for (size_t k = 0; k < row.size(); ++k)
          if (!terms[k].empty()) row[k] = Poly::from_terms(R, std::move(terms[k]));
        if (mult.add(row_times_monomial(F, row, R->one()))) {
          scan.found.rows.push_back(std::move(row));
          scan.found.degrees.push_back(j);
          ++grew;
        }
      }
      assert(grew == N - Dprime);
      if (grew > 0) {
        scan.counts[j] += grew;
        last_found = j;
      }
    }
    ++j;
  }
  return scan;
}

void check_oracle_input(const Ideal& I) {
  if (!I.ring()->field().is_fp())
    throw std::invalid_argument("betti oracle: prime field required");
  if (I.ring()->nvars() > 16)
    throw std::invalid_argument("betti oracle: too many variables to pack");
  if (!I.is_homogeneous()) throw std::invalid_argument("betti oracle: homogeneous input required");
  if (I.gens().empty()) throw std::invalid_argument("betti oracle: zero ideal");
}

}  // namespace

BettiTable oracle_beta(const Ideal& I, int i_max, int j_max) {
  check_oracle_input(I);
  if (i_max < 1 || i_max > 2) throw std::invalid_argument("oracle_beta: rows 1 and 2 only");
  const RingPtr& R = I.ring();
  const Field& F = R->field();
  const std::uint32_t p = F.p;
  const auto& gens = I.gens();

  bool two_entry = R->nvars() <= 14;
  for (const auto& g : gens)
    if (g.terms().size() > 2) two_entry = false;

  std::vector<int> gdeg;
  for (const auto& g : gens) gdeg.push_back(g.degree());
  const int jmin = *std::min_element(gdeg.begin(), gdeg.end());

  BettiTable t;
  LevelData W;  // discovered second-row generators
  for (int j = jmin; j <= j_max; ++j) {
    DegreeKernel dk(R, p, two_entry);
    std::vector<std::pair<int, Monomial>> col_info;
    // proper multiples first: their span is S_1 * I_{j-1}
    for (size_t i = 0; i < gens.size(); ++i) {
      int md = j - gdeg[i];
      if (md < 1) continue;
      for (const auto& m : graded_basis(R, md)) {
        dk.add(row_times_monomial(F, {gens[i]}, m));
        col_info.emplace_back(static_cast<int>(i), m);
      }
    }
    const long r0 = dk.rank();
    long degree_j_gens = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (gdeg[i] != j) continue;
      ++degree_j_gens;
      dk.add(row_times_monomial(F, {gens[i]}, R->one()));
      col_info.emplace_back(static_cast<int>(i), R->one());
    }
    const long r1 = dk.rank();
    if (degree_j_gens > 0 && r1 - r0 > 0) t.set(1, j, r1 - r0, "oracle");
    if (i_max < 2) continue;

    const long N = dk.cols - r1;
    FpEliminator mult(p, false);
    for (size_t k = 0; k < W.rows.size(); ++k) {
      int md = j - W.degrees[k];
      if (md < 1) continue;
      for (const auto& m : graded_basis(R, md)) mult.add(row_times_monomial(F, W.rows[k], m));
    }
    const long Dprime = mult.rank();
    assert(Dprime <= N);
    if (N > Dprime) {
      long grew = 0;
      for (const auto& kv : dk.kernels()) {
        ModRow row(gens.size(), Poly::zero(R));
        std::vector<std::vector<Term>> terms(gens.size());
        for (const auto& [cid, coeff] : kv) {
          const auto& [gi, m] = col_info[static_cast<size_t>(cid)];
          terms[static_cast<size_t>(gi)].push_back(
              Term{m, scalar_of(F, static_cast<long>(coeff))});
        }
        for (size_t k = 0; k < row.size(); ++k)
          if (!terms[k].empty()) row[k] = Poly::from_terms(R, std::move(terms[k]));
        if (mult.add(row_times_monomial(F, row, R->one()))) {
          W.rows.push_back(std::move(row));
          W.degrees.push_back(j);
          ++grew;
        }
      }
      assert(grew == N - Dprime);
      if (grew > 0) t.set(2, j, grew, "oracle");
    }
  }
  return t;
}

SyzygyOracle::SyzygyOracle(const Ideal& I, int j_max) : ideal_(I), j_max_(j_max) {
  check_oracle_input(I);
}

namespace {

// evaluation kernel of the generator list at one degree, with decode tables
struct PieceResult {
  long dim;
  std::vector<std::vector<Poly>> basis;
};

PieceResult syzygy_piece(const Ideal& I, int j) {
  const RingPtr& R = I.ring();
  const Field& F = R->field();
  const auto& gens = I.gens();
  bool two_entry = R->nvars() <= 14;
  for (const auto& g : gens)
    if (g.terms().size() > 2) two_entry = false;
  DegreeKernel dk(R, F.p, two_entry);
  std::vector<std::pair<int, Monomial>> col_info;
  for (size_t i = 0; i < gens.size(); ++i) {
    int md = j - gens[i].degree();
    if (md < 0) continue;
    for (const auto& m : graded_basis(R, md)) {
      dk.add(row_times_monomial(F, {gens[i]}, m));
      col_info.emplace_back(static_cast<int>(i), m);
    }
  }
  PieceResult out;
  out.dim = dk.cols - dk.rank();
  for (const auto& kv : dk.kernels()) {
    std::vector<std::vector<Term>> terms(gens.size());
    for (const auto& [cid, coeff] : kv) {
      const auto& [gi, m] = col_info[static_cast<size_t>(cid)];
      terms[static_cast<size_t>(gi)].push_back(Term{m, scalar_of(F, static_cast<long>(coeff))});
    }
    std::vector<Poly> row(gens.size(), Poly::zero(R));
    for (size_t k = 0; k < row.size(); ++k)
      if (!terms[k].empty()) row[k] = Poly::from_terms(R, std::move(terms[k]));
    out.basis.push_back(std::move(row));
  }
  assert(static_cast<long>(out.basis.size()) == out.dim);
  return out;
}

}  // namespace

long SyzygyOracle::kernel_dim(int j) const {
  auto it = dims_.find(j);
  if (it != dims_.end()) return it->second;
  auto piece = syzygy_piece(ideal_, j);
  dims_[j] = piece.dim;
  bases_[j] = std::move(piece.basis);
  return dims_.at(j);
}

const std::vector<std::vector<Poly>>& SyzygyOracle::kernel_basis(int j) const {
  kernel_dim(j);
  return bases_.at(j);
}

PdDepthReport pd_depth_oracle(const Ideal& I, int degree_bound, int hom_bound) {
  check_oracle_input(I);
  const RingPtr& R = I.ring();
  const Field& F = R->field();
  PdDepthReport rep;
  rep.exact = true;

  // level 1: minimal generators among the inputs
  std::vector<int> gdeg;
  for (const auto& g : I.gens()) gdeg.push_back(g.degree());
  std::vector<int> degs_sorted = gdeg;
  std::sort(degs_sorted.begin(), degs_sorted.end());
  degs_sorted.erase(std::unique(degs_sorted.begin(), degs_sorted.end()), degs_sorted.end());

  LevelData lvl1;
  std::map<int, long> counts1;
  for (int j : degs_sorted) {
    FpEliminator el(F.p, false);
    for (size_t i = 0; i < I.gens().size(); ++i) {
      int md = j - gdeg[i];
      if (md < 1) continue;
      for (const auto& m : graded_basis(R, md))
        el.add(row_times_monomial(F, {I.gens()[i]}, m));
    }
    for (size_t i = 0; i < I.gens().size(); ++i) {
      if (gdeg[i] != j) continue;
      if (el.add(row_times_monomial(F, {I.gens()[i]}, R->one()))) {
        lvl1.rows.push_back({I.gens()[i]});
        lvl1.degrees.push_back(j);
        ++counts1[j];
      }
    }
  }
  rep.levels.push_back(counts1);

  LevelData prev = lvl1;
  std::vector<int> ambient_shifts{0};
  int level = 2;
  while (true) {
    if (level > R->nvars() + 1) {
      rep.exact = false;
      rep.note = "level overflow";
      rep.pd = level - 1;
      break;
    }
    LevelScan scan =
        next_level(R, prev, ambient_shifts, 2, hom_bound + level, degree_bound);
    if (scan.capped) rep.exact = false;
    if (scan.found.rows.empty()) {
      rep.pd = level - 1;
      if (scan.capped && rep.note.empty()) rep.note = "scan capped before quiet window";
      break;
    }
    rep.levels.push_back(scan.counts);
    ambient_shifts = prev.degrees;
    prev = std::move(scan.found);
    ++level;
  }
  rep.depth = R->nvars() - rep.pd;
  return rep;
}

bool star_betti_recursion_check(int n) {
  if (n < 3 || n > 4) throw std::invalid_argument("star_betti_recursion_check: n in {3,4}");
  Field F{kDefaultPrime};
  const int jmax = 6;
  auto betti_of = [&](const Graph& g) {
    auto R = standard_ring(g.n(), F);
    return oracle_beta(binomial_edge_ideal(R, g), 2, jmax);
  };
  BettiTable big = betti_of(star_graph(n));
  BettiTable small = betti_of(star_graph(n - 1));
  BettiTable comp = betti_of(complete_graph(n));
  for (int i = 1; i <= 2; ++i) {
    for (int j = 0; j <= jmax; ++j) {
      long rhs = small.beta(i, j);
      if (i == 1) {
        rhs += (j == 2) ? 1 : 0;  // beta_0 of S/J_{K_n} contributes only at j-2 = 0
      } else {
        rhs += comp.beta(i - 1, j - 2);
      }
      if (big.beta(i, j) != rhs) return false;
    }
  }
  return true;
}

}  // namespace bei
