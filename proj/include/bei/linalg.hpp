#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bei {

// Basis coordinate of a graded free module piece: component index plus a
// packed monomial (Monomial::pack). Total order is (unit, mono) lexicographic;
// any fixed order works for echelon pivoting.
struct Coord {
  std::int32_t unit = 0;
  std::uint64_t mono = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

// sparse column over F_p: entries sorted by coordinate ascending, values in
// [1, p-1]; the pivot is the last (largest) coordinate
using FpEntry = std::pair<Coord, std::uint32_t>;
using FpCol = std::vector<FpEntry>;

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

// Incremental column-echelon rank tracker. With record = true each dependent
// column yields an explicit kernel combination over the input column indices.
class FpEliminator {
 public:
  explicit FpEliminator(std::uint32_t p, bool record = false);

  // true if the column was independent of everything added before
  bool add(FpCol col);

  int rank() const { return static_cast<int>(cols_.size()); }
  int inputs() const { return inputs_; }

  // valid after a dependent add() in record mode: coefficients l with
  // sum l_i * input_i = 0, own index carrying coefficient 1, sorted by index
  const std::vector<std::pair<int, std::uint32_t>>& last_kernel() const { return last_; }

 private:
  struct PivotRef {
    Coord c;
    int idx;
  };
  int find_pivot(const Coord& c) const;

  std::uint32_t p_;
  bool record_;
  int inputs_ = 0;
  std::vector<PivotRef> pivots_;  // sorted by coordinate
  std::vector<FpCol> cols_;       // pivot coefficient normalized to 1
  std::vector<std::vector<std::pair<int, std::uint32_t>>> combos_;
  std::vector<std::pair<int, std::uint32_t>> last_;
};

// Rank and kernel basis for a matrix whose columns carry at most two nonzero
// entries (monomial multiples of binomials). Rows are keyed by packed
// monomials and created on demand. Union-find with multiplicative potentials;
// the spanning forest is kept explicitly so dependent columns can be solved
// into combinations of earlier ones.
class BinomialKernel {
 public:
  explicit BinomialKernel(std::uint32_t p) : p_(p) {}

  int add_column(std::uint64_t rowA, std::uint32_t a);
  int add_column(std::uint64_t rowA, std::uint32_t a, std::uint64_t rowB, std::uint32_t b);

  int columns() const { return static_cast<int>(cols_.size()); }
  int rank() const { return rank_; }

  // one vector per dependent column, unit coefficient on its own index;
  // vectors are sorted by column index and jointly form a kernel basis
  std::vector<std::vector<std::pair<int, std::uint32_t>>> kernel_basis() const;

 private:
  struct ColInfo {
    int nA;
    std::uint32_t a;
    int nB;  // -1 for single-entry columns
    std::uint32_t b;
    bool dependent;
  };
  struct ForestEdge {
    int to;
    int col;
    std::uint32_t c_here;
    std::uint32_t c_to;
  };

  int node_of(std::uint64_t row);
  std::pair<int, std::uint32_t> find(int v) const;  // (root, potential)
  int handle(ColInfo info);

  // tree-only elimination of a vector supported on one component; returns the
  // leftover coefficient at the BFS root
  std::uint32_t tree_solve(int start, std::vector<std::pair<int, std::uint32_t>> target,
                           std::vector<std::pair<int, std::uint32_t>>& expr) const;

  std::uint32_t p_;
  int rank_ = 0;
  std::vector<std::uint64_t> row_keys_;
  mutable std::vector<int> parent_;
  mutable std::vector<std::uint32_t> lam_;
  std::vector<int> size_;
  std::vector<int> saturator_;  // valid at roots; -1 when the component is not saturated
  std::vector<std::vector<ForestEdge>> adj_;
  std::vector<ColInfo> cols_;
  struct KeyHash {
    std::size_t operator()(std::uint64_t k) const noexcept {
      k ^= k >> 33;
      k *= 0xff51afd7ed558ccdULL;
      k ^= k >> 33;
      return static_cast<std::size_t>(k);
    }
  };
  std::unordered_map<std::uint64_t, int, KeyHash> row_index_;
};

}  // namespace bei
