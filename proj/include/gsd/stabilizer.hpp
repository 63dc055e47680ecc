#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gsd/errors.hpp"
#include "gsd/graph.hpp"
#include "gsd/rng.hpp"

namespace gsd {

// Signed Pauli string over a fixed qubit list. Bit pair (x, z) encodes
// I=(0,0), X=(1,0), Y=(1,1), Z=(0,1); the operator is i^phase * product
// with the (1,1) pair read as a literal Y. Valid stabilizer rows keep
// phase in {0, 2} (signs +1 / -1).
struct PauliRow {
  std::vector<std::uint8_t> x, z;
  std::uint8_t phase = 0;  // exponent of i, mod 4

  explicit PauliRow(std::size_t n = 0) : x(n, 0), z(n, 0) {}

  bool identity_bits() const {
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] || z[j]) return false;
    return true;
  }

  bool commutes_with(const PauliRow& o) const {
    int s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s ^= (x[j] & o.z[j]) ^ (z[j] & o.x[j]);
    return s == 0;
  }

  // this *= o, tracking the i-power of the product per qubit.
  void mult(const PauliRow& o) {
    int g = phase + o.phase;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const int x1 = x[j], z1 = z[j], x2 = o.x[j], z2 = o.z[j];
      g += x1 * z1 + x2 * z2 + 2 * z1 * x2 - (x1 ^ x2) * (z1 ^ z2);
      x[j] = static_cast<std::uint8_t>(x1 ^ x2);
      z[j] = static_cast<std::uint8_t>(z1 ^ z2);
    }
    phase = static_cast<std::uint8_t>(((g % 4) + 4) % 4);
  }

  friend bool operator==(const PauliRow& a, const PauliRow& b) {
    return a.x == b.x && a.z == b.z && a.phase == b.phase;
  }
};

enum class Pauli { X, Y, Z };

// Brute-force stabilizer tableau on stable qubit ids. Deliberately written
// from the binary-symplectic rules (not the graph rules) so it can serve as
// an independent oracle for the graph-transformation modules.
class StabilizerTableau {
 public:
  StabilizerTableau() = default;

  static StabilizerTableau from_graph(const Graph& g) {
    StabilizerTableau t;
    for (int v : g.vertices()) t.ids_.push_back(v);
    const std::size_t n = t.ids_.size();
    for (std::size_t i = 0; i < n; ++i) {
      PauliRow row(n);
      row.x[i] = 1;
      for (int w : g.neighbors(t.ids_[i])) row.z[t.col(w)] = 1;
      t.rows_.push_back(std::move(row));
    }
    return t;
  }

  std::size_t qubit_count() const { return ids_.size(); }
  const std::vector<int>& qubit_ids() const { return ids_; }
  bool has_qubit(int q) const { return std::binary_search(ids_.begin(), ids_.end(), q); }

  void add_qubit(int q) {
    if (has_qubit(q)) throw Error("qubit id already present: " + std::to_string(q));
    const std::size_t at = static_cast<std::size_t>(
        std::lower_bound(ids_.begin(), ids_.end(), q) - ids_.begin());
    ids_.insert(ids_.begin() + at, q);
    for (auto& r : rows_) {
      r.x.insert(r.x.begin() + at, 0);
      r.z.insert(r.z.begin() + at, 0);
    }
    PauliRow row(ids_.size());
    row.x[at] = 1;  // fresh qubit in |+>
    rows_.insert(rows_.begin() + at, std::move(row));
  }

  void apply_cz(int a, int b) {
    const std::size_t ca = col(a), cb = col(b);
    for (auto& r : rows_) {
      if (r.x[ca] & r.x[cb] & (r.z[ca] ^ r.z[cb])) r.phase = static_cast<std::uint8_t>((r.phase + 2) % 4);
      r.z[ca] ^= r.x[cb];
      r.z[cb] ^= r.x[ca];
    }
  }

  void apply_pauli(Pauli p, int v) {
    const std::size_t c = col(v);
    for (auto& r : rows_) {
      bool flip = false;
      switch (p) {
        case Pauli::X: flip = r.z[c]; break;
        case Pauli::Z: flip = r.x[c]; break;
        case Pauli::Y: flip = r.x[c] ^ r.z[c]; break;
      }
      if (flip) r.phase = static_cast<std::uint8_t>((r.phase + 2) % 4);
    }
  }

  // (iZ)^(1/2): X -> -Y, Y -> X, Z -> Z.
  void apply_sqrt_z_plus(int v) {
    const std::size_t c = col(v);
    for (auto& r : rows_) {
      if (r.x[c] && !r.z[c]) r.phase = static_cast<std::uint8_t>((r.phase + 2) % 4);
      r.z[c] ^= r.x[c];
    }
  }

  // (-iZ)^(1/2): X -> Y, Y -> -X, Z -> Z.
  void apply_sqrt_z_minus(int v) {
    const std::size_t c = col(v);
    for (auto& r : rows_) {
      if (r.x[c] && r.z[c]) r.phase = static_cast<std::uint8_t>((r.phase + 2) % 4);
      r.z[c] ^= r.x[c];
    }
  }

  // (-iX)^(1/2): Z -> -Y, Y -> Z, X -> X.
  void apply_sqrt_x_minus(int v) {
    const std::size_t c = col(v);
    for (auto& r : rows_) {
      if (r.z[c] && !r.x[c]) r.phase = static_cast<std::uint8_t>((r.phase + 2) % 4);
      r.x[c] ^= r.z[c];
    }
  }

  // (iX)^(1/2): Z -> Y, Y -> -Z, X -> X.
  void apply_sqrt_x_plus(int v) {
    const std::size_t c = col(v);
    for (auto& r : rows_) {
      if (r.z[c] && r.x[c]) r.phase = static_cast<std::uint8_t>((r.phase + 2) % 4);
      r.x[c] ^= r.z[c];
    }
  }

  // Local complementation as the local Clifford
  // sqrt(-i X_v) * prod_{w in nbs} sqrt(i Z_w).
  void apply_lc(int v, const std::set<int>& nbs) {
    apply_sqrt_x_minus(v);
    for (int w : nbs) apply_sqrt_z_plus(w);
  }

  // Measures the single-qubit Pauli at v, removes the qubit from the
  // tableau, and returns the outcome bit. Random outcomes come from rng
  // unless forced.
  int measure_pauli(Pauli basis, int v, Rng* rng, std::optional<int> forced = std::nullopt) {
    const std::size_t c = col(v);
    const std::uint8_t bx = basis == Pauli::Z ? 0 : 1;
    const std::uint8_t bz = basis == Pauli::X ? 0 : 1;

    std::vector<std::size_t> anti;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if ((rows_[i].x[c] & bz) ^ (rows_[i].z[c] & bx)) anti.push_back(i);

    int outcome;
    std::size_t brow;
    if (!anti.empty()) {
      outcome = forced ? (*forced & 1) : (rng && rng->coin() ? 1 : 0);
      brow = anti.front();
      for (std::size_t k = 1; k < anti.size(); ++k) rows_[anti[k]].mult(rows_[brow]);
      PauliRow rep(ids_.size());
      rep.x[c] = bx;
      rep.z[c] = bz;
      rep.phase = canonical_phase(basis, outcome);
      rows_[brow] = rep;
    } else {
      // Deterministic: express B as a product of generators to read its sign.
      PauliRow target(ids_.size());
      target.x[c] = bx;
      target.z[c] = bz;
      auto subset = solve_subset(target);
      if (!subset) throw Error("measurement target not in stabilizer group");
      PauliRow prod(ids_.size());
      for (std::size_t i : *subset) prod.mult(rows_[i]);
      if (prod.x != target.x || prod.z != target.z) throw Error("internal: bad subset solve");
      if (prod.phase % 2 != 0) throw Error("internal: imaginary stabilizer phase");
      outcome = prod.phase == canonical_phase(basis, 1) ? 1 : 0;
      if (forced && (*forced & 1) != outcome)
        throw ForcedOutcomeImpossible("forced outcome contradicts a deterministic measurement");
      brow = subset->back();
      rows_[brow] = prod;
    }

    // Clear the measured column from every other row, then drop row/column.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == brow) continue;
      if (rows_[i].x[c] || rows_[i].z[c]) rows_[i].mult(rows_[brow]);
      if (rows_[i].x[c] || rows_[i].z[c]) throw Error("internal: sweep failed");
    }
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(brow));
    for (auto& r : rows_) {
      r.x.erase(r.x.begin() + static_cast<std::ptrdiff_t>(c));
      r.z.erase(r.z.begin() + static_cast<std::ptrdiff_t>(c));
    }
    ids_.erase(ids_.begin() + static_cast<std::ptrdiff_t>(c));
    return outcome;
  }

  // The generators form a valid stabilizer group: mutually commuting,
  // independent, real signs.
  bool valid() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].phase % 2 != 0) return false;
      for (std::size_t j = i + 1; j < rows_.size(); ++j)
        if (!rows_[i].commutes_with(rows_[j])) return false;
    }
    auto reduced = rows_;
    return rref_bits(reduced) == rows_.size();
  }

  // Canonical reduced form; two tableaus generate the same signed group iff
  // their canonical forms are identical.
  std::vector<PauliRow> canonical_form() const {
    auto rows = rows_;
    rref_bits(rows);
    return rows;
  }

  friend bool stabilizer_equal(const StabilizerTableau& a, const StabilizerTableau& b) {
    if (a.ids_ != b.ids_) throw SizeMismatch("stabilizer_equal: qubit id sets differ");
    return a.canonical_form() == b.canonical_form();
  }

  const std::vector<PauliRow>& generators() const { return rows_; }

 private:
  std::size_t col(int q) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), q);
    if (it == ids_.end() || *it != q) throw UnknownQubit(q);
    return static_cast<std::size_t>(it - ids_.begin());
  }

  // Phase exponent of the canonical post-measurement generator (-1)^m B.
  // Y is encoded as bits (1,1) with phase 0 in our convention.
  static std::uint8_t canonical_phase(Pauli, int outcome) {
    return outcome ? 2 : 0;
  }

  // RREF over the 2n-bit (x|z) vectors with sign tracking; returns rank.
  static std::size_t rref_bits(std::vector<PauliRow>& rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows[0].x.size();
    std::size_t r = 0;
    for (std::size_t cbit = 0; cbit < 2 * n && r < rows.size(); ++cbit) {
      auto bit = [&](const PauliRow& row) -> std::uint8_t {
        return cbit < n ? row.x[cbit] : row.z[cbit - n];
      };
      std::size_t pivot = r;
      while (pivot < rows.size() && !bit(rows[pivot])) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[r], rows[pivot]);
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != r && bit(rows[i])) rows[i].mult(rows[r]);
      ++r;
    }
    return r;
  }

  // Finds generator indices whose bitwise product equals the target bits.
  std::optional<std::vector<std::size_t>> solve_subset(const PauliRow& target) const {
    const std::size_t n = ids_.size();
    struct Tracked {
      std::vector<std::uint8_t> bits;
      std::vector<std::uint8_t> members;
    };
    std::vector<Tracked> work;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Tracked t;
      t.bits.reserve(2 * n);
      for (std::size_t j = 0; j < n; ++j) t.bits.push_back(rows_[i].x[j]);
      for (std::size_t j = 0; j < n; ++j) t.bits.push_back(rows_[i].z[j]);
      t.members.assign(rows_.size(), 0);
      t.members[i] = 1;
      work.push_back(std::move(t));
    }
    std::vector<std::uint8_t> want;
    for (std::size_t j = 0; j < n; ++j) want.push_back(target.x[j]);
    for (std::size_t j = 0; j < n; ++j) want.push_back(target.z[j]);
    std::vector<std::uint8_t> acc_members(rows_.size(), 0);

    std::size_t r = 0;
    for (std::size_t cbit = 0; cbit < 2 * n && r < work.size(); ++cbit) {
      std::size_t pivot = r;
      while (pivot < work.size() && !work[pivot].bits[cbit]) ++pivot;
      if (pivot == work.size()) continue;
      std::swap(work[r], work[pivot]);
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (i == r || !work[i].bits[cbit]) continue;
        for (std::size_t b = 0; b < 2 * n; ++b) work[i].bits[b] ^= work[r].bits[b];
        for (std::size_t b = 0; b < rows_.size(); ++b) work[i].members[b] ^= work[r].members[b];
      }
      ++r;
    }
    // Back-substitute the target against the reduced rows.
    std::vector<std::uint8_t> cur = want;
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t lead = 0;
      while (lead < 2 * n && !work[i].bits[lead]) ++lead;
      if (lead < 2 * n && cur[lead]) {
        for (std::size_t b = 0; b < 2 * n; ++b) cur[b] ^= work[i].bits[b];
        for (std::size_t b = 0; b < rows_.size(); ++b) acc_members[b] ^= work[i].members[b];
      }
    }
    for (auto b : cur)
      if (b) return std::nullopt;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (acc_members[i]) subset.push_back(i);
    if (subset.empty()) return std::nullopt;
    return subset;
  }

  std::vector<int> ids_;
  std::vector<PauliRow> rows_;
};

}  // namespace gsd
