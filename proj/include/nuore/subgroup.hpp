#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "nuore/errors.hpp"
#include "nuore/numeric.hpp"

namespace nuore {

// Integer kernel of a rows x cols matrix: a lattice basis of
// { x in Z^cols : M x = 0 }, computed by column reduction with a carried
// transform. Entries are exact.
inline std::vector<std::vector<Int>> integer_kernel(
    const std::vector<std::vector<Int>>& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::vector<Int>> c(cols, std::vector<Int>(rows, 0));
  std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    u[j][j] = 1;
    for (std::size_t r = 0; r < rows; ++r) c[j][r] = m[r][j];
  }
  std::vector<bool> active(cols, true);
  for (std::size_t r = 0; r < rows; ++r) {
    for (;;) {
      std::size_t best = cols;
      int nonzero = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!active[j] || c[j][r] == 0) continue;
        ++nonzero;
        if (best == cols || boost::multiprecision::abs(c[j][r]) <
                                boost::multiprecision::abs(c[best][r]))
          best = j;
      }
      if (nonzero <= 1) {
        if (nonzero == 1) active[best] = false;  // pivot column for this row
        break;
      }
      for (std::size_t j = 0; j < cols; ++j) {
        if (!active[j] || j == best || c[j][r] == 0) continue;
        Int q = c[j][r] / c[best][r];
        for (std::size_t k = r; k < rows; ++k) c[j][k] -= q * c[best][k];
        for (std::size_t k = 0; k < cols; ++k) u[j][k] -= q * u[best][k];
      }
    }
  }
  std::vector<std::vector<Int>> kernel;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!active[j]) continue;
    bool zero = true;
    for (std::size_t r = 0; r < rows && zero; ++r) zero = c[j][r] == 0;
    if (zero) kernel.push_back(u[j]);
  }
  return kernel;
}

// An additive subgroup of Z_{m_0} x ... x Z_{m_{N-1}}, stored as the column
// Hermite form of its preimage lattice in Z^N. The moduli vectors are part of
// the lattice, so the form is square and triangular: column r has its first
// nonzero entry (the positive pivot) at row r.
//
// Two consequences are used throughout:
//  * membership is a triangular divisibility walk,
//  * the columns with pivot row >= t have exact zeros in rows < t, and they
//    generate the subgroup of members vanishing on the first t coordinates
//    (any member with zero prefix lifts, after subtracting moduli vectors, to
//    a lattice vector with an exactly zero prefix).
class AbelianSubgroup {
 public:
  explicit AbelianSubgroup(std::vector<I64> moduli) : moduli_(std::move(moduli)) {
    for (I64 m : moduli_)
      if (m < 1) throw BadDescriptorError("subgroup moduli must be positive");
    std::vector<std::vector<Int>> gens;
    rebuild(gens);
  }

  std::size_t dimension() const { return moduli_.size(); }
  const std::vector<I64>& moduli() const { return moduli_; }

  bool contains(const std::vector<I64>& v) const {
    check_size(v);
    std::vector<Int> w(v.begin(), v.end());
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (w[r] == 0) continue;
      if (w[r] % cols_[r][r] != 0) return false;
      Int q = w[r] / cols_[r][r];
      for (std::size_t k = r; k < w.size(); ++k) w[k] -= q * cols_[r][k];
    }
    return true;
  }

  // Returns true if the subgroup grew.
  bool insert(const std::vector<I64>& v) {
    check_size(v);
    if (contains(v)) return false;
    std::vector<std::vector<Int>> gens;
    gens.reserve(cols_.size() + 1);
    for (const auto& c : cols_) gens.push_back(c);
    gens.emplace_back(v.begin(), v.end());
    rebuild(gens);
    return true;
  }

  Int order() const {
    Int all = 1;
    for (I64 m : moduli_) all *= m;
    Int det = 1;
    for (std::size_t r = 0; r < cols_.size(); ++r) det *= cols_[r][r];
    return all / det;
  }

  // Nonzero generators reduced into the ambient group.
  std::vector<std::vector<I64>> generator_columns() const {
    return reduce_columns(0);
  }

  // Generators of { v in S : v_0 = ... = v_{t-1} = 0 }.
  std::vector<std::vector<I64>> generators_vanishing_before(std::size_t t) const {
    return reduce_columns(t);
  }

  // All members, sorted; throws TooLargeError beyond the cap.
  std::vector<std::vector<I64>> enumerate(std::size_t cap = 1 << 16) const {
    if (order() > Int(cap)) throw TooLargeError("subgroup too large to enumerate");
    std::set<std::vector<I64>> seen;
    seen.insert(std::vector<I64>(moduli_.size(), 0));
    auto gens = generator_columns();
    std::vector<std::vector<I64>> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
      auto v = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        std::vector<I64> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
          w[i] = mod_reduce(v[i] + g[i], moduli_[i]);
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    return {seen.begin(), seen.end()};
  }

 private:
  void check_size(const std::vector<I64>& v) const {
    if (v.size() != moduli_.size())
      throw BadDescriptorError("subgroup vector has wrong dimension");
  }

  std::vector<std::vector<I64>> reduce_columns(std::size_t first_row) const {
    std::vector<std::vector<I64>> out;
    for (std::size_t r = first_row; r < cols_.size(); ++r) {
      std::vector<I64> v(moduli_.size(), 0);
      bool nonzero = false;
      for (std::size_t k = 0; k < moduli_.size(); ++k) {
        Int red = cols_[r][k] % moduli_[k];
        if (red < 0) red += moduli_[k];
        v[k] = static_cast<I64>(red);
        nonzero = nonzero || v[k] != 0;
      }
      if (nonzero) out.push_back(std::move(v));
    }
    return out;
  }

  void rebuild(std::vector<std::vector<Int>>& gens) {
    const std::size_t n = moduli_.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> e(n, 0);
      e[i] = moduli_[i];
      gens.push_back(std::move(e));
    }
    cols_.assign(n, {});
    std::vector<std::vector<Int>*> active;
    for (auto& g : gens) active.push_back(&g);
    for (std::size_t r = 0; r < n; ++r) {
      for (;;) {
        std::vector<Int>* best = nullptr;
        int nonzero = 0;
        for (auto* c : active) {
          if ((*c)[r] == 0) continue;
          ++nonzero;
          if (!best || boost::multiprecision::abs((*c)[r]) <
                           boost::multiprecision::abs((*best)[r]))
            best = c;
        }
        if (nonzero <= 1) {
          // The moduli vector for row r guarantees a pivot exists.
          if ((*best)[r] < 0)
            for (auto& x : *best) x = -x;
          cols_[r] = *best;
          active.erase(std::find(active.begin(), active.end(), best));
          break;
        }
        for (auto* c : active) {
          if (c == best || (*c)[r] == 0) continue;
          Int q = (*c)[r] / (*best)[r];
          for (std::size_t k = r; k < n; ++k) (*c)[k] -= q * (*best)[k];
        }
      }
    }
  }

  std::vector<I64> moduli_;
  std::vector<std::vector<Int>> cols_;  // cols_[r] has pivot at row r
};

// Basis of { x in Q^cols : M x = 0 } by Gauss-Jordan elimination; one basis
// vector per free column, with 1 at the free column and the negated pivot-row
// entries elsewhere.
inline std::vector<std::vector<Rat>> rational_nullspace(std::vector<std::vector<Rat>> m,
                                                        std::size_t cols) {
  for (auto& row : m)
    if (row.size() != cols) throw Error("internal: ragged nullspace matrix");
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rat inv = m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] /= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rat>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    std::vector<Rat> v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nuore
