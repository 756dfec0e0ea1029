// Copyright 2026 The eaqecc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eaqecc/gf2.hpp"

#include <optional>
#include <stdexcept>

namespace eaqecc::gf2 {

namespace {

std::optional<uint32_t> lowest_set(const BitVec& v) {
  for (uint32_t w = 0; w < v.word_count(); ++w) {
    uint64_t word = v.word(w);
    if (word != 0) {
      return w * BitVec::kWordBits + static_cast<uint32_t>(std::countr_zero(word));
    }
  }
  return std::nullopt;
}

bool symplectic_product(const BitVec& a, const BitVec& b, uint32_t n) {
  bool acc = false;
  for (uint32_t q = 0; q < n; ++q) {
    acc ^= (a.get(q) && b.get(n + q)) ^ (a.get(n + q) && b.get(q));
  }
  return acc;
}

}  // namespace

bool Echelon::add(BitVec row) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (row.get(pivots_[i])) {
      row ^= rows_[i];
    }
  }
  auto pivot = lowest_set(row);
  if (!pivot) {
    return false;
  }
  // Keep full RREF: clear the new pivot column in existing rows.
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].get(*pivot)) {
      rows_[i] ^= row;
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(*pivot);
  return true;
}

bool Echelon::contains(BitVec row) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (row.get(pivots_[i])) {
      row ^= rows_[i];
    }
  }
  return row.none();
}

uint32_t rank(const std::vector<BitVec>& rows) {
  Echelon e;
  for (const auto& r : rows) {
    e.add(r);
  }
  return e.rank();
}

bool in_span(const std::vector<BitVec>& basis, const BitVec& v) {
  Echelon e;
  for (const auto& r : basis) {
    e.add(r);
  }
  return e.contains(v);
}

std::vector<BitVec> kernel(const std::vector<BitVec>& rows, uint32_t width) {
  // Row-reduce to full RREF, remembering pivot columns.
  std::vector<BitVec> mat = rows;
  std::vector<uint32_t> pivot_col;
  for (uint32_t col = 0; col < width; ++col) {
    size_t target = pivot_col.size();
    size_t found = mat.size();
    for (size_t r = target; r < mat.size(); ++r) {
      if (mat[r].get(col)) {
        found = r;
        break;
      }
    }
    if (found == mat.size()) {
      continue;
    }
    std::swap(mat[target], mat[found]);
    for (size_t r = 0; r < mat.size(); ++r) {
      if (r != target && mat[r].get(col)) {
        mat[r] ^= mat[target];
      }
    }
    pivot_col.push_back(col);
  }

  std::vector<bool> is_pivot(width, false);
  for (uint32_t c : pivot_col) {
    is_pivot[c] = true;
  }

  std::vector<BitVec> basis;
  for (uint32_t free_col = 0; free_col < width; ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    BitVec v(width);
    v.set(free_col, true);
    for (size_t i = 0; i < pivot_col.size(); ++i) {
      if (mat[i].get(free_col)) {
        v.set(pivot_col[i], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BitVec> left_kernel(const std::vector<BitVec>& rows) {
  uint32_t m = static_cast<uint32_t>(rows.size());
  std::vector<BitVec> mat = rows;
  std::vector<BitVec> combo;
  combo.reserve(m);
  for (uint32_t i = 0; i < m; ++i) {
    BitVec c(m);
    c.set(i, true);
    combo.push_back(std::move(c));
  }
  std::vector<BitVec> result;
  for (size_t i = 0; i < mat.size(); ++i) {
    auto pivot = lowest_set(mat[i]);
    if (!pivot) {
      result.push_back(combo[i]);
      continue;
    }
    for (size_t j = i + 1; j < mat.size(); ++j) {
      if (mat[j].get(*pivot)) {
        mat[j] ^= mat[i];
        combo[j] ^= combo[i];
      }
    }
  }
  return result;
}

BitVec symplectic_row(const PauliOperator& p) {
  uint32_t n = p.n_qubits();
  BitVec row(2 * n);
  for (uint32_t q = 0; q < n; ++q) {
    if (p.x_bit(q)) {
      row.set(q, true);
    }
    if (p.z_bit(q)) {
      row.set(n + q, true);
    }
  }
  return row;
}

BitVec symplectic_dual_row(const PauliOperator& p) {
  uint32_t n = p.n_qubits();
  BitVec row(2 * n);
  for (uint32_t q = 0; q < n; ++q) {
    if (p.z_bit(q)) {
      row.set(q, true);
    }
    if (p.x_bit(q)) {
      row.set(n + q, true);
    }
  }
  return row;
}

PauliOperator pauli_from_symplectic(const BitVec& row) {
  if (row.size() % 2 != 0) {
    throw std::invalid_argument("pauli_from_symplectic: odd width");
  }
  uint32_t n = row.size() / 2;
  BitVec x(n);
  BitVec z(n);
  for (uint32_t q = 0; q < n; ++q) {
    if (row.get(q)) {
      x.set(q, true);
    }
    if (row.get(n + q)) {
      z.set(q, true);
    }
  }
  return PauliOperator(std::move(x), std::move(z), false);
}

std::vector<PauliOperator> complete_logicals(uint32_t n_qubits,
                                             const std::vector<PauliOperator>& generators) {
  uint32_t n = n_qubits;
  uint32_t n_gens = static_cast<uint32_t>(generators.size());
  if (n_gens > n) {
    throw std::invalid_argument("complete_logicals: more generators than qubits");
  }
  uint32_t k = n - n_gens;

  std::vector<BitVec> duals;
  duals.reserve(n_gens);
  Echelon gen_span;
  uint32_t gen_rank = 0;
  for (const auto& g : generators) {
    if (g.n_qubits() != n) {
      throw std::invalid_argument("complete_logicals: generator length mismatch");
    }
    duals.push_back(symplectic_dual_row(g));
    gen_rank += gen_span.add(symplectic_row(g)) ? 1 : 0;
  }
  if (gen_rank != n_gens) {
    throw std::invalid_argument("complete_logicals: generators not independent");
  }

  // Normalizer span = kernel of the commutation map, dimension n + k.
  std::vector<BitVec> normalizer = kernel(duals, 2 * n);

  // Extend the generator rows by coset representatives of N(S)/S.
  std::vector<BitVec> reps;
  for (const auto& v : normalizer) {
    if (reps.size() == 2 * static_cast<size_t>(k)) {
      break;
    }
    if (gen_span.add(v)) {
      reps.push_back(v);
    }
  }
  if (reps.size() != 2 * static_cast<size_t>(k)) {
    throw std::logic_error("complete_logicals: failed to extend to normalizer basis");
  }

  // Symplectic Gram-Schmidt: pair the representatives into hyperbolic
  // (Xbar_i, Zbar_i) pairs and orthogonalize the remainder against each pair.
  std::vector<PauliOperator> logicals;
  std::vector<BitVec> pool = reps;
  while (!pool.empty()) {
    BitVec u = pool.front();
    pool.erase(pool.begin());
    size_t partner = pool.size();
    for (size_t i = 0; i < pool.size(); ++i) {
      if (symplectic_product(u, pool[i], n)) {
        partner = i;
        break;
      }
    }
    if (partner == pool.size()) {
      throw std::logic_error("complete_logicals: no symplectic partner found");
    }
    BitVec v = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    for (auto& w : pool) {
      if (symplectic_product(w, v, n)) {
        w ^= u;
      }
      if (symplectic_product(w, u, n)) {
        w ^= v;
      }
    }
    logicals.push_back(pauli_from_symplectic(u));
    logicals.push_back(pauli_from_symplectic(v));
  }
  return logicals;
}

}  // namespace eaqecc::gf2
