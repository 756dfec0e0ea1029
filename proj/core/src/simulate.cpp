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

#include "eaqecc/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "eaqecc/gf2.hpp"
#include "eaqecc/rng.hpp"

namespace eaqecc {

namespace {

// Errors are enumerated by a base-4 index with digit order matching string
// position (qubit 0 = most significant digit) and digit values 0..3 =
// I,X,Y,Z; ascending index order is exactly ascending lexicographic order
// of the error strings.
PauliOperator error_from_index(uint64_t index, uint32_t n_send, uint32_t n_ext) {
  BitVec x(n_ext);
  BitVec z(n_ext);
  for (uint32_t q = 0; q < n_send; ++q) {
    uint32_t digit = (index >> (2 * (n_send - 1 - q))) & 3U;
    if (digit == 1 || digit == 2) {
      x.set(q, true);
    }
    if (digit == 2 || digit == 3) {
      z.set(q, true);
    }
  }
  return PauliOperator(std::move(x), std::move(z), false);
}

double error_prob_from_index(uint64_t index, uint32_t n_send, const PauliChannel& ch) {
  double p = 1.0;
  for (uint32_t q = 0; q < n_send; ++q) {
    p *= ch.p[(index >> (2 * q)) & 3U];
  }
  return p;
}

struct Cell {
  double prob = 0.0;
  uint64_t rep = UINT64_MAX;  // first (lex-smallest) error index seen
};

}  // namespace

const PauliOperator* DecoderTable::correction(uint64_t syndrome_bits) const {
  if (mode_ == DecodeMode::ExactML) {
    return &dense_[syndrome_bits];
  }
  auto it = sparse_.find(syndrome_bits);
  return it == sparse_.end() ? nullptr : &it->second;
}

std::optional<PauliOperator> DecoderTable::correction_on_sent(uint64_t syndrome_bits,
                                                              uint32_t n_send) const {
  const PauliOperator* c = correction(syndrome_bits);
  if (c == nullptr) {
    return std::nullopt;
  }
  return c->restricted(0, n_send);
}

DecoderTable build_decoder(const EACode& code, const PauliChannel& ch, DecodeMode mode,
                           uint32_t w_max) {
  const uint32_t n_send = code.n_send;
  const uint32_t n_ext = code.n_extended();
  const uint32_t n_gens = static_cast<uint32_t>(code.extended.generators().size());
  const uint32_t k = code.k;
  const uint64_t n_syndromes = uint64_t{1} << n_gens;
  const uint64_t n_classes = uint64_t{1} << (2 * k);

  DecoderTable table;
  table.mode_ = mode;
  table.w_max_ = mode == DecodeMode::BoundedWeight ? w_max : n_send;

  auto assign = [&](std::unordered_map<uint64_t, Cell>& cells, uint64_t index) {
    PauliOperator err = error_from_index(index, n_send, n_ext);
    uint64_t synd = syndrome_bits(code.extended, err);
    uint64_t sig = logical_signature(code.extended, err);
    Cell& cell = cells[synd * n_classes + sig];
    cell.prob += error_prob_from_index(index, n_send, ch);
    cell.rep = std::min(cell.rep, index);
  };

  std::unordered_map<uint64_t, Cell> cells;
  if (mode == DecodeMode::ExactML) {
    if (n_send > kExactDecoderMaxQubits) {
      throw std::out_of_range("build_decoder: exact mode capped at n_send <= 10");
    }
    cells.reserve(uint64_t{1} << (2 * n_send));
    for (uint64_t index = 0; index < (uint64_t{1} << (2 * n_send)); ++index) {
      assign(cells, index);
    }
  } else {
    if (n_send > kBoundedDecoderMaxQubits) {
      throw std::out_of_range("build_decoder: bounded mode capped at n_send <= 14");
    }
    // All errors of weight <= w_max, via support subsets.
    std::vector<uint32_t> support;
    auto recurse = [&](auto&& self, uint32_t next, uint64_t index) -> void {
      assign(cells, index);
      if (support.size() == w_max) {
        return;
      }
      for (uint32_t q = next; q < n_send; ++q) {
        support.push_back(q);
        for (uint64_t d = 1; d <= 3; ++d) {
          self(self, q + 1, index | (d << (2 * (n_send - 1 - q))));
        }
        support.pop_back();
      }
    };
    recurse(recurse, 0, 0);
  }

  // Per syndrome, pick the class with the largest mass; break ties toward
  // the lexicographically smallest representative.
  std::unordered_map<uint64_t, Cell> winners;
  winners.reserve(cells.size());
  for (const auto& [key, cell] : cells) {
    uint64_t synd = key / n_classes;
    auto [it, fresh] = winners.try_emplace(synd, cell);
    if (!fresh) {
      Cell& best = it->second;
      if (cell.prob > best.prob || (cell.prob == best.prob && cell.rep < best.rep)) {
        best = cell;
      }
    }
  }

  if (mode == DecodeMode::ExactML) {
    table.dense_.assign(n_syndromes, PauliOperator::identity(n_ext));
    for (const auto& [synd, cell] : winners) {
      table.dense_[synd] = error_from_index(cell.rep, n_send, n_ext);
    }
    if (winners.size() != n_syndromes) {
      throw std::logic_error("build_decoder: syndrome map not surjective");
    }
  } else {
    table.sparse_.reserve(winners.size());
    for (const auto& [synd, cell] : winners) {
      table.sparse_.emplace(synd, error_from_index(cell.rep, n_send, n_ext));
    }
  }
  return table;
}

DecoderTable build_random_decoder(const EACode& code, uint64_t seed) {
  const uint32_t n_send = code.n_send;
  const uint32_t n_ext = code.n_extended();
  const uint32_t n_gens = static_cast<uint32_t>(code.extended.generators().size());
  const uint64_t n_syndromes = uint64_t{1} << n_gens;
  if (n_send > kExactDecoderMaxQubits) {
    throw std::out_of_range("build_random_decoder: n_send <= 10");
  }

  // Reservoir-sample a uniform member of each syndrome fiber.
  std::vector<uint64_t> counts(n_syndromes, 0);
  std::vector<uint64_t> choice(n_syndromes, 0);
  PhiloxRng rng(seed);
  for (uint64_t index = 0; index < (uint64_t{1} << (2 * n_send)); ++index) {
    PauliOperator err = error_from_index(index, n_send, n_ext);
    uint64_t synd = syndrome_bits(code.extended, err);
    counts[synd] += 1;
    if (rng.next_below(counts[synd]) == 0) {
      choice[synd] = index;
    }
  }

  DecoderTable table;
  table.mode_ = DecodeMode::ExactML;
  table.w_max_ = n_send;
  table.dense_.reserve(n_syndromes);
  for (uint64_t synd = 0; synd < n_syndromes; ++synd) {
    if (counts[synd] == 0) {
      throw std::logic_error("build_random_decoder: syndrome map not surjective");
    }
    table.dense_.push_back(error_from_index(choice[synd], n_send, n_ext));
  }
  return table;
}

double exact_fail_prob(const EACode& code, const PauliChannel& ch, const DecoderTable& decoder) {
  const uint32_t n_send = code.n_send;
  if (n_send > kExactDecoderMaxQubits) {
    throw std::out_of_range("exact_fail_prob: n_send <= 10");
  }
  const uint32_t n_ext = code.n_extended();
  double fail = 0.0;
  double comp = 0.0;  // Kahan compensation
  for (uint64_t index = 0; index < (uint64_t{1} << (2 * n_send)); ++index) {
    PauliOperator err = error_from_index(index, n_send, n_ext);
    uint64_t synd = syndrome_bits(code.extended, err);
    const PauliOperator* corr = decoder.correction(synd);
    bool failed;
    if (corr == nullptr) {
      failed = true;
    } else {
      failed = logical_signature(code.extended, multiply(*corr, err)) != 0;
    }
    if (failed) {
      double y = error_prob_from_index(index, n_send, ch) - comp;
      double t = fail + y;
      comp = (t - fail) - y;
      fail = t;
    }
  }
  return fail;
}

namespace {

uint64_t run_trials(uint64_t lo, uint64_t hi, uint64_t seed,
                    const std::function<bool(PhiloxRng&)>& trial_fails) {
  uint64_t failures = 0;
  for (uint64_t t = lo; t < hi; ++t) {
    PhiloxRng rng(seed, t);
    failures += trial_fails(rng) ? 1 : 0;
  }
  return failures;
}

uint64_t parallel_trials(uint64_t trials, uint64_t seed, uint32_t workers,
                         const std::function<bool(PhiloxRng&)>& trial_fails) {
  if (workers <= 1 || trials < 2 * workers) {
    return run_trials(0, trials, seed, trial_fails);
  }
  std::vector<uint64_t> counts(workers, 0);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  uint64_t chunk = trials / workers;
  for (uint32_t w = 0; w < workers; ++w) {
    uint64_t lo = w * chunk;
    uint64_t hi = w + 1 == workers ? trials : lo + chunk;
    threads.emplace_back(
        [&, lo, hi, w] { counts[w] = run_trials(lo, hi, seed, trial_fails); });
  }
  for (auto& t : threads) {
    t.join();
  }
  uint64_t total = 0;
  for (uint64_t c : counts) {
    total += c;
  }
  return total;
}

SimResult make_result(const EACode& code, const ChannelVariant& ch, uint64_t trials,
                      uint64_t failures, uint64_t seed) {
  SimResult r;
  r.trials = trials;
  r.failures = failures;
  r.p_fail = static_cast<double>(failures) / static_cast<double>(trials);
  r.ci95 = wilson_ci95(failures, trials);
  r.seed = seed;
  r.n = code.n_send;
  r.k = code.k;
  r.m = code.m;
  r.a = code.a;
  r.channel = channel_descriptor(ch);
  return r;
}

}  // namespace

SimResult monte_carlo(const EACode& code, const ChannelVariant& ch, uint64_t trials,
                      uint64_t seed, uint32_t workers) {
  if (trials < 1) {
    throw std::invalid_argument("monte_carlo: trials >= 1");
  }
  uint64_t failures = 0;
  if (const auto* pauli = std::get_if<PauliChannel>(&ch)) {
    DecodeMode mode = code.n_send <= kExactDecoderMaxQubits ? DecodeMode::ExactML
                                                            : DecodeMode::BoundedWeight;
    DecoderTable table = build_decoder(code, *pauli, mode);
    failures = parallel_trials(trials, seed, workers, [&](PhiloxRng& rng) {
      PauliOperator err =
          sample_error(*pauli, code.n_send, rng).embedded(code.n_extended(), 0);
      uint64_t synd = syndrome_bits(code.extended, err);
      const PauliOperator* corr = table.correction(synd);
      if (corr == nullptr) {
        return true;
      }
      return logical_signature(code.extended, multiply(*corr, err)) != 0;
    });
  } else {
    const auto& erasure = std::get<ErasureChannel>(ch);
    failures = parallel_trials(trials, seed, workers, [&](PhiloxRng& rng) {
      BitVec erased = sample_erasure(erasure, code.n_send, rng);
      return erasure_decode_failure(code, erased);
    });
  }
  return make_result(code, ch, trials, failures, seed);
}

SimResult monte_carlo(const TeleportCode& code, const PauliChannel& ch, uint64_t trials,
                      uint64_t seed, uint32_t workers) {
  if (trials < 1) {
    throw std::invalid_argument("monte_carlo: trials >= 1");
  }
  // The 16 label errors are few enough to classify exactly up front.
  std::array<bool, 16> fails{};
  const char kinds[] = {'I', 'X', 'Y', 'Z'};
  for (int t0 = 0; t0 < 4; ++t0) {
    for (int t1 = 0; t1 < 4; ++t1) {
      PauliOperator err = multiply(PauliOperator::single(2, 0, kinds[t0]),
                                   PauliOperator::single(2, 1, kinds[t1]));
      fails[static_cast<size_t>(t0 * 4 + t1)] = !code.corrects(err);
    }
  }
  auto kind_index = [](const PauliOperator& err, uint32_t q) {
    bool x = err.x_bit(q);
    bool z = err.z_bit(q);
    return x ? (z ? 2 : 1) : (z ? 3 : 0);
  };
  uint64_t failures = parallel_trials(trials, seed, workers, [&](PhiloxRng& rng) {
    PauliOperator err = sample_error(ch, 2, rng);
    return fails[static_cast<size_t>(kind_index(err, 0) * 4 + kind_index(err, 1))];
  });

  SimResult r;
  r.trials = trials;
  r.failures = failures;
  r.p_fail = static_cast<double>(failures) / static_cast<double>(trials);
  r.ci95 = wilson_ci95(failures, trials);
  r.seed = seed;
  r.n = code.n_send();
  r.k = code.k();
  r.m = code.m();
  r.a = code.a();
  r.channel = channel_descriptor(ChannelVariant{ch});
  return r;
}

bool erasure_decode_failure(const EACode& code, const BitVec& erased) {
  if (erased.size() != code.n_send) {
    throw std::invalid_argument("erasure_decode_failure: erased set length mismatch");
  }
  const auto& gens = code.extended.generators();
  const uint32_t n_gens = static_cast<uint32_t>(gens.size());
  const uint32_t n_ext = code.n_extended();

  // dim(V ∩ N): V is spanned by X_q, Z_q over erased q; subtract the rank
  // of the syndrome map restricted to V.
  std::vector<BitVec> syndrome_rows;
  uint32_t v_dim = 0;
  for (uint32_t q = 0; q < code.n_send; ++q) {
    if (!erased.get(q)) {
      continue;
    }
    v_dim += 2;
    for (char kind : {'X', 'Z'}) {
      PauliOperator p = PauliOperator::single(n_ext, q, kind);
      BitVec row(n_gens);
      for (uint32_t i = 0; i < n_gens; ++i) {
        if (!commutes(gens[i], p)) {
          row.set(i, true);
        }
      }
      syndrome_rows.push_back(std::move(row));
    }
  }
  if (v_dim == 0) {
    return false;
  }
  uint32_t dim_v_cap_n = v_dim - gf2::rank(syndrome_rows);

  // dim(V ∩ S): generator combinations vanishing outside the erased set.
  std::vector<BitVec> outside_rows;
  outside_rows.reserve(n_gens);
  for (const auto& g : gens) {
    BitVec row(2 * n_ext);
    for (uint32_t q = 0; q < n_ext; ++q) {
      bool erased_q = q < code.n_send && erased.get(q);
      if (erased_q) {
        continue;
      }
      if (g.x_bit(q)) {
        row.set(q, true);
      }
      if (g.z_bit(q)) {
        row.set(n_ext + q, true);
      }
    }
    outside_rows.push_back(std::move(row));
  }
  uint32_t dim_v_cap_s = n_gens - gf2::rank(outside_rows);

  return dim_v_cap_n > dim_v_cap_s;
}

bool erasure_decode_failure_enum(const EACode& code, const BitVec& erased) {
  if (erased.size() != code.n_send) {
    throw std::invalid_argument("erasure_decode_failure_enum: erased set length mismatch");
  }
  std::vector<uint32_t> positions;
  for (uint32_t q = 0; q < code.n_send; ++q) {
    if (erased.get(q)) {
      positions.push_back(q);
    }
  }
  if (positions.size() > 12) {
    throw std::out_of_range("erasure_decode_failure_enum: more than 12 erased positions");
  }
  const uint32_t n_ext = code.n_extended();
  for (uint64_t pattern = 1; pattern < (uint64_t{1} << (2 * positions.size())); ++pattern) {
    BitVec x(n_ext);
    BitVec z(n_ext);
    for (size_t i = 0; i < positions.size(); ++i) {
      uint32_t digit = (pattern >> (2 * i)) & 3U;
      if (digit == 1 || digit == 2) {
        x.set(positions[i], true);
      }
      if (digit == 2 || digit == 3) {
        z.set(positions[i], true);
      }
    }
    PauliOperator p(std::move(x), std::move(z), false);
    if (syndrome_bits(code.extended, p) == 0 && logical_signature(code.extended, p) != 0) {
      return true;
    }
  }
  return false;
}

double appendix_fail_bound(const ChannelVariant& ch, uint32_t n, double rate, double delta) {
  double log2_bound;
  if (const auto* pauli = std::get_if<PauliChannel>(&ch)) {
    log2_bound = n * (entropy(choi(*pauli)) + 2.0 * rate - 2.0 + 2.0 * delta);
  } else {
    double eps = std::get<ErasureChannel>(ch).epsilon;
    log2_bound = 2.0 * n * (eps - 1.0 + rate + delta);
  }
  return std::min(1.0, std::exp2(log2_bound));
}

std::vector<SweepPoint> random_code_sweep(const std::vector<uint32_t>& ns, double rate,
                                          const ChannelVariant& ch, uint64_t trials,
                                          uint64_t seed, uint32_t n_codes, uint32_t workers,
                                          double delta) {
  if (rate < 0.0 || rate > 1.0) {
    throw std::invalid_argument("random_code_sweep: rate outside [0,1]");
  }
  if (n_codes < 1 || trials < 1) {
    throw std::invalid_argument("random_code_sweep: need codes >= 1 and trials >= 1");
  }
  std::vector<SweepPoint> points;
  points.reserve(ns.size());
  for (uint32_t n : ns) {
    uint32_t k = static_cast<uint32_t>(std::llround(rate * n));
    if (k > n) {
      throw std::invalid_argument("random_code_sweep: infeasible k");
    }
    bool is_pauli = std::holds_alternative<PauliChannel>(ch);
    if (is_pauli && n > kBoundedDecoderMaxQubits) {
      throw std::out_of_range("random_code_sweep: Pauli sweeps capped at n <= 14");
    }
    if (!is_pauli && n > 32) {
      throw std::out_of_range("random_code_sweep: erasure sweeps capped at n <= 32");
    }
    SweepPoint pt;
    pt.n = n;
    pt.k = k;
    pt.m = n - k;
    pt.a = 0;
    pt.rate = rate;
    pt.n_codes = n_codes;
    pt.trials_per_code = trials;
    pt.seed = seed;
    pt.channel = channel_descriptor(ch);
    pt.appendix_bound = appendix_fail_bound(ch, n, rate, delta);
    double sum_p = 0.0;
    for (uint32_t c = 0; c < n_codes; ++c) {
      uint64_t code_seed = derive_seed(seed, (static_cast<uint64_t>(n) << 20) | c);
      EACode code = random_ea(k, n - k, 0, code_seed);
      SimResult r = monte_carlo(code, ch, trials, derive_seed(code_seed, 1), workers);
      pt.total_trials += r.trials;
      pt.total_failures += r.failures;
      pt.per_code_p_fail.push_back(r.p_fail);
      sum_p += r.p_fail;
    }
    pt.p_fail = sum_p / n_codes;
    pt.ci95 = wilson_ci95(pt.total_failures, pt.total_trials);
    points.push_back(std::move(pt));
  }
  return points;
}

}  // namespace eaqecc
