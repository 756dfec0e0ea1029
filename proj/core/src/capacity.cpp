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

#include "eaqecc/capacity.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace eaqecc {

namespace {

constexpr double kLog2_3 = 1.584962500721156;
constexpr double kTol = 1e-12;

using Kraus = std::vector<Eigen::Matrix2cd>;

const Eigen::Matrix2cd& hermitian_sigma(int i) {
  static const std::array<Eigen::Matrix2cd, 4> mats = [] {
    std::array<Eigen::Matrix2cd, 4> m;
    std::complex<double> im(0, 1);
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, -im, im, 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return mats[static_cast<size_t>(i)];
}

Kraus kraus_from_pauli(const PauliChannel& ch) {
  Kraus ops;
  for (int i = 0; i < 4; ++i) {
    double p = ch.p[static_cast<size_t>(i)];
    if (p > 0.0) {
      ops.push_back(std::sqrt(p) * hermitian_sigma(i));
    }
  }
  return ops;
}

// Choi eigenvector v (indexed a*2+b, a = reference row) gives the Kraus
// operator K[b][a] = sqrt(2 mu) v[2a+b].
Kraus kraus_from_choi(const ChoiState& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho.matrix());
  Kraus ops;
  for (int j = 0; j < 4; ++j) {
    double mu = solver.eigenvalues()(j);
    if (mu < 1e-13) {
      continue;
    }
    Eigen::Vector4cd v = solver.eigenvectors().col(j);
    Eigen::Matrix2cd kraus;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        kraus(b, a) = std::sqrt(2.0 * mu) * v(2 * a + b);
      }
    }
    ops.push_back(kraus);
  }
  return ops;
}

double entropy2(const Eigen::Matrix2cd& rho) {
  double tr = rho.trace().real();
  double half_diff = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
  double r = std::sqrt(half_diff * half_diff + std::norm(rho(0, 1)));
  double l0 = tr / 2.0 + r;
  double l1 = tr / 2.0 - r;
  double h = 0.0;
  if (l0 > 1e-14) {
    h -= l0 * std::log2(l0);
  }
  if (l1 > 1e-14) {
    h -= l1 * std::log2(l1);
  }
  return h;
}

double entropy4(const Eigen::Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (int i = 0; i < 4; ++i) {
    double l = solver.eigenvalues()(i);
    if (l > 1e-14) {
      h -= l * std::log2(l);
    }
  }
  return h;
}

// S(rho) + S(L rho) - S((I (x) L)|phi><phi|) at the Bloch vector r.
double objective(const Kraus& kraus, const std::array<double, 3>& r) {
  Eigen::Matrix2cd rho = 0.5 * (hermitian_sigma(0) + r[0] * hermitian_sigma(1) +
                                r[1] * hermitian_sigma(2) + r[2] * hermitian_sigma(3));
  double s_in = entropy2(rho);

  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (const auto& kop : kraus) {
    out += kop * rho * kop.adjoint();
  }
  double s_out = entropy2(out);

  // Purification |phi> = sum_i sqrt(l_i) |i>_R |e_i>_A.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(rho);
  Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
  for (int i = 0; i < 2; ++i) {
    double l = std::max(0.0, eig.eigenvalues()(i));
    for (int a = 0; a < 2; ++a) {
      phi(i * 2 + a) = std::sqrt(l) * eig.eigenvectors().col(i)(a);
    }
  }
  Eigen::Matrix4cd joint = Eigen::Matrix4cd::Zero();
  for (const auto& kop : kraus) {
    Eigen::Matrix4cd big = Eigen::Matrix4cd::Zero();
    big.block<2, 2>(0, 0) = kop;
    big.block<2, 2>(2, 2) = kop;
    Eigen::Vector4cd v = big * phi;
    joint += v * v.adjoint();
  }
  double s_exchange = entropy4(joint);

  return s_in + s_out - s_exchange;
}

EaCapacityResult optimize(const Kraus& kraus) {
  std::array<double, 3> best_r{0.0, 0.0, 0.0};
  double best = -1e300;
  // Deterministic coarse grid, 21 points per axis.
  for (int ix = -10; ix <= 10; ++ix) {
    for (int iy = -10; iy <= 10; ++iy) {
      for (int iz = -10; iz <= 10; ++iz) {
        std::array<double, 3> r{ix / 10.0, iy / 10.0, iz / 10.0};
        if (r[0] * r[0] + r[1] * r[1] + r[2] * r[2] > 1.0 + kTol) {
          continue;
        }
        double v = objective(kraus, r);
        if (v > best) {
          best = v;
          best_r = r;
        }
      }
    }
  }
  // Compass search down to objective changes below 1e-8.
  double step = 0.05;
  while (step > 1e-9) {
    bool improved = false;
    for (int axis = 0; axis < 3; ++axis) {
      for (double dir : {-1.0, 1.0}) {
        std::array<double, 3> r = best_r;
        r[static_cast<size_t>(axis)] += dir * step;
        double norm2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        if (norm2 > 1.0) {
          double scale = 1.0 / std::sqrt(norm2);
          for (double& c : r) {
            c *= scale;
          }
        }
        double v = objective(kraus, r);
        if (v > best + 1e-12) {
          best = v;
          best_r = r;
          improved = true;
        }
      }
    }
    if (!improved) {
      step *= 0.5;
    }
  }
  EaCapacityResult result;
  result.optimizer_value = best;
  result.argmax_bloch = best_r;
  result.C_E = best;
  result.Q_E = best / 2.0;
  return result;
}

}  // namespace

EaCapacityResult ea_capacity(const PauliChannel& ch) {
  EaCapacityResult result = optimize(kraus_from_pauli(ch));
  // Unital shortcut: the maximum sits at rho = I/2, where dense coding
  // applies and C_E = 2 - S(choi). Return the closed form; keep the
  // optimizer value as the cross-check.
  double shortcut = 2.0 - entropy(choi(ch));
  result.shortcut_value = shortcut;
  result.C_E = shortcut;
  result.Q_E = shortcut / 2.0;
  return result;
}

EaCapacityResult ea_capacity(const ChoiState& rho) { return optimize(kraus_from_choi(rho)); }

EaCapacityResult ea_capacity(const ErasureChannel& ch) {
  EaCapacityResult result;
  result.C_E = 2.0 - 2.0 * ch.epsilon;
  result.Q_E = 1.0 - ch.epsilon;
  result.optimizer_value = result.C_E;
  result.argmax_bloch = {0.0, 0.0, 0.0};
  return result;
}

ErasureCapacities erasure_capacities(double eps) {
  if (eps < 0.0 || eps > 1.0) {
    throw std::invalid_argument("erasure_capacities: eps outside [0,1]");
  }
  ErasureCapacities c;
  c.C_E = 2.0 - 2.0 * eps;
  c.Q_E = 1.0 - eps;
  c.Q = std::max(1.0 - 2.0 * eps, 0.0);
  c.C = 1.0 - eps;
  c.E_Q = eps;
  c.E_C = Interval{1.0 - eps, 1.0};
  return c;
}

HammingCheck ea_hamming_ok(uint32_t n, uint32_t k, uint32_t t) {
  if (k > n) {
    throw std::invalid_argument("ea_hamming_ok: k > n");
  }
  if (n > 60) {
    throw std::out_of_range("ea_hamming_ok: n > 60 overflows exact arithmetic");
  }
  unsigned __int128 sum = 0;
  unsigned __int128 binom = 1;  // C(n, 0)
  unsigned __int128 pow3 = 1;
  for (uint32_t j = 0; j <= std::min(t, n); ++j) {
    if (j > 0) {
      binom = binom * (n - j + 1) / j;
      pow3 *= 3;
    }
    sum += pow3 * binom;
  }
  HammingCheck check;
  check.lhs = (static_cast<unsigned __int128>(1) << k) * sum;
  check.rhs = static_cast<unsigned __int128>(1) << (2 * n - k);
  check.ok = check.lhs <= check.rhs;
  check.slack_log2 = log2_u128(check.rhs) - log2_u128(check.lhs);
  return check;
}

double ea_hamming_rate(double p) {
  if (p < 0.0 || p > 0.75) {
    throw std::invalid_argument("ea_hamming_rate: p outside [0, 3/4]");
  }
  return 1.0 - (p / 2.0) * kLog2_3 - 0.5 * binary_entropy(p);
}

double hamming_family(double p, double M) {
  if (p < 0.0 || p > 0.75) {
    throw std::invalid_argument("hamming_family: p outside [0, 3/4]");
  }
  if (M < 1.0) {
    throw std::invalid_argument("hamming_family: M >= 1");
  }
  return 1.0 - (M / (M + 1.0)) * (p * kLog2_3 + binary_entropy(p));
}

double ea_hamming_with_entanglement(double p, double E) {
  if (p < 0.0 || p > 0.75) {
    throw std::invalid_argument("ea_hamming_with_entanglement: p outside [0, 3/4]");
  }
  if (E < 0.0) {
    throw std::invalid_argument("ea_hamming_with_entanglement: E < 0");
  }
  return 1.0 + E - p * kLog2_3 - binary_entropy(p);
}

double unassisted_hamming_rate(double p) {
  if (p < 0.0 || p > 0.75) {
    throw std::invalid_argument("unassisted_hamming_rate: p outside [0, 3/4]");
  }
  return 1.0 - p * kLog2_3 - binary_entropy(p);
}

double hashing_lower_bound(std::span<const double> bell_diag_probs) {
  return 1.0 - shannon_entropy(bell_diag_probs);
}

EntanglementLedger entanglement_ledger(std::optional<double> C, std::optional<double> Q,
                                       double C_E, double Q_E,
                                       std::optional<double> E_Q_exact,
                                       std::optional<Interval> E_C_exact) {
  if (std::abs(C_E - 2.0 * Q_E) > 1e-9) {
    throw std::invalid_argument("entanglement_ledger: C_E != 2 Q_E");
  }
  EntanglementLedger ledger;
  ledger.E_Q_random = 1.0 - Q_E;

  double eq_lo = 0.0;
  if (Q) {
    eq_lo = std::max(eq_lo, Q_E - *Q);
  }
  double eq_hi = 1.0 - Q_E;
  ledger.E_Q = E_Q_exact ? Interval{*E_Q_exact, *E_Q_exact} : Interval{eq_lo, eq_hi};

  double ec_lo = 0.0;
  if (C) {
    ec_lo = std::max(ec_lo, C_E - *C);
    if (Q && *C > 0.0) {
      ec_lo = std::max(ec_lo, (*Q / *C) * (C_E - *C));
    }
  }
  ec_lo = std::max(ec_lo, ledger.E_Q.lo - Q_E);
  double ec_hi = std::min(1.0, ledger.E_Q.hi + Q_E);
  ledger.E_C = E_C_exact ? *E_C_exact : Interval{ec_lo, ec_hi};

  auto push = [&](std::string id, std::string dir, double lhs, double rhs, bool satisfied,
                  std::string relation) {
    ledger.entries.push_back(
        {std::move(id), std::move(dir), lhs, rhs, satisfied, std::move(relation)});
  };

  if (Q) {
    double rhs = Q_E - *Q;
    push("bound2", "lower", ledger.E_Q.lo, rhs, ledger.E_Q.lo >= rhs - kTol,
         "E_Q >= Q_E - Q");
    push("sandwich-lower", "lower", *Q, Q_E - ledger.E_Q.hi, *Q >= Q_E - ledger.E_Q.hi - kTol,
         "Q >= Q_E - E_Q");
  }
  if (C) {
    double rhs = C_E - *C;
    push("bound2-classical", "lower", ledger.E_C.lo, rhs, ledger.E_C.lo >= rhs - kTol,
         "E_C >= C_E - C");
    if (Q && *C > 0.0) {
      double ratio_rhs = (*Q / *C) * (C_E - *C);
      push("lowerE_Cbound", "lower", ledger.E_C.lo, ratio_rhs,
           ledger.E_C.lo >= ratio_rhs - kTol, "E_C >= (Q/C)(C_E - C)");
    }
    if (Q && C_E > *C + kTol) {
      double rhs_q = ledger.E_C.hi / (C_E / *C - 1.0);
      push("sandwich-upper", "upper", *Q, rhs_q, *Q <= rhs_q + kTol,
           "Q <= E_C / (C_E/C - 1)");
    }
  }
  push("random-upper", "upper", ledger.E_Q.hi, 1.0 - Q_E,
       ledger.E_Q.hi <= 1.0 - Q_E + kTol, "E_Q <= 1 - Q_E");
  double worst_gap =
      std::max({ledger.E_C.hi - ledger.E_Q.lo, ledger.E_Q.hi - ledger.E_C.lo, 0.0});
  push("bound1", "upper", Q_E, worst_gap, Q_E >= worst_gap - 1e-9,
       "Q_E >= |E_C - E_Q|");
  return ledger;
}

ConjectureReport conjecture_report(std::optional<double> C, std::optional<double> Q,
                                   double C_E, double Q_E, Interval E_C, Interval E_Q) {
  ConjectureReport report;
  report.predicts_zero = Q_E < E_Q.lo - kTol;
  report.quantum_prediction =
      Interval{std::max(0.0, Q_E - E_Q.hi), std::max(0.0, Q_E - E_Q.lo)};
  if (C && C_E > *C + kTol && C_E >= E_C.lo - kTol) {
    report.classical_prediction = Interval{C_E - E_C.hi, C_E - E_C.lo};
  }
  if (Q) {
    double predicted_lo = report.predicts_zero ? 0.0 : report.quantum_prediction.lo;
    double predicted_hi = report.predicts_zero ? 0.0 : report.quantum_prediction.hi;
    report.consistent_quantum = *Q >= predicted_lo - 1e-9 && *Q <= predicted_hi + 1e-9;
    if (report.classical_prediction) {
      report.consistent_classical = report.classical_prediction->contains(*Q, 1e-9);
    }
    report.conjecture_consistent =
        *report.consistent_quantum &&
        (!report.consistent_classical || *report.consistent_classical);
  }
  return report;
}

CapacityLedger ledger_for_channel(const ParsedChannel& pc) {
  CapacityLedger ledger;
  ledger.channel = pc.descriptor;

  if (const auto* pauli = std::get_if<PauliChannel>(&pc.channel)) {
    ledger.capacity = ea_capacity(*pauli);
    ledger.C_E = ledger.capacity.C_E;
    ledger.Q_E = ledger.capacity.Q_E;
    ledger.unital = true;
    ledger.entanglement_breaking = is_entanglement_breaking(*pauli);
    ledger.hashing_bound = hashing_lower_bound(std::span<const double>(pauli->p));
    // Closed-form unassisted capacities are known for the I/Z-only family
    // (dephasing-like channels): C = 1, Q = 1 - H(p_Z).
    if (pauli->p[1] == 0.0 && pauli->p[2] == 0.0) {
      ledger.C = 1.0;
      ledger.Q = 1.0 - binary_entropy(pauli->p[3]);
    }
  } else {
    const auto& erasure = std::get<ErasureChannel>(pc.channel);
    ErasureCapacities caps = erasure_capacities(erasure.epsilon);
    ledger.capacity = ea_capacity(erasure);
    ledger.C_E = caps.C_E;
    ledger.Q_E = caps.Q_E;
    ledger.C = caps.C;
    ledger.Q = caps.Q;
  }

  std::optional<double> eq_exact;
  std::optional<Interval> ec_exact;
  if (std::holds_alternative<ErasureChannel>(pc.channel)) {
    ErasureCapacities caps = erasure_capacities(std::get<ErasureChannel>(pc.channel).epsilon);
    eq_exact = caps.E_Q;
    ec_exact = caps.E_C;
  }
  EntanglementLedger ent =
      entanglement_ledger(ledger.C, ledger.Q, ledger.C_E, ledger.Q_E, eq_exact, ec_exact);
  ledger.E_Q_bounds = ent.E_Q;
  ledger.E_C_bounds = ent.E_C;
  ledger.E_Q_random = ent.E_Q_random;
  ledger.bounds = std::move(ent.entries);

  if (ledger.entanglement_breaking) {
    ledger.bounds.push_back({"eb-CE", "upper", ledger.C_E, 1.0, ledger.C_E <= 1.0 + 1e-9,
                             "C_E <= 1 (entanglement breaking)"});
    ledger.bounds.push_back({"eb-QE", "upper", ledger.Q_E, 0.5, ledger.Q_E <= 0.5 + 1e-9,
                             "Q_E <= 1/2 (entanglement breaking)"});
  }

  ConjectureReport report = conjecture_report(ledger.C, ledger.Q, ledger.C_E, ledger.Q_E,
                                              ledger.E_C_bounds, ledger.E_Q_bounds);
  if (ledger.Q) {
    ledger.conjecture_consistent = report.conjecture_consistent;
  }
  return ledger;
}

}  // namespace eaqecc
