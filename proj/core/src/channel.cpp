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

#include "eaqecc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "eaqecc/numeric.hpp"

namespace eaqecc {

namespace {

constexpr double kProbTol = 1e-12;

// Hermitian single-qubit Paulis; the channel conjugates with these, where
// any phase convention cancels.
const Eigen::Matrix2cd& sigma(int i) {
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

Eigen::Vector4cd phi_plus() {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace

PauliChannel::PauliChannel(double p_i, double p_x, double p_y, double p_z)
    : p{p_i, p_x, p_y, p_z} {
  double sum = 0.0;
  for (double v : p) {
    if (v < -kProbTol || v > 1.0 + kProbTol) {
      throw std::invalid_argument("PauliChannel: probability outside [0,1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbTol) {
    throw std::invalid_argument("PauliChannel: probabilities do not sum to 1");
  }
}

ErasureChannel::ErasureChannel(double eps) : epsilon(eps) {
  if (eps < 0.0 || eps > 1.0) {
    throw std::invalid_argument("ErasureChannel: epsilon outside [0,1]");
  }
}

ChoiState::ChoiState(const Eigen::Matrix4cd& m) : m_(m) {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("ChoiState: matrix not Hermitian");
  }
  if (std::abs(m_.trace().real() - 1.0) > 1e-10 || std::abs(m_.trace().imag()) > 1e-10) {
    throw std::invalid_argument("ChoiState: trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("ChoiState: matrix not positive semidefinite");
  }
}

std::array<double, 4> ChoiState::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m_, Eigen::EigenvaluesOnly);
  std::array<double, 4> ev;
  for (int i = 0; i < 4; ++i) {
    ev[static_cast<size_t>(i)] = std::max(0.0, solver.eigenvalues()(3 - i));
  }
  return ev;
}

PauliChannel depolarizing(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("depolarizing: p outside [0,1]");
  }
  return PauliChannel(1.0 - p, p / 3.0, p / 3.0, p / 3.0);
}

PauliChannel dephasing(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("dephasing: p outside [0,1]");
  }
  return PauliChannel(1.0 - p, 0.0, 0.0, p);
}

ChoiState choi(const PauliChannel& ch) {
  Eigen::Vector4cd phi = phi_plus();
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) {
    Eigen::Matrix4cd kraus = Eigen::Matrix4cd::Zero();
    // I (x) sigma_i acting on the 4-dimensional joint space.
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        kraus.block<2, 2>(2 * r, 2 * c) =
            (r == c ? sigma(i) : Eigen::Matrix2cd::Zero().eval());
      }
    }
    Eigen::Vector4cd v = kraus * phi;
    rho += ch.p[static_cast<size_t>(i)] * (v * v.adjoint());
  }
  return ChoiState(rho);
}

double entropy(const ChoiState& rho) {
  auto ev = rho.eigenvalues();
  double h = 0.0;
  for (double v : ev) {
    if (v > 1e-14) {
      h -= v * std::log2(v);
    }
  }
  return h;
}

double entropy(std::span<const double> probs) { return shannon_entropy(probs); }

PauliOperator sample_error(const PauliChannel& ch, uint32_t n, PhiloxRng& rng) {
  if (n < 1) {
    throw std::invalid_argument("sample_error: n < 1");
  }
  BitVec x(n);
  BitVec z(n);
  const double c1 = ch.p[0];
  const double c2 = c1 + ch.p[1];
  const double c3 = c2 + ch.p[2];
  for (uint32_t q = 0; q < n; ++q) {
    double u = rng.next_double();
    if (u < c1) {
      continue;
    }
    if (u < c2) {
      x.set(q, true);
    } else if (u < c3) {
      x.set(q, true);
      z.set(q, true);
    } else {
      z.set(q, true);
    }
  }
  return PauliOperator(std::move(x), std::move(z), false);
}

BitVec sample_erasure(const ErasureChannel& ch, uint32_t n, PhiloxRng& rng) {
  if (n < 1) {
    throw std::invalid_argument("sample_erasure: n < 1");
  }
  BitVec erased(n);
  for (uint32_t q = 0; q < n; ++q) {
    if (rng.next_double() < ch.epsilon) {
      erased.set(q, true);
    }
  }
  return erased;
}

double typical_set_log_size(const PauliChannel& ch, uint32_t n, double delta) {
  if (n < 1 || delta < 0.0) {
    throw std::invalid_argument("typical_set_log_size: need n >= 1 and delta >= 0");
  }
  return static_cast<double>(n) * entropy(choi(ch)) + 2.0 * n * delta;
}

double typical_set_log_size(const ErasureChannel& ch, uint32_t n, double delta) {
  if (n < 1 || delta < 0.0) {
    throw std::invalid_argument("typical_set_log_size: need n >= 1 and delta >= 0");
  }
  return 2.0 * n * ch.epsilon + 2.0 * n * delta;
}

bool is_entanglement_breaking(const PauliChannel& ch) {
  return *std::max_element(ch.p.begin(), ch.p.end()) <= 0.5 + kProbTol;
}

bool is_entanglement_breaking(const ChoiState& rho) {
  // Partial transpose on the second qubit.
  Eigen::Matrix4cd pt;
  for (int r0 = 0; r0 < 2; ++r0) {
    for (int r1 = 0; r1 < 2; ++r1) {
      for (int c0 = 0; c0 < 2; ++c0) {
        for (int c1 = 0; c1 < 2; ++c1) {
          pt(2 * r0 + r1, 2 * c0 + c1) = rho.matrix()(2 * r0 + c1, 2 * c0 + r1);
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(pt, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -1e-10;
}

namespace {

double parse_number(std::string_view s, const char* what) {
  try {
    size_t used = 0;
    double v = std::stod(std::string(s), &used);
    if (used != s.size()) {
      throw std::invalid_argument("");
    }
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("channel spec: bad number for ") + what);
  }
}

std::string fmt_prob(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

ParsedChannel parse_channel_spec(std::string_view spec) {
  size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("channel spec: expected '<kind>:<params>'");
  }
  std::string_view kind = spec.substr(0, colon);
  std::string_view params = spec.substr(colon + 1);
  if (kind == "depolarizing") {
    double p = parse_number(params, "depolarizing");
    return {depolarizing(p), "depolarizing:" + fmt_prob(p)};
  }
  if (kind == "dephasing") {
    double p = parse_number(params, "dephasing");
    return {dephasing(p), "dephasing:" + fmt_prob(p)};
  }
  if (kind == "erasure") {
    double eps = parse_number(params, "erasure");
    return {ErasureChannel(eps), "erasure:" + fmt_prob(eps)};
  }
  if (kind == "pauli") {
    std::array<double, 4> p{};
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
      size_t comma = params.find(',', pos);
      bool last = i == 3;
      if (last != (comma == std::string_view::npos)) {
        throw std::invalid_argument("channel spec: pauli needs 4 comma-separated probabilities");
      }
      std::string_view field =
          last ? params.substr(pos) : params.substr(pos, comma - pos);
      p[static_cast<size_t>(i)] = parse_number(field, "pauli");
      pos = comma + 1;
    }
    PauliChannel ch(p[0], p[1], p[2], p[3]);
    return {ch, "pauli:" + fmt_prob(p[0]) + "," + fmt_prob(p[1]) + "," + fmt_prob(p[2]) + "," +
                    fmt_prob(p[3])};
  }
  throw std::invalid_argument("channel spec: unknown kind '" + std::string(kind) + "'");
}

std::string channel_descriptor(const ChannelVariant& ch) {
  if (const auto* pc = std::get_if<PauliChannel>(&ch)) {
    // Recover the canonical short forms where they apply.
    if (pc->p[1] == 0.0 && pc->p[2] == 0.0) {
      return "dephasing:" + fmt_prob(pc->p[3]);
    }
    if (pc->p[1] == pc->p[2] && pc->p[2] == pc->p[3]) {
      return "depolarizing:" + fmt_prob(3.0 * pc->p[1]);
    }
    return "pauli:" + fmt_prob(pc->p[0]) + "," + fmt_prob(pc->p[1]) + "," + fmt_prob(pc->p[2]) +
           "," + fmt_prob(pc->p[3]);
  }
  return "erasure:" + fmt_prob(std::get<ErasureChannel>(ch).epsilon);
}

}  // namespace eaqecc
