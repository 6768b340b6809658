// Copyright 2026 The esdlab Authors
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

#include "esdlab/code41.hpp"

#include <cmath>
#include <string>

namespace esdlab {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

VectorXc ket(int bits) {
  VectorXc v = VectorXc::Zero(kBlockDim);
  v(bits) = 1.0;
  return v;
}

// (|a> + sign |b>)/sqrt2 for 4-bit basis labels.
VectorXc pair(int a, int b, double sign) { return kInvSqrt2 * (ket(a) + sign * ket(b)); }

// sigma^- on block-local qubit q (q = 0 is the leftmost), normalized.
VectorXc jump_image(const VectorXc& v, int q) {
  const int bit = 1 << (kBlockQubits - 1 - q);
  VectorXc out = VectorXc::Zero(kBlockDim);
  for (int x = 0; x < kBlockDim; ++x) {
    if (x & bit) out(x ^ bit) += v(x);
  }
  const double norm = out.norm();
  if (norm == 0.0) {
    throw ArgumentError("codeword has no excitation on block qubit " + std::to_string(q));
  }
  return out / norm;
}

int first_qubit(int block) {
  if (block != 1 && block != 2) {
    throw ArgumentError("block must be 1 or 2, got " + std::to_string(block));
  }
  return (block - 1) * kBlockQubits;
}

void require_register(const MatrixXc& rho, int qubits) {
  if (rho.rows() != rho.cols() || rho.rows() != (Eigen::Index{1} << qubits)) {
    throw ArgumentError("expected a " + std::to_string(qubits) + "-qubit density matrix");
  }
}

}  // namespace

Codeword41 Codeword41::standard() {
  return {State(pair(0b0000, 0b1111, +1.0)), State(pair(0b0011, 0b1100, +1.0))};
}

SyndromeBasis::SyndromeBasis(const Codeword41& words) {
  vectors_[0] = {words.zero_L.amplitudes(), words.one_L.amplitudes()};
  for (int k = 1; k < kCorrectableSyndromes; ++k) {
    vectors_[k] = {jump_image(vectors_[0][0], k - 1), jump_image(vectors_[0][1], k - 1)};
  }
  vectors_[5] = {pair(0b0000, 0b1111, -1.0), pair(0b0011, 0b1100, -1.0)};
  vectors_[6] = {pair(0b1010, 0b0101, +1.0), pair(0b1001, 0b0110, +1.0)};
  vectors_[7] = {pair(0b1010, 0b0101, -1.0), pair(0b1001, 0b0110, -1.0)};
}

MatrixXc SyndromeBasis::as_columns() const {
  MatrixXc out(kBlockDim, kBlockDim);
  for (int k = 0; k < kSyndromes; ++k) {
    for (int i = 0; i < 2; ++i) out.col(i * kSyndromes + k) = vectors_[k][i];
  }
  return out;
}

MatrixXc SyndromeBasis::gram() const {
  const MatrixXc cols = as_columns();
  return cols.adjoint() * cols;
}

MatrixXc SyndromeBasis::projector(int k) const {
  const auto& r = vectors_.at(k);
  return r[0] * r[0].adjoint() + r[1] * r[1].adjoint();
}

Code41::Code41(Codeword41 words) : words_(std::move(words)), basis_(words_) {
  encoder_.resize(kBlockDim, 2);
  encoder_.col(0) = words_.zero_L.amplitudes();
  encoder_.col(1) = words_.one_L.amplitudes();

  for (int k = 0; k < kCorrectableSyndromes; ++k) {
    recovery_[k].syndrome = k;
    recovery_[k].kraus_set = {encoder_.col(0) * basis_(k, 0).adjoint() +
                              encoder_.col(1) * basis_(k, 1).adjoint()};
  }
  for (int k = kCorrectableSyndromes; k < kSyndromes; ++k) {
    recovery_[k].syndrome = k;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        recovery_[k].kraus_set.push_back(kInvSqrt2 * encoder_.col(i) * basis_(k, j).adjoint());
      }
    }
  }

  std::vector<MatrixXc> ops;
  for (const auto& r : recovery_) ops.insert(ops.end(), r.kraus_set.begin(), r.kraus_set.end());
  channel_.emplace(std::move(ops));

  const MatrixXc both = tensor(encoder_, encoder_);
  for (Eigen::Index r = 0; r < both.rows(); ++r) {
    if (both.row(r).cwiseAbs().maxCoeff() > 0.0) support_.push_back(r);
  }
  pair_encoder_ = both(support_, Eigen::all);
}

const Code41& Code41::standard() {
  static const Code41 code;
  return code;
}

MatrixXc Code41::syndrome_unitary() const {
  MatrixXc u(kBlockDim, kBlockDim);
  for (int k = 0; k < kSyndromes; ++k) {
    for (int i = 0; i < 2; ++i) u.row(i * kSyndromes + k) = basis_(k, i).adjoint();
  }
  return u;
}

MatrixXc Code41::logical_correction(int k) const {
  if (k < 0 || k >= kCorrectableSyndromes) {
    throw ArgumentError("syndrome " + std::to_string(k) + " has no logical correction");
  }
  MatrixXc r = MatrixXc::Zero(kBlockDim, kBlockDim);
  for (int i = 0; i < 2; ++i) r.col(i * kSyndromes + k) = encoder_.col(i);
  return r;
}

State Code41::encode_qubit(const State& state) const {
  if (state.qubits() != 1) throw ArgumentError("encode_qubit expects a single-qubit state");
  return State::normalized(encoder_ * state.amplitudes());
}

State Code41::encode_two_qubits(const State& state) const {
  if (state.qubits() != 2) throw ArgumentError("encode_two_qubits expects a two-qubit state");
  VectorXc out = VectorXc::Zero(Eigen::Index{1} << (2 * kBlockQubits));
  out(support_) = pair_encoder_ * state.amplitudes();
  return State::normalized(std::move(out));
}

MatrixXc Code41::recover_block(const MatrixXc& rho, int block) const {
  const int first = first_qubit(block);
  require_register(rho, 2 * kBlockQubits);
  return channel_->apply(first, rho);
}

std::array<double, kSyndromes> Code41::syndrome_probabilities(const MatrixXc& rho,
                                                              int block) const {
  const int first = first_qubit(block);
  require_register(rho, 2 * kBlockQubits);
  const MatrixXc reduced = partial_trace(rho, {first, first + 1, first + 2, first + 3});
  std::array<double, kSyndromes> p{};
  for (int k = 0; k < kSyndromes; ++k) p[k] = (basis_.projector(k) * reduced).trace().real();
  return p;
}

MatrixXc Code41::to_logical(const MatrixXc& rho, double& leak) const {
  require_register(rho, 2 * kBlockQubits);
  const MatrixXc inner = rho(support_, support_);
  const MatrixXc logical = pair_encoder_.adjoint() * inner * pair_encoder_;
  double outside = 0.0;
  std::vector<bool> in_support(rho.rows(), false);
  for (auto r : support_) in_support[r] = true;
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
      if (!(in_support[r] && in_support[c])) outside += std::norm(rho(r, c));
    }
  }
  const double residual =
      (inner - pair_encoder_ * logical * pair_encoder_.adjoint()).squaredNorm();
  leak = std::sqrt(outside + residual);
  return logical;
}

double Code41::leakage(const MatrixXc& rho) const {
  double leak = 0.0;
  to_logical(rho, leak);
  return leak;
}

MatrixXc Code41::decode(const MatrixXc& rho, double leakage_tol) const {
  double leak = 0.0;
  MatrixXc logical = to_logical(rho, leak);
  if (leak > leakage_tol) {
    throw ConsistencyError("state leaks out of the code space (norm " + std::to_string(leak) +
                           "); was recovery applied to both blocks?");
  }
  return logical;
}

State encode_qubit(const State& state) { return Code41::standard().encode_qubit(state); }
State encode_two_qubits(const State& state) { return Code41::standard().encode_two_qubits(state); }
MatrixXc syndrome_unitary() { return Code41::standard().syndrome_unitary(); }
MatrixXc recover_block(const MatrixXc& rho, int block) {
  return Code41::standard().recover_block(rho, block);
}
MatrixXc decode(const MatrixXc& rho) { return Code41::standard().decode(rho); }

}  // namespace esdlab
