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

// The four-qubit amplitude-damping code.
//
// One logical qubit lives in a block of four physical qubits. Two logical
// qubits occupy an 8-qubit register: block 1 is physical qubits 0-3 and
// block 2 is physical qubits 4-7.
//
// Syndrome k = 0 means no jump; k = 1..4 flags a single jump on the k-th
// qubit of the block; k = 5..7 are uncorrectable and the block is replaced
// by the maximally mixed logical state.

#ifndef ESDLAB_CODE41_HPP
#define ESDLAB_CODE41_HPP

#include <array>
#include <optional>
#include <vector>

#include "esdlab/channels.hpp"
#include "esdlab/qlinalg.hpp"

namespace esdlab {

inline constexpr int kBlockQubits = 4;
inline constexpr int kBlockDim = 16;
inline constexpr int kSyndromes = 8;
inline constexpr int kCorrectableSyndromes = 5;

/// Logical basis states of one block.
struct Codeword41 {
  State zero_L;
  State one_L;

  /// (|0000> + |1111>)/sqrt2 and (|0011> + |1100>)/sqrt2.
  static Codeword41 standard();
};

/// The 16 vectors |R_ki>, k = 0..7 syndrome, i = 0..1 logical label.
class SyndromeBasis {
 public:
  /// R_0i are the codewords, R_ki for k = 1..4 the normalized single-jump
  /// images of the codewords, R_5i..R_7i the fixed completion vectors.
  explicit SyndromeBasis(const Codeword41& words);

  const VectorXc& operator()(int k, int i) const { return vectors_.at(k).at(i); }

  /// Columns ordered by basis label i*8 + k.
  MatrixXc as_columns() const;
  MatrixXc gram() const;
  /// Projector onto span{|R_k0>, |R_k1>}.
  MatrixXc projector(int k) const;

 private:
  std::array<std::array<VectorXc, 2>, kSyndromes> vectors_;
};

/// Kraus operators applied for one syndrome outcome.
struct RecoveryOp {
  int syndrome = 0;
  /// k <= 4: the single operator sum_i |i>_L <R_ki|.
  /// k >= 5: the four operators (1/sqrt2) |i>_L <R_kj|.
  std::vector<MatrixXc> kraus_set;
};

class Code41 {
 public:
  explicit Code41(Codeword41 words = Codeword41::standard());

  static const Code41& standard();

  const Codeword41& codewords() const { return words_; }
  const SyndromeBasis& basis() const { return basis_; }
  const RecoveryOp& recovery(int k) const { return recovery_.at(k); }

  /// 16x2 isometry |0>_L<0| + |1>_L<1|.
  const MatrixXc& encoder() const { return encoder_; }

  /// Every recovery Kraus operator over all syndromes, as one channel.
  const KrausChannel<double>& recovery_channel() const { return *channel_; }

  /// sum_k sum_i |i Bin(k)><R_ki|. Row index of |i Bin(k)> is 8i + k.
  MatrixXc syndrome_unitary() const;

  /// sum_i |i>_L <i Bin(k)|: the correction applied after the basis change.
  MatrixXc logical_correction(int k) const;

  State encode_qubit(const State& state) const;
  /// Logical factor j of the input goes to block j + 1.
  State encode_two_qubits(const State& state) const;

  /// Measure-and-recover on one block (1 or 2) of an 8-qubit matrix, with
  /// outcomes summed.
  MatrixXc recover_block(const MatrixXc& rho, int block) const;

  /// Outcome probabilities tr(P_k rho) for the given block.
  std::array<double, kSyndromes> syndrome_probabilities(const MatrixXc& rho, int block) const;

  /// Frobenius norm of the part of rho outside the two-block code space.
  double leakage(const MatrixXc& rho) const;

  /// Maps an 8-qubit code-space matrix to the 2-qubit logical matrix.
  /// Throws ConsistencyError when leakage exceeds `leakage_tol`.
  MatrixXc decode(const MatrixXc& rho, double leakage_tol = 1e-10) const;

 private:
  Codeword41 words_;
  SyndromeBasis basis_;
  std::array<RecoveryOp, kSyndromes> recovery_;
  MatrixXc encoder_;
  std::optional<KrausChannel<double>> channel_;
  // Two-block encoder restricted to its nonzero rows.
  std::vector<Eigen::Index> support_;
  MatrixXc pair_encoder_;

  /// Logical 4x4 matrix of rho; stores the leakage norm in `leak`.
  MatrixXc to_logical(const MatrixXc& rho, double& leak) const;
};

/// Convenience forms bound to the standard code.
State encode_qubit(const State& state);
State encode_two_qubits(const State& state);
MatrixXc syndrome_unitary();
MatrixXc recover_block(const MatrixXc& rho, int block);
MatrixXc decode(const MatrixXc& rho);

}  // namespace esdlab

#endif  // ESDLAB_CODE41_HPP
