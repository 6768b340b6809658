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

#include <gtest/gtest.h>

#include <random>

#include "esdlab/code41.hpp"
#include "esdlab/metrics.hpp"
#include "esdlab/states.hpp"
#include "oracles.hpp"

namespace {

using esdlab::Family;
using esdlab::MatrixXc;
using esdlab::StateFamily;
using esdlab::VectorXc;

VectorXc amps(const StateFamily& s) { return esdlab::make_uncoded(s).amplitudes(); }

TEST(Family, RoundTripNames) {
  for (Family f : {Family::Phi, Family::Psi, Family::Varphi}) {
    EXPECT_EQ(esdlab::parse_family(esdlab::to_string(f)), f);
  }
  EXPECT_FALSE(esdlab::parse_family("PHI").has_value());
  EXPECT_FALSE(esdlab::parse_family("").has_value());
}

TEST(MakeUncoded, Layouts) {
  const double a = 0.3, b = 0.9;
  const std::complex<double> c = std::cos(a), s = std::polar(1.0, b) * std::sin(a);
  VectorXc phi = VectorXc::Zero(4), psi = VectorXc::Zero(4), var = VectorXc::Zero(4);
  phi(3) = c, phi(0) = s;
  psi(2) = c, psi(1) = s;
  var(3) = c, var(2) = s;
  EXPECT_LT((amps({Family::Phi, a, b}) - phi).norm(), 1e-15);
  EXPECT_LT((amps({Family::Psi, a, b}) - psi).norm(), 1e-15);
  EXPECT_LT((amps({Family::Varphi, a, b}) - var).norm(), 1e-15);
}

TEST(MakeUncoded, BellPoint) {
  VectorXc bell = VectorXc::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  EXPECT_LT((amps({Family::Phi, M_PI / 4, 0.0}) - bell).norm(), 1e-15);
}

TEST(MakeUncoded, GroundStateLimit) {
  const VectorXc v = amps({Family::Phi, M_PI / 2, 0.0});
  EXPECT_NEAR(std::abs(v(0)), 1.0, 1e-15);
  EXPECT_LT(v.tail(3).norm(), 1e-15);
}

TEST(MakeUncoded, NormalizedForAnyAngles) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int t = 0; t < 200; ++t) {
    for (Family f : {Family::Phi, Family::Psi, Family::Varphi}) {
      EXPECT_NEAR(amps({f, u(rng), u(rng)}).norm(), 1.0, 1e-15);
      EXPECT_NEAR(esdlab::make_coded({f, u(rng), u(rng)}).amplitudes().norm(), 1.0, 1e-14);
    }
  }
}

TEST(MakeUncoded, ConcurrenceMatchesPureStateValue) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int t = 0; t < 200; ++t) {
    const double a = u(rng), b = u(rng);
    for (Family f : {Family::Phi, Family::Psi}) {
      EXPECT_NEAR(esdlab::concurrence(esdlab::make_uncoded({f, a, b}).density()),
                  std::abs(std::sin(2 * a)), 1e-12);
    }
    EXPECT_NEAR(esdlab::concurrence(esdlab::make_uncoded({Family::Varphi, a, b}).density()), 0.0,
                1e-12);
  }
}

TEST(MakeUncoded, GlobalPhaseInvariance) {
  // Shifting alpha by pi flips both amplitudes' sign; the density matrix must not change.
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 50; ++t) {
    const double a = u(rng), b = u(rng);
    for (Family f : {Family::Phi, Family::Psi, Family::Varphi}) {
      const MatrixXc r1 = esdlab::make_uncoded({f, a, b}).density();
      const MatrixXc r2 = esdlab::make_uncoded({f, a + M_PI, b}).density();
      EXPECT_LT(oracle::max_abs(r1 - r2), 1e-12);
      const VectorXc rotated = std::polar(1.0, 0.77) * amps({f, a, b});
      EXPECT_LT(oracle::max_abs(rotated * rotated.adjoint() - r1), 1e-12);
    }
  }
}

TEST(MakeCoded, PsiBellPoint) {
  const auto& enc = esdlab::Code41::standard().encoder();
  const VectorXc expected = (esdlab::tensor(enc.col(1), enc.col(0)) +
                             esdlab::tensor(enc.col(0), enc.col(1))) /
                            std::sqrt(2.0);
  EXPECT_LT((esdlab::make_coded({Family::Psi, M_PI / 4, 0.0}).amplitudes() - expected).norm(), 1e-15);
}

TEST(MakeCoded, PhiBellPoint) {
  const auto& enc = esdlab::Code41::standard().encoder();
  const VectorXc expected = (esdlab::tensor(enc.col(1), enc.col(1)) +
                             esdlab::tensor(enc.col(0), enc.col(0))) /
                            std::sqrt(2.0);
  EXPECT_LT((esdlab::make_coded({Family::Phi, M_PI / 4, 0.0}).amplitudes() - expected).norm(), 1e-15);
}

TEST(MakeCoded, DecodesToUncodedProjector) {
  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 30; ++t) {
    for (Family f : {Family::Phi, Family::Psi, Family::Varphi}) {
      const StateFamily spec{f, u(rng), u(rng)};
      const MatrixXc back = esdlab::decode(esdlab::make_coded(spec).density());
      EXPECT_LT(oracle::max_abs(back - esdlab::make_uncoded(spec).density()), 1e-12);
    }
  }
}

}  // namespace
