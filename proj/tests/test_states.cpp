// Copyright 2026 The hopfq Authors.
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

#include <cmath>

#include "hopfq/hopf.hpp"
#include "hopfq/sampling.hpp"
#include "hopfq/states.hpp"
#include "test_util.hpp"

namespace hopfq {
namespace {

using test::kInvSqrt2;
using test::kInvSqrt3;

TEST(PureState, ValidatesSizeAndNorm) {
  EXPECT_NO_THROW(PureState({1.0, 0.0}));
  EXPECT_THROW(PureState({1.0, 0.0, 0.0}), ValidationError);
  EXPECT_THROW(PureState({1.0, 1.0}), ValidationError);
  EXPECT_THROW(PureState(std::vector<Complex>(16, 0.25)), ValidationError);
  EXPECT_THROW(PureState::normalized({0.0, 0.0}), ValidationError);
  const PureState s = PureState::normalized({3.0, Complex{0.0, 4.0}});
  EXPECT_NEAR(std::abs(s[0]), 0.6, 1e-15);
  EXPECT_EQ(s.n_qubits(), 1);
}

TEST(EncodeTwoQubit, BasisAndBellStates) {
  auto p = encode_two_qubit(test::basis_state(2, 0));
  EXPECT_EQ(p.q1, Quaternion::one());
  EXPECT_EQ(p.q2, Quaternion());

  for (Grouping g : {Grouping::standard, Grouping::alternate}) {
    p = encode_two_qubit(test::bell(), g);
    EXPECT_EQ(p.q1, Quaternion(kInvSqrt2));
    EXPECT_EQ(p.q2, kInvSqrt2 * Quaternion::j());
  }
}

TEST(EncodeTwoQubit, AlternateGroupingPairsAlphaWithGamma) {
  const PureState s = PureState::normalized({1.0, 2.0, Complex{0.0, 3.0}, 4.0});
  const auto p = encode_two_qubit(s, Grouping::alternate);
  EXPECT_EQ(p.q1.c1(), s[0]);
  EXPECT_EQ(p.q1.c2(), s[2]);
  EXPECT_EQ(p.q2.c1(), s[1]);
  EXPECT_EQ(p.q2.c2(), s[3]);
}

TEST(EncodeTwoQubit, RejectsWrongQubitCount) {
  EXPECT_THROW(encode_two_qubit(test::ghz()), ValidationError);
  EXPECT_THROW(encode_three_qubit(test::bell()), ValidationError);
}

TEST(EncodeThreeQubit, BasisGhzAndW) {
  auto p = encode_three_qubit(test::basis_state(3, 0));
  EXPECT_EQ(p.a, Octonion(1.0));
  EXPECT_EQ(p.b, Octonion());

  // GHZ: b'' = t6 + conj(t7) j = j / sqrt2, i.e. the e6 direction.
  p = encode_three_qubit(test::ghz());
  EXPECT_EQ(p.a, Octonion(kInvSqrt2));
  EXPECT_EQ(p.b, kInvSqrt2 * Octonion::basis(6));

  p = encode_three_qubit(test::w_state());
  EXPECT_EQ(p.a.lo(), kInvSqrt3 * Quaternion::j());
  EXPECT_EQ(p.a.hi(), Quaternion(kInvSqrt3));
  EXPECT_EQ(p.b.lo(), Quaternion(kInvSqrt3));
  EXPECT_EQ(p.b.hi(), Quaternion());
}

TEST(EncodeThreeQubit, ConjugatesT3AndT7) {
  const PureState s = PureState::normalized({0, 0, 0, Complex{1.0, 2.0}, 0, 0, 0, Complex{3.0, -1.0}});
  const auto p = encode_three_qubit(s);
  EXPECT_EQ(p.a.hi().c2(), std::conj(s[3]));
  EXPECT_EQ(p.b.hi().c2(), std::conj(s[7]));
}

// Writing "t2 + j t3" without moving j to the right (t2 + t3 j) breaks
// agreement with the closed-form S8 coordinates; the conjugated reading
// reproduces them.
TEST(EncodeThreeQubit, ConjugatedReadingIsTheOneMatchingClosedForm) {
  const PureState s = random_pure_state(3, 99);
  auto naive_half = [&](std::size_t o) {
    return Octonion::from_quaternion_pair(Quaternion::from_complex_pair(s[o], s[o + 1]),
                                          Quaternion::from_complex_pair(s[o + 2], s[o + 3]));
  };
  const BasePoint naive = inverse_stereographic(h1_ratio(naive_half(0), naive_half(4)));
  const BasePoint closed = hopf_s15_closed_form(s);
  EXPECT_GT(test::max_abs_diff(naive, closed), 1e-3);
  EXPECT_LT(test::max_abs_diff(hopf_s15(s), closed), 1e-12);
}

TEST(EncodingProperty, RoundTripAndNorm) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const PureState s2 = random_pure_state(2, derive_seed(seed, 0));
    const PureState s3 = random_pure_state(3, derive_seed(seed, 1));
    for (Grouping g : {Grouping::standard, Grouping::alternate}) {
      const auto p = encode_two_qubit(s2, g);
      const PureState back = decode_two_qubit(p);
      for (std::size_t l = 0; l < 4; ++l) ASSERT_EQ(back[l], s2[l]);
      ASSERT_NEAR(p.q1.norm2() + p.q2.norm2(), s2.norm2(), 1e-12);
    }
    const auto o = encode_three_qubit(s3);
    const PureState back3 = decode_three_qubit(o);
    for (std::size_t l = 0; l < 8; ++l) ASSERT_EQ(back3[l], s3[l]);
    ASSERT_NEAR(o.a.norm2() + o.b.norm2(), s3.norm2(), 1e-12);

    const auto alt = encode_two_qubit(s2, Grouping::alternate);
    const auto swapped = encode_two_qubit(swap_qubits(s2), Grouping::standard);
    ASSERT_EQ(alt.q1, swapped.q1);
    ASSERT_EQ(alt.q2, swapped.q2);
  }
}

TEST(RandomPureState, DeterministicAndNormalized) {
  for (int n = 1; n <= 3; ++n) {
    const PureState a = random_pure_state(n, 1234), b = random_pure_state(n, 1234), c = random_pure_state(n, 1235);
    ASSERT_EQ(a.dimension(), std::size_t{1} << n);
    for (std::size_t l = 0; l < a.dimension(); ++l) EXPECT_EQ(a[l], b[l]);
    EXPECT_NE(a[0], c[0]);
    EXPECT_NEAR(a.norm2(), 1.0, 1e-10);
  }
  EXPECT_THROW(random_pure_state(0, 1), ValidationError);
  EXPECT_THROW(random_pure_state(4, 1), ValidationError);
}

// Haar symmetry: <sigma_z> averages to zero, and |alpha|^2 is uniform on
// [0, 1] for one qubit (mean 1/2, variance 1/12).
TEST(RandomPureState, HaarMomentsMonteCarlo) {
  constexpr int kSamples = 100000;
  double sum_z = 0.0, sum_p = 0.0, sum_p2 = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const PureState s = random_pure_state(1, derive_seed(42, static_cast<std::uint64_t>(i)));
    const double p = std::norm(s[0]);
    sum_z += p - std::norm(s[1]);
    sum_p += p;
    sum_p2 += p * p;
  }
  const double mean_p = sum_p / kSamples;
  EXPECT_NEAR(sum_z / kSamples, 0.0, 0.02);
  EXPECT_NEAR(mean_p, 0.5, 0.01);
  EXPECT_NEAR(sum_p2 / kSamples - mean_p * mean_p, 1.0 / 12.0, 0.005);
}

TEST(Sampling, DerivedSeedsAreDistinct) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(5, 7), derive_seed(5, 7));
}

TEST(TensorProduct, OrdersFactorsMostSignificantFirst) {
  const PureState zero({1.0, 0.0}), one({0.0, 1.0});
  const PureState s = tensor_product(zero, tensor_product(one, zero));  // |010>
  for (std::size_t l = 0; l < 8; ++l) EXPECT_EQ(s[l], l == 2 ? Complex(1.0) : Complex(0.0));
}

TEST(EmbedSeparatedQubit, PlacesQubitAtRequestedPosition) {
  const PureState one({0.0, 1.0});
  const PureState pair = test::basis_state(2, 0);  // |00>
  for (int k = 1; k <= 3; ++k) {
    const PureState s = embed_separated_qubit(one, pair, k);
    const std::size_t expected = std::size_t{1} << (3 - k);
    for (std::size_t l = 0; l < 8; ++l) EXPECT_EQ(s[l], l == expected ? Complex(1.0) : Complex(0.0));
  }
  EXPECT_THROW(embed_separated_qubit(one, pair, 4), ValidationError);
}

}  // namespace
}  // namespace hopfq
