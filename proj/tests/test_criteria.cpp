// Copyright 2026 The cohsep Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_helpers.hpp"

using namespace cohsep;
using Catch::Matchers::WithinAbs;

namespace {

DensityMatrix chi1(double c, double f) {
  return family_build("example1", {{"c", c}, {"f", f}});
}

// |+><+| (x) |0><0|: a product state with all of its coherence on the qubit.
DensityMatrix plus_zero() {
  return validate(tensor_product(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}, ComplexMatrix{{1, 0}, {0, 0}}),
                  {2, 2});
}

}  // namespace

TEST_CASE("result3_check", "[criteria]") {
  SECTION("example2 at a = 1/2") {
    const auto r = result3_check(family_build("example2", {{"a", 0.5}}));
    CHECK_THAT(r.lhs, WithinAbs(3.0 / 64.0, 1e-15));
    // M N is diag(0, s^2, s^2, 0) with s = 1/8.
    CHECK_THAT(r.rhs, WithinAbs(1.0 / 32.0, 1e-15));
    CHECK(r.verdict == Verdict::Entangled);
  }

  SECTION("maximally mixed") {
    const auto r = result3_check(testing::maximally_mixed({2, 2}));
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs == 0.125);
    CHECK(r.verdict == Verdict::Inconclusive);
  }

  SECTION("phi+") {
    const auto r = result3_check(testing::bell_phi_plus());
    CHECK(r.lhs == 0.25);
    CHECK(r.rhs == 0.0);
    CHECK(r.verdict == Verdict::Entangled);
  }

  SECTION("qubit must come first") {
    CHECK_THROWS_AS(result3_check(random_density({3, 2}, 1, 1)), Error);
  }
}

TEST_CASE("result4_check", "[criteria]") {
  SECTION("phi+") {
    const auto r = result4_check(testing::bell_phi_plus());
    CHECK(r.lhs == 0.25);
    CHECK(r.rhs == 0.0);
    CHECK(r.verdict == Verdict::Entangled);
  }

  SECTION("maximally mixed") {
    const auto r = result4_check(testing::maximally_mixed({2, 2}));
    CHECK(r.lhs == 0.0);
    CHECK_THAT(r.rhs, WithinAbs(1.0 / 16.0, 1e-15));
    CHECK(r.verdict == Verdict::SeparabilityConsistent);
  }

  SECTION("fires on a coherent product state") {
    // Q = [[1/2, 0], [0, 0]] while P and R are rank one, so lhs = 1/4 >= 0.
    const auto r = result4_check(plus_zero());
    CHECK(r.lhs == 0.25);
    CHECK(r.rhs == 0.0);
    CHECK(r.verdict == Verdict::Entangled);
    CHECK(ppt_oracle(plus_zero()).is_ppt);
  }
}

TEST_CASE("theorem1_check", "[criteria]") {
  SECTION("X-state right-hand side is 2(ad + be)") {
    for (double c : {0.0, 0.05, 0.1, 0.2}) {
      const auto r = theorem1_check(chi1(c, 0.25 - c));
      CHECK_THAT(r.rhs, WithinAbs(2 * (0.25 * 0.25 + 0.25 * 0.25), 1e-15));
      CHECK_THAT(r.lhs, WithinAbs(2 * (c + 0.25 - c), 1e-15));
    }
  }

  SECTION("boundary X-state") {
    const auto r = theorem1_check(chi1(0.25, 0.25));
    CHECK(r.lhs == 1.0);
    CHECK(r.rhs == 0.25);
    CHECK(r.verdict == Verdict::Entangled);
  }

  SECTION("flip at |c| + |f| = ad + be") {
    CHECK(theorem1_check(chi1(0.0625, 0.0625)).verdict == Verdict::Inconclusive);
    CHECK(theorem1_check(chi1(0.063, 0.063)).verdict == Verdict::Entangled);
    CHECK(theorem1_check(chi1(0.062, 0.062)).verdict == Verdict::Inconclusive);
    CHECK(theorem1_check(chi1(0.126, 0.0)).verdict == Verdict::Entangled);
    CHECK(theorem1_check(chi1(0.124, 0.0)).verdict == Verdict::Inconclusive);
  }

  SECTION("maximally mixed") {
    // Same diagonal as the X-state above, so 2(ad + be) = 1/4.
    const auto r = theorem1_check(testing::maximally_mixed({2, 2}));
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs == 0.25);
    CHECK(r.verdict == Verdict::Inconclusive);
  }

  SECTION("only two qubits") {
    CHECK_THROWS_AS(theorem1_check(random_density({2, 3}, 2, 1)), Error);
  }
}

TEST_CASE("theorem2_check", "[criteria]") {
  SECTION("example2 grid") {
    for (int i = 1; i <= 100; ++i) {
      const double a = i / 100.0;
      const auto r = theorem2_check(family_build("example2", {{"a", a}}));
      CHECK_THAT(r.lhs, WithinAbs(6 * a / (6 * a + 1), 1e-12));
      CHECK_THAT(r.rhs, WithinAbs(4 * a * a / ((6 * a + 1) * (6 * a + 1)), 1e-12));
      CHECK(r.verdict == Verdict::Entangled);
    }
  }

  SECTION("maximally mixed") {
    CHECK(theorem2_check(testing::maximally_mixed({2, 3})).verdict == Verdict::Inconclusive);
    CHECK(theorem2_check(testing::maximally_mixed({2, 2})).verdict == Verdict::Inconclusive);
  }

  SECTION("reduces to theorem1 for two qubits") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto rho = random_density({2, 2}, 1 + seed % 4, seed);
      const auto t1 = theorem1_check(rho);
      const auto t2 = theorem2_check(rho);
      CHECK(t1.lhs == t2.lhs);
      CHECK_THAT(t1.rhs, WithinAbs(t2.rhs, 1e-12));
    }
  }

  SECTION("report notes the non-strict comparison") {
    CHECK_FALSE(theorem2_check(testing::bell_phi_plus()).notes.empty());
  }
}

TEST_CASE("theorem3_bound and corollary1_check", "[criteria]") {
  SECTION("phi+") {
    CHECK(theorem3_bound(testing::bell_phi_plus()) == 0.0);
    const auto r = corollary1_check(testing::bell_phi_plus());
    CHECK(r.lhs == 1.0);
    CHECK(r.verdict == Verdict::Entangled);
  }

  SECTION("maximally mixed") {
    CHECK_THAT(theorem3_bound(testing::maximally_mixed({2, 2})), WithinAbs(0.5, 1e-15));
    CHECK(corollary1_check(testing::maximally_mixed({2, 2})).verdict == Verdict::Inconclusive);
  }

  SECTION("diagonal separable states sit under the bound") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto a = random_density(2, 2, seed).matrix();
      const auto b = random_density(3, 3, seed + 7).matrix();
      ComplexMatrix da(2, 2), db(3, 3);
      for (std::size_t i = 0; i < 2; ++i) da(i, i) = a(i, i);
      for (std::size_t i = 0; i < 3; ++i) db(i, i) = b(i, i);
      const auto rho = validate(tensor_product(da, db), {2, 3});
      CHECK(l1_coherence(rho).value <= theorem3_bound(rho));
    }
  }

  SECTION("intermediate terms") {
    const auto t = coherence_bound_terms(testing::maximally_mixed({2, 3}).matrix());
    CHECK(t.qudit_dim == 3);
    CHECK_THAT(t.prefactor, WithinAbs(std::sqrt(12.0), 1e-15));
    CHECK_THAT(t.lambda_min_p, WithinAbs(1.0 / 6.0, 1e-15));
    CHECK_THAT(t.radicand, WithinAbs(0.0, 1e-15));
    CHECK_THAT(t.bound, WithinAbs(std::sqrt(12.0) / 6.0, 1e-14));
  }

  SECTION("coherent product state exceeds the bound") {
    // C = 1 while the radicand and both minimum eigenvalues vanish.
    const auto rho = plus_zero();
    CHECK(theorem3_bound(rho) == 0.0);
    CHECK(corollary1_check(rho).verdict == Verdict::Entangled);
    CHECK(ppt_oracle(rho).is_ppt);
  }

  SECTION("clamping window") {
    ComplexMatrix m = ComplexMatrix::zeros(4, 4);
    m(0, 0) = -5e-11;
    m(1, 1) = 0.5;
    m(2, 2) = 0.5;
    CHECK(coherence_bound_terms(m).lambda_min_p == 0.0);
    m(0, 0) = -1e-6;
    CHECK_THROWS_MATCHES(coherence_bound_terms(m), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.kind() == ErrorKind::NegativeEigenvalue;
                         }));
  }
}

TEST_CASE("ppt_oracle", "[criteria]") {
  SECTION("phi+") {
    const auto v = ppt_oracle(testing::bell_phi_plus());
    CHECK_THAT(v.min_pt_eigenvalue, WithinAbs(-0.5, 1e-12));
    CHECK_FALSE(v.is_ppt);
    CHECK(v.exact);
  }

  SECTION("Werner family") {
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      const auto v = ppt_oracle(testing::werner(p));
      CHECK_THAT(v.min_pt_eigenvalue, WithinAbs(std::min((1 - 3 * p) / 4, (1 + p) / 4), 1e-12));
      if (std::abs(p - 1.0 / 3.0) > 1e-6) CHECK(v.is_ppt == (p < 1.0 / 3.0));
    }
  }

  SECTION("exactness flag") {
    CHECK(ppt_oracle(random_density({2, 3}, 2, 1)).exact);
    CHECK_FALSE(ppt_oracle(random_density({2, 4}, 2, 1)).exact);
    CHECK_THROWS_AS(ppt_oracle(random_density({2, 2, 2}, 2, 1)), Error);
  }
}

TEST_CASE("holder_bound", "[criteria]") {
  const std::vector<double> flat(7, 0.3);
  CHECK(holder_bound(flat));
  double l1 = 0.0, l2 = 0.0;
  for (double x : flat) {
    l1 += x;
    l2 += x * x;
  }
  CHECK_THAT(l1, WithinAbs(std::sqrt(7.0) * std::sqrt(l2), 1e-12));

  const std::vector<double> unit{0, 0, 1, 0};
  CHECK(holder_bound(unit));

  std::mt19937 gen(9);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> v(1 + trial % 20);
    for (auto& x : v) x = n(gen);
    CHECK(holder_bound(v));
  }
}

TEST_CASE("reports are self-consistent", "[criteria]") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto rho = random_density({2, 2}, 1 + seed % 4, seed);
    for (const auto& name : bipartite_criteria()) {
      const auto r = run_criterion(name, rho);
      CHECK(r.criterion == name);
      CHECK(r.margin == r.lhs - r.rhs);
      CHECK(r.tolerance_used == kDetectionTolerance);
      if (name != "result4") {
        CHECK(r.verdict != Verdict::SeparabilityConsistent);
        CHECK((r.verdict == Verdict::Entangled) == (r.margin > r.tolerance_used ||
                                                    (name == "theorem2" && r.margin >= r.tolerance_used)));
      }
    }
  }
  CHECK_THROWS_AS(run_criterion("theorem9", testing::bell_phi_plus()), Error);
}
