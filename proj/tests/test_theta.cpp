#include <doctest.h>

#include "twotors/error.hpp"
#include "twotors/theta/f2.hpp"

using namespace twotors;
using namespace twotors::theta;

namespace {

F2Vector V(const char* text) { return F2Vector::parse(text); }

std::vector<RealCurveType> types_up_to(unsigned g) { return valid_types(g); }

}  // namespace

TEST_CASE("type validity") {
  CHECK(RealCurveType{2, 1, 1}.valid());
  CHECK(RealCurveType{2, 2, 0}.valid());
  CHECK(RealCurveType{2, 0, 0}.valid());
  CHECK_FALSE(RealCurveType{2, 2, 1}.valid());
  CHECK_FALSE(RealCurveType{3, 0, 0}.valid());
  CHECK_FALSE(RealCurveType{2, 3, 1}.valid());
  CHECK_FALSE(RealCurveType{0, 0, 1}.valid());
  CHECK_THROWS_AS((RealCurveType{3, 2, 0}.validate()), MathError);
  CHECK(valid_types(1).size() == 2);  // (1,0,1), (1,1,0)
}

TEST_CASE("vector parsing") {
  const auto v = V("10|01");
  CHECK(v.g == 2);
  CHECK(v.upper == 1);
  CHECK(v.lower == 2);
  CHECK(v.str() == "10|01");
  CHECK_THROWS(V("10|0"));
  CHECK_THROWS(V("1x|01"));
}

TEST_CASE("forms on small examples") {
  CHECK(symplectic(V("1|0"), V("0|1")) == 1);
  CHECK(symplectic(V("11|01"), V("11|01")) == 0);
  CHECK(symplectic(V("10|01"), V("01|10")) == 0);
  CHECK(q0(V("00|00")) == 0);
  long odd = 0;
  for (const auto& c : all_vectors(1)) odd += arf(c);
  CHECK(odd == 1);
  CHECK(arf(V("1|1")) == 1);
}

TEST_CASE("conjugation and real points") {
  CHECK(sigma_apply({2, 1, 1}, V("00|01")) == V("01|01"));
  CHECK(sigma_apply({2, 1, 1}, V("11|00")) == V("11|00"));
  CHECK(real_points({1, 0, 1}).size() == 2);
  CHECK(real_points({2, 2, 0}).size() == 16);
  CHECK(signed_count({1, 0, 1}) == 2);
  CHECK(signed_count({2, 2, 0}) == 4);
  CHECK(is_real_theta({2, 0, 0}, V("00|00")));
  CHECK_FALSE(is_real_theta({2, 1, 1}, V("00|00")));
}

TEST_CASE("theta counts") {
  for (Bits u = 0; u < 2; ++u)
    for (Bits e = 0; e < 2; ++e) CHECK(theta_counts({2, 1, 1}, {u, e}) == ThetaCounts{1, 1});
  CHECK(theta_counts({2, 2, 0}, {0, 0}) == ThetaCounts{1, 0});
  CHECK(theta_counts({2, 2, 0}, {3, 0}) == ThetaCounts{1, 0});
  CHECK(theta_counts({2, 2, 0}, {1, 0}) == ThetaCounts{0, 1});
  CHECK(theta_counts({3, 0, 1}, {0, 0}) == ThetaCounts{4, 4});
  CHECK_THROWS_AS(theta_counts({2, 1, 1}, {2, 0}), MathError);
}

TEST_CASE("odd theta signed sum") {
  CHECK(odd_theta_signed_sum({2, 2, 0}, V("10|00")) == 2);
  CHECK(odd_theta_signed_sum({1, 1, 0}, V("1|0")) == 1);
  try {
    odd_theta_signed_sum({2, 2, 0}, V("00|11"));
    FAIL("expected ComplexSemiOrientation");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::ComplexSemiOrientation);
  }
  try {
    odd_theta_signed_sum({2, 1, 1}, V("00|00"));
    FAIL("expected NotRealTheta");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::NotRealTheta);
  }
}

TEST_CASE("lagrangian odd count and lower bounds") {
  CHECK(lagrangian_odd_count({2, 0, 1}, V("00|10")) == 2);
  CHECK(lagrangian_odd_count({1, 0, 1}, V("0|1")) == 1);
  CHECK_THROWS_AS(lagrangian_odd_count({2, 0, 1}, V("11|00")), MathError);
  CHECK(totally_real_lower_bound({3, 2, 1}) == 12);
  CHECK(totally_real_lower_bound({2, 0, 1}) == 2);
  // binom(4, 2) * 2^2
  CHECK(totally_real_lower_bound({3, 3, 0}) == 24);
  CHECK_THROWS_AS(totally_real_lower_bound({4, 0, 1}), MathError);
}

TEST_CASE("quadratic refinement, exhaustive g <= 4") {
  for (unsigned g = 1; g <= 4; ++g) {
    const auto all = all_vectors(g);
    for (const auto& c : all)
      for (const auto& v : all)
        for (const auto& w : all) REQUIRE(qc(c, v + w) == (qc(c, v) + qc(c, w) + symplectic(v, w)) % 2);
  }
}

TEST_CASE("conjugation properties, exhaustive g <= 4") {
  for (const auto& t : types_up_to(4)) {
    const auto all = all_vectors(t.g);
    const auto h = conjugation_shift(t);
    for (const auto& v : all) {
      REQUIRE(sigma_apply(t, sigma_apply(t, v)) == v);
      REQUIRE(q0(sigma_apply(t, v)) == qc(h, v));
      for (const auto& w : all) REQUIRE(symplectic(sigma_apply(t, v), sigma_apply(t, w)) == symplectic(v, w));
    }
    // Real theta characteristics are the fixed points of conjugation on quadratic forms.
    for (const auto& c : all) {
      bool fixed = true;
      for (const auto& v : all) fixed = fixed && qc(c, sigma_apply(t, v)) == qc(c, v);
      CHECK_MESSAGE(is_real_theta(t, c) == fixed, t.str() << " " << c.str());
    }
    CHECK(GaloisMatrix::of(t).rank() == t.g - t.s);
  }
}

TEST_CASE("theta counts sum to the number of real characteristics") {
  for (const auto& t : types_up_to(5)) {
    long total = 0, real = 0;
    for (Bits u = 0; u < (Bits{1} << t.s); ++u)
      for (Bits e = 0; e < (Bits{1} << t.s); ++e) {
        const auto c = theta_counts(t, {u, e});
        total += c.even + c.odd;
      }
    for (const auto& c : all_vectors(t.g)) real += is_real_theta(t, c);
    CHECK(total == real);
    CHECK(real == (1L << (t.g + t.s)));
  }
}

TEST_CASE("odd signed sum is independent of nu, exhaustive g <= 5") {
  for (const auto& t : types_up_to(5)) {
    for (const auto& nu : all_vectors(t.g)) {
      if (!is_real_theta(t, nu)) continue;
      const Bits s_mask = (Bits{1} << t.s) - 1;
      if (t.a == 0 && (nu.upper & s_mask) == 0) {
        CHECK_THROWS_AS(odd_theta_signed_sum(t, nu), MathError);
        continue;
      }
      REQUIRE(odd_theta_signed_sum(t, nu) == (1L << (t.g - 1)));
    }
  }
}

TEST_CASE("Arf census") {
  for (unsigned g = 1; g <= 6; ++g) CHECK(arf_odd_census(g) == (1L << (g - 1)) * ((1L << g) - 1));
}
