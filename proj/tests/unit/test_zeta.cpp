#include <cmath>

#include "doctest.h"
#include "fraczeta/zeta.hpp"

using namespace fraczeta;

namespace {
double rel(const Complex& got, const Complex& want) {
  return std::abs(got - want) / std::abs(want);
}
}  // namespace

TEST_CASE("hurwitz zeta classical values") {
  CHECK(rel(hurwitz_zeta({2.0, 0.0}, 1.0, 0).value, {kPi * kPi / 6.0, 0.0}) < 1e-13);
  CHECK(rel(hurwitz_zeta({-1.0, 0.0}, 1.0, 0).value, {-1.0 / 12.0, 0.0}) < 1e-12);
  CHECK(rel(hurwitz_zeta({0.0, 0.0}, 1.0, 1).value, {-0.91893853320467274, 0.0}) < 1e-12);
  CHECK(rel(hurwitz_zeta({3.0, 0.0}, 0.5, 0).value, {8.41439832211716, 0.0}) < 1e-13);
}

TEST_CASE("hurwitz zeta golden values") {
  CHECK(rel(hurwitz_zeta({-1.5, 0.0}, 0.3, 0).value,
            {-0.0081855604858359745, 0.0}) < 1e-10);
  CHECK(rel(hurwitz_zeta({-2.5, 1.0}, 0.25, 0).value,
            {-0.0042395052613950671, -0.022556433627766675}) < 1e-10);
  CHECK(rel(hurwitz_zeta({-2.5, 1.0}, 0.25, 2).value,
            {-0.034823566147540277, 0.02403972793877629}) < 1e-10);
  CHECK(rel(hurwitz_zeta({4.0, 0.0}, 0.7, 3).value,
            {0.11301921582166105, 0.0}) < 1e-12);
  CHECK(rel(hurwitz_zeta({4.0, 0.0}, 1.0, 1).value,
            {-0.06891126589612538, 0.0}) < 1e-12);
  CHECK(rel(hurwitz_zeta({1.5, 0.0}, 1.0, 0).value,
            {2.6123753486854883, 0.0}) < 1e-13);
  CHECK(rel(hurwitz_zeta({6.0, 0.0}, 1.0, 0).value,
            {1.0173430619844491, 0.0}) < 1e-13);
}

TEST_CASE("hurwitz zeta domain and pole") {
  CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, 0.0, 0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, 1.5, 0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta({1.0, 0.0}, 1.0, 0), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, 1.0, 31), OrderCapError);
  // residue 1 at s = 1
  Complex near = hurwitz_zeta({1.0 + 1e-4, 0.0}, 0.6, 0).value;
  CHECK(std::abs((1e-4) * near - 1.0) < 1e-3);
}

TEST_CASE("hurwitz zeta conjugation") {
  for (double a : {0.3, 0.8, 1.0}) {
    for (int l : {0, 1, 3}) {
      Complex s(-1.7, 2.2);
      Complex lhs = hurwitz_zeta(std::conj(s), a, l).value;
      Complex rhs = std::conj(hurwitz_zeta(s, a, l).value);
      CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("periodic log series examples") {
  SeriesBudget b;
  // a = 1, l = 0: reduces to zeta(1 - s)
  auto r = periodic_log_series({-2.0, 0.0}, 1.0, 0, TrigKind::Cos, b);
  CHECK(rel(r.value, {1.2020569031595943, 0.0}) < 1e-13);
  auto rs = periodic_log_series({-2.0, 0.0}, 1.0, 0, TrigKind::Sin, b);
  CHECK(rs.value == Complex(0.0, 0.0));
  // alternating case a = 1/2: -(3/4) zeta(3)
  auto ra = periodic_log_series({-2.0, 0.0}, 0.5, 0, TrigKind::Cos, b);
  CHECK(rel(ra.value, {-0.90154267736969571, 0.0}) < 1e-13);
}

TEST_CASE("periodic log series golden values") {
  SeriesBudget b;
  CHECK(rel(periodic_log_series({-2.5, 0.0}, 0.25, 0, TrigKind::Cos, b).value,
            {-0.081984928094725296, 0.0}) < 1e-12);
  CHECK(rel(periodic_log_series({-2.5, 0.0}, 0.25, 0, TrigKind::Sin, b).value,
            {0.98140251127144056, 0.0}) < 1e-12);
  CHECK(rel(periodic_log_series({-2.5, 0.0}, 0.25, 3, TrigKind::Cos, b).value,
            {-0.015624754546658849, 0.0}) < 1e-11);
  CHECK(rel(periodic_log_series({-1.5, -1.0}, 0.7, 2, TrigKind::Sin, b).value,
            {0.047178873483110927, -0.03271565119278625}) < 1e-11);
  CHECK(rel(periodic_log_series({-0.5, 0.0}, 0.75, 1, TrigKind::Cos, b).value,
            {-0.14201700602012884, 0.0}) < 1e-11);
  CHECK(rel(periodic_log_series({-3.5, 0.0}, 1.0, 2, TrigKind::Cos, b).value,
            {0.03837053234350637, 0.0}) < 1e-11);
}

TEST_CASE("periodic log series domain") {
  SeriesBudget b;
  CHECK_THROWS_AS(periodic_log_series({0.5, 0.0}, 1.0, 0, TrigKind::Cos, b),
                  DomainError);
  CHECK_THROWS_AS(periodic_log_series({-2.0, 0.0}, 1.2, 0, TrigKind::Cos, b),
                  DomainError);
}

TEST_CASE("classical functional equation vs continuation") {
  SeriesBudget b;
  CHECK(std::abs(classical_fe_hurwitz({-1.5, 0.0}, 1.0, b).value -
                 hurwitz_zeta({-1.5, 0.0}, 1.0, 0).value) < 1e-10);
  // trivial zero at s = -2
  CHECK(std::abs(classical_fe_hurwitz({-2.0, 0.0}, 1.0, b).value) < 1e-14);
  CHECK(std::abs(classical_fe_hurwitz({-1.5, 0.0}, 0.3, b).value -
                 hurwitz_zeta({-1.5, 0.0}, 0.3, 0).value) < 1e-9);
  // Eq. 4 reflection through the a = 1 reduction, a few spot points
  for (Complex s : {Complex(-0.7, 0.9), Complex(-2.3, -1.4), Complex(-3.1, 0.0)}) {
    Complex lhs = hurwitz_zeta(s, 1.0, 0).value;
    Complex rhs = classical_fe_hurwitz(s, 1.0, b).value;
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
  }
}
