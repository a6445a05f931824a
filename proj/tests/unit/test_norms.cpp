#include <doctest.h>

#include "fibsum/errors.hpp"
#include "fibsum/norms.hpp"
#include "fibsum/roots.hpp"

using namespace fibsum;

TEST_CASE("Delta golden values") {
  CHECK(delta_closed_form(2) == -5);
  CHECK(delta_closed_form(3) == -88);
  CHECK(delta_closed_form(4) == -1689);
  CHECK(delta_closed_form(5) == -38336);
  CHECK(delta_closed_form(6) == -1029685);
  CHECK(delta_resultant(2) == -5);
  CHECK(delta_resultant(3) == 88);
  CHECK(delta_recursion(2) == -5);
  CHECK(delta_recursion(3) == 88);
}

TEST_CASE("three oracles agree") {
  for (int k = 2; k <= 30; ++k) {
    const BigInt closed = delta_closed_form(k);
    const BigInt res = delta_resultant(k);
    CHECK(delta_recursion(k) == res);
    CHECK(res == (k % 2 == 0 ? closed : BigInt(-closed)));
  }
}

TEST_CASE("norm equals the product over conjugates") {
  for (int k = 2; k <= 8; ++k) {
    const RootSet rs = all_roots(k, 256);
    ComplexBox prod(Interval(1L, 256));
    for (const auto& z : rs.roots) {
      prod = prod * (z * Interval(static_cast<long>(k + 1), 256) - Interval(2L * k, 256));
    }
    CHECK(prod.re.contains(delta_resultant(k)));
    CHECK(prod.im.contains(BigInt(0)));
  }
}

TEST_CASE("p-adic valuation") {
  CHECK(padic_val(5, delta_closed_form(6)) == 1);
  CHECK(padic_val(2, BigInt(96)) == 5);
  CHECK(padic_val(3, BigInt(-81)) == 4);
  CHECK(padic_val(7, BigInt(10)) == 0);
  CHECK_THROWS_AS(padic_val(5, BigInt(0)), DomainError);
  CHECK_THROWS_AS(padic_val(6, BigInt(12)), DomainError);
  for (int k : {6, 11, 16, 21, 26, 51, 101, 126}) {
    CHECK(padic_val(5, delta_closed_form(k)) == padic_val(5, BigInt(k - 1)));
  }
}

TEST_CASE("mod 25 scan and periodicity") {
  const auto entries = mod25_scan(2, 100);
  CHECK(entries.size() == 99);
  CHECK(entries[0].residue == 20);
  CHECK(entries[1].residue == 12);
  for (const auto& e : entries) {
    CHECK_FALSE(e.flagged);
    if (e.k % 5 != 1) {
      CHECK(e.residue != 0);
    }
    CHECK(e.residue == static_cast<unsigned>(mpz_class(((delta_closed_form(e.k) % 25) + 25) % 25).get_ui()));
    CHECK(periodicity_check(e.k));
  }
}
