#include <doctest.h>

#include <stdexcept>

#include "preper/dynamics.hpp"

using namespace preper;

namespace {
Rational rat(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("quadratic map evaluates exactly") {
  QuadMap f{rat(5, 36)};
  CHECK(f(rat(1, 6)) == rat(1, 6));    // fixed point
  CHECK(f(rat(5, 6)) == rat(5, 6));    // fixed point
  CHECK(f(rat(-1, 6)) == rat(1, 6));
  CHECK(f(rat(7, 6)) == rat(3, 2));    // leaves the 1/6 grid

  QuadMap g{rat(-2)};
  CHECK(g(rat(0)) == rat(-2));
  CHECK(g(rat(-2)) == rat(2));
  CHECK(g(rat(2)) == rat(2));
}

TEST_CASE("monic polynomial evaluation and validation") {
  MonicPoly q = MonicPoly::quadratic(rat(5, 36));
  CHECK(q.degree() == 2);
  CHECK(q.evaluate(rat(1, 6)) == rat(1, 6));
  CHECK(q.evaluate(rat(-1, 2)) == rat(1, 4) + rat(5, 36));

  MonicPoly cubic({rat(1), rat(2), rat(0)});  // z^3 + 2z + 1
  CHECK(cubic.degree() == 3);
  CHECK(cubic.evaluate(rat(2)) == rat(13));
  CHECK(cubic.evaluate(rat(-1)) == rat(-2));

  CHECK_THROWS_AS(MonicPoly({}), std::invalid_argument);
  CHECK_THROWS_AS(MonicPoly({rat(1)}), std::invalid_argument);
}

TEST_CASE("orbit detection splits tail and cycle") {
  auto all = [](const Rational&) { return true; };

  QuadMap f0{rat(0)};
  auto o = orbit_detect(f0, rat(0), all);
  REQUIRE(o.has_value());
  CHECK(o->tail.empty());
  CHECK(o->cycle == std::vector<Rational>{rat(0)});
  CHECK(orbit_type(*o) == std::pair<std::size_t, std::size_t>{1, 0});

  auto o2 = orbit_detect(f0, rat(-1), all);
  REQUIRE(o2.has_value());
  CHECK(o2->tail == std::vector<Rational>{rat(-1)});
  CHECK(o2->cycle == std::vector<Rational>{rat(1)});
  CHECK(orbit_type(*o2) == std::pair<std::size_t, std::size_t>{1, 1});

  QuadMap fm1{rat(-1)};
  auto o3 = orbit_detect(fm1, rat(1), all);
  REQUIRE(o3.has_value());
  CHECK(o3->tail == std::vector<Rational>{rat(1)});
  CHECK(o3->cycle == std::vector<Rational>{rat(0), rat(-1)});
  CHECK(orbit_type(*o3) == std::pair<std::size_t, std::size_t>{2, 1});

  QuadMap fm2{rat(-2)};
  auto o4 = orbit_detect(fm2, rat(0), all);
  REQUIRE(o4.has_value());
  CHECK(o4->tail == std::vector<Rational>{rat(0), rat(-2)});
  CHECK(o4->cycle == std::vector<Rational>{rat(2)});
  CHECK(orbit_type(*o4) == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("orbit detection reports escape") {
  QuadMap f{rat(0)};
  auto small = [](const Rational& x) { return abs(x) <= rat(2); };
  CHECK(!orbit_detect(f, rat(2), small).has_value());  // 2 -> 4 leaves
  CHECK(orbit_detect(f, rat(1), small).has_value());

  // The very first point can already be outside.
  CHECK(!orbit_detect(f, rat(3), small).has_value());
}
