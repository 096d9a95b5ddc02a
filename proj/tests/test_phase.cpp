#include "doctest.h"

#include "ghol/phase.hpp"
#include "ghol/rational.hpp"

using namespace ghol;

TEST_CASE("rational arithmetic stays reduced") {
  Rat a(1, 3), b(1, 4);
  CHECK(a + b == Rat(7, 12));
  CHECK(a - b == Rat(1, 12));
  CHECK(a * b == Rat(1, 12));
  CHECK((a / b) == Rat(4, 3));
  CHECK(Rat(6, 8) == Rat(3, 4));
  CHECK(Rat(-1, 2).mod1() == Rat(1, 2));
  CHECK(Rat(7, 3).mod1() == Rat(1, 3));
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-2") == Rat(-2));
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("phases add mod one turn, exact wins") {
  Phase third = Phase::turns(Rat(1, 3));
  Phase quarter = Phase::turns(Rat(1, 4));
  CHECK((third + quarter).exact_turns() == Rat(7, 12));
  CHECK((third + third + third).is_zero());
  CHECK((-third).exact_turns() == Rat(2, 3));
  CHECK(third.times(4).exact_turns() == Rat(1, 3));

  Phase f = Phase::radians(2.0943951023931953);  // 2*pi/3
  CHECK(f.approx_equal(third, 1e-9));
  CHECK(f == third);
  CHECK((f + quarter).approx_equal(Phase::turns(Rat(7, 12)), 1e-9));
  CHECK_FALSE((f + quarter).is_exact());
}

TEST_CASE("phase wraps near the seam") {
  Phase a = Phase::turns(0.99999999999);
  Phase b = Phase::turns(0.00000000001);
  CHECK(a == b);
  CHECK(Phase::turns(Rat(1, 2)).str() == "1/2 turns");
}
