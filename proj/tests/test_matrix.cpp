#include <doctest.h>

#include "rlcm/matrix.hpp"

using namespace rlcm;

TEST_CASE("determinant by fraction-free elimination") {
  CHECK(IntMatrix::from_rows({{2, 0}, {0, 3}}).det() == 6);
  CHECK(IntMatrix::from_rows({{1, 2}, {3, 4}}).det() == -2);
  CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}).det() == 0);
  CHECK(IntMatrix::from_rows({{0, 1}, {1, 0}}).det() == -1);
  CHECK(IntMatrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}).det() == 2 * (3 * 4 - 1) - 1 * 4);
}

TEST_CASE("matrix power and application") {
  IntMatrix a = IntMatrix::from_rows({{2, 1}, {0, 2}});
  IntMatrix a3 = a.pow(3);
  CHECK(a3 == a * a * a);
  CHECK(a.pow(0) == IntMatrix::identity(2));
  Vec v{Int(1), Int(1)};
  CHECK(a.apply(v) == Vec{Int(3), Int(2)});
}

TEST_CASE("characteristic polynomial") {
  CHECK(IntMatrix::from_rows({{2}}).charpoly() == std::vector<Int>{Int(-2), Int(1)});
  // diag(2,1): (x-1)(x-2) = x^2 - 3x + 2
  CHECK(IntMatrix::from_rows({{2, 0}, {0, 1}}).charpoly() == std::vector<Int>{Int(2), Int(-3), Int(1)});
  // companion of x^3 - 5: charpoly must recover it
  IntMatrix comp = IntMatrix::from_rows({{0, 0, 5}, {1, 0, 0}, {0, 1, 0}});
  CHECK(comp.charpoly() == std::vector<Int>{Int(-5), Int(0), Int(0), Int(1)});
}

TEST_CASE("commutation") {
  IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
  IntMatrix b = IntMatrix::from_rows({{5, 0}, {0, 7}});
  IntMatrix c = IntMatrix::from_rows({{2, 1}, {0, 2}});
  CHECK(commutes(a, b));
  CHECK(!commutes(a, c));
}
