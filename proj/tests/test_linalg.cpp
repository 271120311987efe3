#include "test_main.hpp"

#include "cmpreproj/errors.hpp"
#include "cmpreproj/matrix.hpp"

using namespace cmpreproj;

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.from_int(-1) == 6);
  CHECK_THROWS_AS(PrimeField(91), InvalidInput);
  CHECK_THROWS_AS(PrimeField(65537), InvalidInput);
}

TEST_CASE("rref over Q") {
  RationalField q;
  auto m = Matrix<RationalField>::from_ints(q, {{2, 4, 6}, {1, 2, 4}, {3, 6, 9}});
  auto r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<int>{0, 2});
  CHECK(r.m(0, 1) == mpq_class(2));
  CHECK(r.m(0, 2) == mpq_class(0));
  CHECK(rank(m.transpose()) == 2);
}

TEST_CASE("kernel, left kernel, solve") {
  RationalField q;
  auto m = Matrix<RationalField>::from_ints(q, {{1, 1, 0}, {0, 1, 1}});
  auto k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  auto v = k.basis().row(0);
  CHECK(v[0] + v[1] == 0);
  CHECK(v[1] + v[2] == 0);
  auto lk = left_kernel(Matrix<RationalField>::from_ints(q, {{1, 2}, {2, 4}}));
  CHECK(lk.dim() == 1);
  auto x = solve_linear(m, {mpq_class(1), mpq_class(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 1);
  CHECK((*x)[1] + (*x)[2] == 2);
  auto bad = Matrix<RationalField>::from_ints(q, {{1, 1}, {1, 1}});
  CHECK_FALSE(solve_linear(bad, {mpq_class(0), mpq_class(1)}).has_value());
}

TEST_CASE("inverse and left inverse mod p") {
  PrimeField f(101);
  auto m = Matrix<PrimeField>::from_ints(f, {{1, 2}, {3, 4}});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == Matrix<PrimeField>::identity(f, 2));
  auto tall = Matrix<PrimeField>::from_ints(f, {{1, 0}, {5, 1}, {2, 2}});
  auto s = left_inverse(tall);
  CHECK(s * tall == Matrix<PrimeField>::identity(f, 2));
  CHECK_FALSE(inverse(Matrix<PrimeField>::from_ints(f, {{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("subspaces") {
  PrimeField f(5);
  auto a = Subspace<PrimeField>::span(Matrix<PrimeField>::from_ints(f, {{1, 1, 0}}));
  auto b = Subspace<PrimeField>::span(Matrix<PrimeField>::from_ints(f, {{0, 1, 1}}));
  auto s = a.sum(b);
  CHECK(s.dim() == 2);
  CHECK(s.contains(std::vector<std::uint32_t>{1, 0, 4}));
  CHECK_FALSE(s.contains(std::vector<std::uint32_t>{1, 0, 0}));
  CHECK(s.contains(a));
  CHECK(s.non_pivot_columns() == std::vector<int>{2});
  auto rows = Matrix<PrimeField>::from_ints(f, {{2, 2, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(independent_rows_modulo(rows, a) == std::vector<int>{1});
}

TEST_CASE("multiplication agrees between fields") {
  PrimeField f(101);
  RationalField q;
  std::vector<std::vector<long long>> a{{1, -2, 3}, {4, 5, -6}}, b{{7, 8}, {-9, 10}, {11, 12}};
  auto pq = Matrix<RationalField>::from_ints(q, a) * Matrix<RationalField>::from_ints(q, b);
  auto pf = Matrix<PrimeField>::from_ints(f, a) * Matrix<PrimeField>::from_ints(f, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      long long v = pq(i, j).get_num().get_si();
      CHECK(pf(i, j) == f.from_int(v));
    }
}
