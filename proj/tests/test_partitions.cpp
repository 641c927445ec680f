#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <klm/errors.hpp>
#include <klm/partition.hpp>

#include <algorithm>

using namespace klm;

TEST_CASE("construction and validation") {
  const Partition p({3, 2});
  CHECK(p.weight() == 5);
  CHECK(p.length() == 2);
  CHECK(Partition().weight() == 0);
  CHECK(Partition().empty());
  CHECK_THROWS_AS(Partition({2, 3}), InvalidPartitionError);
  CHECK_THROWS_AS(Partition({3, 0}), InvalidPartitionError);
  CHECK_THROWS_AS(Partition({-1}), InvalidPartitionError);
}

TEST_CASE("conjugation") {
  CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
}

TEST_CASE("hook lengths") {
  CHECK(Partition({4}).hook_lengths() == std::vector<int>{4, 3, 2, 1});
  CHECK(Partition({2, 2}).hook_lengths() == std::vector<int>{3, 2, 2, 1});
  CHECK(Partition({3, 2}).hook_lengths() == std::vector<int>{4, 3, 1, 2, 1});
}

TEST_CASE("hook multiset is conjugation invariant") {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      auto a = lambda.hook_lengths();
      auto b = lambda.conjugate().hook_lengths();
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("symmetric group dimensions") {
  CHECK(dim_symmetric(Partition()) == 1);
  CHECK(dim_symmetric(Partition({6})) == 1);
  CHECK(dim_symmetric(Partition({2, 2})) == 2);
  CHECK(dim_symmetric(Partition({3, 2})) == 5);
  CHECK(dim_symmetric(Partition({1, 1, 1, 1})) == 1);
}

TEST_CASE("unipotent dimensions") {
  CHECK(dim_unipotent(Partition({7})) == QPoly(1));
  // q^2 + q^4
  CHECK(dim_unipotent(Partition({2, 2})) ==
        QPoly({BigInt(0), BigInt(0), BigInt(1), BigInt(0), BigInt(1)}));
  // q^2 [5]_q
  CHECK(dim_unipotent(Partition({3, 2})) == q_int(5).shifted(2));
  // q^3 [3]_q
  CHECK(dim_unipotent(Partition({2, 1, 1})) == q_int(3).shifted(3));
}

TEST_CASE("unipotent dimension degenerates to hook formula at q = 1") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& lambda : partitions_of(n))
      CHECK(evaluate(dim_unipotent(lambda), 1) == dim_symmetric(lambda));
}

TEST_CASE("dimension is conjugation invariant") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& lambda : partitions_of(n))
      CHECK(dim_symmetric(lambda) == dim_symmetric(lambda.conjugate()));
}

TEST_CASE("squares of dimensions sum to n!") {
  for (int n = 0; n <= 8; ++n) {
    BigInt sum = 0;
    for (const auto& lambda : partitions_of(n)) {
      const BigInt d = dim_symmetric(lambda);
      sum += d * d;
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("unipotent dimension trailing power") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const QPoly d = dim_unipotent(lambda);
      for (const auto& c : d.coeffs()) CHECK(c >= 0);
      if (lambda.length() > 1) {
        CHECK(d.coeff(0) == 0);
      } else {
        CHECK(d == QPoly(1));
      }
    }
  }
}

TEST_CASE("partition enumeration") {
  const auto empty = partitions_of(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  const auto three = partitions_of(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Partition({3}));
  CHECK(three[1] == Partition({2, 1}));
  CHECK(three[2] == Partition({1, 1, 1}));

  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(10).size() == 42);
  CHECK_THROWS_AS(partitions_of(kMaxPartitionWeight + 1), ResourceLimitError);
}

TEST_CASE("lexicographic ordering") {
  CHECK(Partition({2, 1}) < Partition({3}));
  CHECK(Partition({2, 2}) < Partition({3, 1}));
  CHECK(Partition() < Partition({1}));
}

TEST_CASE("hook partitions") {
  CHECK(hook_partition(5, 0) == Partition({5}));
  CHECK(hook_partition(5, 2) == Partition({3, 1, 1}));
  CHECK(hook_partition(3, 2) == Partition({1, 1, 1}));
  CHECK_THROWS_AS(hook_partition(3, 3), InvalidArgumentError);
}
