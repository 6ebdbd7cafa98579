#include <doctest.h>

#include "ind4/enumerate.hpp"

using namespace ind4;

TEST_CASE("class counts for small n") {
  CHECK(enumerate_class_keys(1).size() == 1);
  CHECK(enumerate_class_keys(2).size() == 2);
  CHECK(enumerate_class_keys(3).size() == 7);
  CHECK(enumerate_class_keys(4).size() == 42);
}

TEST_CASE("augmentation agrees with the naive dedup oracle") {
  CHECK(enumerate_class_keys(3) == enumerate_class_keys_naive(3));
  CHECK(enumerate_class_keys(4) == enumerate_class_keys_naive(4));
  CHECK(enumerate_class_keys(5) == enumerate_class_keys_naive(5));
}

TEST_CASE("n = 5 yields 582 classes") { CHECK(enumerate_class_keys(5).size() == 582); }

// the n = 6 count was recorded from one run of enumerate_class_keys_naive(6)
TEST_CASE("n = 6 yields 21480 classes") { CHECK(enumerate_class_keys(6).size() == 21480); }

TEST_CASE("enumeration rejects out-of-range n") {
  CHECK_THROWS(enumerate_class_keys(0));
  CHECK_THROWS(enumerate_class_keys(8));
}
