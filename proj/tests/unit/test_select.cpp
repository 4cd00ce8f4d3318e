#include <doctest.h>

#include <algorithm>
#include <vector>

#include "xysel/io_sim.hpp"
#include "xysel/rng.hpp"
#include "xysel/select.hpp"

using namespace xysel;

namespace {

KeyedBuffer items_from(const std::vector<double>& keys, IoSession* session = nullptr) {
  std::vector<KeyedItem> v;
  v.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    v.push_back(KeyedItem{ExtValue::finite(keys[i]), i});
  return KeyedBuffer(session, "test.items", std::move(v));
}

// Independent oracle: sort a copy, index it.
double sorted_kth(std::vector<double> keys, std::uint64_t k) {
  std::sort(keys.begin(), keys.end());
  return keys[k - 1];
}

}  // namespace

TEST_CASE("select_kth on small fixed sequences") {
  CHECK(select_kth(items_from({5, 1, 4, 2, 3}), 2) == ExtValue::finite(2));
  CHECK(select_kth(items_from({2, 2, 1}), 2) == ExtValue::finite(2));
  // sorted([7,3,9,1]) = [1,3,7,9]; rank 3 is 7
  CHECK(select_kth(items_from({7, 3, 9, 1}), 3) == ExtValue::finite(7));
  CHECK(select_kth(items_from({4}), 1) == ExtValue::finite(4));
}

TEST_CASE("select_kth over plain keys") {
  const std::vector<ExtValue> keys{ExtValue::finite(9), ExtValue::finite(-1),
                                   ExtValue::finite(4)};
  CHECK(select_kth(keys, 1) == ExtValue::finite(-1));
  CHECK(select_kth(keys, 3) == ExtValue::finite(9));
}

TEST_CASE("select_kth handles +inf keys") {
  std::vector<KeyedItem> v{{ExtValue::finite(1), 0},
                           {ExtValue::pos_inf(), 1},
                           {ExtValue::finite(0), 2},
                           {ExtValue::pos_inf(), 3}};
  const KeyedBuffer items(nullptr, "", std::move(v));
  CHECK(select_kth(items, 2) == ExtValue::finite(1));
  CHECK_FALSE(select_kth(items, 3).is_finite());
}

TEST_CASE("select_kth rejects out-of-range ranks") {
  CHECK_THROWS_AS(select_kth(items_from({1, 2, 3}), 0), std::out_of_range);
  CHECK_THROWS_AS(select_kth(items_from({1, 2, 3}), 4), std::out_of_range);
  CHECK_THROWS_AS(select_kth(items_from({}), 1), std::out_of_range);
}

TEST_CASE("select_kth agrees with the sort oracle on random sequences") {
  Rng rng(424242);
  int cases = 0;
  while (cases < 10000) {
    const std::size_t len = rng.uniform(1, 64);
    std::vector<double> keys;
    keys.reserve(len);
    const bool heavy_ties = rng.uniform01() < 0.4;
    for (std::size_t i = 0; i < len; ++i)
      keys.push_back(static_cast<double>(
          heavy_ties ? rng.uniform_int(0, 3) : rng.uniform_int(-1000, 1000)));
    const std::uint64_t k = rng.uniform(1, len);
    CHECK(select_kth(items_from(keys), k) == ExtValue::finite(sorted_kth(keys, k)));
    ++cases;
  }
}

TEST_CASE("partition3 splits into stable exhaustive classes") {
  auto [below, equal, above] = partition3(items_from({3, 1, 3, 2}), ExtValue::finite(3));
  REQUIRE(below.size() == 2);
  REQUIRE(equal.size() == 2);
  CHECK(above.size() == 0);
  CHECK(below.raw()[0].key == ExtValue::finite(1));
  CHECK(below.raw()[1].key == ExtValue::finite(2));
  CHECK(equal.raw()[0].payload == 0);  // first 3 came first
  CHECK(equal.raw()[1].payload == 2);

  auto [b2, e2, a2] = partition3(items_from({}), ExtValue::finite(0));
  CHECK(b2.size() == 0);
  CHECK(e2.size() == 0);
  CHECK(a2.size() == 0);

  auto [b3, e3, a3] = partition3(items_from({5, 4}), ExtValue::finite(1));
  CHECK(b3.size() == 0);
  CHECK(e3.size() == 0);
  REQUIRE(a3.size() == 2);
  CHECK(a3.raw()[0].key == ExtValue::finite(5));  // input order kept
  CHECK(a3.raw()[1].key == ExtValue::finite(4));
}

TEST_CASE("partition3 is a stable permutation of its input") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = rng.uniform(0, 40);
    std::vector<double> keys;
    for (std::size_t i = 0; i < len; ++i) keys.push_back(static_cast<double>(rng.uniform_int(0, 6)));
    const ExtValue pivot = ExtValue::finite(static_cast<double>(rng.uniform_int(0, 6)));
    auto [below, equal, above] = partition3(items_from(keys), pivot);
    CHECK(below.size() + equal.size() + above.size() == len);
    for (const KeyedItem& it : below.raw()) CHECK(it.key < pivot);
    for (const KeyedItem& it : equal.raw()) CHECK(it.key == pivot);
    for (const KeyedItem& it : above.raw()) CHECK(it.key > pivot);
    // Payloads hold input positions; stability means ascending payloads.
    for (const auto* cls : {&below, &equal, &above})
      for (std::size_t i = 1; i < cls->size(); ++i)
        CHECK(cls->raw()[i - 1].payload < cls->raw()[i].payload);
  }
}
