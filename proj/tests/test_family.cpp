#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "posat/error.hpp"
#include "posat/family.hpp"
#include "posat/lowerbound.hpp"

using namespace posat;

namespace {

const std::vector<std::string> kSmallCatalog{"chain-2", "chain-3", "chain-4", "antichain-2", "antichain-3",
                                             "antichain-4", "V-2", "V-3", "Lambda-2", "Lambda-3",
                                             "diamond-2", "N", "butterfly", "Q"};

}  // namespace

TEST_CASE("family_from_sets") {
  CHECK(family_from_sets(3, {{}, {1}}).size() == 2);
  CHECK(family_from_sets(3, {{1}, {1}}).size() == 1);
  const Family q = family_from_sets(4, {{}, {1}, {2, 3, 4}, {1, 2, 3, 4}});
  CHECK(q.size() == 4);
  CHECK(q.contains(0));
  CHECK(q.contains(0b1110));
  CHECK_FALSE(q.contains(0b0010));
  CHECK_THROWS_AS(family_from_sets(3, {{0}}), Error);
  CHECK_THROWS_AS(family_from_sets(3, {{4}}), Error);
  CHECK_THROWS_AS(Family(3, {0b1000}), Error);
  CHECK_THROWS_AS(Family(31, {}), Error);
}

TEST_CASE("canonical order") {
  CHECK(canonical_less(mask_of({1, 4}), mask_of({2, 3})));
  CHECK(canonical_less(mask_of({3}), mask_of({1, 2})));
  CHECK(canonical_less(0, mask_of({1})));
  CHECK_FALSE(canonical_less(mask_of({2}), mask_of({2})));
  const Family f(3, {0b111, 0b011, 0b100, 0, 0b101, 0b001});
  CHECK(f.sets() == std::vector<Mask>{0, 0b001, 0b100, 0b011, 0b101, 0b111});
  // Strict weak order over all of B_4.
  for (Mask a = 0; a < 16; ++a)
    for (Mask b = 0; b < 16; ++b) {
      CHECK_FALSE((canonical_less(a, b) && canonical_less(b, a)));
      if (a != b) CHECK((canonical_less(a, b) || canonical_less(b, a)));
    }
  CHECK(elements_of(mask_of({1, 3, 5})) == std::vector<int>{1, 3, 5});
}

TEST_CASE("induced_poset_of") {
  CHECK(is_isomorphic(induced_poset_of(family_from_sets(3, {{}, {1}, {1, 2}})), named_poset("chain", 3)));
  CHECK(is_isomorphic(induced_poset_of(family_from_sets(2, {{}, {1}, {2}, {1, 2}})), named_poset("diamond", 2)));
  CHECK(is_isomorphic(induced_poset_of(family_from_sets(3, {{1}, {2}, {3}})), named_poset("antichain", 3)));
  CHECK(induced_poset_of(family_from_sets(3, {{1}, {1, 2}})).label(1) == "{1,2}");
}

TEST_CASE("weak copies") {
  const Family cube = family_from_sets(2, {{}, {1}, {2}, {1, 2}});
  CHECK(find_weak_copy(family_from_sets(3, {{1}, {2}, {1, 2}}), named_poset("antichain", 3)));
  const auto n = find_weak_copy(cube, named_poset("N"));
  REQUIRE(n);
  CHECK(is_valid_embedding(*n, named_poset("N")));
  CHECK_FALSE(find_weak_copy(family_from_sets(2, {{}}), named_poset("chain", 2)));
}

TEST_CASE("induced copies") {
  const Family cube = family_from_sets(2, {{}, {1}, {2}, {1, 2}});
  CHECK_FALSE(find_induced_copy(cube, named_poset("N")));
  const auto d = find_induced_copy(cube, named_poset("diamond", 2));
  REQUIRE(d);
  CHECK(d->mode == Mode::Induced);
  CHECK(is_valid_embedding(*d, named_poset("diamond", 2)));
  CHECK(d->images.front() == 0);
  CHECK(d->images.back() == 0b11);
}

TEST_CASE("complement") {
  CHECK(complement_family(family_from_sets(3, {{}})).sets() == std::vector<Mask>{0b111});
  const Family f = family_from_sets(4, {{1}, {2, 3}, {1, 2, 4}});
  CHECK(complement_family(complement_family(f)) == f);
}

TEST_CASE("embedding validator rejects bad maps") {
  const Poset chain = named_poset("chain", 2);
  CHECK(is_valid_embedding({Mode::Weak, {0b01, 0b11}}, chain));
  CHECK_FALSE(is_valid_embedding({Mode::Weak, {0b11, 0b01}}, chain));
  CHECK_FALSE(is_valid_embedding({Mode::Weak, {0b01, 0b01}}, chain));
  CHECK_FALSE(is_valid_embedding({Mode::Weak, {0b01}}, chain));
  const Poset anti = named_poset("antichain", 2);
  CHECK(is_valid_embedding({Mode::Weak, {0b01, 0b11}}, anti));
  CHECK_FALSE(is_valid_embedding({Mode::Induced, {0b01, 0b11}}, anti));
}

TEST_CASE("copy finders agree with the injection oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 4;
    const int size = 1 + static_cast<int>(rng() % 8);
    const auto masks = oracle::random_family_of_size(rng, n, size);
    const Family f(n, masks);
    const Poset p = named_poset(kSmallCatalog[static_cast<std::size_t>(trial) % kSmallCatalog.size()]);
    for (Mode mode : {Mode::Weak, Mode::Induced}) {
      const auto copy = find_copy(f.sets(), p, mode);
      CHECK(copy.has_value() == oracle::has_copy(f.sets(), p, mode));
      if (copy) {
        CHECK(copy->mode == mode);
        CHECK(is_valid_embedding(*copy, p));
        for (Mask m : copy->images) CHECK(f.contains(m));
      }
    }
  }
}

TEST_CASE("anchored search reports exactly the copies through the anchor") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 2;
    const auto masks = oracle::random_family_of_size(rng, n, 2 + static_cast<int>(rng() % 7));
    const Poset p = named_poset(kSmallCatalog[static_cast<std::size_t>(trial) % kSmallCatalog.size()]);
    const std::size_t anchor = rng() % masks.size();
    for (Mode mode : {Mode::Weak, Mode::Induced}) {
      const auto copy = find_copy(masks, p, mode, anchor);
      CHECK(copy.has_value() == oracle::has_copy_using(masks, masks[anchor], p, mode));
      if (copy) CHECK(std::find(copy->images.begin(), copy->images.end(), masks[anchor]) != copy->images.end());
    }
  }
}

TEST_CASE("random families: induced implies weak, chains and antichains") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const Family f(n, oracle::random_family(rng, n, 0.3));
    for (const auto& name : kSmallCatalog) {
      const Poset p = named_poset(name);
      if (find_induced_copy(f, p)) CHECK(find_weak_copy(f, p));
    }
    const int chain = oracle::longest_chain(f.sets());
    const int width = f.empty() ? 0 : dilworth_chain_cover(f).width();
    CHECK(width == oracle::max_antichain(f.sets()));
    for (int k = 1; k <= 5; ++k) {
      const Poset pk = named_poset("chain", k);
      CHECK(find_weak_copy(f, pk).has_value() == (chain >= k));
      CHECK(find_induced_copy(f, pk).has_value() == (chain >= k));
      const Poset ak = named_poset("antichain", k);
      CHECK(find_weak_copy(f, ak).has_value() == (static_cast<int>(f.size()) >= k));
      CHECK(find_induced_copy(f, ak).has_value() == (width >= k));
    }
  }
}

TEST_CASE("find_copy is deterministic") {
  const Family f = full_lattice(4);
  const Poset p = named_poset("butterfly");
  const auto a = find_induced_copy(f, p);
  const auto b = find_induced_copy(f, p);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->images == b->images);
  CHECK(full_lattice(3).size() == 8);
  CHECK_THROWS_AS(full_lattice(21), Error);
}
