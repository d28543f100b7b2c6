// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "posat/posat.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  posat_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(posat_version()) > 0);
  CHECK(std::string(posat_status_name(POSAT_OK)) == "ok");
  CHECK(std::string(posat_status_name(POSAT_ERR_INSTANCE_TOO_LARGE)) == "instance-too-large");
}

TEST_CASE("poset handles") {
  posat_poset* p = nullptr;
  REQUIRE(posat_poset_named("diamond-2", 0, &p) == POSAT_OK);
  CHECK(posat_poset_size(p) == 4);
  size_t count = 0;
  REQUIRE(posat_poset_covers(p, nullptr, 0, &count) == POSAT_OK);
  CHECK(count == 4);
  std::vector<int> pairs(2 * count);
  REQUIRE(posat_poset_covers(p, pairs.data(), count, &count) == POSAT_OK);
  CHECK(pairs[0] == 0);

  int holds = 0, in_class = 0, violating = 7;
  REQUIRE(posat_poset_check_uctp(p, &holds, &in_class, &violating) == POSAT_OK);
  CHECK(holds == 1);
  CHECK(in_class == 1);
  CHECK(violating == -1);

  posat_poset* d = nullptr;
  REQUIRE(posat_poset_dual(p, &d) == POSAT_OK);
  int found = 0;
  std::vector<int> perm(4);
  REQUIRE(posat_poset_isomorphic(p, d, &found, perm.data()) == POSAT_OK);
  CHECK(found == 1);

  char* json = nullptr;
  REQUIRE(posat_poset_to_json(p, &json) == POSAT_OK);
  posat_poset* back = nullptr;
  REQUIRE(posat_poset_from_json(json, &back) == POSAT_OK);
  posat_string_free(json);
  REQUIRE(posat_poset_isomorphic(p, back, &found, nullptr) == POSAT_OK);
  CHECK(found == 1);

  char* dot = nullptr;
  REQUIRE(posat_poset_to_dot(p, &dot) == POSAT_OK);
  CHECK(take(dot).find("digraph") != std::string::npos);

  posat_poset_free(back);
  posat_poset_free(d);
  posat_poset_free(p);
  posat_poset_free(nullptr);
}

TEST_CASE("poset errors carry status and message") {
  posat_poset* p = nullptr;
  const int cyc[] = {0, 1, 1, 0};
  CHECK(posat_poset_from_covers(2, cyc, 2, &p) == POSAT_ERR_CYCLE);
  CHECK(p == nullptr);
  CHECK(std::strlen(posat_last_error()) > 0);
  CHECK(posat_poset_named("heptagon", 0, &p) == POSAT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(posat_last_error()).find("heptagon") != std::string::npos);
  CHECK(posat_poset_from_json("{oops", &p) == POSAT_ERR_PARSE);
  CHECK(posat_poset_named(nullptr, 0, &p) == POSAT_ERR_INVALID_ARGUMENT);
  CHECK(posat_poset_named("V", 3, nullptr) == POSAT_ERR_INVALID_ARGUMENT);
  const int ok_pairs[] = {0, 1};
  REQUIRE(posat_poset_from_covers(2, ok_pairs, 1, &p) == POSAT_OK);
  posat_poset_free(p);
}

TEST_CASE("error messages are per thread") {
  posat_poset* p = nullptr;
  CHECK(posat_poset_named("heptagon", 0, &p) != POSAT_OK);
  std::string other;
  std::thread t([&] { other = posat_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::string(posat_last_error()).find("heptagon") != std::string::npos);
}

TEST_CASE("families, copies and saturation") {
  const uint32_t q[] = {0x0, 0x1, 0xE, 0xF};
  posat_family* f = nullptr;
  REQUIRE(posat_family_from_masks(4, q, 4, &f) == POSAT_OK);
  CHECK(posat_family_ground(f) == 4);
  CHECK(posat_family_size(f) == 4);
  uint32_t out[8] = {};
  CHECK(posat_family_masks(f, out, 8) == 4);
  CHECK(out[2] == 0xE);

  posat_poset* qp = nullptr;
  REQUIRE(posat_poset_named("Q", 0, &qp) == POSAT_OK);
  int sat = 0;
  REQUIRE(posat_is_saturated(f, qp, POSAT_INDUCED, &sat) == POSAT_OK);
  CHECK(sat == 1);
  uint32_t* witnesses = nullptr;
  size_t count = 99;
  REQUIRE(posat_unsaturated_witnesses(f, qp, POSAT_INDUCED, &witnesses, &count) == POSAT_OK);
  CHECK(count == 0);
  posat_masks_free(witnesses);

  posat_poset* chain = nullptr;
  REQUIRE(posat_poset_named("chain", 2, &chain) == POSAT_OK);
  int found = 0;
  uint32_t images[2] = {};
  REQUIRE(posat_find_copy(f, chain, POSAT_WEAK, &found, images) == POSAT_OK);
  CHECK(found == 1);
  CHECK((images[0] & ~images[1]) == 0);
  char* emb = nullptr;
  REQUIRE(posat_find_copy_json(f, chain, POSAT_WEAK, &emb) == POSAT_OK);
  CHECK(take(emb).find("\"map\"") != std::string::npos);
  int is_free = 1;
  REQUIRE(posat_is_free(f, chain, POSAT_WEAK, &is_free) == POSAT_OK);
  CHECK(is_free == 0);
  CHECK(posat_unsaturated_witnesses(f, chain, POSAT_WEAK, &witnesses, &count) == POSAT_ERR_NOT_FREE);
  CHECK(posat_is_free(f, chain, static_cast<posat_mode>(5), &is_free) == POSAT_ERR_INVALID_ARGUMENT);

  posat_family* c = nullptr;
  REQUIRE(posat_family_complement(f, &c) == POSAT_OK);
  CHECK(posat_family_size(c) == 4);
  posat_poset* induced = nullptr;
  REQUIRE(posat_family_induced_poset(f, &induced) == POSAT_OK);
  CHECK(posat_poset_size(induced) == 4);

  char* json = nullptr;
  REQUIRE(posat_family_to_json(f, &json) == POSAT_OK);
  CHECK(std::string(json) == R"({"n":4,"sets":[[],[1],[2,3,4],[1,2,3,4]]})");
  posat_family* back = nullptr;
  REQUIRE(posat_family_from_json(json, &back) == POSAT_OK);
  posat_string_free(json);
  CHECK(posat_family_size(back) == 4);

  const uint32_t bad[] = {0x10};
  posat_family* g = nullptr;
  CHECK(posat_family_from_masks(4, bad, 1, &g) != POSAT_OK);

  posat_family_free(back);
  posat_poset_free(induced);
  posat_family_free(c);
  posat_poset_free(chain);
  posat_poset_free(qp);
  posat_family_free(f);
}

TEST_CASE("search through the C API") {
  posat_poset* p = nullptr;
  REQUIRE(posat_poset_named("V-2", 0, &p) == POSAT_OK);
  posat_search_options opts;
  posat_search_options_init(&opts);
  CHECK(opts.max_size == -1);
  CHECK(opts.symmetry == 1);
  CHECK(opts.max_n == 5);
  posat_result* r = nullptr;
  REQUIRE(posat_search(3, p, POSAT_INDUCED, &opts, &r) == POSAT_OK);
  CHECK(posat_result_value(r) == 4);
  CHECK(posat_result_exhaustive(r) == 1);
  CHECK(posat_result_families_examined(r) > 0);
  CHECK(posat_result_wall_time(r) >= 0.0);
  posat_family* cert = posat_result_certificate(r);
  REQUIRE(cert != nullptr);
  int sat = 0;
  REQUIRE(posat_is_saturated(cert, p, POSAT_INDUCED, &sat) == POSAT_OK);
  CHECK(sat == 1);
  char* json = nullptr;
  REQUIRE(posat_result_to_json(r, &json) == POSAT_OK);
  CHECK(take(json).find("\"value\":4") != std::string::npos);
  posat_family_free(cert);
  posat_result_free(r);

  // Defaults when opts is NULL, and the extremes restriction.
  REQUIRE(posat_search(3, p, POSAT_WEAK, nullptr, &r) == POSAT_OK);
  CHECK(posat_result_value(r) == 2);
  posat_result_free(r);
  const uint32_t excluded[] = {0x0, 0x7};
  opts.excluded = excluded;
  opts.excluded_count = 2;
  posat_poset* d = nullptr;
  REQUIRE(posat_poset_named("diamond-2", 0, &d) == POSAT_OK);
  REQUIRE(posat_search(3, d, POSAT_INDUCED, &opts, &r) == POSAT_OK);
  cert = posat_result_certificate(r);
  if (cert) {
    uint32_t sets[8];
    const size_t n = posat_family_masks(cert, sets, 8);
    for (size_t i = 0; i < n; ++i) CHECK((sets[i] != 0x0 && sets[i] != 0x7));
    posat_family_free(cert);
  }
  posat_result_free(r);
  posat_poset_free(d);

  opts.excluded = nullptr;
  opts.excluded_count = 0;
  CHECK(posat_search(6, p, POSAT_INDUCED, &opts, &r) == POSAT_ERR_INSTANCE_TOO_LARGE);
  opts.max_size = 2;
  REQUIRE(posat_search(3, p, POSAT_INDUCED, &opts, &r) == POSAT_OK);
  CHECK(posat_result_value(r) == -1);
  CHECK(posat_result_certificate(r) == nullptr);
  posat_result_free(r);
  posat_poset_free(p);
}

TEST_CASE("constructions through the C API") {
  posat_family* f = nullptr;
  char* side = nullptr;
  REQUIRE(posat_construct("butterfly", 5, 0, 0, nullptr, 1, &f, &side) == POSAT_OK);
  CHECK(posat_family_size(f) == 19);
  const std::string sidecar = take(side);
  CHECK(sidecar.find("\"verified\":true") != std::string::npos);
  CHECK(sidecar.find("\"expected_size\":19") != std::string::npos);
  posat_family_free(f);
  REQUIRE(posat_construct("weaksat", 4, 0, 0, "N", 1, &f, nullptr) == POSAT_OK);
  CHECK(posat_family_size(f) == 3);
  posat_family_free(f);
  CHECK(posat_construct("weaksat", 4, 0, 0, nullptr, 1, &f, nullptr) == POSAT_ERR_INVALID_ARGUMENT);
  CHECK(posat_construct("chains", 2, 2, 0, nullptr, 1, &f, nullptr) == POSAT_ERR_INVALID_ARGUMENT);
  CHECK(posat_construct(nullptr, 2, 2, 0, nullptr, 1, &f, nullptr) == POSAT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("lower-bound machinery through the C API") {
  int value = 0;
  char* cover = nullptr;
  REQUIRE(posat_bc_exact_json(R"({"n":8,"edges":[[1,2],[1,3],[1,4],[1,5],[1,6],[1,7],[1,8],[2,3],[2,4],[2,5],
    [2,6],[2,7],[2,8],[3,4],[3,5],[3,6],[3,7],[3,8],[4,5],[4,6],[4,7],[4,8],[5,6],[5,7],[5,8],[6,7],[6,8],[7,8]]})",
                              &value, &cover) == POSAT_OK);
  CHECK(value == 3);
  CHECK(take(cover).find("\"bicliques\"") != std::string::npos);
  CHECK(posat_bc_exact_json(R"({"n":3,"edges":[[2,1]]})", &value, nullptr) == POSAT_ERR_PARSE);
  CHECK(posat_bc_exact_json(R"({"n":11,"edges":[]})", &value, nullptr) == POSAT_ERR_INSTANCE_TOO_LARGE);

  const uint32_t sets[] = {0x1, 0x2};
  posat_family* f = nullptr;
  REQUIRE(posat_family_from_masks(3, sets, 2, &f) == POSAT_OK);
  char* g = nullptr;
  REQUIRE(posat_separability_graph_json(f, &g) == POSAT_OK);
  CHECK(take(g) == R"({"edges":[[1,2],[1,3],[2,3]],"n":3})");
  REQUIRE(posat_separability_graph_dot(f, &g) == POSAT_OK);
  CHECK(take(g).find("graph") != std::string::npos);
  int all = 0, x = 0, y = 0;
  REQUIRE(posat_separates_all_pairs(f, &all, &x, &y) == POSAT_OK);
  CHECK(all == 1);
  int bound = 0;
  REQUIRE(posat_family_size_lower_bound(f, &bound) == POSAT_OK);
  CHECK(bound == 2);
  int width = 0;
  char* chains = nullptr;
  REQUIRE(posat_dilworth_json(f, &width, &chains) == POSAT_OK);
  CHECK(width == 2);
  posat_string_free(chains);
  posat_pair_kind kind{};
  CHECK(posat_pair_profile(f, 1, 2, &kind) == POSAT_ERR_SEPARATED);
  posat_family_free(f);

  const uint32_t ext[] = {0x0, 0x7};
  REQUIRE(posat_family_from_masks(3, ext, 2, &f) == POSAT_OK);
  REQUIRE(posat_separates_all_pairs(f, &all, &x, &y) == POSAT_OK);
  CHECK(all == 0);
  CHECK(x == 1);
  CHECK(y == 2);
  REQUIRE(posat_pair_profile(f, 1, 2, &kind) == POSAT_OK);
  CHECK(kind == POSAT_PAIR_MIXED);
  posat_family_free(f);

  posat_poset* p = nullptr;
  REQUIRE(posat_poset_named("diamond-2", 0, &p) == POSAT_OK);
  REQUIRE(posat_uctp_lower_bound(p, 8, &bound) == POSAT_OK);
  CHECK(bound == 3);
  CHECK(posat_uctp_lower_bound(p, 0, &bound) == POSAT_ERR_INVALID_ARGUMENT);
  posat_poset_free(p);
}

TEST_CASE("tables through the C API") {
  char* out = nullptr;
  REQUIRE(posat_table_json("N", POSAT_INDUCED, 3, 4, 0, 1, &out) == POSAT_OK);
  const std::string rows = take(out);
  CHECK(rows.find("\"computed_or_construction\":6") != std::string::npos);
  CHECK(rows.find("\"source\":\"construction:N\"") != std::string::npos);
  CHECK(posat_table_json("N", POSAT_INDUCED, 4, 3, 0, 1, &out) == POSAT_ERR_INVALID_ARGUMENT);
}
