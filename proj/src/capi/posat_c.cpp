#define POSAT_BUILDING
#include "posat/posat.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "posat/constructions.hpp"
#include "posat/error.hpp"
#include "posat/json_io.hpp"
#include "posat/lowerbound.hpp"
#include "posat/saturation.hpp"
#include "posat/table.hpp"

struct posat_poset {
  posat::Poset value;
};
struct posat_family {
  posat::Family value;
};
struct posat_result {
  posat::SearchResult value;
};

namespace {

thread_local std::string last_error;

posat_status status_of(posat::ErrorCode code) {
  using posat::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return POSAT_ERR_INVALID_ARGUMENT;
    case ErrorCode::OutOfRange: return POSAT_ERR_OUT_OF_RANGE;
    case ErrorCode::Cycle: return POSAT_ERR_CYCLE;
    case ErrorCode::Parse: return POSAT_ERR_PARSE;
    case ErrorCode::InstanceTooLarge: return POSAT_ERR_INSTANCE_TOO_LARGE;
    case ErrorCode::NotFree: return POSAT_ERR_NOT_FREE;
    case ErrorCode::DegenerateBiclique: return POSAT_ERR_DEGENERATE;
    case ErrorCode::Separated: return POSAT_ERR_SEPARATED;
    case ErrorCode::Internal: return POSAT_ERR_INTERNAL;
  }
  return POSAT_ERR_INTERNAL;
}

posat_status fail(posat_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F>
posat_status guarded(F&& body) {
  try {
    body();
    return POSAT_OK;
  } catch (const posat::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(POSAT_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(POSAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(POSAT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(POSAT_ERR_INTERNAL, "unknown failure");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw posat::Error(posat::ErrorCode::InvalidArgument, what);
}

posat::Mode mode_of(posat_mode m) {
  require(m == POSAT_WEAK || m == POSAT_INDUCED, "mode must be POSAT_WEAK or POSAT_INDUCED");
  return m == POSAT_WEAK ? posat::Mode::Weak : posat::Mode::Induced;
}

}  // namespace

extern "C" {

const char* posat_version(void) { return "1.0.0"; }

const char* posat_last_error(void) { return last_error.c_str(); }

const char* posat_status_name(posat_status status) {
  switch (status) {
    case POSAT_OK: return "ok";
    case POSAT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case POSAT_ERR_OUT_OF_RANGE: return "out-of-range";
    case POSAT_ERR_CYCLE: return "cycle";
    case POSAT_ERR_PARSE: return "parse";
    case POSAT_ERR_INSTANCE_TOO_LARGE: return "instance-too-large";
    case POSAT_ERR_NOT_FREE: return "not-free";
    case POSAT_ERR_DEGENERATE: return "degenerate-biclique";
    case POSAT_ERR_SEPARATED: return "separated";
    case POSAT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void posat_string_free(char* s) { std::free(s); }
void posat_masks_free(uint32_t* masks) { std::free(masks); }

/* ---- posets ---- */

posat_status posat_poset_from_covers(int m, const int* pairs, size_t pair_count, posat_poset** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    require(pairs != nullptr || pair_count == 0, "pairs is null");
    posat::CoverList covers;
    for (size_t i = 0; i < pair_count; ++i) covers.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new posat_poset{posat::poset_from_covers(m, covers)};
  });
}

posat_status posat_poset_named(const char* name, int k, posat_poset** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = new posat_poset{posat::named_poset(name, k > 0 ? std::optional<int>(k) : std::nullopt)};
  });
}

posat_status posat_poset_from_json(const char* json, posat_poset** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new posat_poset{posat::json::poset_from_json(posat::json::parse(json))};
  });
}

posat_status posat_poset_to_json(const posat_poset* p, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = dup(posat::json::poset_to_json(p->value).dump());
  });
}

posat_status posat_poset_to_dot(const posat_poset* p, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = dup(posat::json::poset_to_dot(p->value));
  });
}

int posat_poset_size(const posat_poset* p) { return p ? p->value.size() : 0; }

posat_status posat_poset_covers(const posat_poset* p, int* pairs, size_t capacity, size_t* count) {
  return guarded([&] {
    require(p != nullptr && count != nullptr, "null argument");
    require(pairs != nullptr || capacity == 0, "pairs is null");
    const auto covers = posat::covers_of(p->value);
    *count = covers.size();
    for (size_t i = 0; i < covers.size() && i < capacity; ++i) {
      pairs[2 * i] = covers[i].first;
      pairs[2 * i + 1] = covers[i].second;
    }
  });
}

posat_status posat_poset_dual(const posat_poset* p, posat_poset** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = new posat_poset{posat::dual_poset(p->value)};
  });
}

posat_status posat_poset_isomorphic(const posat_poset* p, const posat_poset* q, int* found, int* perm) {
  return guarded([&] {
    require(p != nullptr && q != nullptr && found != nullptr, "null argument");
    const auto map = posat::is_isomorphic(p->value, q->value);
    *found = map ? 1 : 0;
    if (map && perm)
      for (size_t i = 0; i < map->size(); ++i) perm[i] = (*map)[i];
  });
}

posat_status posat_poset_check_uctp(const posat_poset* p, int* holds, int* in_class, int* violating) {
  return guarded([&] {
    require(p != nullptr, "null argument");
    const auto r = posat::check_uctp(p->value);
    if (holds) *holds = r.holds ? 1 : 0;
    if (in_class) *in_class = r.in_class ? 1 : 0;
    if (violating) *violating = r.violating ? *r.violating : -1;
  });
}

void posat_poset_free(posat_poset* p) { delete p; }

/* ---- families ---- */

posat_status posat_family_from_masks(int n, const uint32_t* masks, size_t count, posat_family** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    require(masks != nullptr || count == 0, "masks is null");
    *out = new posat_family{posat::Family(n, std::vector<posat::Mask>(masks, masks + count))};
  });
}

posat_status posat_family_from_json(const char* json, posat_family** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new posat_family{posat::json::family_from_json(posat::json::parse(json))};
  });
}

posat_status posat_family_to_json(const posat_family* f, char** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = dup(posat::json::family_to_json(f->value).dump());
  });
}

int posat_family_ground(const posat_family* f) { return f ? f->value.ground() : 0; }

size_t posat_family_size(const posat_family* f) { return f ? f->value.size() : 0; }

size_t posat_family_masks(const posat_family* f, uint32_t* out, size_t capacity) {
  if (!f || !out) return 0;
  const size_t n = std::min(capacity, f->value.size());
  std::copy_n(f->value.sets().begin(), n, out);
  return n;
}

posat_status posat_family_complement(const posat_family* f, posat_family** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = new posat_family{posat::complement_family(f->value)};
  });
}

posat_status posat_family_induced_poset(const posat_family* f, posat_poset** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = new posat_poset{posat::induced_poset_of(f->value)};
  });
}

void posat_family_free(posat_family* f) { delete f; }

/* ---- copies and saturation ---- */

posat_status posat_find_copy(const posat_family* f, const posat_poset* p, posat_mode mode, int* found,
                             uint32_t* images) {
  return guarded([&] {
    require(f != nullptr && p != nullptr && found != nullptr, "null argument");
    const auto e = posat::find_copy(f->value.sets(), p->value, mode_of(mode));
    *found = e ? 1 : 0;
    if (e && images) std::copy(e->images.begin(), e->images.end(), images);
  });
}

posat_status posat_find_copy_json(const posat_family* f, const posat_poset* p, posat_mode mode, char** out) {
  return guarded([&] {
    require(f != nullptr && p != nullptr && out != nullptr, "null argument");
    const auto e = posat::find_copy(f->value.sets(), p->value, mode_of(mode));
    *out = dup(e ? posat::json::embedding_to_json(*e, p->value).dump() : "null");
  });
}

posat_status posat_is_free(const posat_family* f, const posat_poset* p, posat_mode mode, int* out) {
  return guarded([&] {
    require(f != nullptr && p != nullptr && out != nullptr, "null argument");
    *out = posat::is_free(f->value, p->value, mode_of(mode)) ? 1 : 0;
  });
}

posat_status posat_is_saturated(const posat_family* f, const posat_poset* p, posat_mode mode, int* out) {
  return guarded([&] {
    require(f != nullptr && p != nullptr && out != nullptr, "null argument");
    *out = posat::is_saturated(f->value, p->value, mode_of(mode)) ? 1 : 0;
  });
}

posat_status posat_unsaturated_witnesses(const posat_family* f, const posat_poset* p, posat_mode mode,
                                         uint32_t** masks, size_t* count) {
  return guarded([&] {
    require(f != nullptr && p != nullptr && masks != nullptr && count != nullptr, "null argument");
    const auto w = posat::unsaturated_witnesses(f->value, p->value, mode_of(mode));
    auto* buf = static_cast<uint32_t*>(std::malloc(std::max<size_t>(1, w.size()) * sizeof(uint32_t)));
    if (!buf) throw std::bad_alloc();
    std::copy(w.begin(), w.end(), buf);
    *masks = buf;
    *count = w.size();
  });
}

/* ---- search ---- */

void posat_search_options_init(posat_search_options* opts) {
  if (!opts) return;
  const posat::SearchOptions d;
  opts->max_size = d.max_size;
  opts->symmetry = d.symmetry ? 1 : 0;
  opts->theorem_pruning = d.theorem_pruning ? 1 : 0;
  opts->threads = d.threads;
  opts->max_n = d.max_n;
  opts->collect_all_minimum = 0;
  opts->time_limit = 0.0;
  opts->excluded = nullptr;
  opts->excluded_count = 0;
}

posat_status posat_search(int n, const posat_poset* p, posat_mode mode, const posat_search_options* opts,
                          posat_result** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    posat::SearchOptions so;
    if (opts) {
      require(opts->excluded != nullptr || opts->excluded_count == 0, "excluded is null");
      so.max_size = opts->max_size;
      so.symmetry = opts->symmetry != 0;
      so.theorem_pruning = opts->theorem_pruning != 0;
      so.threads = opts->threads;
      so.max_n = opts->max_n;
      so.collect_all_minimum = opts->collect_all_minimum != 0;
      so.time_limit = opts->time_limit;
      so.excluded.assign(opts->excluded, opts->excluded + opts->excluded_count);
    }
    *out = new posat_result{posat::minimum_saturated(n, p->value, mode_of(mode), so)};
  });
}

int posat_result_value(const posat_result* r) { return r && r->value.value ? *r->value.value : -1; }

int posat_result_exhaustive(const posat_result* r) { return r && r->value.exhaustive ? 1 : 0; }

uint64_t posat_result_families_examined(const posat_result* r) { return r ? r->value.families_examined : 0; }

double posat_result_wall_time(const posat_result* r) { return r ? r->value.wall_time : 0.0; }

posat_family* posat_result_certificate(const posat_result* r) {
  if (!r || !r->value.value) return nullptr;
  return new (std::nothrow) posat_family{r->value.certificate};
}

posat_status posat_result_to_json(const posat_result* r, char** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = dup(posat::json::search_result_to_json(r->value).dump());
  });
}

void posat_result_free(posat_result* r) { delete r; }

/* ---- constructions ---- */

posat_status posat_construct(const char* name, int n, int k, int ell, const char* target, int verify,
                             posat_family** family, char** sidecar_json) {
  return guarded([&] {
    require(name != nullptr, "name is null");
    auto record = posat::build_construction(name, n, k > 0 ? std::optional<int>(k) : std::nullopt,
                                            ell > 0 ? std::optional<int>(ell) : std::nullopt,
                                            target ? std::optional<std::string>(target) : std::nullopt,
                                            verify != 0);
    char* sidecar = sidecar_json ? dup(posat::json::construction_sidecar(record).dump()) : nullptr;
    if (family) *family = new posat_family{std::move(record.family)};
    if (sidecar_json) *sidecar_json = sidecar;
  });
}

/* ---- lower bounds ---- */

posat_status posat_separability_graph_json(const posat_family* f, char** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = dup(posat::json::graph_to_json(posat::separability_graph(f->value)).dump());
  });
}

posat_status posat_separability_graph_dot(const posat_family* f, char** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = dup(posat::json::graph_to_dot(posat::separability_graph(f->value)));
  });
}

posat_status posat_bc_exact_json(const char* graph_json, int* value, char** cover_json) {
  return guarded([&] {
    require(graph_json != nullptr, "graph_json is null");
    const auto cover = posat::bc_exact(posat::json::graph_from_json(posat::json::parse(graph_json)));
    if (value) *value = cover.value;
    if (cover_json) *cover_json = dup(posat::json::cover_to_json(cover).dump());
  });
}

posat_status posat_separates_all_pairs(const posat_family* f, int* all, int* x, int* y) {
  return guarded([&] {
    require(f != nullptr && all != nullptr, "null argument");
    const auto missing = posat::separates_all_pairs(f->value);
    *all = missing ? 0 : 1;
    if (x) *x = missing ? missing->first : 0;
    if (y) *y = missing ? missing->second : 0;
  });
}

posat_status posat_dilworth_json(const posat_family* f, int* width, char** chains_json) {
  return guarded([&] {
    require(f != nullptr, "null argument");
    const auto d = posat::dilworth_chain_cover(f->value);
    if (width) *width = d.width();
    if (chains_json) *chains_json = dup(posat::json::chains_to_json(d).dump());
  });
}

posat_status posat_family_size_lower_bound(const posat_family* f, int* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = posat::family_size_lower_bound(f->value);
  });
}

posat_status posat_uctp_lower_bound(const posat_poset* p, int n, int* out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    require(n >= 1, "n must be positive");
    *out = posat::uctp_lower_bound(p->value, n);
  });
}

posat_status posat_pair_profile(const posat_family* f, int x, int y, posat_pair_kind* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    switch (posat::lemma_pair_profile(f->value, x, y)) {
      case posat::PairProfile::AllAvoid: *out = POSAT_PAIR_ALL_AVOID; break;
      case posat::PairProfile::AllContain: *out = POSAT_PAIR_ALL_CONTAIN; break;
      case posat::PairProfile::Mixed: *out = POSAT_PAIR_MIXED; break;
    }
  });
}

/* ---- tables ---- */

posat_status posat_table_json(const char* poset_key, posat_mode mode, int n_lo, int n_hi, int compute_up_to,
                              int threads, char** out) {
  return guarded([&] {
    require(poset_key != nullptr && out != nullptr, "null argument");
    posat::TableOptions opts;
    opts.compute_up_to = compute_up_to;
    opts.threads = threads;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : posat::bound_table(poset_key, mode_of(mode), n_lo, n_hi, opts)) {
      auto opt = [](const std::optional<long long>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
      rows.push_back({{"n", r.n},
                      {"uctp_bound", r.uctp_bound},
                      {"paper_bound_low", opt(r.paper_bound_low)},
                      {"paper_bound_high", opt(r.paper_bound_high)},
                      {"computed_or_construction", opt(r.computed_or_construction)},
                      {"source", r.source}});
    }
    *out = dup(rows.dump());
  });
}

}  // extern "C"
