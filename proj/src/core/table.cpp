#include "posat/table.hpp"

#include "posat/constructions.hpp"
#include "posat/error.hpp"
#include "posat/lowerbound.hpp"
#include "posat/saturation.hpp"

namespace posat {

namespace {

struct Parsed {
  std::string base;
  int arity = 0;
};

Parsed parse_key(const std::string& key) {
  const auto dash = key.rfind('-');
  if (dash == std::string::npos) return {key, 0};
  return {key.substr(0, dash), std::stoi(key.substr(dash + 1))};
}

struct Pick {
  std::string name;
  Family family;
};

std::optional<Pick> pick_construction(const Parsed& t, Mode mode, int n) {
  if (mode == Mode::Weak) {
    const bool known = t.base == "V" || t.base == "Lambda" || t.base == "diamond";
    if (n < 3) return std::nullopt;
    if ((known && t.arity == 2) || t.base == "N" || t.base == "butterfly")
      return Pick{"weaksat", weak_sat_construction(t.arity ? t.base + "-2" : t.base, n)};
    if (t.base == "antichain" && t.arity >= 2 && (1LL << n) > t.arity - 1)
      return Pick{"weaksat", weak_sat_construction("antichain", n, t.arity - 1)};
    return std::nullopt;
  }
  if (t.base == "antichain" || t.base == "V" || t.base == "Lambda" || t.base == "diamond") {
    const int k = t.arity - 1;
    if (k < 1 || n <= k) return std::nullopt;
    Pick best{"chains", chains_construction(n, k)};
    if (t.base == "antichain")
      for (int ell = 3; binomial(ell, (ell - 1) / 2) <= k; ell += 2)
        if (binomial(ell, (ell - 1) / 2) == k) {
          Family f = antichain_construction(n, ell);
          if (f.size() < best.family.size()) best = {"antichain", std::move(f)};
        }
    return best;
  }
  if (n < 3) return std::nullopt;
  if (t.base == "N") return Pick{"N", n_construction(n)};
  if (t.base == "butterfly") return Pick{"butterfly", butterfly_construction(n)};
  if (t.base == "Q") return Pick{"q-example", q_example_construction(n)};
  return std::nullopt;
}

}  // namespace

std::pair<std::optional<long long>, std::optional<long long>> known_bounds(const std::string& key, Mode mode,
                                                                          int n) {
  const Parsed t = parse_key(key);
  using Bound = std::optional<long long>;
  if (mode == Mode::Weak) {
    if ((t.base == "V" || t.base == "Lambda") && t.arity == 2) return {2, 2};
    if (t.base == "diamond" && t.arity == 2) return {3, 3};
    if (t.base == "N") return {3, 3};
    if (t.base == "butterfly") return {4, 4};
    if (t.base == "antichain" && t.arity >= 2) return {t.arity - 1, t.arity - 1};
    return {Bound{}, Bound{}};
  }
  const long long log = ceil_log2(n);
  if ((t.base == "V" || t.base == "Lambda") && t.arity == 2 && n >= 2) return {n + 1, n + 1};
  if (t.base == "antichain" && t.arity == 2 && n >= 2) return {n + 1, n + 1};
  if (t.base == "antichain" && t.arity == 3 && n >= 3) return {2LL * n, 2LL * n};
  if (t.base == "diamond" && t.arity == 2 && n >= 2) return {log, n + 1};
  if (t.base == "N" && n >= 3) return {log, 2LL * n};
  if (t.base == "butterfly" && n >= 3) return {log, binomial(n, 2) + 2LL * n - 1};
  const int k = t.arity - 1;
  if (t.base == "antichain" && k >= 3 && n > k) {
    long long high = static_cast<long long>(k) * (n - 1) + 2;
    for (int ell = 3; binomial(ell, (ell - 1) / 2) <= k; ell += 2)
      if (binomial(ell, (ell - 1) / 2) == k) high = std::min(high, (1LL << ell) + static_cast<long long>(n - ell) * k);
    return {3LL * n - 1, high};
  }
  if ((t.base == "V" || t.base == "Lambda" || t.base == "diamond") && k >= 1 && n > k)
    return {log, static_cast<long long>(k) * (n - 1) + 2};
  return {Bound{}, Bound{}};
}

std::vector<BoundRow> bound_table(const std::string& key, Mode mode, int n_lo, int n_hi, const TableOptions& opts) {
  if (n_lo < 1 || n_hi < n_lo || n_hi > kMaxGround)
    throw Error(ErrorCode::InvalidArgument, "bad n range " + std::to_string(n_lo) + ".." + std::to_string(n_hi));
  const Poset p = named_poset(key);
  const std::string canonical = catalog_key(key);
  const Parsed parsed = parse_key(canonical);

  std::vector<BoundRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    BoundRow row;
    row.n = n;
    row.uctp_bound = mode == Mode::Induced ? uctp_lower_bound(p, n) : 1;
    std::tie(row.paper_bound_low, row.paper_bound_high) = known_bounds(canonical, mode, n);
    row.source = "none";

    if (n <= opts.compute_up_to) {
      SearchOptions so;
      so.threads = opts.threads;
      so.max_n = std::max(so.max_n, opts.compute_up_to);
      const SearchResult r = minimum_saturated(n, p, mode, so);
      if (r.value) {
        row.computed_or_construction = *r.value;
        row.source = r.exhaustive ? "search" : "search-partial";
      }
    } else if (auto pick = pick_construction(parsed, mode, n)) {
      if (n <= opts.verify_up_to && !is_saturated(pick->family, p, mode))
        throw Error(ErrorCode::Internal, "construction '" + pick->name + "' failed verification at n = " +
                                             std::to_string(n));
      row.computed_or_construction = static_cast<long long>(pick->family.size());
      row.source = "construction:" + pick->name;
    }

    if (row.source == "search" && *row.computed_or_construction < row.uctp_bound)
      throw Error(ErrorCode::Internal, "computed value below the UCTP bound at n = " + std::to_string(n));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace posat
