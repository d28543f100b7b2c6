#include "posat/constructions.hpp"

#include <algorithm>
#include <cctype>

#include "posat/error.hpp"
#include "posat/saturation.hpp"

namespace posat {

namespace {

void check_ground(int n) {
  if (n > kMaxGround)
    throw Error(ErrorCode::OutOfRange, "n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxGround));
}

Mask interval(int from, int to) {  // {from, ..., to}, empty when from > to
  Mask m = 0;
  for (int e = from; e <= to; ++e) m |= Mask{1} << (e - 1);
  return m;
}

std::string lowercase(std::string_view s) {
  std::string out;
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

Family chains_construction(int n, int k) {
  check_ground(n);
  if (k < 1 || n <= k)
    throw Error(ErrorCode::InvalidArgument, "chains construction needs n > k >= 1");
  std::vector<Mask> masks;
  for (int i = 1; i <= k; ++i) {
    // Prefixes of the rotation i, i+1, ..., n, 1, ..., i-1.
    Mask prefix = 0;
    masks.push_back(prefix);
    for (int step = 0; step < n; ++step) {
      const int element = (i - 1 + step) % n + 1;
      prefix |= Mask{1} << (element - 1);
      masks.push_back(prefix);
    }
  }
  return Family(n, std::move(masks));
}

Family antichain_construction(int n, int ell) {
  check_ground(n);
  if (ell < 3 || ell % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "antichain construction needs an odd ell >= 3");
  const int half = (ell - 1) / 2;
  const long long k = binomial(ell, half);
  if (n <= k)
    throw Error(ErrorCode::InvalidArgument,
                "antichain construction needs n > k = " + std::to_string(k));

  std::vector<Mask> masks;
  const Mask tail = interval(ell + 1, n);
  for (Mask s = 0; s < (Mask{1} << ell); ++s) {
    const int size = std::popcount(s);
    if (size <= half) masks.push_back(s);                 // lower half of B_ell
    if (size >= half + 1) masks.push_back(s | tail);      // upper half, lifted
    if (size == half)                                     // k connecting chains
      for (int t = 1; t <= n - ell; ++t) masks.push_back(s | interval(ell + 1, ell + t));
  }
  return Family(n, std::move(masks));
}

Family n_construction(int n) {
  check_ground(n);
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "N construction needs n >= 3");
  std::vector<Mask> masks{0};
  for (int i = 1; i <= n; ++i) {
    masks.push_back(Mask{1} << (i - 1));
    masks.push_back(interval(1, i));
  }
  return Family(n, std::move(masks));
}

Family butterfly_construction(int n) {
  check_ground(n);
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "butterfly construction needs n >= 3");
  std::vector<Mask> masks{0};
  for (int i = 1; i <= n; ++i) {
    masks.push_back(Mask{1} << (i - 1));
    for (int j = i + 1; j <= n; ++j) masks.push_back((Mask{1} << (i - 1)) | (Mask{1} << (j - 1)));
  }
  for (int i = 3; i <= n; ++i) masks.push_back(interval(1, i));
  return Family(n, std::move(masks));
}

Family diamond_interior_construction(int n) {
  check_ground(n);
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "diamond interior construction needs n >= 4");
  const Mask one = 1;
  const Mask rest = full_mask(n) & ~one;  // [n] \ {1}
  std::vector<Mask> masks{one, rest};
  for (int i = 2; i <= n; ++i) {
    const Mask bit = Mask{1} << (i - 1);
    masks.push_back(one | bit);
    masks.push_back(rest & ~bit);
  }
  return Family(n, std::move(masks));
}

Family weak_sat_construction(std::string_view target, int n, std::optional<int> k) {
  check_ground(n);
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "weak saturation families need n >= 3");
  std::string base = lowercase(target);
  std::optional<int> arity;
  if (const auto dash = base.rfind('-'); dash != std::string::npos) {
    const std::string suffix = base.substr(dash + 1);
    if (!suffix.empty() && suffix.size() < 6 &&
        std::all_of(suffix.begin(), suffix.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
      arity = std::stoi(suffix);
      base = base.substr(0, dash);
    }
  }
  const Mask full = full_mask(n);
  const Mask one = 1;
  auto require_two = [&] {
    if (arity && *arity != 2)
      throw Error(ErrorCode::InvalidArgument, "weak saturation family is only known for arity 2 of " + base);
  };
  if (base == "v") {
    require_two();
    return Family(n, {0, one});
  }
  if (base == "lambda") {
    require_two();
    return Family(n, {full, full & ~one});
  }
  if (base == "diamond") {
    require_two();
    return Family(n, {0, one, full});
  }
  if (base == "n" && !arity) return Family(n, {0, one, full});
  if (base == "butterfly" && !arity) return Family(n, {0, one, full & ~one, full});
  if (base == "antichain") {
    // Target is A_{k+1}; any k sets are saturated, emit the first k.
    const int bound = k ? *k : (arity ? *arity - 1 : 0);
    if (bound < 1) throw Error(ErrorCode::InvalidArgument, "antichain weak family needs k >= 1");
    if (static_cast<long long>(bound) >= (1LL << n))
      throw Error(ErrorCode::InvalidArgument, "k must be below 2^n");
    std::vector<Mask> all(std::size_t{1} << n);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Mask>(i);
    std::partial_sort(all.begin(), all.begin() + bound, all.end(), canonical_less);
    all.resize(static_cast<std::size_t>(bound));
    return Family(n, std::move(all));
  }
  throw Error(ErrorCode::InvalidArgument, "no weak saturation family for target '" + std::string(target) + "'");
}

Family q_example_construction(int n) {
  check_ground(n);
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "Q example needs n >= 3");
  const Mask full = full_mask(n);
  return Family(n, {0, 1, full & ~Mask{1}, full});
}

ConstructionRecord build_construction(std::string_view name, int n, std::optional<int> k,
                                      std::optional<int> ell, std::optional<std::string> target,
                                      bool verify) {
  ConstructionRecord r;
  r.name = lowercase(name);
  r.params["n"] = n;
  auto need = [&](const std::optional<int>& v, const char* what) {
    if (!v) throw Error(ErrorCode::InvalidArgument, std::string("construction '") + r.name + "' needs --" + what);
    return *v;
  };

  if (r.name == "chains") {
    const int kk = need(k, "k");
    r.params["k"] = kk;
    r.family = chains_construction(n, kk);
    r.expected_size = static_cast<long long>(kk) * (n - 1) + 2;
    for (const char* base : {"antichain", "V", "Lambda", "diamond"})
      r.targets.push_back({catalog_key(base, kk + 1), Mode::Induced});
  } else if (r.name == "antichain") {
    const int l = need(ell, "ell");
    r.params["ell"] = l;
    r.family = antichain_construction(n, l);
    const long long kk = binomial(l, (l - 1) / 2);
    r.params["k"] = static_cast<int>(kk);
    r.expected_size = (1LL << l) + (n - l) * kk;
    r.targets.push_back({catalog_key("antichain", static_cast<int>(kk) + 1), Mode::Induced});
  } else if (r.name == "n") {
    r.name = "N";
    r.family = n_construction(n);
    r.expected_size = 2LL * n;
    r.targets.push_back({"N", Mode::Induced});
  } else if (r.name == "butterfly") {
    r.family = butterfly_construction(n);
    r.expected_size = binomial(n, 2) + 2LL * n - 1;
    r.targets.push_back({"butterfly", Mode::Induced});
  } else if (r.name == "diamond-interior") {
    r.family = diamond_interior_construction(n);
    r.expected_size = 2LL * n;
    r.targets.push_back({"diamond-2", Mode::Induced});
  } else if (r.name == "weaksat") {
    if (!target) throw Error(ErrorCode::InvalidArgument, "construction 'weaksat' needs --target");
    r.family = weak_sat_construction(*target, n, k);
    std::string base = lowercase(*target);
    if (base.rfind("antichain", 0) == 0) {
      const long long kk = static_cast<long long>(r.family.size());
      r.params["k"] = static_cast<int>(kk);
      r.expected_size = kk;
      r.targets.push_back({catalog_key("antichain", static_cast<int>(kk) + 1), Mode::Weak});
    } else {
      const std::string key = catalog_key(*target, base.find('-') == std::string::npos &&
                                                           (base == "v" || base == "lambda" || base == "diamond")
                                                       ? std::optional<int>(2)
                                                       : std::nullopt);
      r.expected_size = key == "V-2" || key == "Lambda-2" ? 2 : key == "butterfly" ? 4 : 3;
      r.targets.push_back({key, Mode::Weak});
    }
  } else if (r.name == "q-example") {
    r.family = q_example_construction(n);
    r.expected_size = 4;
    r.targets.push_back({"Q", Mode::Induced});
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown construction '" + std::string(name) + "'");
  }

  if (static_cast<long long>(r.family.size()) != r.expected_size)
    throw Error(ErrorCode::Internal, "construction '" + r.name + "' produced " + std::to_string(r.family.size()) +
                                         " sets, expected " + std::to_string(r.expected_size));

  if (verify) {
    r.verified = std::all_of(r.targets.begin(), r.targets.end(), [&](const ConstructionTarget& t) {
      return is_saturated(r.family, named_poset(t.poset), t.mode);
    });
    if (r.name == "diamond-interior")
      r.verified = r.verified && !r.family.contains(0) && !r.family.contains(full_mask(n));
  }
  return r;
}

}  // namespace posat
