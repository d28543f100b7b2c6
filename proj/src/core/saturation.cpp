#include "posat/saturation.hpp"

#include <algorithm>
#include <sstream>

#include "posat/error.hpp"

namespace posat {

bool is_free(const Family& f, const Poset& p, Mode mode) {
  return !find_copy(f.sets(), p, mode).has_value();
}

std::vector<Mask> unsaturated_witnesses(const Family& f, const Poset& p, Mode mode) {
  if (auto copy = find_copy(f.sets(), p, mode)) {
    std::ostringstream msg;
    msg << "family is not " << to_string(mode) << "-free; copy:";
    for (std::size_t i = 0; i < copy->images.size(); ++i) {
      msg << ' ' << p.label(static_cast<int>(i)) << "->{";
      bool first = true;
      for (int e : elements_of(copy->images[i])) {
        msg << (first ? "" : ",") << e;
        first = false;
      }
      msg << '}';
    }
    throw Error(ErrorCode::NotFree, msg.str());
  }

  const int n = f.ground();
  std::vector<Mask> pool(f.sets());
  pool.push_back(0);
  const std::size_t anchor = pool.size() - 1;
  std::vector<Mask> witnesses;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t raw = 0; raw < count; ++raw) {
    const auto s = static_cast<Mask>(raw);
    if (f.contains(s)) continue;
    pool[anchor] = s;
    if (!find_copy(pool, p, mode, anchor)) witnesses.push_back(s);
  }
  std::sort(witnesses.begin(), witnesses.end(), canonical_less);
  return witnesses;
}

bool is_saturated(const Family& f, const Poset& p, Mode mode) {
  if (!is_free(f, p, mode)) return false;
  const int n = f.ground();
  std::vector<Mask> pool(f.sets());
  pool.push_back(0);
  const std::size_t anchor = pool.size() - 1;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t raw = 0; raw < count; ++raw) {
    const auto s = static_cast<Mask>(raw);
    if (f.contains(s)) continue;
    pool[anchor] = s;
    if (!find_copy(pool, p, mode, anchor)) return false;
  }
  return true;
}

}  // namespace posat
