#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <thread>

#include "posat/error.hpp"
#include "posat/lowerbound.hpp"
#include "posat/saturation.hpp"

namespace posat {

namespace {

using Clock = std::chrono::steady_clock;

// Shared, read-only description of one search instance. Sets are addressed
// by rank in canonical order, so an ascending rank tuple is a family in
// canonical form.
struct Context {
  Context(int n_, const Poset& p_, Mode mode_, const SearchOptions& opts_)
      : n(n_), p(p_), mode(mode_), opts(opts_), total(1 << n_), rank(std::size_t{1} << n_),
        excluded(std::size_t{1} << n_, false) {
    order.resize(static_cast<std::size_t>(total));
    std::iota(order.begin(), order.end(), Mask{0});
    std::sort(order.begin(), order.end(), canonical_less);
    for (int r = 0; r < total; ++r) rank[order[r]] = r;
    for (Mask m : opts.excluded) {
      if ((m & ~full_mask(n)) != 0) throw Error(ErrorCode::OutOfRange, "excluded set outside B_n");
      excluded[rank[m]] = true;
    }
    if (opts.time_limit > 0)
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(opts.time_limit));
  }

  void build_group(bool complement) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const Mask full = full_mask(n);
    do {
      for (int flip = 0; flip < (complement ? 2 : 1); ++flip) {
        std::vector<int> image(static_cast<std::size_t>(total));
        bool identity = true;
        bool preserves = true;
        for (int r = 0; r < total; ++r) {
          const Mask m = order[r];
          Mask out = 0;
          for (int i = 0; i < n; ++i)
            if ((m >> i) & 1U) out |= Mask{1} << perm[i];
          if (flip) out = full & ~out;
          image[r] = rank[out];
          identity = identity && image[r] == r;
          preserves = preserves && excluded[image[r]] == excluded[r];
        }
        if (!identity && preserves) group.push_back(std::move(image));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  bool should_stop() const {
    if (opts.cancel && opts.cancel->load(std::memory_order_relaxed)) return true;
    return deadline && Clock::now() >= *deadline;
  }

  int n;
  const Poset& p;
  Mode mode;
  const SearchOptions& opts;
  int total;
  std::vector<Mask> order;
  std::vector<int> rank;
  std::vector<bool> excluded;
  std::vector<std::vector<int>> group;
  std::optional<Clock::time_point> deadline;
  mutable std::atomic<bool> interrupted{false};
};

// Depth-first enumeration of canonical free families extending a prefix.
// A family is kept only if its rank tuple is the lexicographic minimum of its
// orbit; dropping the largest element of such a tuple leaves a minimum again,
// so every orbit is reached exactly once.
class Walker {
 public:
  explicit Walker(const Context& ctx) : ctx_(ctx) {}

  std::uint64_t examined() const noexcept { return examined_; }
  const std::vector<int>& ranks() const noexcept { return ranks_; }

  Family family() const { return Family(ctx_.n, masks_); }

  bool push(int r) {
    ranks_.push_back(r);
    masks_.push_back(ctx_.order[r]);
    if (masks_.size() >= static_cast<std::size_t>(ctx_.p.size()) &&
        find_copy(masks_, ctx_.p, ctx_.mode, masks_.size() - 1)) {
      pop();
      return false;
    }
    if (!canonical()) {
      pop();
      return false;
    }
    ++examined_;
    return true;
  }

  void pop() {
    ranks_.pop_back();
    masks_.pop_back();
  }

  bool saturated() const {
    std::vector<Mask> pool(masks_);
    pool.push_back(0);
    const std::size_t anchor = pool.size() - 1;
    std::size_t next = 0;  // ranks_ is ascending
    for (int r = 0; r < ctx_.total; ++r) {
      if (next < ranks_.size() && ranks_[next] == r) {
        ++next;
        continue;
      }
      pool[anchor] = ctx_.order[r];
      if (!find_copy(pool, ctx_.p, ctx_.mode, anchor)) return false;
    }
    return true;
  }

  /// Extends the current family to `target` sets. `on_leaf` returns true to
  /// stop the walk; `abort` is polled between nodes. Returns true if stopped.
  template <typename Leaf, typename Abort>
  bool walk(int target, Leaf&& on_leaf, Abort&& abort) {
    if (static_cast<int>(ranks_.size()) == target) return on_leaf(*this);
    if (abort()) return true;
    const int start = ranks_.empty() ? 0 : ranks_.back() + 1;
    const int need = target - static_cast<int>(ranks_.size());
    for (int r = start; r + need <= ctx_.total; ++r) {
      if (ctx_.excluded[r]) continue;
      if (!push(r)) continue;
      const bool stop = walk(target, on_leaf, abort);
      pop();
      if (stop) return true;
    }
    return false;
  }

 private:
  bool canonical() const {
    if (ctx_.group.empty()) return true;
    std::vector<int> image(ranks_.size());
    for (const auto& g : ctx_.group) {
      for (std::size_t i = 0; i < ranks_.size(); ++i) image[i] = g[ranks_[i]];
      std::sort(image.begin(), image.end());
      if (image < ranks_) return false;
    }
    return true;
  }

  const Context& ctx_;
  std::vector<int> ranks_;
  std::vector<Mask> masks_;
  std::uint64_t examined_ = 0;
};

struct SizeOutcome {
  std::vector<Family> hits;  // in canonical order
  std::uint64_t examined = 0;
  bool interrupted = false;
};

// All saturated orbit representatives of exactly `size` sets, or only the
// least one when `first_only`. Work is split into tasks by the first two sets;
// tasks are in lexicographic order, so the coordinator's choice does not
// depend on scheduling.
SizeOutcome run_size(const Context& ctx, int size, bool first_only) {
  SizeOutcome out;
  const int prefix_depth = std::min(size, 2);

  std::vector<std::vector<int>> tasks;
  {
    Walker gen(ctx);
    gen.walk(
        prefix_depth,
        [&](Walker& w) {
          tasks.push_back(w.ranks());
          return false;
        },
        [] { return false; });
    out.examined += gen.examined();
  }

  struct TaskResult {
    std::vector<Family> hits;
    std::uint64_t examined = 0;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (first_only && first_hit.load() < i) continue;
      if (ctx.interrupted.load()) continue;
      Walker w(ctx);
      for (int r : tasks[i]) w.push(r);
      std::uint32_t polls = 0;
      auto abort = [&] {
        if ((++polls & 0xff) == 0 && ctx.should_stop()) ctx.interrupted.store(true);
        return ctx.interrupted.load() || (first_only && first_hit.load() < i);
      };
      w.walk(
          size,
          [&](Walker& leaf) {
            if (abort()) return true;
            if (!leaf.saturated()) return false;
            results[i].hits.push_back(leaf.family());
            if (!first_only) return false;
            std::size_t cur = first_hit.load();
            while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
            }
            return true;
          },
          abort);
      // The prefix pushes were counted by the generator already.
      results[i].examined = w.examined() - tasks[i].size();
    }
  };

  const int threads = std::max(1, ctx.opts.threads);
  if (threads == 1 || tasks.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const std::size_t counted = first_only ? std::min(first_hit.load(), tasks.size() - 1) + 1 : tasks.size();
  for (std::size_t i = 0; i < counted && i < tasks.size(); ++i) {
    out.examined += results[i].examined;
    for (auto& f : results[i].hits) out.hits.push_back(std::move(f));
  }
  if (first_only && out.hits.size() > 1) out.hits.resize(1);
  out.interrupted = ctx.interrupted.load();
  return out;
}

int default_lower_start(const Poset& p, int n, Mode mode, bool theorem_pruning, bool& uctp_used) {
  uctp_used = false;
  if (p.size() < 2) return 0;
  int start = 1;
  if (mode == Mode::Induced && theorem_pruning && check_uctp(p).in_class) {
    uctp_used = true;
    start = std::max(start, uctp_lower_bound(p, n));
  }
  return start;
}

void check_instance(int n, const SearchOptions& opts) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "search needs n >= 1");
  if (n > opts.max_n || n > 8)
    throw Error(ErrorCode::InstanceTooLarge,
                "exhaustive search is capped at n = " + std::to_string(std::min(opts.max_n, 8)));
}

void setup_symmetry(Context& ctx, const SearchOptions& opts, bool& complement_used) {
  complement_used = false;
  if (!opts.symmetry) return;
  bool self_dual = false;
  if (ctx.p.size() <= 10) self_dual = is_isomorphic(ctx.p, dual_poset(ctx.p)).has_value();
  ctx.build_group(self_dual);
  complement_used = self_dual;
}

}  // namespace

SearchResult minimum_saturated(int n, const Poset& p, Mode mode, const SearchOptions& opts) {
  check_instance(n, opts);
  const auto started = Clock::now();
  Context ctx(n, p, mode, opts);
  SearchResult result;
  result.symmetry_used = opts.symmetry;
  auto finish = [&] {
    result.wall_time = std::chrono::duration<double>(Clock::now() - started).count();
    return result;
  };

  const Family lattice = full_lattice(n);
  if (!find_copy(lattice.sets(), p, mode)) {
    result.vacuous = true;
    result.exhaustive = true;
    result.lower_start = ctx.total;
    result.searched_up_to = ctx.total;
    if (opts.excluded.empty()) {
      result.value = ctx.total;
      result.certificate = lattice;
      if (opts.collect_all_minimum) result.minimum_certificates.push_back(lattice);
    }
    return finish();
  }

  setup_symmetry(ctx, opts, result.complement_symmetry_used);
  result.lower_start = default_lower_start(p, n, mode, opts.theorem_pruning, result.uctp_used);
  const int allowed = ctx.total - static_cast<int>(std::count(ctx.excluded.begin(), ctx.excluded.end(), true));
  const int max_size = opts.max_size < 0 ? allowed : std::min(opts.max_size, allowed);
  result.searched_up_to = result.lower_start - 1;

  for (int size = result.lower_start; size <= max_size; ++size) {
    SizeOutcome outcome = run_size(ctx, size, !opts.collect_all_minimum);
    result.families_examined += outcome.examined;
    if (!outcome.hits.empty()) {
      result.value = size;
      result.certificate = outcome.hits.front();
      if (opts.collect_all_minimum) result.minimum_certificates = std::move(outcome.hits);
      result.exhaustive = !outcome.interrupted;
      result.searched_up_to = size;
      return finish();
    }
    if (outcome.interrupted) {
      result.exhaustive = false;
      return finish();
    }
    result.searched_up_to = size;
  }
  result.exhaustive = true;
  return finish();
}

std::uint64_t for_each_saturated(int n, const Poset& p, Mode mode, int min_size, int max_size,
                                 const SearchOptions& opts,
                                 const std::function<void(const Family&)>& visit) {
  check_instance(n, opts);
  Context ctx(n, p, mode, opts);
  bool complement_used = false;
  setup_symmetry(ctx, opts, complement_used);
  std::uint64_t examined = 0;
  for (int size = std::max(0, min_size); size <= std::min(max_size, ctx.total); ++size) {
    SizeOutcome outcome = run_size(ctx, size, false);
    examined += outcome.examined;
    for (const auto& f : outcome.hits) visit(f);
    if (outcome.interrupted) throw Error(ErrorCode::InstanceTooLarge, "enumeration interrupted");
  }
  return examined;
}

}  // namespace posat
