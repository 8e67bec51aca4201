#include "umlogic/validity.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "umlogic/semantics.hpp"

namespace umlogic {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct Failure {
  std::uint64_t valuation = kNone;
  std::size_t world = 0;
};

// Scans [begin, end) and returns the first failing valuation. Gives up once
// `best` drops below the current index since a smaller witness exists.
Failure scan(const UltrametricSpace& space, const Formula& f, std::uint64_t begin, std::uint64_t end,
             const std::atomic<std::uint64_t>& best) {
  BallIndex index(space);
  Evaluator ev(index, f);
  const std::size_t n = space.size();
  const std::size_t atom_count = ev.atoms().size();
  const std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  for (std::uint64_t v = begin; v < end; ++v) {
    if ((v & 0xff) == 0 && best.load(std::memory_order_relaxed) < v) break;
    for (std::size_t i = 0; i < atom_count; ++i) ev.atom_slot(i).set_word(0, (v >> (i * n)) & mask);
    const PointSet& truth = ev.run();
    if (!truth.is_full()) {
      auto missing = truth.complemented().members();
      return Failure{v, missing.front()};
    }
  }
  return {};
}

}  // namespace

ValidityResult valid_in_model(const UltrametricSpace& space, const Formula& f, const ValidityOptions& options) {
  const auto names = atoms(f);
  const std::size_t n = space.size();
  const std::size_t bits = n * names.size();
  if (bits >= 63 || (std::uint64_t{1} << bits) > options.max_valuations) {
    throw EnumerationCapExceeded("validity check needs 2^" + std::to_string(bits) + " valuations (" +
                                 std::to_string(n) + " points, " + std::to_string(names.size()) +
                                 " atoms), cap is " + std::to_string(options.max_valuations));
  }
  const std::uint64_t total = std::uint64_t{1} << bits;

  ValidityResult result;
  result.valuations = total;
  if (n == 0) return result;

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  if (total < 4096) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::atomic<std::uint64_t> best{kNone};
  std::vector<Failure> found(threads);
  auto work = [&](unsigned t) {
    const std::uint64_t begin = total / threads * t;
    const std::uint64_t end = t + 1 == threads ? total : total / threads * (t + 1);
    found[t] = scan(space, f, begin, end, best);
    std::uint64_t cur = best.load();
    while (found[t].valuation < cur && !best.compare_exchange_weak(cur, found[t].valuation)) {
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  // Chunks are ordered, so the first chunk with a failure holds the least one.
  for (const auto& fail : found) {
    if (fail.valuation == kNone) continue;
    result.valid = false;
    Counterexample cx;
    cx.world = fail.world;
    std::size_t i = 0;
    for (const auto& atom : names) {
      PointSet set(n);
      for (std::size_t x = 0; x < n; ++x) {
        if ((fail.valuation >> (i * n + x)) & 1U) set.insert(x);
      }
      cx.valuation.emplace(atom, std::move(set));
      ++i;
    }
    result.counterexample = std::move(cx);
    break;
  }
  return result;
}

}  // namespace umlogic
