#include "morrey/search.hpp"

#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

namespace morrey {

namespace {

constexpr int kStreams = 8;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int resolve_threads(int requested) {
  if (requested > 0) return std::min(requested, kStreams);
  if (const char* env = std::getenv("MORREY_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return std::min(n, kStreams);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::min<int>(hw == 0 ? 1 : static_cast<int>(hw), kStreams);
}

std::string encode_pair(const SparseSequence<double>& x, const SparseSequence<double>& y) {
  std::ostringstream os;
  os.precision(17);
  for (const auto* v : {&x, &y}) {
    for (const auto& [k, val] : v->entries) {
      for (auto c : k.coords) os << c << ',';
      os << '=' << val << ';';
    }
    os << '|';
  }
  return os.str();
}

struct StreamBest {
  double value = -1.0;
  SparseSequence<double> x, y;
  std::vector<std::pair<std::string, double>> trace;
  double tolerance = 0.0;
  std::string encoding;
};

class StreamSearch {
public:
  StreamSearch(const DiscreteSpaceD& space, Functional functional, std::uint64_t seed, int stream,
               const SearchConfig& cfg)
      : space_(space), functional_(functional), cfg_(cfg) {
    std::uint64_t s = seed * 0x100000001b3ull + 0x9e3779b9ull * (stream + 1);
    rng_.seed(splitmix64(s));
  }

  StreamBest run(std::uint64_t eval_budget) {
    budget_ = eval_budget;
    for (const auto& [x, y] : canonical_starts()) {
      if (spent_ >= budget_) break;
      climb(x, y);
    }
    while (spent_ < budget_) {
      auto x = random_vector();
      auto y = random_vector();
      climb(x, y);
    }
    return best_;
  }

private:
  const DiscreteSpaceD& space_;
  Functional functional_;
  SearchConfig cfg_;
  std::mt19937_64 rng_;
  std::uint64_t budget_ = 0;
  std::uint64_t spent_ = 0;
  StreamBest best_;

  int d() const { return space_.params.d; }

  LatticePoint basis(int axis, std::int64_t v) const {
    std::vector<std::int64_t> c(d(), 0);
    c[axis] = v;
    return LatticePoint(std::move(c));
  }

  // Deterministic seeds covering the classic extremal patterns: delta pairs,
  // +-1 pairs at separations 1 and 4, and a skewed couple for DW.
  std::vector<std::pair<SparseSequence<double>, SparseSequence<double>>> canonical_starts() const {
    std::vector<std::pair<SparseSequence<double>, SparseSequence<double>>> starts;
    SparseSequence<double> d0(d()), d1(d());
    d0.set(basis(0, 0), 1.0);
    d1.set(basis(0, 1), 1.0);
    starts.emplace_back(d0, d1);
    for (std::int64_t sep : {std::int64_t(1), std::int64_t(4)}) {
      SparseSequence<double> s(d()), t(d());
      s.set(basis(0, 0), 1.0);
      s.set(basis(0, sep), 1.0);
      t.set(basis(0, 0), 1.0);
      t.set(basis(0, sep), -1.0);
      starts.emplace_back(s, t);
    }
    SparseSequence<double> u(d()), v(d());
    u.set(basis(0, 0), 1.0);
    u.set(basis(0, 4), 1.0);
    v.set(basis(0, 0), 1.5);
    v.set(basis(0, 4), 0.5);
    starts.emplace_back(u, v);
    return starts;
  }

  double pick_entry_value() {
    static const double palette[] = {1.0, -1.0, 2.0, -2.0, 0.5, -0.5};
    if (rng_() % 2 == 0) return palette[rng_() % 6];
    std::normal_distribution<double> gauss(0.0, 1.0);
    double v = gauss(rng_);
    return v == 0.0 ? 1.0 : v;
  }

  LatticePoint random_point() {
    std::vector<std::int64_t> c(d());
    std::uniform_int_distribution<std::int64_t> coord(-cfg_.coord_range, cfg_.coord_range);
    for (auto& ci : c) ci = coord(rng_);
    return LatticePoint(std::move(c));
  }

  SparseSequence<double> random_vector() {
    SparseSequence<double> v(d());
    std::uniform_int_distribution<int> size_dist(1, cfg_.max_support);
    int size = size_dist(rng_);
    for (int i = 0; i < size; ++i) v.set(random_point(), pick_entry_value());
    if (v.is_zero()) v.set(basis(0, 0), 1.0);
    return v;
  }

  // One functional evaluation; errors (zero/equal vectors) count against the
  // budget and score as no improvement.
  bool evaluate(const SparseSequence<double>& x, const SparseSequence<double>& y,
                FunctionalResult& out) {
    ++spent_;
    try {
      switch (functional_) {
        case Functional::nj: out = nj_functional(space_, x, y); break;
        case Functional::james: out = james_functional(space_, x, y); break;
        case Functional::dw: out = dw_functional(space_, x, y); break;
      }
    } catch (const Error&) {
      return false;
    }
    return true;
  }

  void record(const SparseSequence<double>& x, const SparseSequence<double>& y,
              const FunctionalResult& r) {
    std::string enc = encode_pair(x, y);
    if (r.value > best_.value || (r.value == best_.value && enc < best_.encoding)) {
      best_.value = r.value;
      best_.x = x;
      best_.y = y;
      best_.trace = r.trace;
      best_.tolerance = r.tolerance;
      best_.encoding = std::move(enc);
    }
  }

  void climb(SparseSequence<double> x, SparseSequence<double> y) {
    FunctionalResult cur;
    if (!evaluate(x, y, cur)) return;
    record(x, y, cur);

    static const double deltas[] = {1.0, -1.0, 0.5, -0.5, 0.25, -0.25};
    int stale = 0;
    while (spent_ < budget_ && stale < 12) {
      SparseSequence<double>& target = (rng_() % 2 == 0) ? x : y;
      SparseSequence<double> cand = target;
      // perturb an existing coordinate or grow the support
      if (!cand.entries.empty() && rng_() % 4 != 0) {
        auto it = cand.entries.begin();
        std::advance(it, rng_() % cand.entries.size());
        LatticePoint k = it->first;
        double v = it->second;
        switch (rng_() % 3) {
          case 0: v += deltas[rng_() % 6]; break;
          case 1: v *= (rng_() % 2 == 0) ? 2.0 : 0.5; break;
          default: v = -v; break;
        }
        cand.set(k, v);
      } else {
        cand.set(random_point(), pick_entry_value());
      }
      if (cand.is_zero()) {
        ++stale;
        continue;
      }

      const bool was_x = &target == &x;
      FunctionalResult trial;
      bool ok = was_x ? evaluate(cand, y, trial) : evaluate(x, cand, trial);
      if (ok && trial.value > cur.value) {
        cur = trial;
        target = std::move(cand);
        record(x, y, cur);
        stale = 0;
      } else {
        ++stale;
      }
    }
  }
};

}  // namespace

ConstantReport search_lower_bound(const DiscreteSpaceD& space, Functional functional,
                                  const SearchConfig& cfg) {
  if (cfg.budget < 1) raise(errc::invalid_params, "search budget must be >= 1");

  std::vector<StreamBest> results(kStreams);
  std::vector<std::uint64_t> slice(kStreams, cfg.budget / kStreams);
  for (std::uint64_t i = 0; i < cfg.budget % kStreams; ++i) ++slice[i];

  int threads = resolve_threads(cfg.threads);
  auto worker = [&](int tid) {
    for (int s = tid; s < kStreams; s += threads) {
      if (slice[s] == 0) continue;
      StreamSearch search(space, functional, cfg.seed, s, cfg);
      results[s] = search.run(slice[s]);
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  ConstantReport report;
  report.functional = functional;
  report.seed = cfg.seed;
  report.budget = cfg.budget;
  report.value = -1.0;
  std::string best_enc;
  for (const auto& r : results) {
    if (r.value < 0.0) continue;
    if (r.value > report.value || (r.value == report.value && r.encoding < best_enc)) {
      report.value = r.value;
      report.x = r.x;
      report.y = r.y;
      report.trace = r.trace;
      report.tolerance = r.tolerance;
      best_enc = r.encoding;
    }
  }
  if (report.value < 0.0) raise(errc::invalid_params, "search produced no valid evaluation");
  return report;
}

}  // namespace morrey
