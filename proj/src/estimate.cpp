#include "gham/estimate.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gham/sampling.hpp"

namespace gham {

std::vector<EstimateRow> run_estimate(const EstimateConfig& cfg) {
  if (cfg.n_values.empty()) throw std::invalid_argument("no n values given");
  for (int n : cfg.n_values)
    if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");

  const long long rows = static_cast<long long>(cfg.n_values.size());
  const long long total = rows * cfg.trials;
  std::vector<std::atomic<long long>> succ(rows), unk(rows);
  for (long long r = 0; r < rows; ++r) {
    succ[r].store(0);
    unk[r].store(0);
  }

  std::atomic<long long> next{0};
  std::mutex fail_mu;
  std::exception_ptr failure;

  auto worker = [&]() {
    try {
      for (;;) {
        const long long i = next.fetch_add(1);
        if (i >= total) break;
        const long long r = i / cfg.trials;
        auto g = sample_directed(cfg.graphon, cfg.n_values[r],
                                 RngSpec{cfg.master_seed, static_cast<std::uint64_t>(i)});
        if (cfg.mode == EstimateMode::Decomposition) {
          if (has_ham_decomposition(g)) succ[r].fetch_add(1);
        } else {
          auto res = find_ham_cycle(g, cfg.cycle_budget);
          if (res.status == CycleSearchStatus::Found)
            succ[r].fetch_add(1);
          else if (res.status == CycleSearchStatus::Unknown)
            unk[r].fetch_add(1);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(fail_mu);
      if (!failure) failure = std::current_exception();
      next.store(total);  // stop the other workers
    }
  };

  if (cfg.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(cfg.workers);
    for (int t = 0; t < cfg.workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<EstimateRow> out(rows);
  for (long long r = 0; r < rows; ++r) {
    EstimateRow& row = out[r];
    row.n = cfg.n_values[r];
    row.trials = cfg.trials;
    row.successes = succ[r].load();
    row.unknown = unk[r].load();
    row.p_hat = static_cast<double>(row.successes) / row.trials;
    row.std_err = std::sqrt(row.p_hat * (1.0 - row.p_hat) / row.trials);
  }
  return out;
}

std::string rows_to_csv(const std::vector<EstimateRow>& rows) {
  std::ostringstream os;
  os << "n,successes,trials,p_hat,stderr,unknown\n";
  os << std::fixed << std::setprecision(6);
  for (const auto& r : rows)
    os << r.n << ',' << r.successes << ',' << r.trials << ',' << r.p_hat << ',' << r.std_err
       << ',' << r.unknown << '\n';
  return os.str();
}

}  // namespace gham
