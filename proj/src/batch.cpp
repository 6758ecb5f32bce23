#include "mddkit/batch.hpp"

#include "mddkit/ideal_tree.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mddkit {

std::vector<std::uint8_t> batch_contains_serial(const DiagramStore& store,
                                                std::optional<NodeId> root,
                                                std::span<const Monomial> queries) {
  std::vector<std::uint8_t> out(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i)
    out[i] = store.contains(root, queries[i]) ? 1 : 0;
  return out;
}

std::vector<std::uint8_t> batch_contains_parallel(const DiagramStore& store,
                                                  std::optional<NodeId> root,
                                                  std::span<const Monomial> queries,
                                                  int threads) {
  std::vector<std::uint8_t> out(queries.size());
#ifdef _OPENMP
  const std::int64_t n = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = store.contains(root, queries[static_cast<std::size_t>(i)]) ? 1 : 0;
#else
  (void)threads;
  out = batch_contains_serial(store, root, queries);
#endif
  return out;
}

std::vector<std::uint8_t> batch_naive_contains_serial(const GeneratorList& gens,
                                                      std::span<const Monomial> queries) {
  std::vector<std::uint8_t> out(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i)
    out[i] = naive_contains(gens, queries[i]) ? 1 : 0;
  return out;
}

std::vector<std::uint8_t> batch_naive_contains_parallel(const GeneratorList& gens,
                                                        std::span<const Monomial> queries,
                                                        int threads) {
  std::vector<std::uint8_t> out(queries.size());
#ifdef _OPENMP
  const std::int64_t n = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = naive_contains(gens, queries[static_cast<std::size_t>(i)]) ? 1 : 0;
#else
  (void)threads;
  out = batch_naive_contains_serial(gens, queries);
#endif
  return out;
}

}  // namespace mddkit
