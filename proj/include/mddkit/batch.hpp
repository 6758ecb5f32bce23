#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mddkit/mdd.hpp"

namespace mddkit {

/// Bulk membership kernels. Queries are independent and the store is only
/// read, so the parallel versions split the query range across OpenMP
/// threads; the serial versions are the reference they are tested against.
/// threads <= 0 picks the OpenMP default.

std::vector<std::uint8_t> batch_contains_serial(const DiagramStore& store,
                                                std::optional<NodeId> root,
                                                std::span<const Monomial> queries);

std::vector<std::uint8_t> batch_contains_parallel(const DiagramStore& store,
                                                  std::optional<NodeId> root,
                                                  std::span<const Monomial> queries,
                                                  int threads = 0);

std::vector<std::uint8_t> batch_naive_contains_serial(const GeneratorList& gens,
                                                      std::span<const Monomial> queries);

std::vector<std::uint8_t> batch_naive_contains_parallel(const GeneratorList& gens,
                                                        std::span<const Monomial> queries,
                                                        int threads = 0);

}  // namespace mddkit
