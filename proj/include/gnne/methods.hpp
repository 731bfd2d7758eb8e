#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "gnne/embedding.hpp"
#include "gnne/graph.hpp"
#include "gnne/pipeline.hpp"
#include "gnne/ranked_list.hpp"

namespace gnne {

inline constexpr std::array<std::string_view, 13> kMethodNames = {
    "HC", "DC", "CI", "CC", "EC", "BC", "KSHELL", "IKS", "GAT", "GCN", "GEHC", "GNNE", "RANDOM"};

bool is_method(std::string_view name);
/// "HC, DC, ..." for error messages.
std::string method_list();
/// GAT, GCN and GNNE rank with a trained model.
bool needs_model(std::string_view name);

struct MethodContext {
  GnneModel* gnne = nullptr;
  BaselineModels* baselines = nullptr;
  DeepWalkConfig gehc_walk;  // embedding for GEHC
  std::size_t ci_radius = 2;
  std::uint64_t seed = 1;    // RANDOM shuffle and GEHC walks
};

/// Uniformly shuffled order; scores are n - position.
RankedList random_ranking(const Graph& g, std::uint64_t seed);

/// Throws ArgumentError for unknown names or a missing model.
RankedList rank_method(std::string_view name, const Graph& g, MethodContext& ctx);

}  // namespace gnne
