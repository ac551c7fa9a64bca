#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hima/demos/replay.hpp"

namespace hima::clustering {

/// Supply-weighted army-unit ratio vector over the race's unit set U
/// (catalog order). Invalid when the replay produced no army units.
struct CompositionVector {
    world::Race race = world::Race::Protoss;
    std::vector<double> ratios;  // length |U|, sums to 1 when valid
    bool valid = false;
};

/// r_i = n_i * w_i / sum_j n_j * w_j, with w_i the unit's supply cost.
CompositionVector composition_vector(const std::map<std::string, int>& final_units,
                                     const world::ActionCatalog& catalog);

struct TooFewReplays : Error {
    TooFewReplays(int have, int need)
        : Error("k-means needs at least " + std::to_string(need) + " valid vectors, have " +
                std::to_string(have)) {}
};

struct KMeansResult {
    int k = 0;
    std::vector<std::vector<double>> centroids;
    std::vector<int> assignments;       // per input vector
    std::uint64_t seed = 0;
    int iterations_used = 0;
    std::vector<double> wcss_history;   // per iteration, non-increasing
};

/// Lloyd's algorithm, k-means++ seeding, squared Euclidean distance,
/// at most 100 iterations or stable assignments. Nearest-centroid ties
/// break toward the lowest centroid index.
KMeansResult kmeans(const std::vector<std::vector<double>>& points, int k, std::uint64_t seed);

struct ClusterModel {
    world::Race race = world::Race::Protoss;
    int k = 3;
    std::vector<std::vector<double>> centroids;
    std::map<std::string, int> assignments;  // replay id -> cluster index
    std::uint64_t seed = 0;
    int iterations_used = 0;
    std::vector<double> wcss_history;
};

/// Cluster replays by the subject side's final army composition.
/// winners_only drops replays the subject did not win.
ClusterModel cluster_replays(const std::vector<demos::ReplayLog>& logs,
                             const world::ActionCatalog& catalog, int k, std::uint64_t seed,
                             bool winners_only);

enum class ClusterCriterion { UnitComposition, OpeningStrategy, AdvancementTempo };

ClusterCriterion criterion_from_string(const std::string& name);

struct NotImplementedCriterion : Error {
    explicit NotImplementedCriterion(const std::string& name)
        : Error("clustering criterion not implemented: " + name) {}
};

/// Only UnitComposition is implemented; the Table-6 alternatives are
/// registered seams that reject with NotImplementedCriterion.
ClusterModel cluster_replays_by(ClusterCriterion criterion,
                                const std::vector<demos::ReplayLog>& logs,
                                const world::ActionCatalog& catalog, int k, std::uint64_t seed,
                                bool winners_only);

enum class ObjectiveLabel { GroundSupportFocus, AirFocus, GroundAirHybrid };

const char* to_string(ObjectiveLabel label);

struct StrategicObjective {
    int cluster_index = 0;
    ObjectiveLabel label = ObjectiveLabel::GroundAirHybrid;
    std::string prompt_text;
};

inline constexpr double kDominanceThreshold = 0.6;

/// Label each centroid by its air/ground mass share and produce the SO
/// prompt block for advisors.
std::vector<StrategicObjective> assign_strategic_objective(
    const ClusterModel& model, const world::ActionCatalog& catalog,
    double dominance_threshold = kDominanceThreshold);

void save_cluster_model(const ClusterModel& model, const std::string& path);
ClusterModel load_cluster_model(const std::string& path);

}  // namespace hima::clustering
