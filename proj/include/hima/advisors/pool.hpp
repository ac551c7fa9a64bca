#pragma once

#include <string>
#include <vector>

#include "hima/advisors/features.hpp"
#include "hima/advisors/proposal.hpp"
#include "hima/clustering/kmeans.hpp"
#include "hima/demos/pipeline.hpp"

namespace hima::advisors {

struct EmptyCluster : Error {
    int index;
    explicit EmptyCluster(int idx)
        : Error("cluster " + std::to_string(idx) + " has no samples"), index(idx) {}
};

struct CorpusEntry {
    std::vector<double> features;
    std::vector<WindowEntry> window;
    std::string rationale;
};

/// One specialized retrieval advisor: 1-nearest-neighbour over its
/// cluster's (state features, window, rationale) triples.
class Advisor {
public:
    Advisor(std::string agent_id, clustering::StrategicObjective objective,
            std::vector<CorpusEntry> corpus);

    const std::string& agent_id() const { return agent_id_; }
    const clustering::StrategicObjective& objective() const { return objective_; }
    std::size_t corpus_size() const { return corpus_.size(); }
    const std::vector<CorpusEntry>& corpus() const { return corpus_; }

    /// Nearest corpus state by squared Euclidean distance; ties resolve
    /// to the earliest-indexed sample. Pure and deterministic.
    Proposal propose(const world::Observation& obs, const world::ActionCatalog& catalog) const;
    Proposal propose(const std::vector<double>& features) const;

private:
    std::string agent_id_;
    clustering::StrategicObjective objective_;
    std::vector<CorpusEntry> corpus_;
};

/// k advisors, one per cluster, sharing one catalog.
class AdvisorPool {
public:
    AdvisorPool() = default;
    AdvisorPool(std::vector<Advisor> advisors) : advisors_(std::move(advisors)) {}

    std::size_t size() const { return advisors_.size(); }
    const Advisor& advisor(std::size_t i) const { return advisors_[i]; }
    const std::vector<Advisor>& advisors() const { return advisors_; }

    std::vector<Proposal> propose_all(const world::Observation& obs,
                                      const world::ActionCatalog& catalog) const;

private:
    std::vector<Advisor> advisors_;
};

/// Partition rationale-attached samples by their cluster id and bind
/// each advisor to its cluster's strategic objective.
AdvisorPool build_pool(const clustering::ClusterModel& model,
                       const std::vector<demos::DemoSample>& samples,
                       const std::vector<clustering::StrategicObjective>& objectives,
                       const world::ActionCatalog& catalog);

}  // namespace hima::advisors
