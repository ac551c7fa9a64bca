#include "hima/advisors/pool.hpp"

#include <limits>

namespace hima::advisors {

Advisor::Advisor(std::string agent_id, clustering::StrategicObjective objective,
                 std::vector<CorpusEntry> corpus)
    : agent_id_(std::move(agent_id)), objective_(std::move(objective)), corpus_(std::move(corpus)) {
    if (corpus_.empty()) throw Error("advisor built with empty corpus");
}

Proposal Advisor::propose(const std::vector<double>& features) const {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
        double d = 0.0;
        const auto& f = corpus_[i].features;
        for (std::size_t j = 0; j < f.size(); ++j) {
            double diff = f[j] - features[j];
            d += diff * diff;
        }
        if (d < best_d) {  // strict: ties keep the earliest index
            best_d = d;
            best = i;
        }
    }
    Proposal p;
    p.agent_id = agent_id_;
    p.window = corpus_[best].window;
    p.tactical_rationale = corpus_[best].rationale;
    p.strategic_objective = objective_.prompt_text;
    p.objective_label = clustering::to_string(objective_.label);
    return p;
}

Proposal Advisor::propose(const world::Observation& obs,
                          const world::ActionCatalog& catalog) const {
    return propose(feature_vector(obs.self, obs.tick, catalog));
}

std::vector<Proposal> AdvisorPool::propose_all(const world::Observation& obs,
                                               const world::ActionCatalog& catalog) const {
    std::vector<Proposal> out;
    out.reserve(advisors_.size());
    auto features = feature_vector(obs.self, obs.tick, catalog);
    for (const auto& a : advisors_) out.push_back(a.propose(features));
    return out;
}

AdvisorPool build_pool(const clustering::ClusterModel& model,
                       const std::vector<demos::DemoSample>& samples,
                       const std::vector<clustering::StrategicObjective>& objectives,
                       const world::ActionCatalog& catalog) {
    std::vector<std::vector<CorpusEntry>> buckets(static_cast<std::size_t>(model.k));
    for (const auto& s : samples) {
        int cluster = -1;
        if (s.cluster_id) {
            cluster = *s.cluster_id;
        } else if (auto it = model.assignments.find(s.replay_id); it != model.assignments.end()) {
            cluster = it->second;
        }
        if (cluster < 0 || cluster >= model.k) continue;
        CorpusEntry entry;
        entry.features = feature_vector(textio::parse_state(s.state_text), catalog);
        entry.window = s.window;
        entry.rationale = s.rationale;
        buckets[static_cast<std::size_t>(cluster)].push_back(std::move(entry));
    }

    std::vector<Advisor> advisors;
    for (int c = 0; c < model.k; ++c) {
        if (buckets[static_cast<std::size_t>(c)].empty()) throw EmptyCluster(c);
        clustering::StrategicObjective so;
        if (c < static_cast<int>(objectives.size())) so = objectives[static_cast<std::size_t>(c)];
        advisors.emplace_back("agent_" + std::to_string(c), so,
                              std::move(buckets[static_cast<std::size_t>(c)]));
    }
    return AdvisorPool(std::move(advisors));
}

}  // namespace hima::advisors
