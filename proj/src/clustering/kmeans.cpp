#include "hima/clustering/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>

#include <nlohmann/json.hpp>

namespace hima::clustering {

CompositionVector composition_vector(const std::map<std::string, int>& final_units,
                                     const world::ActionCatalog& catalog) {
    const auto& unit_set = catalog.unit_set();
    CompositionVector v;
    v.race = catalog.race();
    v.ratios.assign(unit_set.size(), 0.0);

    double total = 0.0;
    for (std::size_t i = 0; i < unit_set.size(); ++i) {
        auto it = final_units.find(unit_set[i]);
        if (it == final_units.end() || it->second <= 0) continue;
        double weighted = static_cast<double>(it->second) * catalog.unit_supply_weight(unit_set[i]);
        v.ratios[i] = weighted;
        total += weighted;
    }
    if (total <= 0.0) return v;  // invalid: no army units
    for (double& r : v.ratios) r /= total;
    v.valid = true;
    return v;
}

namespace {

// Platform-independent uniform in [0,1); std::uniform_real_distribution
// is not bit-stable across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double sqdist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double diff = a[i] - b[i];
        d += diff * diff;
    }
    return d;
}

std::vector<std::vector<double>> kmeanspp_init(const std::vector<std::vector<double>>& points,
                                               int k, std::mt19937_64& rng) {
    std::vector<std::vector<double>> centroids;
    std::size_t first = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(points.size()));
    if (first >= points.size()) first = points.size() - 1;
    centroids.push_back(points[first]);

    std::vector<double> d2(points.size());
    while (static_cast<int>(centroids.size()) < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            double best = std::numeric_limits<double>::max();
            for (const auto& c : centroids) best = std::min(best, sqdist(points[i], c));
            d2[i] = best;
            total += best;
        }
        std::size_t chosen;
        if (total <= 0.0) {
            // All remaining points coincide with a centroid.
            chosen = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(points.size()));
            if (chosen >= points.size()) chosen = points.size() - 1;
        } else {
            double r = uniform01(rng) * total;
            double acc = 0.0;
            chosen = points.size() - 1;
            for (std::size_t i = 0; i < points.size(); ++i) {
                acc += d2[i];
                if (r < acc) {
                    chosen = i;
                    break;
                }
            }
        }
        centroids.push_back(points[chosen]);
    }
    return centroids;
}

}  // namespace

KMeansResult kmeans(const std::vector<std::vector<double>>& points, int k, std::uint64_t seed) {
    if (k < 1) throw Error("k must be >= 1");
    if (static_cast<int>(points.size()) < k)
        throw TooFewReplays(static_cast<int>(points.size()), k);

    std::mt19937_64 rng(seed);
    KMeansResult result;
    result.k = k;
    result.seed = seed;
    result.centroids = kmeanspp_init(points, k, rng);
    result.assignments.assign(points.size(), -1);

    constexpr int kMaxIterations = 100;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        // Assignment step; ties go to the lowest centroid index.
        bool changed = false;
        double wcss = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            int best = 0;
            double best_d = sqdist(points[i], result.centroids[0]);
            for (int c = 1; c < k; ++c) {
                double d = sqdist(points[i], result.centroids[static_cast<std::size_t>(c)]);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            wcss += best_d;
            if (result.assignments[i] != best) {
                result.assignments[i] = best;
                changed = true;
            }
        }
        result.wcss_history.push_back(wcss);
        result.iterations_used = iter + 1;
        if (!changed) break;

        // Update step: centroids become member means; an emptied cluster
        // keeps its previous centroid.
        std::vector<std::vector<double>> sums(static_cast<std::size_t>(k),
                                              std::vector<double>(points[0].size(), 0.0));
        std::vector<int> counts(static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            auto c = static_cast<std::size_t>(result.assignments[i]);
            ++counts[c];
            for (std::size_t d = 0; d < points[i].size(); ++d) sums[c][d] += points[i][d];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] == 0) continue;
            auto& centroid = result.centroids[static_cast<std::size_t>(c)];
            for (std::size_t d = 0; d < centroid.size(); ++d)
                centroid[d] = sums[static_cast<std::size_t>(c)][d] /
                              counts[static_cast<std::size_t>(c)];
        }
    }
    return result;
}

ClusterModel cluster_replays(const std::vector<demos::ReplayLog>& logs,
                             const world::ActionCatalog& catalog, int k, std::uint64_t seed,
                             bool winners_only) {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> points;
    for (const auto& log : logs) {
        int subject = log.meta.subject;
        if (winners_only && log.meta.winner != subject) continue;
        auto v = composition_vector(log.meta.final_units[static_cast<std::size_t>(subject)],
                                    catalog);
        if (!v.valid) continue;
        ids.push_back(log.meta.id);
        points.push_back(std::move(v.ratios));
    }
    if (static_cast<int>(points.size()) < k)
        throw TooFewReplays(static_cast<int>(points.size()), k);

    KMeansResult km = kmeans(points, k, seed);
    ClusterModel model;
    model.race = catalog.race();
    model.k = k;
    model.centroids = std::move(km.centroids);
    model.seed = seed;
    model.iterations_used = km.iterations_used;
    model.wcss_history = std::move(km.wcss_history);
    for (std::size_t i = 0; i < ids.size(); ++i) model.assignments[ids[i]] = km.assignments[i];
    return model;
}

ClusterCriterion criterion_from_string(const std::string& name) {
    if (name == "unit_composition") return ClusterCriterion::UnitComposition;
    if (name == "opening_strategy") return ClusterCriterion::OpeningStrategy;
    if (name == "advancement_tempo") return ClusterCriterion::AdvancementTempo;
    throw ConfigError("unknown clustering criterion: " + name);
}

ClusterModel cluster_replays_by(ClusterCriterion criterion,
                                const std::vector<demos::ReplayLog>& logs,
                                const world::ActionCatalog& catalog, int k, std::uint64_t seed,
                                bool winners_only) {
    switch (criterion) {
        case ClusterCriterion::UnitComposition:
            return cluster_replays(logs, catalog, k, seed, winners_only);
        case ClusterCriterion::OpeningStrategy:
            throw NotImplementedCriterion("opening_strategy");
        case ClusterCriterion::AdvancementTempo:
            throw NotImplementedCriterion("advancement_tempo");
    }
    throw NotImplementedCriterion("?");
}

const char* to_string(ObjectiveLabel label) {
    switch (label) {
        case ObjectiveLabel::GroundSupportFocus: return "GroundSupportFocus";
        case ObjectiveLabel::AirFocus: return "AirFocus";
        case ObjectiveLabel::GroundAirHybrid: return "GroundAirHybrid";
    }
    return "?";
}

namespace {

std::string objective_prompt(ObjectiveLabel label, world::Race race) {
    std::string race_name = world::to_string(race);
    switch (label) {
        case ObjectiveLabel::AirFocus:
            return "Strategic objective: achieve air superiority. As a " + race_name +
                   " advisor, prioritize air unit production and the structures and "
                   "technology that unlock it, while keeping the economy stable.";
        case ObjectiveLabel::GroundSupportFocus:
            return "Strategic objective: build a dominant ground force with support. As a " +
                   race_name +
                   " advisor, prioritize ground unit production, production structures and "
                   "key ground technology.";
        case ObjectiveLabel::GroundAirHybrid:
            return "Strategic objective: flexible ground/air hybrid. As a " + race_name +
                   " advisor, balance ground and air production to adapt to the opponent's "
                   "composition.";
    }
    return "";
}

}  // namespace

std::vector<StrategicObjective> assign_strategic_objective(const ClusterModel& model,
                                                           const world::ActionCatalog& catalog,
                                                           double dominance_threshold) {
    const auto& unit_set = catalog.unit_set();
    std::vector<StrategicObjective> out;
    for (int c = 0; c < model.k; ++c) {
        const auto& centroid = model.centroids[static_cast<std::size_t>(c)];
        double air_share = 0.0, ground_share = 0.0;
        for (std::size_t i = 0; i < unit_set.size() && i < centroid.size(); ++i)
            (catalog.is_air_unit(unit_set[i]) ? air_share : ground_share) += centroid[i];
        StrategicObjective so;
        so.cluster_index = c;
        if (air_share >= dominance_threshold)
            so.label = ObjectiveLabel::AirFocus;
        else if (ground_share >= dominance_threshold)
            so.label = ObjectiveLabel::GroundSupportFocus;
        else
            so.label = ObjectiveLabel::GroundAirHybrid;
        so.prompt_text = objective_prompt(so.label, model.race);
        out.push_back(std::move(so));
    }
    return out;
}

void save_cluster_model(const ClusterModel& model, const std::string& path) {
    nlohmann::json j;
    j["hima_cluster_model"] = 1;
    j["race"] = world::to_string(model.race);
    j["k"] = model.k;
    j["centroids"] = model.centroids;
    j["assignments"] = model.assignments;
    j["seed"] = model.seed;
    j["iterations_used"] = model.iterations_used;
    j["wcss_history"] = model.wcss_history;
    std::ofstream out(path);
    if (!out) throw IoError("cannot write cluster model: " + path);
    out << j.dump(2) << "\n";
}

ClusterModel load_cluster_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open cluster model: " + path);
    nlohmann::json j;
    in >> j;
    ClusterModel model;
    model.race = world::race_from_string(j.at("race").get<std::string>());
    model.k = j.at("k").get<int>();
    model.centroids = j.at("centroids").get<std::vector<std::vector<double>>>();
    model.assignments = j.at("assignments").get<std::map<std::string, int>>();
    model.seed = j.at("seed").get<std::uint64_t>();
    model.iterations_used = j.at("iterations_used").get<int>();
    model.wcss_history = j.at("wcss_history").get<std::vector<double>>();
    return model;
}

}  // namespace hima::clustering
