#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "slang/util.hpp"

namespace slang {

// One crowd-sourced dictionary record as found in a raw dump.
struct RawEntry {
    std::string phrase;
    std::string definition;
    std::string example;       // usage sentence, may be empty
    long upvotes = 0;
    long downvotes = 0;
    util::Date added_date{};
    std::string source_id;

    bool operator==(const RawEntry&) const = default;
};

struct Provenance {
    std::string source_id;
    std::string pipeline_version;

    bool operator==(const Provenance&) const = default;
};

// Standardized benchmark sample: phrase p, context x, templated explanation y
// plus four synonym variants (five references total).
struct FactualRecord {
    std::string phrase;
    std::string context;
    std::string explanation;
    std::array<std::string, 4> variants{};
    std::optional<std::string> category;
    Provenance provenance;

    std::vector<std::string> references() const {
        return {explanation, variants[0], variants[1], variants[2], variants[3]};
    }

    bool operator==(const FactualRecord&) const = default;
};

// Counterfactual sample derived from a FactualRecord: same phrase, divergent
// explanation y' via entity replacement, regenerated context x'.
struct CounterfactualRecord {
    std::string phrase;
    std::string context;
    std::string explanation;
    std::array<std::string, 4> variants{};
    std::vector<std::pair<std::string, std::string>> entity_map;  // (original, replacement)
    std::string parent_id;
    std::optional<std::string> category;
    Provenance provenance;

    std::vector<std::string> references() const {
        return {explanation, variants[0], variants[1], variants[2], variants[3]};
    }

    bool operator==(const CounterfactualRecord&) const = default;
};

inline void to_json(nlohmann::json& j, const RawEntry& e) {
    j = nlohmann::json{
        {"phrase", e.phrase},
        {"definition", e.definition},
        {"example", e.example},
        {"upvotes", e.upvotes},
        {"downvotes", e.downvotes},
        {"added_date", util::format_date(e.added_date)},
        {"source_id", e.source_id},
    };
}

inline void from_json(const nlohmann::json& j, RawEntry& e) {
    j.at("phrase").get_to(e.phrase);
    j.at("definition").get_to(e.definition);
    e.example = j.value("example", std::string{});
    j.at("upvotes").get_to(e.upvotes);
    j.at("downvotes").get_to(e.downvotes);
    auto date = util::parse_iso_date(j.at("added_date").get<std::string>());
    if (!date) throw ValidationError("invalid added_date: " + j.at("added_date").get<std::string>());
    e.added_date = *date;
    e.source_id = j.value("source_id", std::string{});
}

inline void to_json(nlohmann::json& j, const FactualRecord& r) {
    j = nlohmann::json{
        {"phrase", r.phrase},
        {"context", r.context},
        {"explanation", r.explanation},
        {"variants", r.variants},
        {"source_id", r.provenance.source_id},
        {"pipeline_version", r.provenance.pipeline_version},
    };
    if (r.category) j["category"] = *r.category;
}

inline void from_json(const nlohmann::json& j, FactualRecord& r) {
    j.at("phrase").get_to(r.phrase);
    j.at("context").get_to(r.context);
    j.at("explanation").get_to(r.explanation);
    j.at("variants").get_to(r.variants);
    r.provenance.source_id = j.value("source_id", std::string{});
    r.provenance.pipeline_version = j.value("pipeline_version", std::string{});
    if (j.contains("category")) r.category = j.at("category").get<std::string>();
    else r.category.reset();
}

inline void to_json(nlohmann::json& j, const CounterfactualRecord& r) {
    j = nlohmann::json{
        {"phrase", r.phrase},
        {"context", r.context},
        {"explanation", r.explanation},
        {"variants", r.variants},
        {"entity_map", r.entity_map},
        {"parent_id", r.parent_id},
        {"source_id", r.provenance.source_id},
        {"pipeline_version", r.provenance.pipeline_version},
    };
    if (r.category) j["category"] = *r.category;
}

inline void from_json(const nlohmann::json& j, CounterfactualRecord& r) {
    j.at("phrase").get_to(r.phrase);
    j.at("context").get_to(r.context);
    j.at("explanation").get_to(r.explanation);
    j.at("variants").get_to(r.variants);
    j.at("entity_map").get_to(r.entity_map);
    j.at("parent_id").get_to(r.parent_id);
    r.provenance.source_id = j.value("source_id", std::string{});
    r.provenance.pipeline_version = j.value("pipeline_version", std::string{});
    if (j.contains("category")) r.category = j.at("category").get<std::string>();
    else r.category.reset();
}

}  // namespace slang
