#pragma once

#include <string>

#include <json.hpp>

#include "attainable/class_group.hpp"

namespace attainable {

/// Line-oriented TSV rendering of a survey report. Row kinds:
///   range <from> <to>
///   scanned <count>
///   tally <p> <lambda as comma-joined parts> <count>
///   hist <h> <count>
/// Ordering is fixed by the underlying maps, so output is byte-stable.
inline std::string to_tsv(SurveyReport const& rep) {
    std::string out;
    out += "range\t" + std::to_string(rep.from) + "\t" + std::to_string(rep.to) + "\n";
    out += "scanned\t" + std::to_string(rep.scanned) + "\n";
    for (auto const& [key, count] : rep.tallies)
        out += "tally\t" + std::to_string(key.first) + "\t" + key.second.to_string() +
               "\t" + std::to_string(count) + "\n";
    for (auto const& [h, count] : rep.class_number_histogram)
        out += "hist\t" + std::to_string(h) + "\t" + std::to_string(count) + "\n";
    return out;
}

/// Structured JSON rendering; exact integers are decimal strings.
inline nlohmann::ordered_json to_json(SurveyReport const& rep) {
    nlohmann::ordered_json j;
    j["range"] = {{"from", std::to_string(rep.from)}, {"to", std::to_string(rep.to)}};
    j["scanned"] = std::to_string(rep.scanned);
    auto tallies = nlohmann::ordered_json::array();
    for (auto const& [key, count] : rep.tallies) {
        nlohmann::ordered_json entry;
        entry["p"] = std::to_string(key.first);
        entry["lambda"] = key.second.to_string();
        entry["count"] = std::to_string(count);
        tallies.push_back(std::move(entry));
    }
    j["tallies"] = std::move(tallies);
    auto hist = nlohmann::ordered_json::array();
    for (auto const& [h, count] : rep.class_number_histogram) {
        nlohmann::ordered_json entry;
        entry["h"] = std::to_string(h);
        entry["count"] = std::to_string(count);
        hist.push_back(std::move(entry));
    }
    j["class_number_histogram"] = std::move(hist);
    return j;
}

}  // namespace attainable
