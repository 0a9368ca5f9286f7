#pragma once

#include "treecol/extremal.hpp"
#include "treecol/labeling.hpp"
#include "treecol/tree.hpp"

#include <string>
#include <vector>

namespace treecol {

/// One row of a survey: everything a table of small-tree diameters needs.
struct SurveyRecord {
    std::string code;
    int n = 0;
    std::vector<int> degree_sequence; // descending
    long long diameter = 0;
    std::string method; // "search" or "oracle"
    Labeling witness;   // balanced, norm == diameter
    bool is_max = false;
    bool is_min = false;

    bool operator==(const SurveyRecord&) const = default;
};

struct SurveyOptions {
    DiameterMethod method = DiameterMethod::search;
    int jobs = 1;
    /// Recompute every diameter with the BFS oracle as well and fail loudly
    /// on any disagreement.
    bool cross_check = false;
};

/// One record per isomorphism class on n vertices, sorted by code. The output
/// is byte-identical for any job count.
std::vector<SurveyRecord> run_survey(int n, const SurveyOptions& options = {});

/// The reference dataset: all trees on 1..6 vertices with diameters and
/// balanced witnesses, ordered by (n, code). Rows always come from the
/// search pipeline; cross-checking reruns the BFS oracle on every tree first.
std::vector<SurveyRecord> golden_survey(bool cross_check_with_oracle = false, int jobs = 1);

std::string records_to_csv(const std::vector<SurveyRecord>& records);
std::vector<SurveyRecord> records_from_csv(const std::string& text);

std::string records_to_json(const std::vector<SurveyRecord>& records);
std::vector<SurveyRecord> records_from_json(const std::string& text);

/// Line-by-line comparison; one "line N: expected ... | actual ..." entry per
/// difference. Empty means identical.
std::vector<std::string> diff_lines(const std::string& expected, const std::string& actual);

} // namespace treecol
