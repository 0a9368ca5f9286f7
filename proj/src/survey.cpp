#include "treecol/survey.hpp"

#include "treecol/coloring.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace treecol {

namespace {

std::vector<int> degree_sequence_of(const Tree& t) {
    std::vector<int> degrees(t.n());
    for (int v = 0; v < t.n(); ++v) degrees[v] = t.degree(v);
    std::sort(degrees.rbegin(), degrees.rend());
    return degrees;
}

std::string join_ints(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ' ';
        out << values[i];
    }
    return out.str();
}

std::vector<int> split_ints(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> values;
    int x;
    while (in >> x) values.push_back(x);
    if (!in.eof()) throw ParseError("expected space-separated integers: " + text);
    return values;
}

} // namespace

std::vector<SurveyRecord> run_survey(int n, const SurveyOptions& options) {
    auto entries = sweep_diameters(n, options.method, options.jobs);
    long long max_value = entries.front().result.value;
    long long min_value = entries.front().result.value;
    for (const auto& e : entries) {
        max_value = std::max(max_value, e.result.value);
        min_value = std::min(min_value, e.result.value);
    }
    std::vector<SurveyRecord> records;
    records.reserve(entries.size());
    for (const auto& e : entries) {
        if (options.cross_check) {
            long long other = options.method == DiameterMethod::search
                                  ? oracle_diameter(e.tree).value
                                  : max_balanced_labeling(e.tree).value;
            if (other != e.result.value) {
                throw Error("method disagreement on " + e.code.str() + ": " +
                            std::to_string(e.result.value) + " vs " + std::to_string(other));
            }
        }
        SurveyRecord r;
        r.code = e.code.str();
        r.n = n;
        r.degree_sequence = degree_sequence_of(e.tree);
        r.diameter = e.result.value;
        r.method = to_string(e.result.method);
        r.witness = e.result.witness;
        r.is_max = e.result.value == max_value;
        r.is_min = e.result.value == min_value;
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<SurveyRecord> golden_survey(bool cross_check_with_oracle, int jobs) {
    std::vector<SurveyRecord> all;
    for (int n = 1; n <= 6; ++n) {
        SurveyOptions options;
        options.jobs = jobs;
        options.cross_check = cross_check_with_oracle;
        auto records = run_survey(n, options);
        for (auto& r : records) all.push_back(std::move(r));
    }
    return all;
}

std::string records_to_csv(const std::vector<SurveyRecord>& records) {
    std::ostringstream out;
    out << "code,n,degree_sequence,diameter,method,witness,is_max,is_min\n";
    for (const auto& r : records) {
        out << r.code << ',' << r.n << ',' << join_ints(r.degree_sequence) << ',' << r.diameter
            << ',' << r.method << ',' << r.witness.to_string() << ',' << (r.is_max ? 1 : 0)
            << ',' << (r.is_min ? 1 : 0) << "\n";
    }
    return out.str();
}

std::vector<SurveyRecord> records_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty csv");
    if (line != "code,n,degree_sequence,diameter,method,witness,is_max,is_min") {
        throw ParseError("unexpected csv header: " + line);
    }
    std::vector<SurveyRecord> records;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream fs(line);
        std::string field;
        while (std::getline(fs, field, ',')) fields.push_back(field);
        if (fields.size() != 8) {
            throw ParseError("csv line " + std::to_string(lineno) + ": expected 8 fields");
        }
        SurveyRecord r;
        r.code = fields[0];
        r.n = std::stoi(fields[1]);
        r.degree_sequence = split_ints(fields[2]);
        r.diameter = std::stoll(fields[3]);
        r.method = fields[4];
        r.witness = Labeling::from_string(fields[5]);
        r.is_max = fields[6] == "1";
        r.is_min = fields[7] == "1";
        records.push_back(std::move(r));
    }
    return records;
}

std::string records_to_json(const std::vector<SurveyRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back({{"code", r.code},
                       {"n", r.n},
                       {"degree_sequence", r.degree_sequence},
                       {"diameter", r.diameter},
                       {"method", r.method},
                       {"witness", r.witness.labels},
                       {"is_max", r.is_max},
                       {"is_min", r.is_min}});
    }
    return arr.dump(2) + "\n";
}

std::vector<SurveyRecord> records_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<SurveyRecord> records;
    for (const auto& item : arr) {
        SurveyRecord r;
        r.code = item.at("code").get<std::string>();
        r.n = item.at("n").get<int>();
        r.degree_sequence = item.at("degree_sequence").get<std::vector<int>>();
        r.diameter = item.at("diameter").get<long long>();
        r.method = item.at("method").get<std::string>();
        r.witness.labels = item.at("witness").get<std::vector<int>>();
        r.is_max = item.at("is_max").get<bool>();
        r.is_min = item.at("is_min").get<bool>();
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<std::string> diff_lines(const std::string& expected, const std::string& actual) {
    std::istringstream a(expected), b(actual);
    std::vector<std::string> diffs;
    std::string la, lb;
    int lineno = 0;
    for (;;) {
        bool has_a = static_cast<bool>(std::getline(a, la));
        bool has_b = static_cast<bool>(std::getline(b, lb));
        if (!has_a && !has_b) break;
        ++lineno;
        if (!has_a) la = "<missing>";
        if (!has_b) lb = "<missing>";
        if (la != lb) {
            diffs.push_back("line " + std::to_string(lineno) + ": expected " + la +
                            " | actual " + lb);
        }
    }
    return diffs;
}

} // namespace treecol
