#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "netgrowth/entropy.hpp"
#include "netgrowth/errors.hpp"
#include "netgrowth/rates.hpp"
#include "netgrowth/theorems.hpp"

namespace netgrowth {

// One embedded datum: a scalar constant, an observation pair, a metrics
// triple or a longevity row, with a provenance note naming where the number
// comes from. Inputs and published expectations are stored under separate
// keys ("expected.*") so reproduction compares computed against printed
// instead of trusting a single copy.
struct DatasetRecord {
    std::string key;
    std::variant<double, GrowthPair, NetworkMetrics, LongevityRecord> payload;
    std::string provenance;
};

class Registry {
public:
    void add_scalar(std::string key, double value, std::string provenance) {
        emplace(std::move(key), value, std::move(provenance));
    }
    void add_pair(std::string key, GrowthPair value, std::string provenance) {
        emplace(std::move(key), std::move(value), std::move(provenance));
    }
    void add_metrics(std::string key, NetworkMetrics value, std::string provenance) {
        emplace(std::move(key), std::move(value), std::move(provenance));
    }
    void add_longevity(std::string key, LongevityRecord value, std::string provenance) {
        emplace(std::move(key), std::move(value), std::move(provenance));
    }

    const DatasetRecord& at(std::string_view key) const {
        const auto it = index_.find(std::string(key));
        if (it == index_.end()) {
            throw UnknownKey("registry: no record '" + std::string(key) + "'");
        }
        return records_[it->second];
    }

    double scalar(std::string_view key) const {
        return expect<double>(key, "scalar");
    }
    const GrowthPair& pair(std::string_view key) const {
        return expect<GrowthPair>(key, "growth pair");
    }
    const NetworkMetrics& metrics(std::string_view key) const {
        return expect<NetworkMetrics>(key, "network metrics");
    }
    const LongevityRecord& longevity(std::string_view key) const {
        return expect<LongevityRecord>(key, "longevity record");
    }

    std::span<const DatasetRecord> records() const { return records_; }

private:
    template <typename T>
    const T& expect(std::string_view key, const char* kind) const {
        const auto* value = std::get_if<T>(&at(key).payload);
        if (value == nullptr) {
            throw UnknownKey("registry: '" + std::string(key) + "' is not a " + kind);
        }
        return *value;
    }

    void emplace(std::string key,
                 std::variant<double, GrowthPair, NetworkMetrics, LongevityRecord> payload,
                 std::string provenance) {
        if (index_.count(key) > 0) {
            throw ValidationError("registry: duplicate key '" + key + "'");
        }
        index_.emplace(key, records_.size());
        records_.push_back({std::move(key), std::move(payload), std::move(provenance)});
    }

    std::vector<DatasetRecord> records_;
    std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

inline Registry make_builtin_registry() {
    Registry reg;
    const double actors_s = 3.65;
    const double actors_c = 0.79;
    const double lex_s = 2.67;
    const double lex_c = 0.437;

    // Benchmark collective rate and the rate data behind it.
    reg.add_scalar("rate.collective", 0.0341,
                   "Nordhaus 1997 lighting-efficiency study; benchmark collective rate, 3.41% per decade");
    reg.add_scalar("iq.rate_low", 0.0300,
                   "Flynn 2007, US IQ gains 1947-2002, low estimate 0.300 points/yr");
    reg.add_scalar("iq.rate_high", 0.0363,
                   "Flynn 2007, US IQ gains 1947-2002, high estimate 0.363 points/yr");
    reg.add_scalar("iq.rate_mid", 0.03315,
                   "midpoint of the Flynn 2007 band, 3.315% per decade");

    reg.add_scalar("lexicon.1150", 34020,
                   "U of T Dictionary of Old English: 12,271 words over 8 of 22 letters, extrapolated");
    reg.add_scalar("lexicon.1657", 200000,
                   "U of T Early Modern English Dictionaries Database word-entries to 1657");
    reg.add_scalar("lexicon.1989", 616500,
                   "Oxford English Dictionary 1989, total word-forms");

    reg.add_pair("series.lex_1150_1989",
                 GrowthPair(YearCE(1150), 34020, YearCE(1989), 616500),
                 "English lexicon sizes, DOE 1150 and OED 1989");
    reg.add_pair("series.lex_1657_1989",
                 GrowthPair(YearCE(1657), 200000, YearCE(1989), 616500),
                 "English lexicon sizes, EMEDD 1657 and OED 1989");

    reg.add_scalar("lighting.labor_price_bce1750", 41.5,
                   "Nordhaus 1997: hours of work per 1000 lumen-hours, Babylonian sesame lamp");
    reg.add_scalar("lighting.labor_price_1992", 0.000119,
                   "Nordhaus 1997: hours of work per 1000 lumen-hours, 1992 compact fluorescent");
    reg.add_scalar("lighting.span_years", 3742,
                   "1750 B.C.E. to 1992 C.E., 1750 + 1992 years");

    // Populations of English-speaking societies.
    reg.add_scalar("population.1150", 2.3e6,
                   "Hinde 2003: Domesday 1086 estimate grown at 0.5%/yr to 1150");
    reg.add_scalar("population.1657", 5281347,
                   "Wrigley & Schofield 1989, Table 7.8, England 1656");
    reg.add_scalar("population.1989", 3.5e8,
                   "English speakers c. 1989, rounded census total used by the eta tables");
    reg.add_scalar("population.1989_census_sum", 343595000,
                   "US 1990 + Canada 1991 + England 1991 + Australia 1991 censuses; the"
                   " unrounded sum behind population.1989 (note the 350M/343.6M gap)");

    // Network metrics. Social networks borrow the Watts-Strogatz actor
    // measurements; lexical networks borrow Ferrer i Cancho & Sole.
    reg.add_metrics("network.actors", NetworkMetrics(225226, actors_s, actors_c, "Actors"),
                    "Watts & Strogatz 1998, IMDB actor network");
    reg.add_metrics("network.celegans", NetworkMetrics(282, 2.65, 0.28, "C. elegans"),
                    "Watts & Strogatz 1998, C. elegans neural network; 282 neurons");
    reg.add_metrics("network.brain", NetworkMetrics(1e11, 2.49, 0.53, "Human Brain"),
                    "Nicholls 2001 neuron count; Achard 2006 S and C");
    reg.add_metrics("network.lex1989", NetworkMetrics(616500, lex_s, lex_c, "1989 English"),
                    "OED 1989 count; Ferrer i Cancho & Sole 2001 S and C");
    reg.add_metrics("network.lex1150", NetworkMetrics(34020, lex_s, lex_c, "1150 English"),
                    "DOE-based 1150 count; Ferrer i Cancho & Sole 2001 S and C");
    reg.add_metrics("network.lex1657", NetworkMetrics(200000, lex_s, lex_c, "1657 English"),
                    "EMEDD 1657 count; Ferrer i Cancho & Sole 2001 S and C");
    reg.add_metrics("network.pop1989",
                    NetworkMetrics(3.5e8, actors_s, actors_c, "1989 population"),
                    "1989 English-speaking population; actor-network S and C");
    reg.add_metrics("network.pop1150",
                    NetworkMetrics(2.3e6, actors_s, actors_c, "1150 population"),
                    "1150 England population; actor-network S and C");
    reg.add_metrics("network.pop1657",
                    NetworkMetrics(5281347, actors_s, actors_c, "1657 population"),
                    "1656 England population; actor-network S and C");

    reg.add_metrics("network.us1880",
                    NetworkMetrics(50155783, actors_s, actors_c, "US 1880"),
                    "US Census Office 1880, Table Ia; actor-network S and C");
    reg.add_metrics("network.us1980",
                    NetworkMetrics(226545805, actors_s, actors_c, "US 1980"),
                    "US Census Bureau 1980, Table 72; actor-network S and C");
    reg.add_metrics("network.primitive_pop",
                    NetworkMetrics(150, actors_s, actors_c, "150-person society"),
                    "hypothetical 150-person band; actor-network S and C");
    reg.add_metrics("network.primitive_lex",
                    NetworkMetrics(100, lex_s, lex_c, "100-word lexicon"),
                    "hypothetical 100-vocalization lexicon; lexical-network S and C");

    reg.add_scalar("us.population_1880", 50155783, "US Census Office 1880, Table Ia");
    reg.add_scalar("us.population_1980", 226545805, "US Census Bureau 1980, Table 72");
    reg.add_scalar("us.labor_participation", 0.66,
                   "Mosisa & Hipple 2006, US labor participation 2004-05");
    reg.add_scalar("us.eta_pop_avg_printed", 11.485141,
                   "published period-average of the 1880/1980 population etas,"
                   " as printed alongside the 2.53%/yr productivity figure");

    reg.add_scalar("swadesh.retention_avg", 0.86,
                   "Swadesh 1971: average 86% Basic List retention per millennium");
    reg.add_scalar("swadesh.divergence_avg", 0.14,
                   "Swadesh 1971: average divergence, 14% per millennium");
    reg.add_scalar("swadesh.divergence_min", 0.10,
                   "Swadesh 1971: minimum divergence, 10% per millennium");
    reg.add_scalar("swadesh.divergence_max", 0.19,
                   "Swadesh 1971: maximum divergence, 19% per millennium");
    reg.add_scalar("swadesh.age_original_years", 7037,
                   "Swadesh's Indo-European age: 7000 years before ~1966, counted from 2003");
    reg.add_scalar("swadesh.age_revised_years", 8700,
                   "Gray & Atkinson 2003: Indo-European began 8700 years before their study");

    // Basal rates used as dating inputs, at published precision.
    reg.add_scalar("innate.per_millennium_swadesh", 0.0566,
                   "half the adjusted Swadesh divergence rate, 5.66% per millennium");
    reg.add_scalar("innate.per_millennium_lex1150", 0.0616,
                   "innate rate from the 1150-1989 averaged etas, 6.16% per millennium");
    reg.add_scalar("dating.t2", 1989, "reference year for the origin-dating table");
    reg.add_scalar("dating.n_now", 616500, "OED 1989 word-forms, dating numerator");
    reg.add_scalar("dating.n_origin_single", 1, "one word at the origin of language");
    reg.add_scalar("dating.n_origin_vocal", 100,
                   "assumed stock of pre-language vocalizations");

    reg.add_scalar("brain.conduction_mps", 100,
                   "Nicholls 2001: myelinated fibers conduct at up to ~100 m/s");
    reg.add_scalar("primitive.population", 150, "hypothetical primitive band size");
    reg.add_scalar("primitive.lexicon", 100, "hypothetical primitive vocalization count");

    reg.add_longevity("longevity.norway_f",
                      LongevityRecord("Norway F", YearCE(1841), 47.9, YearCE(1970), 77.32),
                      "Oeppen & Vaupel 2002 supplement, Norwegian female life expectancy");
    reg.add_longevity("longevity.norway_m",
                      LongevityRecord("Norway M", YearCE(1841), 44.5, YearCE(1960), 71.39),
                      "Oeppen & Vaupel 2002 supplement, Norwegian male life expectancy");
    reg.add_longevity("longevity.new_zealand_m",
                      LongevityRecord("New Zealand M", YearCE(1876), 51.99, YearCE(1944), 66.58),
                      "Oeppen & Vaupel 2002 supplement, New Zealand male life expectancy");
    reg.add_longevity("longevity.denmark_m",
                      LongevityRecord("Denmark M", YearCE(1840), 43.11, YearCE(1919), 56.69),
                      "Oeppen & Vaupel 2002 supplement, Danish male life expectancy");

    // Published derived values the reproduction harness diffs against.
    reg.add_scalar("expected.rate.lex_1150", 0.03453, "published lexical rate, 1150-1989");
    reg.add_scalar("expected.rate.lex_1657", 0.03391, "published lexical rate, 1657-1989");
    reg.add_scalar("expected.rate.lighting", 0.0341, "published lighting-efficiency rate");
    reg.add_scalar("expected.rate.iq", 0.03315, "published IQ-gain rate midpoint");

    reg.add_scalar("expected.error_upper.100", 27.9, "published +10% error row, 100 years");
    reg.add_scalar("expected.error_upper.332", 8.418, "published +10% error row, 332 years");
    reg.add_scalar("expected.error_upper.839", 3.33, "published +10% error row, 839 years");
    reg.add_scalar("expected.error_upper.3742", 0.07469,
                   "published +10% error row, 3742 years; inconsistent with the"
                   " recomputed 0.7469 (factor-of-10 typo)");
    reg.add_scalar("expected.error_lower.100", 30.9, "published -10% error row, 100 years");
    reg.add_scalar("expected.error_lower.332", 9.3, "published -10% error row, 332 years");
    reg.add_scalar("expected.error_lower.839", 3.6, "published -10% error row, 839 years");
    reg.add_scalar("expected.error_lower.3742", 0.0826,
                   "published -10% error row, 3742 years; inconsistent with the"
                   " recomputed 0.826 (factor-of-10 typo)");

    reg.add_scalar("expected.eta.actors", 7.52, "published eta, actor network");
    reg.add_scalar("expected.eta.celegans", 1.62, "published eta, C. elegans");
    reg.add_scalar("expected.eta.brain", 14.71, "published eta, human brain");
    reg.add_scalar("expected.eta.lex1989", 5.932, "published eta, 1989 English lexicon");
    reg.add_scalar("expected.eta.lex1150", 4.643, "published eta, 1150 English lexicon");
    reg.add_scalar("expected.eta.lex1657", 5.431, "published eta, 1657 English lexicon");
    reg.add_scalar("expected.eta.pop1989", 12.0, "published eta, 1989 population");
    reg.add_scalar("expected.eta.pop1150", 8.938, "published eta, 1150 population");
    reg.add_scalar("expected.eta.pop1657", 9.445, "published eta, 1657 population");

    reg.add_scalar("expected.avg.pop_1150_1989", 10.47, "published averaged eta(pop), 1150-1989");
    reg.add_scalar("expected.avg.lex_1150_1989", 5.29, "published averaged eta(lex), 1150-1989");
    reg.add_scalar("expected.avg.product_1150_1989", 55.37, "published eta product, 1150-1989");
    reg.add_scalar("expected.avg.pop_1657_1989", 10.72, "published averaged eta(pop), 1657-1989");
    reg.add_scalar("expected.avg.lex_1657_1989", 5.68, "published averaged eta(lex), 1657-1989");
    reg.add_scalar("expected.avg.product_1657_1989", 60.94, "published eta product, 1657-1989");

    reg.add_scalar("expected.innate.1150_1989", 6.16,
                   "published innate rate, %/millennium, from 1150-1989 etas");
    reg.add_scalar("expected.innate.1657_1989", 5.60,
                   "published innate rate, %/millennium, from 1657-1989 etas");

    reg.add_scalar("expected.swadesh.adjusted", 11.32,
                   "published adjusted Swadesh divergence, %/millennium");
    reg.add_scalar("expected.swadesh.per_branch", 5.66,
                   "published per-branch divergence, %/millennium");

    reg.add_scalar("expected.dating.swadesh_n1", 235544,
                   "published years before 1989, 5.66% rate, one-word origin");
    reg.add_scalar("expected.dating.swadesh_n100", 154181,
                   "published years before 1989, 5.66% rate, 100-word origin");
    reg.add_scalar("expected.dating.lex_n1", 216425,
                   "published years before 1989, 6.16% rate, one-word origin");
    reg.add_scalar("expected.dating.lex_n100", 141666,
                   "published years before 1989, 6.16% rate, 100-word origin");

    reg.add_scalar("expected.econ.eta_1880", 10.818657, "published eta, US 1880 population");
    reg.add_scalar("expected.econ.eta_1980", 11.738675, "published eta, US 1980 population");
    reg.add_scalar("expected.econ.growth_printed_per_year", 0.0253,
                   "published US productivity growth, 2.53%/yr; inconsistent with"
                   " recomputation from its own printed inputs (2.585%/yr)");
    reg.add_scalar("expected.econ.growth_literature_per_year", 0.023,
                   "Romer 1990: observed US productivity growth, ~2.3%/yr");

    reg.add_scalar("expected.longevity.rate.norway_f", 3.71, "published rate, Norway F, %/decade");
    reg.add_scalar("expected.longevity.rate.norway_m", 3.97, "published rate, Norway M, %/decade");
    reg.add_scalar("expected.longevity.rate.new_zealand_m", 3.63,
                   "published rate, New Zealand M, %/decade");
    reg.add_scalar("expected.longevity.rate.denmark_m", 3.46, "published rate, Denmark M, %/decade");
    reg.add_scalar("expected.longevity.excess.norway_f", 8.85,
                   "published excess over 3.41%/decade, Norway F, percent");
    reg.add_scalar("expected.longevity.excess.norway_m", 16.48,
                   "published excess over 3.41%/decade, Norway M, percent");
    reg.add_scalar("expected.longevity.excess.new_zealand_m", 6.672,
                   "published excess over 3.41%/decade, New Zealand M, percent");
    reg.add_scalar("expected.longevity.excess.denmark_m", 1.652,
                   "published excess over 3.41%/decade, Denmark M, percent");

    return reg;
}

} // namespace detail

inline const Registry& builtin_registry() {
    static const Registry registry = detail::make_builtin_registry();
    return registry;
}

// ---------------------------------------------------------------------------
// File ingestion. Both loaders accept '#' comments, skip blank lines, accept
// an optional header row, and parse numbers locale-independently (decimal
// point only, no thousands separators).

struct GrowthObservation {
    YearCE year;
    double count = 0.0;
};

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == delimiter) {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    for (auto& f : fields) {
        const auto begin = f.find_first_not_of(" \t\r");
        const auto end = f.find_last_not_of(" \t\r");
        f = (begin == std::string::npos) ? std::string{} : f.substr(begin, end - begin + 1);
    }
    return fields;
}

inline bool parse_double(const std::string& field, double& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto result = std::from_chars(first, last, out);
    return result.ec == std::errc{} && result.ptr == last;
}

// Lines -> parsed rows, with 1-based line numbers for error messages.
template <typename RowHandler>
inline void for_each_data_line(std::istream& in, char delimiter, RowHandler&& handler) {
    std::string line;
    int line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        handler(line_no, split_fields(line, delimiter), saw_data);
        saw_data = true;
    }
    if (!saw_data) {
        throw ParseError("no data rows");
    }
}

} // namespace detail

// Series file: columns "year,count", header optional.
inline std::vector<GrowthObservation> load_series(std::istream& in) {
    std::vector<GrowthObservation> observations;
    detail::for_each_data_line(in, ',', [&](int line_no, const std::vector<std::string>& fields,
                                            bool saw_data) {
        if (fields.size() != 2) {
            throw ParseError("series line " + std::to_string(line_no) +
                             ": expected 2 columns, got " + std::to_string(fields.size()));
        }
        double year = 0.0;
        double count = 0.0;
        if (!detail::parse_double(fields[0], year) || !detail::parse_double(fields[1], count)) {
            if (!saw_data) {
                return; // header row
            }
            throw ParseError("series line " + std::to_string(line_no) +
                             ": expected numeric year,count");
        }
        if (!(count > 0.0)) {
            throw ValidationError("series line " + std::to_string(line_no) +
                                  ": count must be positive");
        }
        if (!observations.empty() && !(observations.back().year.value < year)) {
            throw ValidationError("series line " + std::to_string(line_no) +
                                  ": years must be strictly increasing");
        }
        observations.push_back({YearCE(year), count});
    });
    if (observations.empty()) {
        throw ParseError("series: no numeric rows");
    }
    return observations;
}

inline std::vector<GrowthPair> consecutive_pairs(std::span<const GrowthObservation> obs) {
    if (obs.size() < 2) {
        throw ValidationError("series: need at least two observations to form a pair");
    }
    std::vector<GrowthPair> pairs;
    pairs.reserve(obs.size() - 1);
    for (std::size_t i = 0; i + 1 < obs.size(); ++i) {
        pairs.emplace_back(obs[i].year, obs[i].count, obs[i + 1].year, obs[i + 1].count);
    }
    return pairs;
}

// Metrics file: columns "label,n,S,C", header optional.
inline std::vector<NetworkMetrics> load_metrics(std::istream& in) {
    std::vector<NetworkMetrics> metrics;
    detail::for_each_data_line(in, ',', [&](int line_no, const std::vector<std::string>& fields,
                                            bool saw_data) {
        if (fields.size() != 4) {
            throw ParseError("metrics line " + std::to_string(line_no) +
                             ": expected 4 columns label,n,S,C");
        }
        double n = 0.0;
        double s = 0.0;
        double c = 0.0;
        if (!detail::parse_double(fields[1], n) || !detail::parse_double(fields[2], s) ||
            !detail::parse_double(fields[3], c)) {
            if (!saw_data) {
                return; // header row
            }
            throw ParseError("metrics line " + std::to_string(line_no) +
                             ": expected numeric n,S,C");
        }
        try {
            metrics.emplace_back(n, s, c, fields[0]);
        } catch (const Error& invariant) {
            throw ValidationError("metrics line " + std::to_string(line_no) + ": " +
                                  invariant.what());
        }
    });
    if (metrics.empty()) {
        throw ParseError("metrics: no numeric rows");
    }
    return metrics;
}

inline void write_series(std::ostream& out, std::span<const GrowthObservation> obs) {
    out << "year,count\n";
    for (const auto& o : obs) {
        out << o.year.value << "," << o.count << "\n";
    }
}

inline void write_metrics(std::ostream& out, std::span<const NetworkMetrics> metrics) {
    out << "label,n,S,C\n";
    for (const auto& m : metrics) {
        out << m.label << "," << m.n << "," << m.path_length << "," << m.clustering << "\n";
    }
}

} // namespace netgrowth
