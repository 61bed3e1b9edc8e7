#include "tpe/fixtures.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace tpe {

namespace {

void add_record(RankFixture& fx, const Json& r) {
    if (!r.is_object()) throw InputError("rank fixture: expected an object record");
    auto str = [&](const char* key) -> std::string {
        if (!r.contains(key) || !r.at(key).is_string())
            throw InputError(fmt::format("rank fixture: missing string field '{}'", key));
        return r.at(key).get<std::string>();
    };
    const std::string family = str("family");
    if (!fx.family.empty() && fx.family != family) throw InputError("rank fixture: records mix families");
    fx.family = family;
    const std::string label = str("residue_class");
    if (r.contains("source")) {
        const std::string source = str("source");
        if (fx.source.empty()) fx.source = source;
        else if (fx.source != source) fx.source += "; " + source;
    }
    if (r.contains("range")) {
        Integer range = integer_from_json(r.at("range"), "rank fixture range");
        if (fx.range && *fx.range != range) throw InputError("rank fixture: records declare different ranges");
        fx.range = range;
    }
    if (!r.contains("rank0_values") || !r.at("rank0_values").is_array())
        throw InputError("rank fixture: missing array 'rank0_values'");
    auto& values = fx.classes[label];
    for (const auto& v : r.at("rank0_values")) values.push_back(integer_from_json(v, "rank fixture value"));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

bool RankFixture::contains(const Integer& d) const { return class_of(d).has_value(); }

std::optional<std::string> RankFixture::class_of(const Integer& d) const {
    for (const auto& [label, values] : classes)
        if (std::binary_search(values.begin(), values.end(), d)) return label;
    return std::nullopt;
}

std::size_t RankFixture::size() const {
    std::size_t n = 0;
    for (const auto& [label, values] : classes) n += values.size();
    return n;
}

RankFixture parse_rank_fixture(const Json& j) {
    RankFixture fx;
    if (j.is_array()) {
        for (const auto& r : j) add_record(fx, r);
    } else {
        add_record(fx, j);
    }
    if (fx.family.empty()) throw InputError("rank fixture: no records");
    if (fx.range)
        for (const auto& [label, values] : fx.classes)
            for (const auto& v : values)
                if (abs(v) > *fx.range)
                    throw InputError(fmt::format("rank fixture: {} lies outside |d| <= {}", to_string(v), to_string(*fx.range)));
    if (fx.family == "cd") {
        for (const auto& [label, values] : fx.classes) {
            if (label != "1" && label != "7" && label != "9")
                throw InputError(fmt::format("rank fixture: unknown residue class '{}'", label));
            const std::uint64_t want = std::stoul(label);
            for (const auto& v : values)
                if (reduce_mod(v, 11) != want)
                    throw InputError(fmt::format("rank fixture: {} is not {} mod 11", to_string(v), label));
        }
    }
    return fx;
}

RankFixture load_rank_fixture(const std::string& path) {
    return parse_rank_fixture(parse_json_text(read_file(path), path));
}

CdRun run_cd(const Integer& d, bool rank0, const std::string& rank_source, const VerifyOptions& options) {
    CdRun run{generate_cd(d), std::nullopt, std::nullopt};
    if (!run.family.applicable()) return run;
    auto& doc = std::get<TpeDocument>(run.family.outcome);
    doc.rank_assertion = {rank0, rank0 ? rank_source : std::string{}};
    run.report = verify_tpe(doc, options);
    if (run.report->passed()) run.conclusion = theorem_conclusion(*run.report, doc);
    return run;
}

Census sweep_cd(const Integer& from, const Integer& to, const RankFixture& fixture, const VerifyOptions& options) {
    if (from > to) throw DomainError("empty range");
    Census c;
    c.from = from;
    c.to = to;
    c.source = fixture.source;
    for (const char* label : {"7", "9", "1"}) {
        CensusRow row;
        row.residue_class = label;
        if (auto it = fixture.classes.find(label); it != fixture.classes.end())
            for (const auto& v : it->second)
                if (v >= from && v <= to) row.rank0_values.push_back(v);
        c.rows.push_back(std::move(row));
    }
    auto row_for = [&](std::uint64_t r) -> CensusRow& {
        return c.rows[r == 7 ? 0 : r == 9 ? 1 : 2];
    };

    for (Integer d = from; d <= to; ++d) {
        if (d == 0) continue;
        const std::uint64_t r = reduce_mod(d, 11);
        if (r != 1 && r != 7 && r != 9) {
            ++c.inapplicable;
            continue;
        }
        CensusRow& row = row_for(r);
        const bool rank0 = fixture.contains(d);
        CdRun run = run_cd(d, rank0, fixture.source, options);
        if (!run.report || !run.report->passed()) {
            ++row.failures;
            c.mismatches.push_back({d, "envelope did not verify"});
            continue;
        }
        ++row.envelopes;
        if (!rank0) continue;
        const CaseAnalysis expected = corollary_case_analysis(d, true);
        if (run.conclusion->rational_torsion_points != expected.points) {
            ++row.disagreements;
            c.mismatches.push_back({d, fmt::format("conclusion differs from the case table ({})", expected.case_label)});
        }
    }
    return c;
}

Json to_json(const Census& c) {
    Json out;
    out["format"] = "tpe-census/1";
    out["family"] = "cd";
    out["range"] = Json::array({integer_to_json(c.from), integer_to_json(c.to)});
    out["source"] = c.source;
    Json rows = Json::array();
    for (const auto& r : c.rows) {
        Json j;
        j["residue_class"] = r.residue_class;
        Json values = Json::array();
        for (const auto& v : r.rank0_values) values.push_back(integer_to_json(v));
        j["rank0_values"] = std::move(values);
        j["count"] = r.rank0_values.size();
        j["verified_envelopes"] = r.envelopes;
        j["failed_envelopes"] = r.failures;
        j["case_table_disagreements"] = r.disagreements;
        rows.push_back(std::move(j));
    }
    out["rows"] = std::move(rows);
    out["inapplicable"] = c.inapplicable;
    Json mm = Json::array();
    for (const auto& m : c.mismatches) mm.push_back(Json{{"d", integer_to_json(m.d)}, {"detail", m.detail}});
    out["mismatches"] = std::move(mm);
    return out;
}

std::string to_text(const Census& c) {
    std::string out = fmt::format("y^2 = x^5 + d, {} <= d <= {}\nrank source: {}\n\n", to_string(c.from), to_string(c.to),
                                  c.source.empty() ? "(none)" : c.source);
    out += fmt::format("{:<6} {:>6} {:>10} {:>7} {:>9}\n", "class", "rank0", "envelopes", "failed", "disagree");
    for (const auto& r : c.rows)
        out += fmt::format("{:<6} {:>6} {:>10} {:>7} {:>9}\n", "d=" + r.residue_class, r.rank0_values.size(), r.envelopes,
                           r.failures, r.disagreements);
    out += fmt::format("other classes (inapplicable): {}\n", c.inapplicable);
    for (const auto& r : c.rows) {
        out += fmt::format("\nd = {} mod 11:\n", r.residue_class);
        std::string line = " ";
        for (std::size_t i = 0; i < r.rank0_values.size(); ++i) {
            std::string item = " " + to_string(r.rank0_values[i]) + (i + 1 < r.rank0_values.size() ? "," : "");
            if (line.size() + item.size() > 78) {
                out += line + "\n";
                line = " ";
            }
            line += item;
        }
        out += line + "\n";
    }
    for (const auto& m : c.mismatches) out += fmt::format("mismatch d = {}: {}\n", to_string(m.d), m.detail);
    return out;
}

}  // namespace tpe
