#pragma once

// Job specifications: parsing from command-line strings and from JSON lines,
// g_v tables, and the exit-code contract of the command-line tool.

#include "fsel/lambda_bound.hpp"
#include "fsel/report.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsel {

enum ExitCode : int { kExitOk = 0, kExitBlocked = 2, kExitInput = 3 };

enum class OutputFormat { json, text, both };

/// A malformed job; `where` locates the problem ("--curve", "line 4", ...).
class InputError : public std::runtime_error {
  public:
    InputError(const std::string& where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what) {}
};

struct JobSpec {
    BoundRequest request;
    OutputFormat format = OutputFormat::json;
};

namespace jobdetail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

inline BigInt parse_int(const std::string& s, const std::string& where) {
    try {
        return parse_bigint(trim(s));
    } catch (const std::exception&) {
        throw InputError(where, "not an integer: '" + s + "'");
    }
}

inline long parse_small(const std::string& s, const std::string& where) {
    const BigInt v = parse_int(s, where);
    if (!v.fits_slong_p()) throw InputError(where, "integer out of range: " + s);
    return v.get_si();
}

/// 1-based line of a byte offset in text.
inline std::size_t line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline std::string json_scalar_string(const Json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw InputError(where, "expected an integer or a string, got " + v.dump());
}

}  // namespace jobdetail

/// "a1,a2,a3,a4,a6" with exact integers of any size.
inline WeierstrassModel parse_curve(const std::string& text, const std::string& where = "--curve") {
    if (!text.empty() && text.back() == ',') throw InputError(where, "trailing comma");
    std::vector<BigInt> a;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) a.push_back(jobdetail::parse_int(tok, where));
    if (a.size() != 5) throw InputError(where, "expected five comma-separated a-invariants, got " + std::to_string(a.size()));
    try {
        return WeierstrassModel::from_bigints({a[0], a[1], a[2], a[3], a[4]});
    } catch (const std::invalid_argument&) {
        throw InputError(where, "the a-invariants define a singular curve (discriminant 0)");
    }
}

inline long parse_prime(const std::string& text, const std::string& where = "--p") {
    const long p = jobdetail::parse_small(text, where);
    if (p < 3 || !is_prime(BigInt(p))) throw InputError(where, std::to_string(p) + " is not an odd prime");
    if (p > 13) throw InputError(where, "p = " + std::to_string(p) + " is outside the supported range 3..13");
    return p;
}

inline BaseField parse_field(const std::string& text, long p, const std::string& where = "--field") {
    if (text == "Q") return BaseField::Q;
    if (text == "Q(mu_p)" || text == "Q(mu_" + std::to_string(p) + ")") return BaseField::QMuP;
    throw InputError(where, "unknown base field '" + text + "' (expected Q or Q(mu_p))");
}

inline OutputFormat parse_format(const std::string& text, const std::string& where = "--format") {
    if (text == "json") return OutputFormat::json;
    if (text == "text") return OutputFormat::text;
    if (text == "both") return OutputFormat::both;
    throw InputError(where, "unknown format '" + text + "' (expected json, text or both)");
}

inline int parse_precision(const std::string& text, const std::string& where) {
    const long n = jobdetail::parse_small(text, where);
    if (n < 1 || n > 1024) throw InputError(where, "precision must lie in 1..1024");
    return static_cast<int>(n);
}

inline std::string parse_assumption(const std::string& name, const std::string& where = "--assume") {
    const auto id = canonical_assumption(name);
    if (!id) throw InputError(where, "unknown hypothesis id '" + name + "'");
    return *id;
}

/// A JSON list of {residue_char, residue_degree, g}.
inline std::vector<GTableEntry> parse_g_table(const std::string& text, const std::string& source) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source + ", line " + std::to_string(jobdetail::line_of(text, e.byte > 0 ? e.byte - 1 : 0)),
                         "invalid JSON");
    }
    if (!j.is_array()) throw InputError(source, "expected a JSON list of {residue_char, residue_degree, g}");
    std::vector<GTableEntry> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = source + ", entry " + std::to_string(i + 1);
        const auto& e = j[i];
        if (!e.is_object() || !e.contains("residue_char") || !e.contains("g"))
            throw InputError(where, "needs residue_char and g");
        GTableEntry g;
        g.residue_char = jobdetail::parse_small(jobdetail::json_scalar_string(e["residue_char"], where), where);
        g.residue_degree = e.contains("residue_degree")
                               ? jobdetail::parse_small(jobdetail::json_scalar_string(e["residue_degree"], where), where)
                               : 1;
        g.g = jobdetail::parse_int(jobdetail::json_scalar_string(e["g"], where), where);
        if (g.g < 1) throw InputError(where, "g must be positive");
        out.push_back(g);
    }
    return out;
}

inline std::vector<GTableEntry> load_g_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("--g-table", "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_g_table(ss.str(), path);
}

/// Default precision: FSEL_PRECISION when set, else 32.
inline int default_precision() {
    const char* env = std::getenv("FSEL_PRECISION");
    if (!env || !*env) return 32;
    return parse_precision(env, "FSEL_PRECISION");
}

/// One batch line. Keys: curve (string or list), p, field, extension,
/// g_table (path or inline list), assume (list), dim_y, dim_z, precision,
/// label, format.
inline JobSpec job_from_json(const std::string& line_text, std::size_t line_no) {
    const std::string where = "line " + std::to_string(line_no);
    Json j;
    try {
        j = Json::parse(line_text);
    } catch (const nlohmann::json::parse_error&) {
        throw InputError(where, "invalid JSON");
    }
    if (!j.is_object()) throw InputError(where, "expected a JSON object");
    static const std::set<std::string> known = {"curve", "p",      "field",     "extension", "g_table", "assume",
                                                "dim_y", "dim_z",  "precision", "label",     "format"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) throw InputError(where, "unknown key '" + it.key() + "'");
    if (!j.contains("curve")) throw InputError(where, "missing key 'curve'");
    if (!j.contains("p")) throw InputError(where, "missing key 'p'");

    JobSpec job;
    auto& rq = job.request;
    const auto& c = j["curve"];
    if (c.is_string()) {
        rq.curve = parse_curve(c.get<std::string>(), where + ", curve");
    } else if (c.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + jobdetail::json_scalar_string(c[i], where + ", curve");
        rq.curve = parse_curve(s, where + ", curve");
    } else {
        throw InputError(where + ", curve", "expected \"a1,a2,a3,a4,a6\" or a list");
    }
    rq.p = parse_prime(jobdetail::json_scalar_string(j["p"], where + ", p"), where + ", p");
    if (j.contains("field")) {
        if (!j["field"].is_string()) throw InputError(where + ", field", "expected a string");
        rq.field = parse_field(j["field"].get<std::string>(), rq.p, where + ", field");
    }
    std::string ext = "cyclotomic";
    if (j.contains("extension")) {
        if (!j["extension"].is_string()) throw InputError(where + ", extension", "expected a string");
        ext = j["extension"].get<std::string>();
    }
    if (ext == "cyclotomic") {
        rq.cyclotomic = true;
        if (j.contains("g_table")) throw InputError(where, "g_table is only allowed with extension \"user\"");
    } else if (ext == "user") {
        rq.cyclotomic = false;
        if (!j.contains("g_table")) throw InputError(where, "extension \"user\" needs g_table");
        const auto& g = j["g_table"];
        if (g.is_string()) {
            try {
                rq.g_table = load_g_table(g.get<std::string>());
            } catch (const InputError& e) {
                throw InputError(where, e.what());
            }
        } else {
            rq.g_table = parse_g_table(g.dump(), where + ", g_table");
        }
    } else {
        throw InputError(where + ", extension", "expected cyclotomic or user, got '" + ext + "'");
    }
    if (j.contains("assume")) {
        if (!j["assume"].is_array()) throw InputError(where + ", assume", "expected a list of hypothesis ids");
        for (const auto& a : j["assume"]) {
            if (!a.is_string()) throw InputError(where + ", assume", "expected strings");
            rq.assumptions.insert(parse_assumption(a.get<std::string>(), where + ", assume"));
        }
    }
    const auto dim = [&](const char* key) -> std::optional<long> {
        if (!j.contains(key)) return std::nullopt;
        const long v = jobdetail::parse_small(jobdetail::json_scalar_string(j[key], where + ", " + key), where + ", " + key);
        if (v < 0) throw InputError(where + ", " + key, "must be nonnegative");
        return v;
    };
    rq.dim_Y = dim("dim_y");
    rq.dim_Z = dim("dim_z");
    rq.precision = j.contains("precision")
                       ? parse_precision(jobdetail::json_scalar_string(j["precision"], where + ", precision"),
                                         where + ", precision")
                       : default_precision();
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw InputError(where + ", label", "expected a string");
        rq.label = j["label"].get<std::string>();
    }
    if (j.contains("format")) {
        if (!j["format"].is_string()) throw InputError(where + ", format", "expected a string");
        job.format = parse_format(j["format"].get<std::string>(), where + ", format");
    }
    return job;
}

struct JobResult {
    int exit_code = kExitOk;
    std::string output;  // rendered report(s)
    std::string error;   // diagnostic for exit code 3
};

/// Runs a job and renders it; never throws.
inline JobResult run_job(const JobSpec& job, bool compact_json = false) {
    JobResult r;
    try {
        const auto report = assemble(job.request);
        const auto j = report_to_json(report);
        const std::string js = compact_json ? j.dump() : j.dump(2);
        switch (job.format) {
            case OutputFormat::json: r.output = js + "\n"; break;
            case OutputFormat::text: r.output = report_to_text(report); break;
            case OutputFormat::both: r.output = report_to_text(report) + "\n" + js + "\n"; break;
        }
        r.exit_code = report.strength == Strength::blocked ? kExitBlocked : kExitOk;
    } catch (const InputError& e) {
        r.exit_code = kExitInput;
        r.error = e.what();
    } catch (const std::invalid_argument& e) {
        r.exit_code = kExitInput;
        r.error = e.what();
    }
    return r;
}

}  // namespace fsel
