// fselmer: certified upper bounds for the lambda-invariant of fine Selmer
// groups of elliptic curves over Z_p-extensions.

#include "fsel/job.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace fsel;

struct BatchLine {
    std::size_t line_no = 0;
    std::string text;
};

int run_batch(const std::string& path, unsigned workers) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read batch file '" << path << "'\n";
        return kExitInput;
    }
    std::vector<BatchLine> lines;
    std::string s;
    for (std::size_t n = 1; std::getline(in, s); ++n)
        if (!jobdetail::trim(s).empty() && jobdetail::trim(s)[0] != '#') lines.push_back({n, s});

    std::vector<JobResult> results(lines.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
            try {
                auto job = job_from_json(lines[i].text, lines[i].line_no);
                job.format = OutputFormat::json;
                results[i] = run_job(job, true);
                if (!results[i].error.empty())
                    results[i].error = "line " + std::to_string(lines[i].line_no) + ": " + results[i].error;
            } catch (const InputError& e) {
                results[i] = {kExitInput, "", e.what()};
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(lines.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::size_t ok = 0, blocked = 0, errors = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (r.exit_code == kExitInput) {
            ++errors;
            std::cout << Json{{"line", lines[i].line_no}, {"exit_code", r.exit_code}, {"error", r.error}}.dump() << "\n";
            std::cerr << "error: " << r.error << "\n";
        } else {
            (r.exit_code == kExitOk ? ok : blocked) += 1;
            std::cout << r.output;
        }
    }
    std::cout << ok << " ok / " << blocked << " blocked / " << errors << " error\n";
    if (errors) return kExitInput;
    return blocked ? kExitBlocked : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified upper bounds for lambda-invariants of fine Selmer groups"};
    app.set_version_flag("--version", "fselmer 1.0.0");

    std::string curve, p_text, field = "Q", extension = "cyclotomic", g_table, format = "json", label, precision;
    std::vector<std::string> assume;
    std::optional<long> dim_y, dim_z;
    app.add_option("--curve", curve, "a-invariants a1,a2,a3,a4,a6 (exact integers)");
    app.add_option("--p", p_text, "odd prime p <= 13");
    app.add_option("--field", field, "base field: Q or Q(mu_p)")->capture_default_str();
    app.add_option("--extension", extension, "cyclotomic, or user (with --g-table)")->capture_default_str();
    app.add_option("--g-table", g_table, "JSON list of {residue_char, residue_degree, g}");
    app.add_option("--assume", assume,
                   "assert a hypothesis: image-condition (alias image-order-coprime, image-nonsolvable), "
                   "unique-total-ramification, A-K-zero, Y-torsion-mu-zero, finitely-decomposed")
        ->take_all();
    app.add_option("--dim-y", dim_y, "user-supplied dim Y (adds the general form of the bound)");
    app.add_option("--dim-z", dim_z, "user-supplied dim Z (adds the general form of the bound)");
    app.add_option("--precision", precision, "p-adic working precision target in digits (default FSEL_PRECISION or 32)");
    app.add_option("--format", format, "json, text or both")->capture_default_str();
    app.add_option("--label", label, "free-text curve label echoed in the report");

    auto* batch = app.add_subcommand("batch", "run newline-delimited JSON jobs");
    std::string batch_file;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    batch->add_option("file", batch_file, "JSONL file, one job per line")->required();
    batch->add_option("--workers", workers, "concurrent jobs")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (*batch) return run_batch(batch_file, workers);

    JobSpec job;
    try {
        if (curve.empty()) throw InputError("--curve", "required");
        if (p_text.empty()) throw InputError("--p", "required");
        auto& rq = job.request;
        rq.curve = parse_curve(curve);
        rq.p = parse_prime(p_text);
        rq.field = parse_field(field, rq.p);
        if (extension == "cyclotomic") {
            if (!g_table.empty()) throw InputError("--g-table", "only allowed with --extension user");
        } else if (extension == "user") {
            if (g_table.empty()) throw InputError("--extension", "user extension needs --g-table");
            rq.cyclotomic = false;
            rq.g_table = load_g_table(g_table);
        } else {
            throw InputError("--extension", "expected cyclotomic or user, got '" + extension + "'");
        }
        for (const auto& a : assume) rq.assumptions.insert(parse_assumption(a));
        if (dim_y && *dim_y < 0) throw InputError("--dim-y", "must be nonnegative");
        if (dim_z && *dim_z < 0) throw InputError("--dim-z", "must be nonnegative");
        rq.dim_Y = dim_y;
        rq.dim_Z = dim_z;
        rq.precision = precision.empty() ? default_precision() : parse_precision(precision, "--precision");
        rq.label = label;
        job.format = parse_format(format);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    const auto r = run_job(job);
    if (r.exit_code == kExitInput) {
        std::cerr << "error: " << r.error << "\n";
        return r.exit_code;
    }
    std::cout << r.output;
    return r.exit_code;
}
