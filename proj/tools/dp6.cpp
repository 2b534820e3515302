// dp6: classification and verification front end.
//
//   dp6 classify <pencil|tensor|blowup-p2|blowup-p1p1> <file> [--format json|table]
//   dp6 tables [--type N] [--format json|table]
//   dp6 verify [--quick] [--inject-fault inventory]
//   dp6 cohomology --type N --divisor a,b1,b2,b3
//
// Exit codes: 0 success, 2 domain rejection (with the named condition in the
// error payload), 1 internal invariant violation.

#include <CLI11.hpp>
#include <optional>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "dp6/checks.hpp"
#include "dp6/errors.hpp"
#include "dp6/json_io.hpp"

namespace {

using dp6::classify::ClassificationReport;
using dp6::io::OrderedJson;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitDomain = 2;

int emit_error(const std::string& code, const std::string& condition, const std::string& what,
               int exit_code) {
    OrderedJson err;
    err["error"] = OrderedJson{{"code", code}, {"condition", condition}, {"message", what}};
    std::cout << err.dump(2) << "\n";
    return exit_code;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dp6::domain_error("ParseError", "", "cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ClassificationReport classify_one(const std::string& family, const json& j) {
    using namespace dp6;
    if (family == "pencil") return classify::pencil_classify(io::parse_pencil(j));
    if (family == "tensor") return classify::tensor_classify(io::parse_tensor(j));
    if (family == "blowup-p2") return classify::blowup_p2_classify(io::parse_blowup_p2(j));
    if (family == "blowup-p1p1") return classify::blowup_p1p1_classify(io::parse_blowup_p1p1(j));
    throw domain_error("ParseError", "",
                       "unknown family (expected pencil, tensor, blowup-p2 or blowup-p1p1)");
}

int cmd_classify(const std::string& family, const std::string& path, const std::string& format) {
    std::string bytes = read_file(path);
    json input;
    try {
        input = json::parse(bytes);
    } catch (const json::exception& e) {
        throw dp6::domain_error("ParseError", "", std::string("malformed JSON: ") + e.what());
    }

    std::vector<json> items;
    if (input.is_array())
        items.assign(input.begin(), input.end());
    else
        items.push_back(input);

    // fan out to a small worker pool; output order follows input order
    struct ItemError {
        std::string code, condition, message;
        int exit_code = kExitDomain;
    };
    std::vector<ClassificationReport> reports(items.size());
    std::vector<std::optional<ItemError>> errors(items.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= items.size()) return;
            try {
                reports[idx] = classify_one(family, items[idx]);
            } catch (const dp6::DomainError& e) {
                errors[idx] = ItemError{e.code, e.condition, e.what(), kExitDomain};
            } catch (const dp6::Error& e) {
                errors[idx] = ItemError{e.code, e.condition, e.what(), kExitInternal};
            } catch (const json::exception& e) {
                errors[idx] = ItemError{"ParseError", "", e.what(), kExitDomain};
            } catch (const std::exception& e) {
                errors[idx] = ItemError{"InternalInvariantViolation", "", e.what(), kExitInternal};
            }
        }
    };
    size_t nthreads = std::min<size_t>(items.size(),
                                       std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (size_t i = 0; i < items.size(); ++i)
        if (errors[i])
            return emit_error(errors[i]->code, errors[i]->condition,
                              (items.size() > 1 ? "item " + std::to_string(i) + ": " : "") +
                                  errors[i]->message,
                              errors[i]->exit_code);

    if (format == "table") {
        for (const auto& r : reports) std::cout << dp6::io::report_to_table(r) << "\n";
        return kExitOk;
    }
    OrderedJson results;
    if (input.is_array()) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& r : reports) arr.push_back(dp6::io::report_to_json(r));
        results = arr;
    } else {
        results = dp6::io::report_to_json(reports[0]);
    }
    std::cout << dp6::io::run_report("classify " + family, dp6::io::digest(bytes),
                                     std::move(results))
                     .dump(2)
              << "\n";
    return kExitOk;
}

int cmd_tables(int type_id, const std::string& format) {
    std::vector<int> ids;
    if (type_id >= 0)
        ids.push_back(type_id);
    else
        for (int i = 0; i < 6; ++i) ids.push_back(i);
    if (format == "table") {
        std::cout << dp6::io::type_table_text(ids);
        return kExitOk;
    }
    OrderedJson rows = OrderedJson::array();
    for (int id : ids) rows.push_back(dp6::io::type_row_json(dp6::surface::type_info(id)));
    std::cout << dp6::io::run_report("tables", "-", std::move(rows)).dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(bool quick, const std::string& inject_fault) {
    dp6::checks::Options opts;
    opts.quick = quick;
    if (const char* seed_env = std::getenv("DP6_SEED")) opts.seed = std::strtoull(seed_env, nullptr, 10);
    if (inject_fault == "inventory")
        opts.corrupt_inventory = true;
    else if (!inject_fault.empty())
        throw dp6::domain_error("ParseError", "", "unknown fault: " + inject_fault);

    auto start = std::chrono::steady_clock::now();
    std::vector<dp6::checks::CheckResult> results = dp6::checks::run_all(opts);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    OrderedJson payload;
    OrderedJson types = OrderedJson::array();
    for (const auto& type : dp6::surface::all_types()) {
        OrderedJson row;
        row["type"] = type.id;
        row["gram"] = dp6::io::gram_to_json(dp6::sod::gram(type));
        OrderedJson blocks = OrderedJson::array();
        for (const auto& b : dp6::sod::identify_blocks(type)) blocks.push_back(b.str());
        row["blocks"] = blocks;
        OrderedJson zs = OrderedJson::array();
        for (int d = 1; d <= 3; ++d) {
            OrderedJson z = OrderedJson::array();
            for (int p : dp6::surface::z_scheme(type, d).partition) z.push_back(p);
            zs.push_back(z);
        }
        row["z_schemes"] = zs;
        types.push_back(row);
    }
    payload["types"] = types;
    OrderedJson checks = OrderedJson::array();
    bool ok = true;
    for (const auto& r : results) {
        OrderedJson c;
        c["name"] = r.name;
        c["pass"] = r.pass;
        if (!r.pass) {
            c["detail"] = r.detail;
            ok = false;
        }
        checks.push_back(c);
    }
    payload["checks"] = checks;
    payload["seed"] = opts.seed;
    std::cout << dp6::io::run_report(quick ? "verify --quick" : "verify", "-",
                                     std::move(payload))
                     .dump(2)
              << "\n";
    std::cerr << "verify: " << (ok ? "all checks passed" : "FAILURES") << " in " << elapsed
              << " ms\n";
    return ok ? kExitOk : kExitInternal;
}

int cmd_cohomology(int type_id, const std::string& divisor) {
    std::vector<dp6::Int> coeffs;
    std::stringstream ss(divisor);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            coeffs.emplace_back(part);
        } catch (const std::exception&) {
            throw dp6::domain_error("ParseError", "", "bad divisor coefficient: " + part);
        }
    }
    if (coeffs.size() != 4)
        throw dp6::domain_error("ParseError", "", "--divisor needs a,b1,b2,b3");
    dp6::lattice::DivisorClass d{coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
    dp6::surface::Cohomology c =
        dp6::surface::cohomology(dp6::surface::type_info(type_id), d);
    std::cout << "(" << c.h0 << "," << c.h1 << "," << c.h2 << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and classifiers for sextic du Val del Pezzo surfaces"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "classify a family member from a JSON file");
    std::string family, input_path, classify_format = "json";
    classify->add_option("family", family, "pencil | tensor | blowup-p2 | blowup-p1p1")
        ->required();
    classify->add_option("file", input_path, "input JSON (object or array of objects)")
        ->required();
    classify->add_option("--format", classify_format, "json | table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* tables = app.add_subcommand("tables", "emit the per-type tables");
    int table_type = -1;
    std::string tables_format = "json";
    tables->add_option("--type", table_type, "restrict to one type (0..5)")
        ->check(CLI::Range(0, 5));
    tables->add_option("--format", tables_format, "json | table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* verify = app.add_subcommand("verify", "run every invariant suite");
    bool quick = false;
    std::string inject_fault;
    verify->add_flag("--quick", quick, "reduce random-sample counts by 10x");
    verify->add_option("--inject-fault", inject_fault,
                       "deliberately corrupt a table to exercise the failure path")
        ->check(CLI::IsMember({"inventory"}));

    auto* cohomology = app.add_subcommand("cohomology", "h^i of a line bundle on the resolution");
    int coh_type = 0;
    std::string divisor;
    cohomology->add_option("--type", coh_type, "surface type (0..5)")
        ->required()
        ->check(CLI::Range(0, 5));
    cohomology->add_option("--divisor", divisor, "a,b1,b2,b3")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(family, input_path, classify_format);
        if (tables->parsed()) return cmd_tables(table_type, tables_format);
        if (verify->parsed()) return cmd_verify(quick, inject_fault);
        if (cohomology->parsed()) return cmd_cohomology(coh_type, divisor);
    } catch (const dp6::DomainError& e) {
        return emit_error(e.code, e.condition, e.what(), kExitDomain);
    } catch (const dp6::Error& e) {
        return emit_error(e.code, e.condition, e.what(), kExitInternal);
    } catch (const std::exception& e) {
        return emit_error("InternalInvariantViolation", "", e.what(), kExitInternal);
    }
    return kExitOk;
}
