// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all exact) and prints one pass/fail line per criterion.  Criteria 1-12 are
// backed by the named check suites of the verification registry; criterion 13
// drives the installed CLI binary end to end.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "dp6/checks.hpp"

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
    long long millis = 0;
};

CliRun run_cli(const std::string& cmd) {
    CliRun result;
    auto start = std::chrono::steady_clock::now();
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 8192> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
    result.exit_code = WEXITSTATUS(pclose(pipe));
    result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return result;
}

}  // namespace

int main() {
    dp6::checks::Options opts;  // full sample counts, fixed default seed
    std::vector<dp6::checks::CheckResult> results = dp6::checks::run_all(opts);
    std::map<std::string, const dp6::checks::CheckResult*> by_name;
    for (const auto& r : results) by_name[r.name] = &r;

    struct Criterion {
        int number;
        std::string description;
        std::vector<std::string> checks;
    };
    const std::vector<Criterion> criteria = {
        {1, "Z-scheme table reproduced from Gram matrices for all 6 types, d in {1,2,3}",
         {"sod.z_cross_validation"}},
        {2, "block identification reproduces the 6-row Auslander table",
         {"sod.gram_blocks"}},
        {3, "ext(E_i,E_j) tables for m in 2..6 and composition checks for m <= 4",
         {"auslander.ext", "auslander.compose"}},
        {4, "pi_*(S_0) = [1], pi_*(P_0) = [m], pi_*(S_l) = [] for m <= 6",
         {"auslander.pi_star"}},
        {5, "Serre duality and Euler consistency on the full [-4,4] box, all types",
         {"surface.serre_euler"}},
        {6, "chi formulas against the E-bundle classes, with cross-values 6/3/2",
         {"sod.chi_identities"}},
        {7, "Hilbert polynomial identities, dualities, inequality chain, unit pieces",
         {"lattice.hilbert", "sod.e_bundles"}},
        {8, "pencil suite: canonical types 0/2/4, 1000 random pencils, named rejections",
         {"classify.pencil_fixtures", "classify.pencil_random", "classify.pencil_rejections"}},
        {9, "tensor suite: slice-discriminant oracle, fixture types, orbit rejections",
         {"classify.hyperdet_oracle", "classify.tensor_fixtures", "classify.tensor_random"}},
        {10, "blowup suites: all six types from P2 data, types 0..3 from P1xP1 data",
         {"classify.blowup_p2", "classify.blowup_p1p1"}},
        {11, "F1 invariants: length 6 and one support point per (-1)-curve",
         {"surface.f1"}},
        {12, "duality identities and mutation orthogonality for all types",
         {"sod.duality"}},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        bool ok = true;
        std::string detail;
        for (const std::string& name : c.checks) {
            auto it = by_name.find(name);
            if (it == by_name.end()) {
                ok = false;
                detail = "missing check " + name;
                break;
            }
            if (!it->second->pass) {
                ok = false;
                detail = name + ": " + it->second->detail;
                break;
            }
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": "
                  << c.description;
        if (!ok) std::cout << "  [" << detail << "]";
        std::cout << "\n";
    }

    // criterion 13: the CLI end to end
    {
        bool ok = true;
        std::string detail;
        const char* bin = std::getenv("DP6_BIN");
        if (!bin) {
            ok = false;
            detail = "DP6_BIN not set";
        } else {
            std::string base = std::string(bin);
            CliRun full = run_cli("DP6_SEED=42 " + base + " verify");
            if (full.exit_code != 0) {
                ok = false;
                detail = "verify exited " + std::to_string(full.exit_code);
            } else if (full.millis >= 30000) {
                ok = false;
                detail = "verify took " + std::to_string(full.millis) + " ms (budget 30000)";
            }
            CliRun quick = run_cli("DP6_SEED=42 " + base + " verify --quick");
            if (ok && quick.exit_code != 0) {
                ok = false;
                detail = "verify --quick exited " + std::to_string(quick.exit_code);
            } else if (ok && quick.millis >= 5000) {
                ok = false;
                detail = "verify --quick took " + std::to_string(quick.millis) + " ms (budget 5000)";
            }
            if (ok) {
                CliRun again = run_cli("DP6_SEED=42 " + base + " verify --quick");
                if (again.out != quick.out) {
                    ok = false;
                    detail = "verify output not byte-deterministic under fixed DP6_SEED";
                }
            }
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL")
                  << " criterion 13: dp6 verify under 30 s, --quick under 5 s, "
                     "byte-deterministic reports";
        if (!ok) std::cout << "  [" << detail << "]";
        std::cout << "\n";
    }

    return all_ok ? 0 : 1;
}
