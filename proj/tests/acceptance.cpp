// Acceptance gate: runs every verification criterion at its stated size and
// prints one pass/fail line per criterion. Exits nonzero when anything fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "typea/report.hpp"

using namespace typea;

namespace {

struct Criterion {
    std::string name;
    std::string suite;
    SuiteParams params;
    std::vector<std::string> id_prefixes; // which checks of the suite count
};

int g_failures = 0;

void run(const Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string witness;
    int matched = 0;
    try {
        Report rep = run_suite(c.suite, c.params);
        for (const CheckResult& r : rep.checks) {
            bool relevant = false;
            for (const std::string& p : c.id_prefixes)
                if (r.id.rfind(p, 0) == 0) relevant = true;
            if (!relevant) continue;
            ++matched;
            if (r.status == "fail") {
                ok = false;
                if (witness.empty()) witness = r.id + ": " + r.witness;
            }
        }
        if (matched == 0) {
            ok = false;
            witness = "no checks matched";
        }
    } catch (const std::exception& e) {
        ok = false;
        witness = e.what();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (!ok) ++g_failures;
    std::printf("%s  %-24s (%d checks, %ld ms)%s%s\n", ok ? "PASS" : "FAIL",
                c.name.c_str(), matched, ms, witness.empty() ? "" : "  -- ",
                witness.c_str());
    std::fflush(stdout);
}

} // namespace

int main() {
    std::string golden = std::string(TYPEA_SOURCE_DIR) + "/tests/golden";
    SuiteParams base;
    base.golden_dir = golden;

    std::vector<Criterion> criteria;
    auto add = [&](std::string name, std::string suite, int n,
                   std::vector<std::string> prefixes) {
        SuiteParams p = base;
        p.n = n;
        criteria.push_back({std::move(name), std::move(suite), p, std::move(prefixes)});
    };

    add("1-hom-oracle", "hom-oracle", 5, {"hom-oracle/"});
    add("2-serre-duality", "serre", 4, {"serre/"});
    add("3-a2-classification", "a2-classification", 2, {"a2/"});
    add("4-compatible-idempotent", "theorem-a_n", 4, {"compatible-idempotent/"});
    add("5-ind-res-bijection", "ind-res", 3, {"ind-res/"});
    add("6-boundedness", "boundedness", 3, {"boundedness/"});
    add("7-ky-bijection", "ky-bijection", 3, {"ky/"});
    add("8-induced-heart-simples", "heart-quotient", 3, {"heart-quotient/"});
    add("9-heart-ext", "ky-bijection", 3, {"heart-ext/"});
    add("10-class-basis", "ky-bijection", 3, {"class-basis/"});
    add("11-semisimple", "semisimple", 3, {"semisimple/"});
    add("12-ar-orbits", "orbits", 2, {"ar-orbits"});
    add("13-twist-invariance", "orbits", 3, {"twist-invariance"});

    for (const Criterion& c : criteria) run(c);

    if (g_failures) {
        std::printf("%d criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
