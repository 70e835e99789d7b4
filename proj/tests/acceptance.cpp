// One line per acceptance criterion. Exit status 0 iff every criterion passes
// within its time budget.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "defset/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char* title;
    double budget_s;
};

constexpr Criterion kCriteria[] = {
    {1, "skew-set codes, one weight, Griesmer optimal", 1},
    {2, "quadratic-residue codes", 1},
    {3, "quadratic-form codes", 5},
    {4, "Maschietti sets are Singer difference sets", 2},
    {5, "hyperoval codes, three weights", 5},
    {6, "Glynn II enumerators and five-weight conjecture", 10},
    {7, "bent codes", 5},
    {8, "semibent codes", 5},
    {9, "almost-bent codes", 30},
    {10, "quadratic Boolean codes", 10},
    {11, "HKM codes and supporting lemmas", 60},
    {12, "character sums and charsum weights", 30},
    {13, "invariance, Walsh, Pless and complement properties", 30},
};

}  // namespace

int main() {
    std::map<int, std::vector<defset::VerifyCase>> by_criterion;
    for (auto& c : defset::verify_cases()) by_criterion[c.criterion].push_back(std::move(c));

    int failed = 0;
    for (const auto& crit : kCriteria) {
        const auto& cases = by_criterion[crit.id];
        std::size_t pass = 0;
        std::vector<std::string> bad;
        const auto t0 = std::chrono::steady_clock::now();
        for (const auto& c : cases) {
            const auto r = defset::run_case(c);
            if (r.verdict == defset::Verdict::Fail)
                bad.push_back(r.case_id + (r.reason.empty() ? "" : " (" + r.reason + ")"));
            else
                ++pass;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool within = secs < crit.budget_s;
        const bool ok = !cases.empty() && bad.empty() && within;
        failed += !ok;
        std::printf("%s AC-%-2d %-50s %zu/%zu cases  %.3fs (budget %.0fs)\n", ok ? "PASS" : "FAIL", crit.id, crit.title, pass,
                    cases.size(), secs, crit.budget_s);
        if (cases.empty()) std::printf("       no cases registered\n");
        if (!within) std::printf("       over time budget\n");
        for (const auto& b : bad) std::printf("       failed: %s\n", b.c_str());
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria));
    return failed ? 1 : 0;
}
