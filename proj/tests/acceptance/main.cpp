// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <iostream>

#include "acceptance.hpp"

#ifndef SINGTAUT_GOLDEN_DIR
#define SINGTAUT_GOLDEN_DIR "tests/golden"
#endif

int main(int argc, char** argv) {
    singtaut::AcceptanceOptions opt;
    opt.golden_dir = argc > 1 ? argv[1] : SINGTAUT_GOLDEN_DIR;
    int failed = 0;
    for (int id = 1; id <= singtaut::kCriterionCount; ++id) {
        singtaut::CriterionResult r;
        try {
            r = singtaut::run_criterion(id, opt);
        } catch (const std::exception& e) {
            r = {id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what(), 0};
        }
        std::cout << singtaut::format_result(r) << std::endl;
        if (!r.pass) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
