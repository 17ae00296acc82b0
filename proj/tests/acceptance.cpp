// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [seed] [scale_down]
#include "widthcalc/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    widthcalc::AcceptanceConfig cfg;
    if (const char* env = std::getenv("WIDTHCALC_SEED")) cfg.seed = std::stoull(env);
    if (argc > 1) cfg.seed = std::stoull(argv[1]);
    if (argc > 2) cfg.scale_down = std::stoi(argv[2]);
    std::cout << "seed " << cfg.seed << ", scale_down " << cfg.scale_down << '\n';
    int failed = 0;
    for (const auto& r : widthcalc::run_acceptance(cfg)) {
        std::cout << widthcalc::format_line(r) << std::endl;
        failed += r.pass ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
    return failed ? 1 : 0;
}
