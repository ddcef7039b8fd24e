// One line per acceptance criterion; nonzero exit if any fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "silted/suite.hpp"

int main(int argc, char** argv) {
    const unsigned jobs = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 2;
    const silted::SuiteReport report = silted::run_suite(jobs);
    std::cout << report.table << '\n';
    for (const auto& c : report.criteria) {
        std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << '\n';
        for (const auto& f : c.failures) std::cout << "    " << f << '\n';
    }
    return report.all_passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}
