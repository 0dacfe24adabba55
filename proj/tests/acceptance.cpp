// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <cstdlib>
#include <iostream>

#include "waringlab/suite.hpp"

int main(int argc, char** argv)
{
    waringlab::SuiteOptions opts;
    if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) opts.out_dir = argv[2];
    bool all = true;
    waringlab::run_acceptance(opts, [&](const waringlab::CriterionResult& r) {
        std::cout << waringlab::format_result(r) << std::endl;
        all = all && r.passed;
    });
    return all ? 0 : 1;
}
