// One line per acceptance criterion. Exit status is the number of failures.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "tubelat/verify.hpp"

int main(int argc, char** argv) {
    tubelat::VerifyOptions opts;
    unsigned hw = std::thread::hardware_concurrency();
    opts.jobs = hw ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("TUBELAT_JOBS")) opts.jobs = std::max(1, std::atoi(env));
    for (int a = 1; a < argc; ++a)
        if (std::string(argv[a]) == "--conjecture") opts.conjecture = true;

    int failed = 0;
    tubelat::run_checks(tubelat::criteria_checks(), opts, [&](const tubelat::CheckResult& r) {
        failed += !r.pass;
        std::printf("%s PRIMARY %-3s %-58s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
    });
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
