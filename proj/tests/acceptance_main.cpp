#include <cstdio>

#include "mvdef/verify.hpp"

int main() {
    mvdef::VerifyOptions opt;
    std::vector<mvdef::CheckResult> checks = mvdef::acceptance_battery(opt);
    bool all = true;
    int i = 0;
    for (const auto& c : checks) {
        ++i;
        all = all && c.pass;
        std::printf("criterion %d [%s]: %s -- %s\n", i, c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
