// One verdict line per acceptance criterion, oracle checks included.
#include <cstdio>

#include "validate.hpp"

int main() {
    const auto results = hz::cli::run_validation(true, hz::cli::ValidateOptions{});
    bool ok = true;
    for (const auto& r : results) {
        std::printf("criterion %d: %s  %s (%.1fs) %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        ok = ok && r.pass;
    }
    return ok && results.size() == 9 ? 0 : 1;
}
