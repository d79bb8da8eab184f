// The ten acceptance criteria, shared by brauer_acceptance and `brauer selfcheck`.
#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace brauer::acceptance {

struct Outcome {
    int id = 0;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Runs the selected criteria (all when empty), printing one line each.
std::vector<Outcome> run(const std::vector<int>& only, std::ostream& out);

}  // namespace brauer::acceptance
