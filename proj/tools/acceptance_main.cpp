#include "acceptance.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Acceptance run: one PASS/FAIL line per criterion"};
    std::vector<int> only;
    app.add_option("--only", only, "criteria to run (default: all)")->delimiter(',')->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);
    auto res = brauer::acceptance::run(only, std::cout);
    int failed = 0;
    for (const auto& o : res) failed += !o.pass;
    std::cout << res.size() - failed << "/" << res.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
