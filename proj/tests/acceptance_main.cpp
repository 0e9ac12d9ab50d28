// Runs the ten acceptance criteria and prints one PASS/FAIL line per
// criterion. Exit status 0 iff all pass.
#include <iostream>

#include "hullforge/acceptance.hpp"

int main(int argc, char** argv) {
    std::string data_dir = argc > 1 ? argv[1] : "data";
    return hullforge::run_acceptance_and_report(data_dir, std::cout) ? 0 : 1;
}
