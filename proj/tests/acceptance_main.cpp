#include <iostream>

#include "jamnet/verify/acceptance.hpp"

int main() {
    jamnet::verify::AcceptanceOptions options;
    options.progress = &std::cout;
    const auto results = jamnet::verify::run_acceptance(options);
    std::cout << (jamnet::verify::all_passed(results) ? "acceptance: all criteria passed"
                                                      : "acceptance: FAILURES present")
              << std::endl;
    return jamnet::verify::all_passed(results) ? 0 : 1;
}
