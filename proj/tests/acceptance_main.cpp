#include <iostream>

#include "confmap/acceptance.hpp"

int main() {
    const auto results = confmap::run_acceptance();
    return confmap::report_acceptance(results, std::cout) ? 0 : 1;
}
