#include <iostream>

#include "involution/acceptance.hpp"

int main() {
    bool ok = invo::run_acceptance(std::cout);
    return ok ? 0 : 1;
}
