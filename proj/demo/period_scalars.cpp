// Prints the Casimir element in PBW form, the spin-2 reduction scalars,
// and the first period reduction polynomials.

#include <iostream>

#include "gsp4/uea.hpp"

using namespace gsp4;

int main() {
    std::cout << "Casimir element:\n  " << uea::casimir().to_string() << "\n";
    std::cout << "beta(H_beta) = " << uea::beta_value().to_string() << "\n";

    std::cout << "mu_j scalars from the spin-2 module: ";
    for (long j = 0; j <= 4; ++j)
        std::cout << uea::mu(j).to_string() << " ";
    std::cout << "\n";

    std::cout << "period reduction polynomials:\n";
    for (long i = 0; i <= 4; ++i) {
        std::cout << "  C" << i << " = "
                  << uea::c_polynomial(i).to_string() << "\n";
    }
    return 0;
}
