// Walks through the invariant exterior calculus on the Borel frame:
// the d-table, the closedness obstruction of the two parameter family,
// and the residue left by each candidate closedness relation.

#include <iostream>

#include "gsp4/forms.hpp"
#include "gsp4/invcalc.hpp"

using namespace gsp4;

int main() {
    const char* names[6] = {"a*", "h*", "n0*", "n1*", "n2*", "n3*"};
    std::cout << "exterior derivatives of the six covectors:\n";
    for (size_t j = 0; j < 6; ++j) {
        std::cout << "  d(" << names[j] << ") = "
                  << invcalc::ce_d(forms::covB(j)).to_string() << "\n";
    }

    std::cout << "\ngeneric obstruction for f^{tau1} eta^1 + f^{tau2} eta^2:\n  "
              << invcalc::eta_obstruction().to_string() << "\n";

    Poly th1 = invcalc::theta1(), th2 = invcalc::theta2();
    auto try_relation = [&](const char* label, const Poly& p) {
        auto res = invcalc::closedness_condition(invcalc::eta_relation(p));
        std::cout << label << (res.closed ? "closed" : "residue ")
                  << (res.closed ? "" : res.derivative.to_string()) << "\n";
    };
    try_relation("tau1 = (2 - 2th1 + 2th2) tau2: ",
                 Poly(2) - Poly(2) * th1 + Poly(2) * th2);
    try_relation("tau1 = (-2th1 + 2th2) tau2:    ",
                 Poly(-2) * th1 + Poly(2) * th2);
    return 0;
}
