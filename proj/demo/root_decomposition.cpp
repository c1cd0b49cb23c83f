// Prints the root decomposition of p and k and checks the six frame
// vectors against their stated weights.

#include <iostream>

#include "gsp4/lie.hpp"

using namespace gsp4;

static void show(const char* title, const std::vector<lie::Mat4>& span) {
    std::cout << title << "\n";
    for (const auto& rs : lie::root_decompose(span)) {
        std::cout << "  weight " << rs.weight.to_string() << "  dim "
                  << rs.vectors.size() << "\n";
    }
}

int main() {
    show("root decomposition of p under ad(t):", lie::p_basis());
    show("root decomposition of k under ad(t):", lie::k_basis());

    std::cout << "frame vectors:\n";
    auto res = lie::verify_frame_change();
    for (const auto& e : res.entries) {
        std::cout << "  " << e.name << "  claimed weight "
                  << e.claimed.to_string() << "  "
                  << (e.eigen_ok ? "eigenvector" : "NOT an eigenvector")
                  << "\n";
    }
    std::cout << "change of basis rank: " << res.rank << "\n";
    return 0;
}
