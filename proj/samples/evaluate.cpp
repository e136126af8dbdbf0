// Minimal library tour: evaluate a few zeta values along independent routes,
// look at a parametric value, and confirm an identity instance.

#include <iostream>

#include <mzv/mzv.hpp>

int main() {
    using namespace mzv;

    const ExponentTuple n{0, 0, 2};  // zeta_3(0, 0, -2)
    std::cout << "engine    : " << to_string(zeta_neg(n)) << "\n";
    std::cout << "recursion : " << to_string(zeta_depth_recursion(n)) << "\n";
    std::cout << "full sum  : " << to_string(zeta_general_verbatim(n)) << "\n";
    std::cout << "collapsed : " << to_string(zeta_general_reduced(n)) << "\n";

    const GenFunResult f3 = fr_series(3, 6);
    std::cout << "genfun    : " << to_string(zeta_from_genfun(f3, n)) << "\n";

    const Polynomial p = zeta_neg_param(ExponentTuple{1, 0});
    std::cout << "zeta_2(-1, 0; z1, z2) = " << p.to_string() << "\n";
    std::cout << "  ... at z = 0: " << to_string(p.eval_at_zero()) << "\n";

    const auto defect = shuffle_defect(2, 2);
    std::cout << "shuffle defect at (2,2): " << to_string(defect.lhs)
              << (defect.pass ? " (identity holds)" : " (identity FAILS)") << "\n";
    return 0;
}
