/* The pentagonal-number series, its reciprocal (the partition-count
 * series), and one Newton-identity check on a small quantity set. */

#include <iostream>

#include "sympart/qseries.hpp"
#include "sympart/symmetric.hpp"

int main() {
    using namespace sympart;

    std::cout << "prod (1 - n^k) through n^26:\n  "
              << pentagonal_series(26) << "\n";
    std::cout << "its reciprocal, coefficients p(0)..p(12):\n  "
              << partition_series(12) << "\n";

    QuantitySet qs{{make_rational(1, 2), make_rational(1, 3), Rational(2)}};
    std::cout << "identities on {1/2, 1/3, 2} at order 8:\n";
    for (const auto& r : verify_identities(qs, 8))
        std::cout << "  " << (r.holds() ? "holds " : "BROKEN") << "  " << r.name << "\n";
    return 0;
}
