/* How many ways can 50 be written as a sum of seven mutually unequal
 * positive integers? And with equal summands allowed? Answers by four
 * independent routes each. */

#include <iostream>

#include "sympart/partitions.hpp"
#include "sympart/qseries.hpp"

int main() {
    using namespace sympart;

    std::cout << "50 into 7 distinct parts:\n";
    std::cout << "  recurrence  " << count_distinct(50, 7) << "\n";
    std::cout << "  series      " << distinct_gf(7, 50)[50] << "\n";
    std::cout << "  denumerant  " << denumerant(50 - 28, 7) << "\n";
    std::cout << "  conversion  " << count_any(50 - 21, 7) << "\n";

    std::cout << "50 into 7 parts, equal allowed:\n";
    std::cout << "  recurrence  " << count_any(50, 7) << "\n";
    std::cout << "  series      " << anypart_gf(7, 50)[50] << "\n";
    std::cout << "  denumerant  " << denumerant(50 - 7, 7) << "\n";
    std::cout << "  conversion  " << count_distinct(50 + 21, 7) << "\n";

    std::cout << "partitions of 9 into 3 parts:\n";
    for (const auto& p : enumerate_partitions(9, 3, false)) {
        std::cout << "  9 =";
        for (int v : p.parts) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}
