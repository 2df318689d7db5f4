// Prints the reproduction table: for each spec, the predicted width (closed
// form or bound interval), the exhaustive treewidth/pathwidth, the minimum
// hitting-set size and the constructed decomposition width. Every row should
// end "ok"; any cross-check failure prints FAIL and flips the exit code.

#include <iostream>

#include "linetw/linetw.hpp"

int main() {
    using linetw::MultipartiteSpec;
    std::vector<MultipartiteSpec> specs;
    for (int n = 2; n <= 7; ++n) {
        MultipartiteSpec s;
        s.parts.assign(n, 1);
        specs.push_back(s); // complete graphs K_2..K_7
    }
    specs.push_back({{2, 2}});
    specs.push_back({{2, 2, 2}});
    specs.push_back({{3, 3}});
    specs.push_back({{4, 4}});
    specs.push_back({{1, 5}});
    specs.push_back({{2, 3}});
    specs.push_back({{1, 2, 3}});
    specs.push_back({{2, 2, 3}});
    specs.push_back({{1, 1, 2, 2}});

    const std::string table = linetw::reproduction_table(specs);
    std::cout << table;
    return table.find("FAIL") == std::string::npos ? 0 : 1;
}
