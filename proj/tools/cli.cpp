#include "cli.hpp"

namespace momentforge::cli {

int run(const std::vector<std::string>&, std::istream&, std::ostream&, std::ostream&) {
    return 2; // placeholder
}

} // namespace momentforge::cli
