#include "momentforge/config.hpp"

#include <cstdlib>
#include <string>

namespace momentforge::config {

static Caps read_env() {
    Caps c;
    if (const char* raw = std::getenv("MOMENTFORGE_CAP")) {
        try {
            int v = std::stoi(raw);
            if (v > 0) {
                c.enumeration = v;
                c.kstat = v > c.kstat ? v : c.kstat;
            }
        } catch (...) {
            // ignore unparsable values, keep defaults
        }
    }
    return c;
}

const Caps& caps() {
    static const Caps c = read_env();
    return c;
}

int resolve_cap(std::optional<int> override_value, int configured) {
    return override_value.value_or(configured);
}

} // namespace momentforge::config
