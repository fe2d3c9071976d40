#pragma once

#include <optional>

namespace momentforge::config {

// Enumeration caps keep the brute-force substrates desk-scale: the default
// partition cap is the largest n with Bell(n) < 10^6. MOMENTFORGE_CAP
// overrides the enumeration and estimator caps in one go.
struct Caps {
    int enumeration = 12; // set partitions, multiset subdivisions, multi-index partitions
    int parking = 7;      // parking functions, (n+1)^(n-1) sequences
    int kstat = 20;       // k-statistic / polykay total order
};

/// Caps in effect for this process (environment applied once).
const Caps& caps();

/// Resolve an explicit override against a configured cap.
int resolve_cap(std::optional<int> override_value, int configured);

} // namespace momentforge::config
