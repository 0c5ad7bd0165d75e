#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfcov {

/// A non-fatal finding tied to a source location. Printed as "path:line: message".
struct Diagnostic {
    std::string path;
    int line = 0;
    std::string message;

    std::string str() const {
        return path + ":" + std::to_string(line) + ": " + message;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
    return os << d.str();
}

inline void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& os) {
    for (const auto& d : diags) os << d << "\n";
}

}  // namespace sfcov
