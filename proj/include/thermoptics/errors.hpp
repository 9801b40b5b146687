#pragma once

#include <stdexcept>
#include <string>

namespace thermoptics {

// Error taxonomy shared by every module; the C API maps each type to a code.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonConvergent : Error {
    explicit NonConvergent(const std::string& msg) : Error(msg) {}
};

struct NonFinite : Error {
    explicit NonFinite(const std::string& msg) : Error(msg) {}
};

struct Overflow : Error {
    explicit Overflow(const std::string& msg) : Error(msg) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

struct DegenerateScan : Error {
    explicit DegenerateScan(const std::string& msg) : Error(msg) {}
};

struct InvalidMap : Error {
    explicit InvalidMap(const std::string& msg) : Error(msg) {}
};

}  // namespace thermoptics
