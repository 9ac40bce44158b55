#pragma once

#include <stdexcept>
#include <string>

namespace ogff {

/// Scalar field the packing lives over.
enum class Field { Real, Complex };

inline const char* field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

inline Field parse_field(const std::string& s) {
    if (s == "real") return Field::Real;
    if (s == "complex") return Field::Complex;
    throw std::invalid_argument("unknown field '" + s + "' (expected real|complex)");
}

/// Default absolute tolerance on trace-scale quantities.
inline constexpr double kTraceTol = 1e-9;
/// Default absolute tolerance on entrywise matrix identities.
inline constexpr double kEntryTol = 1e-12;

/// Parameters are well-formed but outside what the built-in generators cover;
/// the message names the import path to use instead.
struct unsupported_parameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A generator's own verification pass failed. Never returned silently.
struct construction_defect : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An imported object failed verification against its invariants.
struct verification_failed : std::runtime_error {
    verification_failed(const std::string& what, double deviation)
        : std::runtime_error(what), max_deviation(deviation) {}
    double max_deviation = 0.0;
};

/// Block structure parses but point replication is not constant.
struct not_a_design : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ogff
