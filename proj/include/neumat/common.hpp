// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace neumat {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

/// Validation / domain failures (bad arguments, malformed graphs, missing
/// tables, infeasible requests). CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
public:
    std::map<std::string, std::string> context;
    explicit ValidationError(const std::string& msg,
                             std::map<std::string, std::string> ctx = {})
        : std::runtime_error(msg), context(std::move(ctx)) {}
};

/// Numerical failures (quadrature non-convergence, divergent training).
/// CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
public:
    std::map<std::string, std::string> context;
    explicit NumericalError(const std::string& msg,
                            std::map<std::string, std::string> ctx = {})
        : std::runtime_error(msg), context(std::move(ctx)) {}
};

/// Shortest decimal string that parses back to the exact same double.
std::string real_to_string(double v);

/// Inverse of real_to_string. Throws ValidationError on garbage.
double real_from_string(const std::string& s);

/// FNV-1a 64-bit content hash, hex encoded. Used for manifest input hashes.
std::string fnv1a64_hex(const void* data, size_t len);
std::string hash_file(const std::string& path);

}  // namespace neumat
