#ifndef LRD_ERRORS_HPP
#define LRD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrd {

// Malformed or truncated files, bad magic bytes, version mismatches.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Requested inversion/estimation is not defined for the given sampling
// process (periodic-sampling spectral aliasing, non-geometric aggregate
// variance inversion, Gamma shapes other than 2 or 4, ...).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lrd

#endif
