#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "pactsc/tensor.hpp"

namespace pactsc {

// Binary tensor container, extension ".patd". Layout, all integers and
// floats little-endian:
//   magic "PATD" (0x50 0x41 0x54 0x44)
//   format version  : u32 (currently 1)
//   entry count     : u32
//   per entry:
//     name length   : u32, then that many UTF-8 bytes
//     rank          : u32, then rank dims (u32 each)
//     payload       : product(dims) IEEE-754 doubles, row-major
// Writes are atomic (temp file + rename) and entries are emitted in name
// order, so identical tables produce byte-identical files.
inline constexpr std::uint32_t kPatdVersion = 1;

enum class PatdStatus {
  kOk = 0,
  kIoFailure,           // file unreadable/unwritable
  kBadMagic,            // leading bytes are not "PATD"
  kUnsupportedVersion,  // version field != kPatdVersion
  kTruncated,           // file ends inside a declared field or payload
  kDuplicateName,       // two entries share a name
  kInvalidDims,         // zero dim, excessive rank, or oversized element count
};

const char* patd_status_name(PatdStatus status);

class PatdError : public std::runtime_error {
 public:
  PatdError(PatdStatus status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  PatdStatus status() const { return status_; }

 private:
  PatdStatus status_;
};

using TensorTable = std::map<std::string, Tensor>;

void save_tensors(const TensorTable& table, const std::filesystem::path& path);
TensorTable load_tensors(const std::filesystem::path& path);

}  // namespace pactsc
