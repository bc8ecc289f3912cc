#pragma once

#include <stdexcept>
#include <string>

namespace tieq {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input bytes (invalid UTF-8 and the like).
struct DecodeError : Error {
  DecodeError(const std::string& msg, std::size_t byte_offset)
      : Error(msg + " at byte offset " + std::to_string(byte_offset)),
        offset(byte_offset) {}
  std::size_t offset;
};

// Bad file contents, missing files, inconsistent dataset artifacts.
struct DataError : Error {
  using Error::Error;
};

// Invalid or inconsistent configuration values.
struct ConfigError : Error {
  using Error::Error;
};

// Shape mismatches and other tensor-level contract violations.
struct ShapeError : Error {
  using Error::Error;
};

// Non-finite loss or other numeric breakdown during training.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace tieq
