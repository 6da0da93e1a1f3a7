#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exh {

/// Malformed input: empty families, non-finite coordinates, bad file contents.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vector lengths or family dimensions that do not line up.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The product of vertex counts of a family exceeds the configured cap.
class CombinatorialBlowUp : public std::length_error {
 public:
  CombinatorialBlowUp(std::uint64_t products, std::uint64_t cap, bool saturated)
      : std::length_error(message(products, cap, saturated)),
        products_(products),
        cap_(cap) {}

  /// Number of selections requested; saturates at UINT64_MAX.
  std::uint64_t products() const noexcept { return products_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  static std::string message(std::uint64_t p, std::uint64_t cap, bool saturated) {
    return "combinatorial blow-up: conversion needs p = " +
           (saturated ? std::string("more than 2^64") : std::to_string(p)) +
           " sets, cap is " + std::to_string(cap);
  }

  std::uint64_t products_;
  std::uint64_t cap_;
};

}  // namespace exh
