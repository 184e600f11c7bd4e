#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pointcode {

/// SHA-256 of a byte string; used to turn canonical-form bytes into the
/// fixed-width lowercase-hex fingerprints stored in catalog files.
std::array<uint8_t, 32> sha256(const uint8_t* data, size_t len);

std::string sha256_hex(const std::vector<uint8_t>& bytes);

std::string to_hex(const uint8_t* data, size_t len);

}  // namespace pointcode
