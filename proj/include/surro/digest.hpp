#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

namespace surro {

// 64-bit FNV-1a; used for provenance fingerprints, not security.
std::uint64_t fnv1a64(const void* data, std::size_t size,
                      std::uint64_t state = 14695981039346656037ull);

// 16-hex-digit digest of a byte string.
std::string digest_string(const std::string& bytes);

// Digest of a file's contents; throws IoError when unreadable.
std::string digest_file(const std::filesystem::path& path);

}  // namespace surro
