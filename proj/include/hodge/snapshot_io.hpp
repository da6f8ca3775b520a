#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hodge/form_field.hpp"
#include "hodge/transform.hpp"

namespace hodge {

// Field snapshot record, little-endian throughout:
//   7 bytes   ASCII "HPFORM1" (no terminator)
//   int32     n
//   int32     degree
//   int32     res
//   float64   C(n, degree) * res^n physical samples, components in increasing
//             multi-index order, samples row-major (axis 0 slowest)
inline constexpr char kSnapshotMagic[] = "HPFORM1";

void write_snapshot(const std::filesystem::path& path, const FormField& u);
[[nodiscard]] std::vector<unsigned char> encode_snapshot(const FormField& u);
// IntegrityError on bad magic, truncated payload or inconsistent header.
[[nodiscard]] FormField read_snapshot(const std::filesystem::path& path);
[[nodiscard]] FormField decode_snapshot(std::span<const unsigned char> bytes);

}  // namespace hodge
