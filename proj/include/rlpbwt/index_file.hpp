#pragma once

#include "rlpbwt/panel_index.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace rlpbwt {

inline constexpr std::uint32_t kIndexFormatVersion = 1;

/// Binary layout, all integers little-endian:
///
///   "RLPBWTIX"                      8-byte magic
///   u32 version
///   u32 flags                       bit 0 sorted, 1 terminator, 2 back side, 3 token syntax
///   u64 h, u64 w, u64 sigma (public), u64 sigma (internal), u64 r~
///   sections, each: u32 tag, u64 payload length, payload
///     1 FORE   per column: n, rho, rho x (start, value), then rho tuple lists
///              (u8 count, count x 5 u32) or a zero marker at the last column
///     2 BACK   per column: n, rho, rho x (start, value), then quad lists (optional)
///     3 PREFIX per column: rho, rho x (sPA, sCount)
///     4 PERM   u64 count, count x u32 (optional, sorted indexes)
///     5 RETR   u64 count, count x u32 column-1 starts
///   u32 crc32 over every preceding byte
std::vector<std::uint8_t> encode_index(const PanelIndex& ix);
PanelIndex decode_index(std::span<const std::uint8_t> bytes);

void save_index(const std::filesystem::path& path, const PanelIndex& ix);
PanelIndex load_index(const std::filesystem::path& path);

} // namespace rlpbwt
