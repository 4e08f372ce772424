#pragma once

#include "rlpbwt/panel.hpp"
#include "rlpbwt/panel_index.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace rlpbwt {

enum class PanelFormat { automatic, digits, tokens };

struct LoadedPanel {
    Panel panel;
    /// Syntax actually used; stored in the index so patterns parse the same way.
    SymbolSyntax syntax = SymbolSyntax::digits;
};

/// Digit matrix (one character '0'..'9' per symbol) or whitespace-separated
/// integer tokens, one row per line. An optional first line
/// "#h=<n> w=<n> sigma=<n>" fixes sigma and is checked against the data.
/// Blank lines are ignored. `automatic` picks tokens when the header sigma
/// exceeds 10 or any row contains whitespace.
LoadedPanel parse_panel(std::string_view text, PanelFormat fmt, bool ragged, std::string_view source = "<input>");
LoadedPanel load_panel(const std::filesystem::path& path, PanelFormat fmt, bool ragged);

Haplotype parse_pattern(std::string_view text, SymbolSyntax syntax);
std::string format_haplotype(std::span<const symbol_t> row, SymbolSyntax syntax);

} // namespace rlpbwt
