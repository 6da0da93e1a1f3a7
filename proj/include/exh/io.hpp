#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "exh/family.hpp"

namespace exh {

/// Family file format:
///   {"kind": "upper_exhauster" | "lower_exhauster" | "upper_coexhauster" |
///            "lower_coexhauster",
///    "space_dim": n,
///    "sets": [{"vertices": [[x, ...], ...]}, ...]}
/// Coexhauster vertices have length n + 1 with the affine constant first.
/// Numbers are written in shortest round-trip decimal form.

/// Throws InvalidInput on malformed JSON or schema violations and
/// DimensionMismatch on inconsistent vertex lengths.
Family parse_family(const std::string& text);
Family read_family(const std::filesystem::path& path);

std::string format_family(const Family& f);
void write_family(const Family& f, const std::filesystem::path& path);

}  // namespace exh
