#pragma once

namespace splitnlc {

inline constexpr const char* kVersion = "0.1.0";

/// Version of the tabular result schema written by the CSV store.
inline constexpr int kResultSchemaVersion = 1;

}  // namespace splitnlc
