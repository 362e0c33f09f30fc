#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dal::cli {

enum ExitCode : int { kOk = 0, kComputationError = 1, kConfigError = 2 };

/// Runs one invocation. `args` excludes the program name. Normal output
/// (help text, preset listings, results sent to "-") goes to `out`;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::vector<std::string_view> preset_names();
std::optional<std::string_view> preset(std::string_view name);

/// Path of the manifest written next to `output`: the extension is replaced
/// by ".manifest.json".
std::string manifest_path(const std::string& output);

}  // namespace dal::cli
