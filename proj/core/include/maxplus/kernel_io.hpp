#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "maxplus/kernel.hpp"

namespace maxplus::martin {

/// JSON kernel document:
///   {"states": ["a","b"], "matrix": [[0,"-inf"],[-1,0]], "basepoint": "a"}
/// Entries are JSON numbers or strings holding a decimal or "-inf".
/// "basepoint" is optional and defaults to the first state.
KernelMatrix parse_kernel_json(std::string_view text);

/// CSV kernel: a header row of labels (the first cell is ignored), then one
/// row per state, led by its label. Rows must follow the header order. The
/// basepoint is the first state unless `basepoint` names another.
KernelMatrix parse_kernel_csv(std::string_view text, std::optional<std::string> basepoint = std::nullopt);

/// Dispatches on the extension (.csv or anything else as JSON). `basepoint`
/// overrides the file's choice. Throws ParseError / InvalidArgument.
KernelMatrix read_kernel(const std::filesystem::path& path, std::optional<std::string> basepoint = std::nullopt);

std::string kernel_to_json(const KernelMatrix& k);
std::string kernel_to_csv(const KernelMatrix& k);

/// Function document: a JSON object label -> value. Every state must appear.
MaxPlusFunction parse_function_json(std::string_view text, const KernelMatrix& k);
MaxPlusFunction read_function(const std::filesystem::path& path, const KernelMatrix& k);
std::string function_to_json(const MaxPlusFunction& f, const KernelMatrix& k);

}  // namespace maxplus::martin
