#pragma once

#include "leechcert/leech.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace leechcert::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2, kIoError = 3 };

/** 64-bit FNV-1a. */
std::uint64_t fnv1a64(std::string_view bytes);

/** Cache file name for the minimal vectors, keyed by a hash of the construction parameters. */
std::filesystem::path leech_cache_path(const std::filesystem::path& cache_dir);

/**
 * Minimal vectors, read from the cache when a valid file exists and written
 * there otherwise. An empty cache_dir disables caching.
 */
std::vector<ScaledVector> cached_leech_vectors(const std::filesystem::path& cache_dir);

/** Parses argv, runs the subcommand and returns the process exit code. */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leechcert::cli
