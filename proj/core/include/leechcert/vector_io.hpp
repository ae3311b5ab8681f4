#pragma once

#include "leechcert/leech.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace leechcert {

/**
 * Vector-set text format:
 *
 *     dim=24 denom_sq=8 count=N
 *     c1 c2 ... c24          (N lines, sorted lexicographically)
 *
 * A code file is an anchor block introduced by a `role=anchor` line followed
 * by an ordinary vector set of members. Output is sorted and byte-stable.
 */
void write_vector_set(std::ostream& out, std::span<const ScaledVector> vectors, bool sort = true);
std::vector<ScaledVector> read_vector_set(std::istream& in);

struct CodeFile {
  std::vector<ScaledVector> anchors;  // derivation order, not sorted
  std::vector<ScaledVector> members;
};

void write_code_file(std::ostream& out, const CodeFile& code);
CodeFile read_code_file(std::istream& in);

void save_vector_set(const std::filesystem::path& path, std::span<const ScaledVector> vectors);
std::vector<ScaledVector> load_vector_set(const std::filesystem::path& path);
void save_code_file(const std::filesystem::path& path, const CodeFile& code);
CodeFile load_code_file(const std::filesystem::path& path);

}  // namespace leechcert
