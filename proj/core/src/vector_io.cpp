#include "leechcert/vector_io.hpp"

#include "leechcert/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace leechcert {

namespace {

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return line;
  }
  throw ParseError("unexpected end of vector-set input");
}

long header_field(const std::string& line, const std::string& key) {
  std::istringstream ss(line);
  std::string token;
  while (ss >> token) {
    if (token.rfind(key + "=", 0) == 0) {
      const std::string value = token.substr(key.size() + 1);
      try {
        std::size_t used = 0;
        const long v = std::stol(value, &used);
        if (used != value.size() || v < 0) throw ParseError("bad header value");
        return v;
      } catch (const std::logic_error&) {
        throw ParseError("bad header value for '" + key + "': " + value);
      }
    }
  }
  throw ParseError("header lacks '" + key + "=': " + line);
}

}  // namespace

void write_vector_set(std::ostream& out, std::span<const ScaledVector> vectors, bool sort) {
  std::vector<ScaledVector> vs(vectors.begin(), vectors.end());
  if (sort) std::sort(vs.begin(), vs.end());
  out << "dim=" << kLeechDim << " denom_sq=" << kScaleSquared << " count=" << vs.size() << '\n';
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < kLeechDim; ++i) {
      if (i) out << ' ';
      out << static_cast<int>(v.coords[i]);
    }
    out << '\n';
  }
}

std::vector<ScaledVector> read_vector_set(std::istream& in) {
  const std::string header = next_content_line(in);
  if (header_field(header, "dim") != static_cast<long>(kLeechDim)) throw ParseError("unsupported dimension: " + header);
  if (header_field(header, "denom_sq") != kScaleSquared) throw ParseError("unsupported scale: " + header);
  const long count = header_field(header, "count");
  std::vector<ScaledVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long r = 0; r < count; ++r) {
    std::istringstream ss(next_content_line(in));
    ScaledVector v;
    for (std::size_t i = 0; i < kLeechDim; ++i) {
      long x = 0;
      if (!(ss >> x)) throw ParseError("row " + std::to_string(r) + ": expected 24 integers");
      if (x < -127 || x > 127) throw ParseError("row " + std::to_string(r) + ": coordinate out of range");
      v.coords[i] = static_cast<std::int8_t>(x);
    }
    std::string extra;
    if (ss >> extra) throw ParseError("row " + std::to_string(r) + ": trailing data");
    out.push_back(v);
  }
  return out;
}

void write_code_file(std::ostream& out, const CodeFile& code) {
  out << "role=anchor\n";
  write_vector_set(out, code.anchors, false);
  write_vector_set(out, code.members, true);
}

CodeFile read_code_file(std::istream& in) {
  const std::string role = next_content_line(in);
  if (role.find("role=anchor") == std::string::npos) throw ParseError("code file must start with 'role=anchor'");
  CodeFile code;
  code.anchors = read_vector_set(in);
  code.members = read_vector_set(in);
  return code;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return in;
}

}  // namespace

void save_vector_set(const std::filesystem::path& path, std::span<const ScaledVector> vectors) {
  auto out = open_out(path);
  write_vector_set(out, vectors);
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<ScaledVector> load_vector_set(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_vector_set(in);
}

void save_code_file(const std::filesystem::path& path, const CodeFile& code) {
  auto out = open_out(path);
  write_code_file(out, code);
  if (!out) throw IoError("write failed: " + path.string());
}

CodeFile load_code_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_code_file(in);
}

}  // namespace leechcert
