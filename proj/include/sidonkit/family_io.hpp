#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sidonkit/family.hpp"

namespace sidonkit {

// Shared text format: one set per line as comma-separated ascending integers
// ("0,2,5"); blank lines and '#' comments are ignored. Writers emit a header
// line "# N=<n> k=<k>". Readers honor the header when present and otherwise
// infer N and k from the data; a family is treated as zero-anchored when any
// set contains 0.

class FamilyParseError : public std::runtime_error {
 public:
  FamilyParseError(const std::string& message, int line)
      : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

Family read_family(std::istream& in);
Family read_family_file(const std::string& path);

// extra_comments are emitted verbatim (each prefixed with "# ") after the
// standard header; constructions use them for provenance.
void write_family(std::ostream& out, const Family& f,
                  const std::vector<std::string>& extra_comments = {});
void write_family_file(const std::string& path, const Family& f,
                       const std::vector<std::string>& extra_comments = {});

}  // namespace sidonkit
