#include "sidonkit/family_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace sidonkit {

namespace {

bool parse_header(const std::string& line, Elem& n, int& k) {
  // Accepts "# N=<n> k=<k>" with flexible spacing.
  std::istringstream iss(line);
  std::string tok;
  iss >> tok;  // '#'
  Elem got_n = -1;
  long got_k = -1;
  while (iss >> tok) {
    if (tok.rfind("N=", 0) == 0) {
      got_n = std::strtoll(tok.c_str() + 2, nullptr, 10);
    } else if (tok.rfind("k=", 0) == 0) {
      got_k = std::strtol(tok.c_str() + 2, nullptr, 10);
    }
  }
  if (got_n > 0 && got_k > 0) {
    n = got_n;
    k = static_cast<int>(got_k);
    return true;
  }
  return false;
}

}  // namespace

Family read_family(std::istream& in) {
  std::vector<std::vector<Elem>> sets;
  std::map<std::vector<Elem>, int> first_line_of;
  Elem header_n = -1;
  int header_k = -1;
  bool saw_zero = false;
  Elem max_elem = 0;
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) {
      continue;
    }
    if (line[start] == '#') {
      if (header_n < 0) {
        parse_header(line.substr(start), header_n, header_k);
      }
      continue;
    }

    std::vector<Elem> set;
    const char* p = line.c_str() + start;
    const char* end = line.c_str() + line.size();
    while (p < end) {
      Elem value = 0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc{}) {
        throw FamilyParseError("malformed integer", line_no);
      }
      set.push_back(value);
      p = next;
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) {
        ++p;
      }
      if (p < end) {
        if (*p != ',') {
          throw FamilyParseError("expected ','", line_no);
        }
        ++p;
        while (p < end && (*p == ' ' || *p == '\t')) {
          ++p;
        }
        if (p >= end) {
          throw FamilyParseError("trailing ','", line_no);
        }
      }
    }
    if (set.empty()) {
      throw FamilyParseError("empty set", line_no);
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 0) {
        throw FamilyParseError("negative element", line_no);
      }
      if (i > 0 && set[i] <= set[i - 1]) {
        throw FamilyParseError("elements not strictly ascending", line_no);
      }
    }
    if (header_k > 0 && static_cast<int>(set.size()) != header_k) {
      throw FamilyParseError("set size differs from header k", line_no);
    }
    if (!sets.empty() && set.size() != sets.front().size()) {
      throw FamilyParseError("set size differs from previous lines", line_no);
    }
    if (header_n > 0 && set.back() > header_n) {
      throw FamilyParseError("element exceeds header N", line_no);
    }
    auto [it, inserted] = first_line_of.emplace(set, line_no);
    if (!inserted) {
      throw FamilyParseError(
          "duplicate set (first seen on line " + std::to_string(it->second) +
              ")",
          line_no);
    }
    saw_zero = saw_zero || set.front() == 0;
    max_elem = std::max(max_elem, set.back());
    sets.push_back(std::move(set));
  }

  if (sets.empty()) {
    throw FamilyParseError("no sets in input", line_no);
  }
  const Elem n = header_n > 0 ? header_n : std::max<Elem>(max_elem, 1);
  const int k = header_k > 0 ? header_k : static_cast<int>(sets.front().size());
  return Family(std::move(sets), n, k, saw_zero);
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open family file: " + path);
  }
  return read_family(in);
}

void write_family(std::ostream& out, const Family& f,
                  const std::vector<std::string>& extra_comments) {
  out << "# N=" << f.n() << " k=" << f.k() << "\n";
  for (const auto& comment : extra_comments) {
    out << "# " << comment << "\n";
  }
  for (const auto& set : f.sets()) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i > 0) {
        out << ',';
      }
      out << set[i];
    }
    out << "\n";
  }
}

void write_family_file(const std::string& path, const Family& f,
                       const std::vector<std::string>& extra_comments) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  write_family(out, f, extra_comments);
}

}  // namespace sidonkit
