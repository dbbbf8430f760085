#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ccsched/certificate.hpp"
#include "ccsched/generators.hpp"

namespace ccs {

struct ParseOptions {
  /// Reject unsorted speeds and tasks instead of sorting them.
  bool strict = false;
};

struct ParseResult {
  Document document;
  std::vector<std::string> warnings;
};

/// JSON instance documents:
///   {"version": 1, "kind": "cc", "name": "...",
///    "clusters": [["2", "1"], ["1"]],
///    "jobs": [{"weight": "1", "subjobs": [{"tasks": ["3", "2"], "release": "0"}, {"tasks": []}]}]}
///   {"version": 1, "kind": "lateness", "machines": 2, "jobs": [{"p": "2", "d": "3", "w": "1"}]}
/// Numbers may be JSON numbers or strings ("1.5", "7/3"). "kind" defaults to
/// "cc", "weight" to 1 and "release" to 0.
ParseResult parse_document(std::string_view text, const ParseOptions& options = {});
ParseResult read_document(const std::string& path, const ParseOptions& options = {});

/// Reads a file that must hold a cc instance.
Instance read_instance(const std::string& path, std::vector<std::string>* warnings = nullptr,
                       const ParseOptions& options = {});

std::string emit(const Instance& instance);
std::string emit(const LatenessInstance& instance);
std::string emit(const Document& document);

void write_file(const std::string& path, const std::string& contents);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& value);

void write_schedule_csv(std::ostream& out, const Schedule& schedule);

void write_certificate_header(std::ostream& out);
void write_certificate_row(std::ostream& out, const std::string& instance, const RatioCertificate& cert);

}  // namespace ccs
