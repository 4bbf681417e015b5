#pragma once

#include "lefschetz/io.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace lefschetz::cli {

// ok 0, violated 1 (a checked property fails), error 2 (input), undetermined 3 (budget)
enum class Status { ok, violated, undetermined, error };

int exit_code(Status s);
std::string to_string(Status s);

struct Report {
  Status status = Status::ok;
  io::Json payload = io::Json::object();
  io::Json provenance = io::Json::object();
  std::vector<std::string> lines;  // text mode only
};

// One command line without the program name.  Output goes to out,
// parse diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& bytes);

struct CorpusFile {
  std::string name;
  std::string kind;  // factorization, fibration, braided_curve, arrangement, moishezon
  io::Json content;
};

std::vector<CorpusFile> corpus();

// Writes every corpus file plus manifest.json; returns the manifest.
io::Json install_corpus(const std::filesystem::path& dir);

}  // namespace lefschetz::cli
