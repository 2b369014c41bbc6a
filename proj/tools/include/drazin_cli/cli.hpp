#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace drazin::cli {

/// One invocation of the command-line tool. Payload fields hold raw JSON
/// text; "-" means read it from the input stream.
struct Request {
  std::string command;  // drazin | group | mp | pair | endofun | monoid | decompose | verify
  std::string field = "Q";
  std::optional<std::uint64_t> p;
  std::string matrix;
  std::string f;
  std::string g;
  std::string table;
  std::string inverse;   // verify: claimed inverse or pseudo-inverse
  std::string g_over_f;  // verify DV/GV
  std::string f_over_g;
  std::optional<std::int64_t> modulus;
  std::optional<std::int64_t> element;
  std::optional<std::uint64_t> max_steps;
  std::string route = "A";
  std::optional<std::size_t> window;
  std::string system = "D";
  bool pretty = false;
};

struct Response {
  int exit_code = 0;
  std::string out;  // JSON (or --pretty text) for stdout
  std::string err;  // diagnostic for stderr
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitInternal = 2;

Response run(const Request& request, std::istream& in);

/// Parses argv (argv[0] is the program name) and runs the request.
Response run_args(const std::vector<std::string>& argv, std::istream& in);

}  // namespace drazin::cli
