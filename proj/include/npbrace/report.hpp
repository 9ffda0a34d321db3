#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "npbrace/counting.hpp"

namespace npbrace {

inline constexpr const char* kSchemaVersion = "v1";

enum class Command { group_info, regular, braces, hgs, verify_paper };
enum class Format { json, csv, md };

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitHypothesis = 2, kExitResource = 3, kExitMismatch = 4 };

std::string to_string(Command c);
std::string to_string(Format f);
std::optional<Command> parse_command(const std::string& s);
std::optional<Format> parse_format(const std::string& s);

struct RunConfig {
  Command command = Command::group_info;
  std::string group_spec;
  std::uint64_t n = 0;
  std::uint64_t p = 0;  // 0 = not given
  Format format = Format::md;
  std::size_t bound = kDefaultHolomorphBound;
  std::size_t threads = 1;
  std::vector<std::uint64_t> p_set;
};

struct Report {
  RunConfig config;
  nlohmann::json payload;
  double seconds = 0;
  int exit_code = kExitOk;
  std::string error;  // diagnostic when exit_code != 0
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// spec := atom ("x" atom)*, atom := "C"<int> | "Z"<int> | "A4" | "D"<even int>
/// | "Dic"<multiple of 4> | "Q8". Throws ParseError.
FiniteGroup parse_group_spec(const std::string& s);

/// Dispatches to the library; never throws for domain errors, which are
/// reported through exit_code and error.
Report run(const RunConfig& config);

/// Full golden-table check over the given primes.
Report verify_paper(const std::vector<std::uint64_t>& p_set, std::size_t threads = 1,
                    std::size_t bound = kDefaultHolomorphBound);

nlohmann::json to_json(const Report& r);
/// The report rendered in its configured format.
std::string render(const Report& r);

// JSON forms of the payload types; each from_json inverts to_json.
void to_json(nlohmann::json& j, const LeftBrace& b);
void from_json(const nlohmann::json& j, LeftBrace& b);
void to_json(nlohmann::json& j, const TauMorphism& t);
void from_json(const nlohmann::json& j, TauMorphism& t);
void to_json(nlohmann::json& j, const TauClass& c);
void from_json(const nlohmann::json& j, TauClass& c);
void to_json(nlohmann::json& j, const BraceCensus& c);
void from_json(const nlohmann::json& j, BraceCensus& c);
void to_json(nlohmann::json& j, const HgsCell& c);
void from_json(const nlohmann::json& j, HgsCell& c);
void to_json(nlohmann::json& j, const HgsCensus& c);
void from_json(const nlohmann::json& j, HgsCensus& c);

bool operator==(const TauClass& a, const TauClass& b);
bool operator==(const BraceCensus& a, const BraceCensus& b);
bool operator==(const HgsCell& a, const HgsCell& b);
bool operator==(const HgsCensus& a, const HgsCensus& b);

}  // namespace npbrace
