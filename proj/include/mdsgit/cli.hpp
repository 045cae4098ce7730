#pragma once

// Input documents, command dispatch and report rendering for the mdsgit tool.

#include "mdsgit/cone.hpp"
#include "mdsgit/error.hpp"
#include "mdsgit/gelmac.hpp"
#include "mdsgit/toric.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdsgit::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kValidation = 3,
    kDegenerate = 4,
};

/// Malformed JSON or a document that does not follow the input schema.
class ParseError : public Error {
public:
    using Error::Error;
};

struct InputDocument {
    std::string name;
    std::optional<Fan> fan;  // set for fan documents
    WeightSystem weights;    // given directly, or cox_weights(fan)
    std::string digest;      // FNV-1a 64 of the raw bytes, hex
    std::vector<std::string> warnings;
};

/// Throws ParseError (exit 2) or ValidationError (exit 3).
InputDocument parse_input(std::string_view text);
InputDocument load_input(const std::string& path);

std::string fnv1a_hex(std::string_view bytes);

struct Options {
    std::string command;
    std::string input;  // may be empty for m0n
    std::optional<std::string> chi;
    std::optional<std::string> from;
    std::optional<std::string> to;
    std::optional<std::size_t> n;
    std::string format = "text";
    std::size_t max_n = kDefaultMaxPoints;
    std::size_t samples = 100;
};

struct Report {
    Json body;         // command, input, result, warnings, passed
    std::string text;  // human-readable rendering
    bool passed = true;
};

/// Runs one command. Library exceptions propagate.
Report dispatch(const Options& opts, const InputDocument* doc);

std::string render_json(const Report& r);
std::string render_text(const Report& r);

/// "a,b,c" -> vector; throws ParseError.
RatVector parse_vector(std::string_view text);

Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const Cone& c);
/// Inverse of to_json(Cone); throws ParseError.
Cone cone_from_json(const Json& j);

/// Full command line handling: parses argv, runs, prints, and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdsgit::cli
