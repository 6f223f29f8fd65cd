#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tckit/bordism.hpp"
#include "tckit/fsymbols.hpp"

namespace tckit {

/// "p/q" for rationals, {"zeta": n, "coeffs": [...]} with n coefficients
/// for cyclotomics, {"mod": p, "val": m} for prime fields.
nlohmann::json scalar_to_json(const Scalar& s);
/// Plain "p/q" strings and integers are accepted in every field.
Scalar scalar_from_json(const nlohmann::json& j, const FieldSpec& field);

struct LoadOptions {
    bool check_pentagon = true;
};

nlohmann::json category_to_json(const FSymbolTable& F, const std::string& name);
FSymbolTable category_from_json(const nlohmann::json& j, const LoadOptions& opt = {});
/// ParseError for unreadable or malformed files, ValidationError for data
/// that fails the ring, table or pentagon checks.
FSymbolTable load_category(const std::string& path, const LoadOptions& opt = {});

/// One "x y" vertex per line; rationals allowed, '#' starts a comment.
std::vector<Point2> parse_polygon(const std::string& text);

std::string read_file(const std::string& path);

/// The command line: returns the exit code (0 ok, 1 validation or domain
/// failure, 2 usage or parse error).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tckit
