#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <jwcat/complex.hpp>
#include <jwcat/k0.hpp>
#include <jwcat/path_algebra.hpp>

namespace jwcat
{

class FormatError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// JSON formats. Rationals are written as strings ("-3/2") so every value
// survives a round trip exactly; output is canonical (two-space indent, keys
// in fixed order), so serialize(parse(text)) == text for canonical text.

// Algebra fixture: quiver, relations as arrow-name words, degree cap, display
// aliases and optional expected graded dimensions.
struct AlgebraFixture
{
    AlgebraPtr algebra;
    std::vector<std::pair<std::string, std::string>> aliases; // path word -> alias
    std::optional<std::vector<int>> expected_dims;
};

AlgebraFixture algebra_from_json(const std::string &text);
std::string algebra_to_json(const AlgebraFixture &f);

// Algebras referenced by name in module and complex files: "B", "B!", "C".
AlgebraPtr algebra_by_name(const std::string &name);

std::string module_to_json(const GradedModule &m);
GradedModule module_from_json(const std::string &text);

std::string hom_to_json(const ModuleHom &f);
ModuleHom hom_from_json(const std::string &text);

std::string complex_to_json(const Complex &x);
Complex complex_from_json(const std::string &text);

std::string kclass_to_json(const KClass &k);

// Loads any fixture file ("kind": algebra | module | hom | complex) and
// returns its rendering for display.
std::string render_fixture_file(const std::string &path);

} // namespace jwcat
