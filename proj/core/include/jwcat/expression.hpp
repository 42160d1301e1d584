#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <jwcat/complex.hpp>
#include <jwcat/k0.hpp>

namespace jwcat
{

// Syntax error with the 0-based character position where parsing stopped.
class ParseError : public std::invalid_argument
{
public:
    ParseError(std::size_t position, const std::string &message);
    std::size_t position() const noexcept { return position_; }
    const std::string &message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

// Expression valid syntactically but outside what the functors accept.
class EvalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Grammar (whitespace ignored):
//   expr   := atom suffix*
//   atom   := "D(" expr ")" | "P(" expr ")" | "CK(" expr ")"
//           | "P(1)" | "P(2)" | "L(1)" | "L(2)" | "I(2)"
//           | "c" | "a" | "b" | "e(1)" | "e(2)"
//   suffix := "<" int ">" | "[" int "]"
// Objects are complexes over B concentrated in degree 0; the letters are
// the generating maps c: P(2)<2> -> P(2), a: P(1)<1> -> P(2),
// b: P(2)<1> -> P(1) and the identities. <r> shifts internally, [s]
// homologically, on objects and maps alike.
struct Expr
{
    enum class Kind
    {
        Apply,
        Module,
        Generator,
    };
    Kind kind = Kind::Module;
    std::string name; // functor, module or generator name
    int index = 0;    // vertex label for P(i), L(i), I(i), e(i)
    std::shared_ptr<const Expr> arg;
    int internal_shift = 0;
    int homological_shift = 0;
    std::size_t position = 0;

    std::string to_string() const;
};

Expr parse_expression(const std::string &text);

struct EvalResult
{
    bool is_map = false;
    ComplexPtr complex;             // reduced object, or the target for maps
    std::optional<ChainMap> map;    // set for maps
    std::optional<KClass> kclass;   // Euler class of an object
    std::string rendered;
};

// window bounds resolutions and the CK depth; order truncates the class.
EvalResult evaluate(const Expr &e, int window, int order);
EvalResult evaluate(const std::string &text, int window, int order);

} // namespace jwcat
