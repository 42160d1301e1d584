#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jwcat
{

class ConstructionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct Arrow
{
    std::string name;
    int source = 0;
    int target = 0;
    int degree = 1;

    friend bool operator==(const Arrow &, const Arrow &) = default;
};

// Finite quiver with named vertices and arrows. Vertices are referred to by
// their index in vertices(); names are only for display and parsing.
class Quiver
{
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string> &vertices() const noexcept { return vertices_; }
    const std::vector<Arrow> &arrows() const noexcept { return arrows_; }
    int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
    int num_arrows() const noexcept { return static_cast<int>(arrows_.size()); }

    std::optional<int> vertex_index(const std::string &name) const;
    std::optional<int> arrow_index(const std::string &name) const;

    friend bool operator==(const Quiver &, const Quiver &) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

} // namespace jwcat
