#include <jwcat/quiver.hpp>

#include <set>

namespace jwcat
{

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size()) throw ConstructionError("Quiver: duplicate vertex name");
    std::set<std::string> names;
    for (const auto &a : arrows_) {
        if (!names.insert(a.name).second) throw ConstructionError("Quiver: duplicate arrow name '" + a.name + "'");
        if (a.source < 0 || a.source >= num_vertices() || a.target < 0 || a.target >= num_vertices()) {
            throw ConstructionError("Quiver: arrow '" + a.name + "' has an undeclared endpoint");
        }
        if (a.degree <= 0) throw ConstructionError("Quiver: arrow '" + a.name + "' must have positive degree");
    }
}

std::optional<int> Quiver::vertex_index(const std::string &name) const
{
    for (int i = 0; i < num_vertices(); ++i) {
        if (vertices_[static_cast<std::size_t>(i)] == name) return i;
    }
    return std::nullopt;
}

std::optional<int> Quiver::arrow_index(const std::string &name) const
{
    for (int i = 0; i < num_arrows(); ++i) {
        if (arrows_[static_cast<std::size_t>(i)].name == name) return i;
    }
    return std::nullopt;
}

} // namespace jwcat
