#include <jwcat/serialize.hpp>

#include <jwcat/render.hpp>
#include <jwcat/zigzag.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace jwcat
{

namespace
{

using json = nlohmann::ordered_json;

json parse_text(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const json &j)
{
    return j.dump(2) + "\n";
}

const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const json &j, const char *key)
{
    try {
        return field(j, key).get<T>();
    } catch (const json::type_error &) {
        throw FormatError(std::string("field '") + key + "' has the wrong type");
    }
}

json matrix_json(const Matrix &m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from(const json &j, std::size_t rows, std::size_t cols)
{
    if (!j.is_array() || j.size() != rows) throw FormatError("matrix must have " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw FormatError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const json &e = j[r][c];
            try {
                if (e.is_string()) m(r, c) = Rational::parse(e.get<std::string>());
                else if (e.is_number_integer()) m(r, c) = Rational(e.get<long long>());
                else throw FormatError("matrix entries must be strings or integers");
            } catch (const std::invalid_argument &err) {
                throw FormatError(std::string("bad matrix entry: ") + err.what());
            }
        }
    }
    return m;
}

int vertex_from(const AlgebraPtr &alg, const json &j)
{
    const auto name = j.is_string() ? j.get<std::string>() : j.dump();
    const auto v = alg->quiver().vertex_index(name);
    if (!v) throw FormatError("unknown vertex '" + name + "' for algebra " + alg->name());
    return *v;
}

std::string vertex_name(const AlgebraPtr &alg, int v)
{
    return alg->quiver().vertices().at(static_cast<std::size_t>(v));
}

json module_json(const GradedModule &m)
{
    const AlgebraPtr &alg = m.algebra();
    json j;
    j["kind"] = "module";
    j["algebra"] = alg->name();
    j["degrees"] = m.degrees();
    json vs = json::array();
    for (int v : m.vertices()) vs.push_back(vertex_name(alg, v));
    j["vertices"] = vs;
    j["labels"] = m.labels();
    json acts;
    for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
        acts[alg->quiver().arrows()[static_cast<std::size_t>(a)].name] = matrix_json(m.action(a));
    }
    j["actions"] = acts;
    return j;
}

GradedModule module_from(const json &j)
{
    const AlgebraPtr alg = algebra_by_name(get<std::string>(j, "algebra"));
    const auto degrees = get<std::vector<int>>(j, "degrees");
    const json &vj = field(j, "vertices");
    if (!vj.is_array() || vj.size() != degrees.size()) throw FormatError("need one vertex per basis vector");
    std::vector<int> vertices;
    for (const auto &v : vj) vertices.push_back(vertex_from(alg, v));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = get<std::vector<std::string>>(j, "labels");
    const json &aj = field(j, "actions");
    std::vector<Matrix> actions;
    for (const auto &arr : alg->quiver().arrows()) {
        if (!aj.contains(arr.name)) throw FormatError("missing action of arrow '" + arr.name + "'");
        actions.push_back(matrix_from(aj.at(arr.name), degrees.size(), degrees.size()));
    }
    try {
        GradedModule m(alg, degrees, vertices, actions, labels);
        m.validate();
        return m;
    } catch (const std::logic_error &e) {
        throw FormatError(std::string("not a module: ") + e.what());
    }
}

json summand_json(const AlgebraPtr &alg, const Summand &s)
{
    json j;
    if (s.tag) {
        j["projective"] = vertex_name(alg, s.tag->vertex);
        j["shift"] = s.tag->shift;
    } else {
        j["module"] = module_json(*s.module);
    }
    if (!s.label.empty()) j["label"] = s.label;
    return j;
}

Summand summand_from(const AlgebraPtr &alg, const json &j)
{
    std::string label = j.contains("label") ? get<std::string>(j, "label") : std::string();
    if (j.contains("projective")) {
        return projective_summand(alg, vertex_from(alg, j.at("projective")), get<int>(j, "shift"), std::move(label));
    }
    auto m = std::make_shared<const GradedModule>(module_from(field(j, "module")));
    if (m->algebra()->name() != alg->name()) throw FormatError("summand module over the wrong algebra");
    return Summand{m, std::nullopt, std::move(label)};
}

json term_json(const AlgebraPtr &alg, const Term &t)
{
    json j = json::array();
    for (const auto &s : t.summands()) j.push_back(summand_json(alg, s));
    return j;
}

Term term_from(const AlgebraPtr &alg, const json &j)
{
    if (!j.is_array()) throw FormatError("a term is a list of summands");
    std::vector<Summand> out;
    for (const auto &s : j) out.push_back(summand_from(alg, s));
    return Term(std::move(out));
}

std::string side_name(Side s)
{
    return s == Side::Left ? "left" : "right";
}

json complex_json(const Complex &x)
{
    const AlgebraPtr &alg = x.algebra();
    json j;
    j["kind"] = "complex";
    j["algebra"] = alg->name();
    j["lo"] = x.lo();
    j["open_lo"] = x.open_lo();
    j["open_hi"] = x.open_hi();
    json terms = json::array();
    for (const auto &t : x.terms()) terms.push_back(term_json(alg, t));
    j["terms"] = terms;
    json diffs = json::array();
    for (int i = x.lo(); i < x.hi(); ++i) diffs.push_back(matrix_json(x.d(i)));
    j["differentials"] = diffs;
    if (const auto &t = x.tail()) {
        json tj;
        tj["side"] = side_name(t->side);
        tj["period"] = t->period;
        tj["internal_shift"] = t->internal_shift;
        tj["anchor"] = t->anchor;
        json block = json::array();
        for (const auto &b : t->block) block.push_back(term_json(alg, b));
        tj["block"] = block;
        j["tail"] = tj;
    } else {
        j["tail"] = nullptr;
    }
    return j;
}

Complex complex_from(const json &j)
{
    const AlgebraPtr alg = algebra_by_name(get<std::string>(j, "algebra"));
    const int lo = get<int>(j, "lo");
    const bool open_lo = j.contains("open_lo") && get<bool>(j, "open_lo");
    const bool open_hi = j.contains("open_hi") && get<bool>(j, "open_hi");
    const json &tj = field(j, "terms");
    if (!tj.is_array()) throw FormatError("'terms' must be a list");
    std::vector<Term> terms;
    for (const auto &t : tj) terms.push_back(term_from(alg, t));
    const json &dj = field(j, "differentials");
    if (!dj.is_array() || dj.size() + 1 != std::max<std::size_t>(terms.size(), 1)) {
        throw FormatError("need one differential between consecutive terms");
    }
    std::vector<Matrix> diffs;
    for (std::size_t k = 0; k < dj.size(); ++k) diffs.push_back(matrix_from(dj[k], terms[k + 1].dim(), terms[k].dim()));
    std::optional<Tail> tail;
    if (j.contains("tail") && !j.at("tail").is_null()) {
        const json &t = j.at("tail");
        Tail out;
        const auto side = get<std::string>(t, "side");
        if (side != "left" && side != "right") throw FormatError("tail side must be 'left' or 'right'");
        out.side = side == "left" ? Side::Left : Side::Right;
        out.period = get<int>(t, "period");
        out.internal_shift = get<int>(t, "internal_shift");
        out.anchor = get<int>(t, "anchor");
        for (const auto &b : field(t, "block")) out.block.push_back(term_from(alg, b));
        if (out.period < 1 || out.block.size() != static_cast<std::size_t>(out.period)) {
            throw FormatError("tail block must hold one term per period step");
        }
        tail = std::move(out);
    }
    try {
        return Complex(alg, lo, std::move(terms), std::move(diffs), open_lo, open_hi, std::move(tail));
    } catch (const std::logic_error &e) {
        throw FormatError(std::string("not a complex: ") + e.what());
    }
}

json series_json(const TruncatedSeries &s)
{
    json j;
    json coeffs;
    const LaurentPoly known = s.known_part();
    for (const auto &[e, c] : known.terms()) coeffs[std::to_string(e)] = c.to_string();
    j["coefficients"] = coeffs;
    if (s.is_exact()) j["order"] = nullptr;
    else j["order"] = s.order();
    return j;
}

} // namespace

AlgebraPtr algebra_by_name(const std::string &name)
{
    const ZigZag &z = zigzag();
    if (name == z.B->name()) return z.B;
    if (name == z.dual.algebra->name()) return z.dual.algebra;
    if (name == z.C->name()) return z.C;
    throw FormatError("unknown algebra '" + name + "' (expected B, B! or C)");
}

AlgebraFixture algebra_from_json(const std::string &text)
{
    const json j = parse_text(text);
    const std::string name = j.contains("name") ? get<std::string>(j, "name") : "A";
    const json &qj = field(j, "quiver");
    const auto vertices = get<std::vector<std::string>>(qj, "vertices");
    std::vector<Arrow> arrows;
    for (const auto &a : field(qj, "arrows")) {
        const auto src = get<std::string>(a, "source");
        const auto dst = get<std::string>(a, "target");
        const auto find = [&](const std::string &v) {
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                if (vertices[i] == v) return static_cast<int>(i);
            }
            throw FormatError("arrow endpoint '" + v + "' is not a vertex");
        };
        arrows.push_back(Arrow{get<std::string>(a, "name"), find(src), find(dst),
                               a.contains("degree") ? get<int>(a, "degree") : 1});
    }
    const auto relations = get<std::vector<std::vector<std::string>>>(j, "relations");
    const int d_max = j.contains("d_max") ? get<int>(j, "d_max") : 4;

    AlgebraFixture f;
    std::shared_ptr<GradedAlgebra> alg;
    try {
        const AlgebraPtr built = build_path_algebra(Quiver(vertices, arrows), relations, d_max, name);
        alg = std::make_shared<GradedAlgebra>(*built);
    } catch (const ConstructionError &e) {
        throw FormatError(std::string("bad algebra: ") + e.what());
    }
    if (j.contains("aliases")) {
        for (const auto &[word, alias] : field(j, "aliases").items()) {
            alg->set_alias(word, alias.get<std::string>());
            f.aliases.emplace_back(word, alias.get<std::string>());
        }
    }
    f.algebra = alg;
    if (j.contains("assertions") && field(j, "assertions").contains("graded_dims")) {
        f.expected_dims = get<std::vector<int>>(j.at("assertions"), "graded_dims");
    }
    return f;
}

std::string algebra_to_json(const AlgebraFixture &f)
{
    const GradedAlgebra &alg = *f.algebra;
    const Quiver &q = alg.quiver();
    json j;
    j["kind"] = "algebra";
    j["name"] = alg.name();
    json qj;
    qj["vertices"] = q.vertices();
    json arrows = json::array();
    for (const auto &a : q.arrows()) {
        json aj;
        aj["name"] = a.name;
        aj["source"] = q.vertices()[static_cast<std::size_t>(a.source)];
        aj["target"] = q.vertices()[static_cast<std::size_t>(a.target)];
        aj["degree"] = a.degree;
        arrows.push_back(aj);
    }
    qj["arrows"] = arrows;
    j["quiver"] = qj;
    json rels = json::array();
    for (const auto &r : alg.relations()) {
        json word = json::array();
        for (int a : r) word.push_back(q.arrows()[static_cast<std::size_t>(a)].name);
        rels.push_back(word);
    }
    j["relations"] = rels;
    j["d_max"] = alg.d_max();
    if (!f.aliases.empty()) {
        json al;
        for (const auto &[word, alias] : f.aliases) al[word] = alias;
        j["aliases"] = al;
    }
    if (f.expected_dims) j["assertions"] = json{{"graded_dims", *f.expected_dims}};
    return dump(j);
}

std::string module_to_json(const GradedModule &m)
{
    return dump(module_json(m));
}

GradedModule module_from_json(const std::string &text)
{
    return module_from(parse_text(text));
}

std::string hom_to_json(const ModuleHom &f)
{
    json j;
    j["kind"] = "hom";
    j["degree"] = f.degree;
    j["source"] = module_json(*f.source);
    j["target"] = module_json(*f.target);
    j["matrix"] = matrix_json(f.matrix);
    return dump(j);
}

ModuleHom hom_from_json(const std::string &text)
{
    const json j = parse_text(text);
    ModuleHom f;
    f.degree = get<int>(j, "degree");
    f.source = std::make_shared<const GradedModule>(module_from(field(j, "source")));
    f.target = std::make_shared<const GradedModule>(module_from(field(j, "target")));
    f.matrix = matrix_from(field(j, "matrix"), f.target->dim(), f.source->dim());
    try {
        f.validate();
    } catch (const std::logic_error &e) {
        throw FormatError(std::string("not a module map: ") + e.what());
    }
    return f;
}

std::string complex_to_json(const Complex &x)
{
    return dump(complex_json(x));
}

Complex complex_from_json(const std::string &text)
{
    return complex_from(parse_text(text));
}

std::string kclass_to_json(const KClass &k)
{
    json j;
    j["variable"] = k.inverted ? "u=q^-1" : "q";
    j["L(1)"] = series_json(k.l1);
    j["L(2)"] = series_json(k.l2);
    return dump(j);
}

std::string render_fixture_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const json j = parse_text(text);
    const std::string kind = j.contains("kind") ? get<std::string>(j, "kind") : "";
    std::ostringstream out;
    if (kind == "algebra") {
        const AlgebraFixture f = algebra_from_json(text);
        const GradedAlgebra &alg = *f.algebra;
        out << "algebra " << alg.name() << ", dim " << alg.dim() << "\n";
        out << "graded dims:";
        for (int d : alg.graded_dims()) out << ' ' << d;
        out << "\nbasis:";
        for (std::size_t i = 0; i < alg.dim(); ++i) out << ' ' << alg.basis_name(i);
        out << "\n";
        if (f.expected_dims) out << "assertion graded_dims: " << (alg.graded_dims() == *f.expected_dims ? "holds" : "FAILS") << "\n";
    } else if (kind == "module") {
        out << render_module(module_from(j));
    } else if (kind == "hom") {
        const ModuleHom f = hom_from_json(text);
        out << "hom of degree " << f.degree << "\nsource:\n"
            << render_module(*f.source) << "target:\n"
            << render_module(*f.target) << "matrix:\n"
            << f.matrix.to_string() << "\n";
    } else if (kind == "complex") {
        out << render_complex(complex_from(j));
    } else {
        throw FormatError("unknown fixture kind '" + kind + "'");
    }
    return out.str();
}

} // namespace jwcat
