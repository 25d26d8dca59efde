#include "io.hpp"

#include "liecoh/errors.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace liecoh::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& require(const json& j, const std::string& path, const std::string& key) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(at(path, key), "missing field");
    return *it;
}

const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array");
    return j;
}

long require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<long>();
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, "expected a string");
    return j.get<std::string>();
}

void check_schema(const json& j, const std::string& expected) {
    if (!j.is_object()) throw ParseError("", "expected an object");
    auto it = j.find("schema");
    if (it != j.end() && (!it->is_string() || it->get<std::string>() != expected)) {
        throw ParseError("/schema", "expected \"" + expected + "\"");
    }
}

std::size_t basis_index(const LieAlgebra& g, const json& j, const std::string& path) {
    const std::string name = require_string(j, path);
    const auto& names = g.names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return i;
    }
    throw ParseError(path, "unknown basis element '" + name + "'");
}

mpq_class parse_mpq(const std::string& text, const std::string& path) {
    try {
        return Scalar::parse_rational(text).rational_value();
    } catch (const Error&) {
        throw ParseError(path, "bad rational '" + text + "'");
    }
}

}  // namespace

json parse_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + "@" + std::to_string(e.byte), "invalid JSON");
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("sha256 failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return out.str();
}

std::string digest(const json& j) { return sha256_hex(j.dump()); }

json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return s.rational_value().get_str();
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return Scalar(parse_mpq(j.get<std::string>(), path));
    if (j.is_object()) {
        const long m = require_int(require(j, path, "order"), at(path, "order"));
        if (m < 1) throw ParseError(at(path, "order"), "order must be positive");
        const json& cs = require_array(require(j, path, "coeffs"), at(path, "coeffs"));
        std::vector<mpq_class> coeffs;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            coeffs.push_back(parse_mpq(require_string(cs[i], at(at(path, "coeffs"), i)), at(at(path, "coeffs"), i)));
        }
        return Scalar::from_coefficients(static_cast<std::uint32_t>(m), coeffs);
    }
    throw ParseError(path, "expected a scalar string or {order, coeffs}");
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

Vector vector_from_json(const json& j, const std::string& path, std::size_t size) {
    require_array(j, path);
    if (j.size() != size) throw ParseError(path, "expected " + std::to_string(size) + " entries");
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(j[i], at(path, i)));
    return v;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
    require_array(j, path);
    if (j.size() != rows) throw ParseError(path, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Vector r = vector_from_json(j[i], at(path, i), cols);
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
    }
    return m;
}

json index_to_json(const MultiIndex& a) {
    json out = json::array();
    for (int x : a) out.push_back(x);
    return out;
}

json field_to_json(const Field& f) {
    if (f.order() == 1) return {{"kind", "rational"}};
    return {{"kind", "cyclotomic"}, {"order", f.order()}};
}

Field field_from_json(const json& j, const std::string& path) {
    const std::string kind = require_string(require(j, path, "kind"), at(path, "kind"));
    if (kind == "rational") return Field(FieldSpec::rationals());
    if (kind == "cyclotomic") {
        const long m = require_int(require(j, path, "order"), at(path, "order"));
        if (m < 1) throw ParseError(at(path, "order"), "order must be positive");
        return field_make(FieldSpec::cyclotomic(static_cast<std::uint32_t>(m)));
    }
    throw ParseError(at(path, "kind"), "expected \"rational\" or \"cyclotomic\"");
}

json algebra_to_json(const LieAlgebra& g, const std::string& name) {
    json brackets = json::array();
    for (const auto& e : g.structure()) {
        json out = json::array();
        for (const auto& [k, c] : e.out.entries()) out.push_back({g.names()[k], scalar_to_json(c)});
        brackets.push_back({{"x", g.names()[e.i]}, {"y", g.names()[e.j]}, {"out", out}});
    }
    return {{"schema", algebra_schema},
            {"name", name},
            {"field", field_to_json(g.field())},
            {"basis", g.names()},
            {"brackets", brackets}};
}

std::string algebra_name(const json& j) {
    if (j.is_object() && j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
    if (j.is_object() && j.contains("standard") && j["standard"].is_string()) return j["standard"].get<std::string>();
    return "algebra";
}

LieAlgebra algebra_from_json(const json& j) {
    check_schema(j, algebra_schema);
    if (j.contains("standard")) {
        const std::string name = require_string(j["standard"], "/standard");
        try {
            return standard_algebra(name);
        } catch (const InvalidArgument& e) {
            throw ParseError("/standard", e.what());
        }
    }
    const Field field = j.contains("field") ? field_from_json(j["field"], "/field") : Field(FieldSpec::rationals());
    const json& basis = require_array(require(j, "", "basis"), "/basis");
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        names.push_back(require_string(basis[i], at("/basis", i)));
        if (names.back().empty()) throw ParseError(at("/basis", i), "empty basis name");
        if (!seen.insert(names.back()).second) throw ParseError(at("/basis", i), "duplicate basis name");
    }
    // index lookup without building the algebra first
    auto index = [&](const json& n, const std::string& path) {
        const std::string s = require_string(n, path);
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == s) return i;
        }
        throw ParseError(path, "unknown basis element '" + s + "'");
    };
    std::vector<BracketEntry> entries;
    const json empty = json::array();
    const json& brackets = j.contains("brackets") ? require_array(j["brackets"], "/brackets") : empty;
    for (std::size_t b = 0; b < brackets.size(); ++b) {
        const std::string p = at("/brackets", b);
        const std::size_t x = index(require(brackets[b], p, "x"), at(p, "x"));
        const std::size_t y = index(require(brackets[b], p, "y"), at(p, "y"));
        const json& out = require_array(require(brackets[b], p, "out"), at(p, "out"));
        std::vector<SparseVec::Entry> terms;
        for (std::size_t t = 0; t < out.size(); ++t) {
            const std::string tp = at(at(p, "out"), t);
            if (!out[t].is_array() || out[t].size() != 2) throw ParseError(tp, "expected [basis, scalar]");
            const Scalar c = scalar_from_json(out[t][1], at(tp, 1));
            if (!field.contains(c)) throw ParseError(at(tp, 1), "scalar outside the declared field");
            terms.emplace_back(index(out[t][0], at(tp, 0)), c);
        }
        entries.push_back({x, y, SparseVec::from_entries(std::move(terms))});
    }
    return LieAlgebra::from_structure(field, names, entries);
}

ModuleAction module_from_json(const LieAlgebra& g, const json& j) {
    check_schema(j, module_schema);
    const long d = require_int(require(j, "", "dim"), "/dim");
    if (d < 0) throw ParseError("/dim", "dimension must be non-negative");
    const json& mats = require(j, "", "matrices");
    if (!mats.is_object()) throw ParseError("/matrices", "expected an object keyed by basis names");
    std::vector<Matrix> rho(g.dim(), Matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d)));
    for (auto it = mats.begin(); it != mats.end(); ++it) {
        const std::string p = at("/matrices", it.key());
        const std::size_t i = basis_index(g, json(it.key()), p);
        rho[i] = matrix_from_json(it.value(), p, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    }
    return ModuleAction(g, std::move(rho));
}

json module_to_json(const LieAlgebra& g, const ModuleAction& v) {
    json mats = json::object();
    for (std::size_t i = 0; i < g.dim(); ++i) mats[g.names()[i]] = matrix_to_json(v.rho(i));
    return {{"schema", module_schema}, {"dim", v.dim()}, {"matrices", mats}};
}

ModuleAction module_from_spec(const LieAlgebra& g, const std::string& spec, json& input_doc) {
    input_doc = spec;
    if (spec == "trivial") return ModuleAction::trivial(g, 1);
    if (spec.rfind("trivial:", 0) == 0) {
        try {
            const long d = std::stol(spec.substr(8));
            if (d >= 0) return ModuleAction::trivial(g, static_cast<std::size_t>(d));
        } catch (const std::exception&) {
        }
        throw ParseError("module", "bad trivial module dimension in '" + spec + "'");
    }
    if (spec == "adjoint") return ModuleAction::adjoint(g);
    if (spec == "coadjoint") return ModuleAction::coadjoint(g);
    input_doc = read_file(spec);
    return module_from_json(g, input_doc);
}

BilinearFormSym form_from_json(const LieAlgebra& g, const json& j) {
    check_schema(j, form_schema);
    const Matrix m = matrix_from_json(require(j, "", "gram"), "/gram", g.dim(), g.dim());
    if (m != m.transpose()) throw ParseError("/gram", "matrix is not symmetric");
    return BilinearFormSym::from_matrix(m);
}

json form_to_json(const LieAlgebra& g, const BilinearFormSym& k) {
    json gram = json::array();
    for (std::size_t a = 0; a < k.module_dim(); ++a) gram.push_back(matrix_to_json(k.gram(a)));
    (void)g;
    return k.module_dim() == 1 ? json{{"schema", form_schema}, {"gram", gram[0]}}
                               : json{{"schema", form_schema}, {"grams", gram}};
}

json cochain_to_json(const LieAlgebra& g, const Cochain& c) {
    json out = json::array();
    for (const auto& idx : subsets(g.dim(), c.degree())) {
        const Vector v = c.value(idx);
        if (is_zero(v)) continue;
        json args = json::array();
        for (std::size_t i : idx) args.push_back(g.names()[i]);
        out.push_back({{"args", args}, {"value", vector_to_json(v)}});
    }
    return out;
}

json value_to_json(const Value& v) {
    if (const auto* vec = std::get_if<Vector>(&v)) return {{"kind", "vector"}, {"value", vector_to_json(*vec)}};
    if (const auto* f = std::get_if<TorusForm>(&v)) {
        json terms = json::array();
        const TorusForm::Terms& ts = f->terms();
        for (const auto& [key, coeff] : ts) {
            json axes = json::array();
            for (std::size_t a : key.second) axes.push_back(a);
            terms.push_back({{"exp", index_to_json(key.first)}, {"axes", axes}, {"coeff", vector_to_json(coeff)}});
        }
        return {{"kind", "form"}, {"vars", f->vars()}, {"degree", f->degree()}, {"terms", terms}};
    }
    const auto& w = std::get<ReducedOneForm>(v);
    json comps = json::array();
    const auto& cs = w.components();
    for (const auto& [alpha, coeff] : cs) comps.push_back({{"exp", index_to_json(alpha)}, {"coeff", vector_to_json(coeff)}});
    return {{"kind", "reduced"}, {"vars", w.vars()}, {"components", comps}};
}

SemidirectData semidirect_from_json(const json& n, const json& g, const json& action) {
    SemidirectData d{algebra_from_json(n), algebra_from_json(g), {}};
    check_schema(action, action_schema);
    const json& mats = require(action, "", "matrices");
    if (!mats.is_object()) throw ParseError("/matrices", "expected an object keyed by basis names of g");
    d.action.assign(d.g.dim(), Matrix(d.n.dim(), d.n.dim()));
    for (auto it = mats.begin(); it != mats.end(); ++it) {
        const std::string p = at("/matrices", it.key());
        d.action[basis_index(d.g, json(it.key()), p)] = matrix_from_json(it.value(), p, d.n.dim(), d.n.dim());
    }
    return d;
}

FixedPointAlgebra multiloop_from_json(const json& j, int window) {
    check_schema(j, multiloop_schema);
    const std::string kind = require_string(require(j, "", "kind"), "/kind");
    if (kind == "klein") {
        const long n = require_int(require(j, "", "n"), "/n");
        if (n < 2) throw ParseError("/n", "n must be at least 2");
        return klein_bottle_algebra(static_cast<std::size_t>(n), window);
    }
    if (kind != "multiloop") throw ParseError("/kind", "expected \"multiloop\" or \"klein\"");
    const LieAlgebra k = algebra_from_json(require(j, "", "base"));
    MultiloopSpec spec;
    spec.r = static_cast<int>(require_int(require(j, "", "r"), "/r"));
    if (spec.r < 1) throw ParseError("/r", "r must be positive");
    const json& orders = require_array(require(j, "", "orders"), "/orders");
    const json& roots = require_array(require(j, "", "roots"), "/roots");
    const json& sigmas = require_array(require(j, "", "sigmas"), "/sigmas");
    const std::size_t r = static_cast<std::size_t>(spec.r);
    if (orders.size() != r) throw ParseError("/orders", "expected r entries");
    if (roots.size() != r) throw ParseError("/roots", "expected r entries");
    if (sigmas.size() != r) throw ParseError("/sigmas", "expected r entries");
    for (std::size_t i = 0; i < r; ++i) {
        const long m = require_int(orders[i], at("/orders", i));
        if (m < 1) throw ParseError(at("/orders", i), "order must be positive");
        spec.orders.push_back(static_cast<int>(m));
        spec.roots.push_back(scalar_from_json(roots[i], at("/roots", i)));
        spec.sigmas.push_back(matrix_from_json(sigmas[i], at("/sigmas", i), k.dim(), k.dim()));
    }
    if (j.contains("require_primitive")) {
        if (!j["require_primitive"].is_boolean()) throw ParseError("/require_primitive", "expected a boolean");
        spec.require_primitive = j["require_primitive"].get<bool>();
    }
    return multiloop_build(k, spec, window);
}

}  // namespace liecoh::io
