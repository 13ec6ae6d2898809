#include "maninforge/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mforge {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& field(const json& obj, const std::string& key,
                  const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) bad(where + ": missing \"" + key + "\"");
    return *it;
}

std::string jstring(const json& v, const std::string& where) {
    if (!v.is_string()) bad(where + ": expected a string");
    return v.get<std::string>();
}

std::size_t jdim(const json& v, const std::string& where) {
    if (!v.is_number_unsigned()) bad(where + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

Rational jrat(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        const auto r = rat_parse(v.get<std::string>());
        if (!r) bad(where + ": malformed rational \"" + v.get<std::string>() + "\"");
        return *r;
    }
    bad(where + ": expected a rational as \"p/q\" or an integer");
}

Matrix jmatrix(const json& v, const std::string& where) {
    if (!v.is_array()) bad(where + ": expected an array of rows");
    const std::size_t rows = v.size();
    if (rows == 0) return Matrix(0, 0);
    if (!v[0].is_array()) bad(where + ": expected an array of rows");
    const std::size_t cols = v[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            bad(where + ": ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = jrat(v[i][j], where);
    }
    return m;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rat_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::size_t basis_index(const std::vector<std::string>& names,
                        const std::string& n, const std::string& where) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return i;
    bad(where + ": unknown basis element \"" + n + "\"");
}

LieAlgebra parse_algebra(const std::string& name, const json& obj) {
    const std::string where = "lie_algebra \"" + name + "\"";
    const std::size_t dim = jdim(field(obj, "dim", where), where);
    std::vector<std::string> names;
    if (obj.contains("basis")) {
        const json& b = obj["basis"];
        if (!b.is_array() || b.size() != dim)
            bad(where + ": basis must list exactly dim names");
        for (const auto& n : b) names.push_back(jstring(n, where));
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j])
                    bad(where + ": duplicate basis name \"" + names[i] + "\"");
    }
    LieAlgebra a(dim, name, names);
    if (!obj.contains("brackets")) return a;
    const json& brs = obj["brackets"];
    if (!brs.is_array()) bad(where + ": brackets must be an array");
    std::vector<bool> seen(dim * dim, false);
    for (const auto& br : brs) {
        if (!br.is_object()) bad(where + ": each bracket must be an object");
        const std::size_t x =
            basis_index(a.basis_names(), jstring(field(br, "x", where), where), where);
        const std::size_t y =
            basis_index(a.basis_names(), jstring(field(br, "y", where), where), where);
        if (x == y) bad(where + ": bracket of a basis element with itself");
        if (seen[x * dim + y] || seen[y * dim + x])
            bad(where + ": duplicate bracket pair");
        seen[x * dim + y] = true;
        const json& val = field(br, "value", where);
        if (!val.is_object()) bad(where + ": bracket value must be an object");
        Matrix v(dim, 1);
        for (const auto& [k, entry] : val.items())
            v.at(basis_index(a.basis_names(), k, where), 0) = jrat(entry, where);
        a.set_bracket(x, y, v);
    }
    return a;
}

Subspace parse_subspace(const std::string& name, const json& obj) {
    const std::string where = "subspace \"" + name + "\"";
    const std::size_t n = jdim(field(obj, "ambient_dim", where), where);
    const json& b = field(obj, "basis", where);
    if (!b.is_array()) bad(where + ": basis must be an array of vectors");
    Matrix basis(n, b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[j].is_array() || b[j].size() != n)
            bad(where + ": basis vectors must have ambient_dim entries");
        for (std::size_t i = 0; i < n; ++i)
            basis.at(i, j) = jrat(b[j][i], where);
    }
    if (basis.rank() != basis.cols())
        bad(where + ": basis vectors are not linearly independent");
    return Subspace(basis);
}

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& n,
                                      const std::string& kind,
                                      const std::string& where) {
    const auto it = m.find(n);
    if (it == m.end())
        bad(where + ": unknown " + kind + " \"" + n + "\"");
    return it->second;
}

template <class M>
std::string name_of(const M& m, const typename M::mapped_type& v,
                    const std::string& kind) {
    for (const auto& [n, cand] : m)
        if (cand == v) return n;
    bad("serialize: no named " + kind + " matches a referenced object");
}

json algebra_json(const LieAlgebra& a) {
    json obj;
    obj["type"] = "lie_algebra";
    obj["dim"] = a.dim();
    obj["basis"] = a.basis_names();
    json brs = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            json val;
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.c(i, j, k) != 0)
                    val[a.basis_names()[k]] = rat_str(a.c(i, j, k));
            if (!val.empty()) {
                json br;
                br["x"] = a.basis_names()[i];
                br["y"] = a.basis_names()[j];
                br["value"] = val;
                brs.push_back(br);
            }
        }
    obj["brackets"] = brs;
    return obj;
}

json subspace_json(const Subspace& s) {
    json obj;
    obj["type"] = "subspace";
    obj["ambient_dim"] = s.ambient_dim();
    json vecs = json::array();
    for (std::size_t j = 0; j < s.dim(); ++j) {
        json v = json::array();
        for (std::size_t i = 0; i < s.ambient_dim(); ++i)
            v.push_back(rat_str(s.basis().at(i, j)));
        vecs.push_back(v);
    }
    obj["basis"] = vecs;
    return obj;
}

} // namespace

Workspace parse_workspace(const std::string& text) {
    return parse_documents({text});
}

Workspace parse_documents(const std::vector<std::string>& texts,
                          std::vector<std::vector<std::string>>* per_doc_names) {
    std::map<std::string, json> raw;
    if (per_doc_names) per_doc_names->assign(texts.size(), {});
    for (std::size_t d = 0; d < texts.size(); ++d) {
        json doc;
        try {
            doc = json::parse(texts[d]);
        } catch (const json::exception& e) {
            bad(std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_object()) bad("document is not a JSON object");
        if (jstring(field(doc, "format", "document"), "format") != "manin-forge/1")
            bad("unsupported format (expected \"manin-forge/1\")");
        const json& objects = field(doc, "objects", "document");
        if (!objects.is_object()) bad("\"objects\" must be an object");
        for (const auto& [name, obj] : objects.items()) {
            if (raw.count(name)) bad("duplicate object name \"" + name + "\"");
            if (!obj.is_object() || !obj.contains("type"))
                bad("object \"" + name + "\" has no \"type\"");
            raw.emplace(name, obj);
            if (per_doc_names) (*per_doc_names)[d].push_back(name);
        }
    }

    Workspace ws;
    for (const auto& [name, obj] : raw)
        ws.types[name] = jstring(obj.at("type"), "object \"" + name + "\"");

    // Pass 1: self-contained objects.
    for (const auto& [name, obj] : raw) {
        const std::string& type = ws.types[name];
        if (type == "lie_algebra") {
            ws.algebras.emplace(name, parse_algebra(name, obj));
        } else if (type == "bilinear_form") {
            const std::string where = "bilinear_form \"" + name + "\"";
            const Matrix gram = jmatrix(field(obj, "gram", where), where);
            if (!gram.is_square()) bad(where + ": gram must be square");
            ws.forms.emplace(name, BilinearForm(gram));
        } else if (type == "subspace") {
            ws.subspaces.emplace(name, parse_subspace(name, obj));
        } else if (type != "linear_map" && type != "r_matrix" &&
                   type != "manin_triple" && type != "anti_iso_pair") {
            bad("object \"" + name + "\": unknown type \"" + type + "\"");
        }
    }

    // Pass 2: objects referencing pass-1 names.
    for (const auto& [name, obj] : raw) {
        const std::string& type = ws.types[name];
        if (type == "linear_map") {
            const std::string where = "linear_map \"" + name + "\"";
            const Subspace& src = lookup(ws.subspaces,
                jstring(field(obj, "source", where), where), "subspace", where);
            const Subspace& tgt = lookup(ws.subspaces,
                jstring(field(obj, "target", where), where), "subspace", where);
            const Matrix m = jmatrix(field(obj, "matrix", where), where);
            if (m.rows() != tgt.dim() || m.cols() != src.dim())
                bad(where + ": matrix must be target.dim x source.dim");
            ws.maps.emplace(name, LinearMap{src, tgt, m});
        } else if (type == "r_matrix") {
            const std::string where = "r_matrix \"" + name + "\"";
            const LieAlgebra& a = lookup(ws.algebras,
                jstring(field(obj, "algebra", where), where), "lie_algebra", where);
            const Matrix c = jmatrix(field(obj, "coeffs", where), where);
            if (c.rows() != a.dim() || c.cols() != a.dim())
                bad(where + ": coeffs must be dim x dim");
            ws.rmatrices.emplace(name, RMatrix{a, c});
        } else if (type == "manin_triple") {
            const std::string where = "manin_triple \"" + name + "\"";
            const LieAlgebra& a = lookup(ws.algebras,
                jstring(field(obj, "algebra", where), where), "lie_algebra", where);
            const BilinearForm& f = lookup(ws.forms,
                jstring(field(obj, "form", where), where), "bilinear_form", where);
            const Subspace& gp = lookup(ws.subspaces,
                jstring(field(obj, "gplus", where), where), "subspace", where);
            const Subspace& gm = lookup(ws.subspaces,
                jstring(field(obj, "gminus", where), where), "subspace", where);
            if (f.dim() != a.dim() || gp.ambient_dim() != a.dim() ||
                gm.ambient_dim() != a.dim())
                bad(where + ": dimension mismatch");
            ws.triples.emplace(name, ManinTriple{a, f, gp, gm});
        } else if (type == "anti_iso_pair") {
            const std::string where = "anti_iso_pair \"" + name + "\"";
            const LieAlgebra& ep = lookup(ws.algebras,
                jstring(field(obj, "eplus", where), where), "lie_algebra", where);
            const LieAlgebra& em = lookup(ws.algebras,
                jstring(field(obj, "eminus", where), where), "lie_algebra", where);
            const BilinearForm& fp = lookup(ws.forms,
                jstring(field(obj, "formplus", where), where), "bilinear_form", where);
            const BilinearForm& fm = lookup(ws.forms,
                jstring(field(obj, "formminus", where), where), "bilinear_form", where);
            const Matrix phi = jmatrix(field(obj, "phi", where), where);
            if (phi.rows() != em.dim() || phi.cols() != ep.dim() ||
                fp.dim() != ep.dim() || fm.dim() != em.dim())
                bad(where + ": dimension mismatch");
            ws.pairs.emplace(name, AntiIsoPair{ep, em, phi, fp, fm});
        }
    }
    return ws;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Workspace load_documents(const std::vector<std::string>& paths,
                         std::vector<std::vector<std::string>>* per_doc_names) {
    std::vector<std::string> texts;
    for (const auto& p : paths) texts.push_back(read_file(p));
    return parse_documents(texts, per_doc_names);
}

std::string serialize_workspace(const Workspace& ws) {
    json objects = json::object();
    for (const auto& [name, a] : ws.algebras) objects[name] = algebra_json(a);
    for (const auto& [name, f] : ws.forms) {
        json obj;
        obj["type"] = "bilinear_form";
        obj["gram"] = matrix_json(f.gram());
        objects[name] = obj;
    }
    for (const auto& [name, s] : ws.subspaces) objects[name] = subspace_json(s);
    for (const auto& [name, m] : ws.maps) {
        json obj;
        obj["type"] = "linear_map";
        obj["source"] = name_of(ws.subspaces, m.source, "subspace");
        obj["target"] = name_of(ws.subspaces, m.target, "subspace");
        obj["matrix"] = matrix_json(m.coeffs);
        objects[name] = obj;
    }
    for (const auto& [name, r] : ws.rmatrices) {
        json obj;
        obj["type"] = "r_matrix";
        obj["algebra"] = name_of(ws.algebras, r.algebra, "lie_algebra");
        obj["coeffs"] = matrix_json(r.coeffs);
        objects[name] = obj;
    }
    for (const auto& [name, t] : ws.triples) {
        json obj;
        obj["type"] = "manin_triple";
        obj["algebra"] = name_of(ws.algebras, t.g, "lie_algebra");
        obj["form"] = name_of(ws.forms, t.form, "bilinear_form");
        obj["gplus"] = name_of(ws.subspaces, t.gplus, "subspace");
        obj["gminus"] = name_of(ws.subspaces, t.gminus, "subspace");
        objects[name] = obj;
    }
    for (const auto& [name, p] : ws.pairs) {
        json obj;
        obj["type"] = "anti_iso_pair";
        obj["eplus"] = name_of(ws.algebras, p.eplus, "lie_algebra");
        obj["eminus"] = name_of(ws.algebras, p.eminus, "lie_algebra");
        obj["phi"] = matrix_json(p.phi);
        obj["formplus"] = name_of(ws.forms, p.formplus, "bilinear_form");
        obj["formminus"] = name_of(ws.forms, p.formminus, "bilinear_form");
        objects[name] = obj;
    }
    json doc;
    doc["format"] = "manin-forge/1";
    doc["objects"] = objects;
    return doc.dump(2) + "\n";
}

} // namespace mforge
