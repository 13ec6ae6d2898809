#include "maninforge/pipelines.hpp"

#include "maninforge/cps.hpp"
#include "maninforge/fixtures.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace mforge {

namespace {

using nlohmann::json;

std::string failure_detail(const CheckFailure& f) {
    std::ostringstream ss;
    if (!f.witness.empty()) {
        ss << "witness=(";
        for (std::size_t k = 0; k < f.witness.size(); ++k)
            ss << (k ? "," : "") << f.witness[k];
        ss << ") ";
    }
    ss << "lhs=" << f.lhs;
    if (!f.rhs.empty()) ss << " rhs=" << f.rhs;
    return ss.str();
}

Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = rows.begin()->size();
    Matrix m(nr, nc);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const Rational& e : row) m.at(i, j++) = e;
        ++i;
    }
    return m;
}

Matrix colv(std::initializer_list<Rational> entries) {
    Matrix m(entries.size(), 1);
    std::size_t i = 0;
    for (const Rational& e : entries) m.at(i++, 0) = e;
    return m;
}

std::string unique_of_type(const Workspace& ws,
                           const std::vector<std::string>& names,
                           const std::string& type, const std::string& where) {
    std::string found;
    for (const auto& n : names)
        if (ws.types.at(n) == type) {
            if (!found.empty())
                throw ParseError(where + ": more than one " + type + " object");
            found = n;
        }
    if (found.empty())
        throw ParseError(where + ": no " + type + " object");
    return found;
}

struct ForwardArtifacts {
    std::optional<GtildeResult> gt;
    std::optional<IdealSplit> ids;
    std::optional<ComplexProductStructure> cps;
};

ForwardArtifacts forward_core(RunReport& rr, const ManinTriple& t,
                              const OOperator& o) {
    ForwardArtifacts art;
    rr.note("triple", verify_manin_triple(t));
    const SplitContext sc = t.context();
    rr.note("o-operator", validate_o_operator(sc, o));
    rr.outputs["G"] = o.G.coeffs.str();
    rr.outputs["B"] = o.B.coeffs.str();
    try {
        rr.note("semenov", check_semenov(sc, o));
        rr.note("graph-homomorphism", check_graph_homomorphism(sc, o));
        GtildeResult gt = build_gtilde_B(sc, o);
        rr.note("gtilde", gt.report);
        IdealSplit ids = split_ideals(gt.tw, o);
        rr.note("ideals", ids.report);
        rr.outputs["Eplus"] = ids.Eplus.basis().str();
        rr.outputs["Eminus"] = ids.Eminus.basis().str();
        rr.note("phi", phi_B(gt.tw, o).report);
        rr.note("nijenhuis", nijenhuis_phi(gt.tw, o));
        rr.note("intertwiner", adjoint_intertwiner_check(gt.tw, o));
        const ComplexProductStructure c = cps_gauged(t.form, o.G, o.B);
        rr.note("cps", verify_cps(c));
        rr.outputs["E"] = c.E.str();
        rr.outputs["J"] = c.J.str();
        rr.outputs["F"] = c.F.str();
        const auto dg = dual_gauge_data(o.G, o.B);
        rr.line("dual-gauge", true,
                dg ? "Gtilde=" + dg->first.coeffs.str() +
                         " Btilde=" + dg->second.coeffs.str()
                   : "generalized metric singular; dual gauge unavailable");
        art.gt = std::move(gt);
        art.ids = std::move(ids);
        art.cps = c;
    } catch (const std::invalid_argument& e) {
        rr.line("forward.error", false, e.what());
    }
    return art;
}

Workspace forward_workspace(const ForwardArtifacts& art, const OOperator& o) {
    Workspace out;
    if (!art.gt) return out;
    const TwilledAlgebra& tw = art.gt->tw;
    out.algebras.emplace("gtilde", tw.algebra);
    out.forms.emplace("gtilde_form", *tw.form);
    out.subspaces.emplace("gtilde_plus", tw.plus_side);
    out.subspaces.emplace("gtilde_minus", tw.minus_side);
    out.maps.emplace("B", LinearMap{tw.plus_side, tw.minus_side, o.B.coeffs});
    out.maps.emplace("G", LinearMap{tw.plus_side, tw.minus_side, o.G.coeffs});
    out.triples.emplace("gtilde_triple",
                        ManinTriple{tw.algebra, *tw.form, tw.plus_side,
                                    tw.minus_side});
    if (art.ids) {
        out.subspaces.emplace("Eplus", art.ids->Eplus);
        out.subspaces.emplace("Eminus", art.ids->Eminus);
    }
    return out;
}

struct GoldenForward {
    ManinTriple triple;
    OOperator o;
    GtildeResult gt;
    IdealSplit ids;
    ComplexProductStructure cps;
};

GoldenForward golden_forward() {
    GoldenForward g{fixtures::sl2_double(), {}, {}, {}, {}};
    g.o = gb_from_r(g.triple, fixtures::sl2_r());
    g.gt = build_gtilde_B(g.triple.context(), g.o);
    g.ids = split_ideals(g.gt.tw, g.o);
    g.cps = cps_gauged(g.triple.form, g.o.G, g.o.B);
    return g;
}

void forward_goldens(RunReport& rr, const GoldenForward& g) {
    const Rational q(1, 4), h(1, 2);
    rr.line("golden.G", g.o.G.coeffs == mat({{q, 0, 0}, {0, 0, h}, {0, h, 0}}),
            g.o.G.coeffs.str());
    rr.line("golden.B", g.o.B.coeffs == mat({{0, 0, 0}, {0, 0, -h}, {0, h, 0}}),
            g.o.B.coeffs.str());

    // Dual bracket on the r side of the split form.
    const LieAlgebra dual = dual_bracket_from_r(fixtures::sl2(), fixtures::sl2_r());
    rr.line("golden.dual",
            dual.bracket(basis_vector(3, 0), basis_vector(3, 1)) ==
                    colv({0, -h, 0}) &&
                dual.bracket(basis_vector(3, 0), basis_vector(3, 2)) ==
                    colv({0, 0, -h}) &&
                dual.bracket(basis_vector(3, 1), basis_vector(3, 2)).is_zero(),
            "dual bracket table");

    // Classical double reproduces the fixed six-dimensional table.
    const ManinTriple built =
        double_from_bialgebra(fixtures::sl2(), fixtures::sl2_r());
    bool same = built.form == g.triple.form;
    for (std::size_t i = 0; i < 6 && same; ++i)
        for (std::size_t j = 0; j < 6 && same; ++j)
            for (std::size_t k = 0; k < 6; ++k)
                if (built.g.c(i, j, k) != g.triple.g.c(i, j, k)) {
                    same = false;
                    break;
                }
    rr.line("golden.double", same, "classical double structure constants");

    // The six nonzero gauged crossed brackets.
    const LieAlgebra& tg = g.gt.tw.algebra;
    const auto br = [&](std::size_t i, std::size_t j) {
        return tg.bracket(basis_vector(6, i), basis_vector(6, j));
    };
    rr.line("golden.gtilde",
            br(4, 0) == colv({0, 0, -1, 0, h, 0}) &&
                br(5, 0) == colv({0, 1, 0, 0, 0, h}) &&
                br(3, 1) == colv({0, -2, 0, 0, 0, 0}) &&
                br(4, 1) == colv({2, 0, 0, -h, 0, 0}) &&
                br(3, 2) == colv({0, 0, 2, 0, 0, 0}) &&
                br(5, 2) == colv({-2, 0, 0, -h, 0, 0}),
            "gauged crossed bracket table");

    // Ideal spans.
    const Matrix gep = Matrix::from_columns(
        {colv({1, 0, 0, q, 0, 0}), colv({0, 1, 0, 0, 0, 1}),
         colv({0, 0, 1, 0, 0, 0})});
    const Matrix gem = Matrix::from_columns(
        {colv({1, 0, 0, -q, 0, 0}), colv({0, 1, 0, 0, 0, 0}),
         colv({0, 0, 1, 0, -1, 0})});
    rr.line("golden.ideal-spans",
            same_column_span(g.ids.Eplus.basis(), gep) &&
                same_column_span(g.ids.Eminus.basis(), gem),
            "E+ = span{h+H/4, x+ + X-, x-}, E- = span{h-H/4, x+, x- - X+}");

    // Bracket tables inside each ideal, in the spans above.
    const Matrix u1 = gep.column(0), u2 = gep.column(1), u3 = gep.column(2);
    const Matrix w1 = gem.column(0), w2 = gem.column(1), w3 = gem.column(2);
    rr.line("golden.ideal-brackets",
            tg.bracket(u1, u2) == -u2 && tg.bracket(u1, u3) == u3 &&
                tg.bracket(u2, u3) == Rational(-2) * u1 &&
                tg.bracket(w1, w2) == w2 && tg.bracket(w1, w3) == -w3 &&
                tg.bracket(w2, w3) == Rational(2) * w1,
            "ideal bracket tables");

    bool crossed_zero = true;
    for (const Matrix& u : {u1, u2, u3})
        for (const Matrix& w : {w1, w2, w3})
            if (!tg.bracket(u, w).is_zero()) crossed_zero = false;
    rr.line("golden.ideal-crossed", crossed_zero, "[E+, E-] = 0");

    const Matrix ge = mat({{0, 0, 0, 4, 0, 0},
                           {0, -1, 0, 0, 0, 2},
                           {0, 0, 1, 0, 2, 0},
                           {q, 0, 0, 0, 0, 0},
                           {0, 0, 0, 0, -1, 0},
                           {0, 0, 0, 0, 0, 1}});
    const Matrix gj = mat({{0, 0, 0, 4, 0, 0},
                           {0, -1, 0, 0, 0, 2},
                           {0, 0, 1, 0, 2, 0},
                           {-q, 0, 0, 0, 0, 0},
                           {0, 0, -1, 0, -1, 0},
                           {0, -1, 0, 0, 0, 1}});
    rr.line("golden.E", g.cps.E == ge, g.cps.E.str());
    rr.line("golden.J", g.cps.J == gj, g.cps.J.str());
}

void reverse_goldens(RunReport& rr, const ReverseResult& res) {
    rr.line("golden.theta-B", res.op.B.coeffs == fixtures::sl2_theta(),
            res.op.B.coeffs.str());
    rr.line("golden.theta-G", res.op.G.coeffs == Matrix::identity(3),
            res.op.G.coeffs.str());

    const LieAlgebra bb = bracket_B(res.quasi.context(), res.op, true);
    rr.line("golden.bracket-theta",
            bb.bracket(basis_vector(3, 0), basis_vector(3, 1)) ==
                    colv({0, -2, 0}) &&
                bb.bracket(basis_vector(3, 0), basis_vector(3, 2)) ==
                    colv({0, 0, -2}) &&
                bb.bracket(basis_vector(3, 1), basis_vector(3, 2)).is_zero(),
            "induced plus bracket table");

    rr.line("golden.sigma",
            res.tw.effective.sigma_map(0) ==
                    mat({{0, 0, 0}, {0, -2, 0}, {0, 0, 2}}) &&
                res.tw.effective.sigma_map(1) ==
                    mat({{0, 0, -1}, {2, 0, 0}, {0, 0, 0}}) &&
                res.tw.effective.sigma_map(2) ==
                    mat({{0, 1, 0}, {0, 0, 0}, {-2, 0, 0}}),
            "dressing table");
    rr.line("golden.rho",
            res.tw.effective.rho_map(0) ==
                    mat({{0, 0, 0}, {0, -2, 0}, {0, 0, -2}}) &&
                res.tw.effective.rho_map(1) ==
                    mat({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}) &&
                res.tw.effective.rho_map(2) ==
                    mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
            "coboundary action table");

    const LieAlgebra& tg = res.tw.algebra;
    const auto br = [&](std::size_t i, std::size_t j) {
        return tg.bracket(basis_vector(6, i), basis_vector(6, j));
    };
    rr.line("golden.crossed",
            br(0, 4) == colv({0, -2, 0, 0, -2, 0}) &&
                br(0, 5) == colv({0, 0, 2, 0, 0, -2}) &&
                br(1, 3) == colv({0, 2, 0, 0, 0, 0}) &&
                br(1, 5) == colv({-1, 0, 0, 1, 0, 0}) &&
                br(2, 3) == colv({0, 0, -2, 0, 0, 0}) &&
                br(2, 4) == colv({1, 0, 0, 1, 0, 0}),
            "gauged crossed bracket table");

    const Matrix gep = Matrix::from_columns(
        {colv({1, 0, 0, 1, 0, 0}), colv({0, 1, 0, 0, 2, 0}),
         colv({0, 0, 1, 0, 0, 0})});
    const Matrix gem = Matrix::from_columns(
        {colv({1, 0, 0, -1, 0, 0}), colv({0, 1, 0, 0, 0, 0}),
         colv({0, 0, 1, 0, 0, -2})});
    rr.line("golden.ideal-spans",
            same_column_span(res.EplusB.basis(), gep) &&
                same_column_span(res.EminusB.basis(), gem),
            "ideal spans");
}

/// Substitution taking the reverse twilled basis onto forward twilled
/// vectors: (4h, 2x+, 2x-, H, X-, X+).
void crosscheck(RunReport& rr, const ReverseResult& rev, const GoldenForward& fwd) {
    const Matrix s = Matrix::from_columns(
        {colv({4, 0, 0, 0, 0, 0}), colv({0, 2, 0, 0, 0, 0}),
         colv({0, 0, 2, 0, 0, 0}), colv({0, 0, 0, 1, 0, 0}),
         colv({0, 0, 0, 0, 0, 1}), colv({0, 0, 0, 0, 1, 0})});
    bool hom = true;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            const Matrix lhs =
                s * rev.tw.algebra.bracket(basis_vector(6, i), basis_vector(6, j));
            const Matrix rhs = fwd.gt.tw.algebra.bracket(s.column(i), s.column(j));
            if (!(lhs == rhs)) hom = false;
        }
    rr.line("crosscheck.homomorphism", hom,
            "substitution intertwines the gauged brackets");
    rr.line("crosscheck.anti-isometry",
            s.transpose() * fwd.gt.tw.form->gram() * s == -rev.tw.form->gram(),
            "substitution negates the form");
    rr.line("crosscheck.ideals",
            same_column_span(s * rev.EplusB.basis(), fwd.ids.Eplus.basis()) &&
                same_column_span(s * rev.EminusB.basis(), fwd.ids.Eminus.basis()),
            "substitution matches the ideal spans");
}

PipelineResult reverse_pipeline(const AntiIsoPair& p, const Matrix& theta,
                                bool with_goldens) {
    PipelineResult res;
    RunReport& rr = res.report;
    rr.note("pair", p.validate());
    rr.note("theta", check_theta(p.eplus, p.formplus, theta));
    if (!rr.passed()) return res;
    try {
        const ReverseResult r = build_manin_from_orthogonal(p, theta);
        rr.note("reverse", r.report);
        rr.outputs["B"] = r.op.B.coeffs.str();
        rr.outputs["G"] = r.op.G.coeffs.str();
        rr.outputs["Eplus"] = r.EplusB.basis().str();
        rr.outputs["Eminus"] = r.EminusB.basis().str();
        if (with_goldens) {
            reverse_goldens(rr, r);
            crosscheck(rr, r, golden_forward());
        }
        Workspace out;
        const TwilledAlgebra& tw = r.tw;
        out.algebras.emplace("gtilde", tw.algebra);
        out.forms.emplace("gtilde_form", *tw.form);
        out.subspaces.emplace("gtilde_plus", tw.plus_side);
        out.subspaces.emplace("gtilde_minus", tw.minus_side);
        out.subspaces.emplace("Eplus", r.EplusB);
        out.subspaces.emplace("Eminus", r.EminusB);
        out.maps.emplace("B", LinearMap{tw.plus_side, tw.minus_side, r.op.B.coeffs});
        out.maps.emplace("G", LinearMap{tw.plus_side, tw.minus_side, r.op.G.coeffs});
        out.triples.emplace("gtilde_triple",
                            ManinTriple{tw.algebra, *tw.form, tw.plus_side,
                                        tw.minus_side});
        res.out = std::move(out);
    } catch (const std::invalid_argument& e) {
        rr.line("reverse.error", false, e.what());
    }
    return res;
}

} // namespace

bool RunReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

void RunReport::line(const std::string& tag, bool ok, const std::string& detail) {
    checks.push_back({tag, ok, detail});
}

void RunReport::note(const std::string& tag, const Report& r) {
    if (r.passed()) {
        line(tag, true);
        return;
    }
    for (const auto& f : r.failures())
        line(tag + ":" + f.check, false, failure_detail(f));
}

std::string RunReport::to_json() const {
    json doc;
    doc["command"] = command;
    doc["passed"] = passed();
    json arr = json::array();
    for (const auto& c : checks) {
        json line;
        line["tag"] = c.tag;
        line["passed"] = c.passed;
        line["detail"] = c.detail;
        arr.push_back(line);
    }
    doc["checks"] = arr;
    doc["outputs"] = outputs;
    return doc.dump(2) + "\n";
}

std::string RunReport::to_human() const {
    std::ostringstream ss;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        ss << (c.passed ? "PASS " : "FAIL ") << c.tag;
        if (!c.detail.empty()) ss << " -- " << c.detail;
        ss << "\n";
        if (!c.passed) ++failed;
    }
    for (const auto& [k, v] : outputs) ss << k << " = " << v << "\n";
    if (failed == 0)
        ss << "result: ok (" << checks.size() << " checks)\n";
    else
        ss << "result: FAILED (" << failed << " of " << checks.size()
           << " checks)\n";
    return ss.str();
}

PipelineResult run_verify(const std::vector<std::string>& texts) {
    PipelineResult res;
    res.report.command = "verify";
    const Workspace ws = parse_documents(texts);
    RunReport& rr = res.report;
    for (const auto& [name, a] : ws.algebras) {
        Report r = a.check_antisymmetry();
        r.merge(a.check_jacobi());
        rr.note(name, r);
    }
    for (const auto& [name, f] : ws.forms) rr.note(name, f.validate());
    for (const auto& [name, s] : ws.subspaces)
        rr.line(name, true, "subspace of dimension " + std::to_string(s.dim()));
    for (const auto& [name, m] : ws.maps)
        rr.line(name, true,
                "linear map " + std::to_string(m.coeffs.rows()) + "x" +
                    std::to_string(m.coeffs.cols()));
    for (const auto& [name, r] : ws.rmatrices) {
        Report rep = check_cybe(r);
        rep.merge(check_factorizable(r));
        rr.note(name, rep);
    }
    for (const auto& [name, t] : ws.triples) rr.note(name, verify_manin_triple(t));
    for (const auto& [name, p] : ws.pairs) rr.note(name, p.validate());
    return res;
}

PipelineResult run_forward_r(const std::string& manin_text,
                             const std::string& r_text) {
    PipelineResult res;
    res.report.command = "forward";
    std::vector<std::vector<std::string>> per_doc;
    const Workspace ws = parse_documents({manin_text, r_text}, &per_doc);
    const ManinTriple& t = ws.triples.at(
        unique_of_type(ws, per_doc[0], "manin_triple", "forward"));
    const RMatrix& r = ws.rmatrices.at(
        unique_of_type(ws, per_doc[1], "r_matrix", "forward --r"));
    if (r.algebra.dim() != t.gminus.dim())
        throw ParseError("forward --r: r-matrix dimension does not match the "
                         "minus subalgebra");
    RunReport& rr = res.report;
    rr.note("r.cybe", check_cybe(r));
    rr.note("r.factorizable", check_factorizable(r));
    rr.note("r.dual-pairing", check_dual_pairing(r.algebra, r));
    if (!rr.passed()) return res;
    try {
        const OOperator o = gb_from_r(t, r);
        const ForwardArtifacts art = forward_core(rr, t, o);
        res.out = forward_workspace(art, o);
    } catch (const std::invalid_argument& e) {
        rr.line("forward.error", false, e.what());
    }
    return res;
}

PipelineResult run_forward_gb(const std::string& manin_text,
                              const std::string& metric_text,
                              const std::string& twist_text) {
    PipelineResult res;
    res.report.command = "forward";
    std::vector<std::vector<std::string>> per_doc;
    const Workspace ws =
        parse_documents({manin_text, metric_text, twist_text}, &per_doc);
    const ManinTriple& t = ws.triples.at(
        unique_of_type(ws, per_doc[0], "manin_triple", "forward"));
    const LinearMap& g = ws.maps.at(
        unique_of_type(ws, per_doc[1], "linear_map", "forward --metric"));
    const LinearMap& b = ws.maps.at(
        unique_of_type(ws, per_doc[2], "linear_map", "forward --twist"));
    for (const LinearMap* m : {&g, &b})
        if (!(m->source == t.gplus) || !(m->target == t.gminus))
            throw ParseError("forward: metric and twist must map the declared "
                             "gplus subspace to gminus");
    const OOperator o{b, g, Rational(-1)};
    RunReport& rr = res.report;
    const ForwardArtifacts art = forward_core(rr, t, o);
    res.out = forward_workspace(art, o);
    return res;
}

PipelineResult run_reverse(const std::string& pair_text,
                           const std::string& theta_text) {
    std::vector<std::vector<std::string>> per_doc;
    const Workspace ws = parse_documents({pair_text, theta_text}, &per_doc);
    const AntiIsoPair& p = ws.pairs.at(
        unique_of_type(ws, per_doc[0], "anti_iso_pair", "reverse"));
    const LinearMap& th = ws.maps.at(
        unique_of_type(ws, per_doc[1], "linear_map", "reverse --theta"));
    if (!th.coeffs.is_square() || th.coeffs.rows() != p.eplus.dim())
        throw ParseError("reverse --theta: theta must be a square operator on "
                         "the plus algebra");
    PipelineResult res = reverse_pipeline(p, th.coeffs, false);
    res.report.command = "reverse";
    return res;
}

PipelineResult run_example(const std::string& name) {
    if (name == "sl2-forward") {
        PipelineResult res;
        res.report.command = "example sl2-forward";
        RunReport& rr = res.report;
        const RMatrix r = fixtures::sl2_r();
        rr.note("r.cybe", check_cybe(r));
        rr.note("r.factorizable", check_factorizable(r));
        rr.note("r.dual-pairing", check_dual_pairing(r.algebra, r));
        const GoldenForward g = golden_forward();
        const ForwardArtifacts art = forward_core(rr, g.triple, g.o);
        forward_goldens(rr, g);
        res.out = forward_workspace(art, g.o);
        return res;
    }
    if (name == "sl2-reverse") {
        PipelineResult res =
            reverse_pipeline(fixtures::sl2_pair(), fixtures::sl2_theta(), true);
        res.report.command = "example sl2-reverse";
        return res;
    }
    if (name == "sl2-crosscheck") {
        PipelineResult res;
        res.report.command = "example sl2-crosscheck";
        RunReport& rr = res.report;
        const GoldenForward fwd = golden_forward();
        const ReverseResult rev = build_manin_from_orthogonal(
            fixtures::sl2_pair(), fixtures::sl2_theta());
        rr.note("forward", fwd.gt.report);
        rr.note("reverse", rev.report);
        crosscheck(rr, rev, fwd);
        return res;
    }
    throw ParseError("unknown example \"" + name +
                     "\" (expected sl2-forward, sl2-reverse, or sl2-crosscheck)");
}

} // namespace mforge
