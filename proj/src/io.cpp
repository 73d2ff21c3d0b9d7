#include "splitlab/io.hpp"

#include <fstream>
#include <sstream>

#include "splitlab/errors.hpp"

namespace splitlab::io {

namespace {

const char* outcome_name(certify::PartitionOutcome o) {
    switch (o) {
        case certify::PartitionOutcome::partitionable: return "partitionable";
        case certify::PartitionOutcome::not_partitionable: return "not_partitionable";
        case certify::PartitionOutcome::trivially_partitionable: return "trivially_partitionable";
    }
    return "not_partitionable";
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Json row(const Vec& a, const Rat& b) { return {{"a", vec(a)}, {"b", rat(b)}}; }

std::string point_text(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

}  // namespace

Rat parse_rat(const Json& j) {
    if (j.is_number_integer()) return splitlab::parse_rat(j.dump());
    if (j.is_string()) return splitlab::parse_rat(j.get<std::string>());
    throw InputError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Vec parse_vec(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
    Vec v;
    for (const auto& x : j) v.push_back(parse_rat(x));
    return v;
}

Matrix parse_matrix(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of vectors, got " + j.dump());
    Matrix m;
    for (const auto& r : j) m.push_back(parse_vec(r));
    return m;
}

IntVec parse_int_vec(const Json& j) {
    Vec v = parse_vec(j);
    if (!is_integral(v)) throw InputError("expected integers, got " + j.dump());
    return to_int(v);
}

Json rat(const Rat& r) { return to_string(r); }

Json vec(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rat(x));
    return out;
}

Json matrix(const Matrix& m) {
    Json out = Json::array();
    for (const auto& r : m) out.push_back(vec(r));
    return out;
}

Json number(const Rat& r) { return {{"exact", rat(r)}, {"decimal", to_decimal(r)}}; }

Json decimals(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_decimal(x));
    return out;
}

Json sqrt_value(const SqrtValue& s) {
    return {{"square", rat(s.square)}, {"lower", s.lower_decimal()}, {"upper", s.upper_decimal()}};
}

Json height(const ranklab::Height& h) {
    if (!h) return {{"exact", "-inf"}, {"decimal", "-inf"}};
    return number(*h);
}

Json polyhedron(const geom::Polyhedron& p) {
    Json ineqs = Json::array(), eqs = Json::array();
    for (const auto& q : p.inequalities()) ineqs.push_back(row(q.a, q.b));
    for (const auto& h : p.equalities()) eqs.push_back(row(h.normal, h.offset));
    return {{"dim", p.dim()},
            {"vertices", matrix(p.vertices())},
            {"rays", matrix(p.rays())},
            {"inequalities", ineqs},
            {"equalities", eqs}};
}

geom::Polyhedron parse_polyhedron(const Json& j) {
    const Json& d = field(j, "dim");
    if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > static_cast<long long>(geom::kMaxDim))
        throw InputError("polyhedron dim must be an integer in [1, 4]");
    const std::size_t dim = d.get<std::size_t>();
    auto check_dim = [&](const Vec& v) {
        if (v.size() != dim) throw InputError("polyhedron entry has dimension " + std::to_string(v.size()) +
                                              ", expected " + std::to_string(dim));
    };

    std::optional<geom::Polyhedron> from_gen, from_ineq;
    if (j.contains("vertices")) {
        Matrix pts = parse_matrix(j.at("vertices"));
        Matrix rays = j.contains("rays") ? parse_matrix(j.at("rays")) : Matrix{};
        for (const auto& v : pts) check_dim(v);
        for (const auto& r : rays) check_dim(r);
        if (pts.empty() && !rays.empty()) throw InputError("polyhedron with rays needs at least one vertex");
        if (!pts.empty()) from_gen = geom::convex_hull(dim, pts, rays);
    }
    if (j.contains("inequalities") || j.contains("equalities")) {
        std::vector<geom::Inequality> ineqs;
        std::vector<geom::Hyperplane> eqs;
        if (j.contains("inequalities"))
            for (const auto& r : j.at("inequalities")) {
                Vec a = parse_vec(field(r, "a"));
                check_dim(a);
                ineqs.push_back(geom::Inequality::make(a, parse_rat(field(r, "b"))));
            }
        if (j.contains("equalities"))
            for (const auto& r : j.at("equalities")) {
                Vec a = parse_vec(field(r, "a"));
                check_dim(a);
                eqs.push_back(geom::Hyperplane::make(a, parse_rat(field(r, "b"))));
            }
        if (!ineqs.empty() || !eqs.empty()) from_ineq = geom::enumerate_vertices(ineqs, dim, eqs);
    }
    if (from_gen && from_ineq && !(*from_gen == *from_ineq))
        throw InputError("polyhedron vertices and inequalities describe different sets");
    if (from_gen) return *from_gen;
    if (from_ineq) return *from_ineq;
    return geom::Polyhedron::empty(dim);
}

Json corner_model(const cutgen::CornerModel& m) { return {{"f", vec(m.f)}, {"rays", matrix(m.rays)}}; }

cutgen::CornerModel parse_corner_model(const Json& j) {
    return cutgen::CornerModel::make(parse_vec(field(j, "f")), parse_matrix(field(j, "rays")));
}

Json split(const splits::Split& s) {
    Json pi = Json::array();
    for (const auto& x : s.pi) pi.push_back(x.get_str());
    return {{"pi", pi}, {"pi0", s.pi0.get_str()}};
}

splits::Split parse_split(const Json& j) {
    Vec pi0 = parse_vec(Json::array({field(j, "pi0")}));
    if (!is_integral(pi0)) throw InputError("split pi0 must be an integer");
    return splits::Split::make(parse_int_vec(field(j, "pi")), to_int(pi0)[0]);
}

Json sequence(const splits::SplitSequence& s) {
    Json out = Json::array();
    for (const auto& e : s) {
        Json x = split(e.split);
        x["provenance"] = e.provenance;
        out.push_back(x);
    }
    return out;
}

splits::SplitSequence parse_sequence(const Json& j) {
    if (!j.is_array()) throw InputError("split sequence must be an array");
    splits::SplitSequence out;
    for (const auto& x : j) {
        std::string prov = x.contains("provenance") ? x.at("provenance").get<std::string>() : "user";
        out.push_back({parse_split(x), prov});
    }
    return out;
}

Json program(const ranklab::Program& p) {
    Json inter = Json::array();
    for (const auto& s : p.intersecting) inter.push_back(split(s));
    return {{"intersecting", inter}, {"englobing", split(p.englobing)}};
}

ranklab::Program parse_program(const Json& j) {
    ranklab::Program p;
    const Json& inter = field(j, "intersecting");
    if (!inter.is_array()) throw InputError("program \"intersecting\" must be an array");
    for (const auto& s : inter) p.intersecting.push_back(parse_split(s));
    p.englobing = parse_split(field(j, "englobing"));
    return p;
}

Json cut(const cutgen::CutCoefficients& c) {
    return {{"psi", vec(c.psi)}, {"psi_decimal", decimals(c.psi)}, {"text", cut_text(c)}};
}

std::string cut_text(const cutgen::CutCoefficients& c) {
    std::string s;
    for (std::size_t j = 0; j < c.psi.size(); ++j) {
        if (c.psi[j] == 0) continue;
        if (!s.empty()) s += " + ";
        if (c.psi[j] != 1) s += to_string(c.psi[j]) + " ";
        s += "s" + std::to_string(j + 1);
    }
    if (s.empty()) s = "0";
    return s + " >= 1";
}

Json partition(const certify::PartitionCertificate& c) {
    Json out = {{"outcome", outcome_name(c.outcome)}, {"s1", matrix(c.s1)}, {"s2", matrix(c.s2)}};
    out["split"] = c.split ? split(*c.split) : Json(nullptr);
    return out;
}

std::string describe_face(const certify::FaceReport& f) {
    std::string s = std::to_string(f.face.affine_dimension()) + "-face with " + std::to_string(f.points.size()) +
                    " integer point" + (f.points.size() == 1 ? "" : "s") + ", vertices";
    for (const auto& v : f.face.vertices()) s += " " + point_text(v);
    if (f.contained_in_facet_of_l) return s + "; inside a facet of L";
    return s + "; " + outcome_name(f.certificate->outcome);
}

Json two_hp(const certify::TwoHPReport& r) {
    Json faces = Json::array();
    for (const auto& f : r.faces) {
        Json x = {{"description", describe_face(f)},
                  {"dimension", f.face.affine_dimension()},
                  {"vertices", matrix(f.face.vertices())},
                  {"points", matrix(f.points)},
                  {"contained_in_facet_of_l", f.contained_in_facet_of_l}};
        x["certificate"] = f.certificate ? partition(*f.certificate) : Json(nullptr);
        faces.push_back(x);
    }
    Json out = {{"overall", r.overall}, {"faces", faces}};
    out["offending"] = r.offending ? Json(*r.offending) : Json(nullptr);
    return out;
}

Json classification(const certify::Classification2D& c) {
    return {{"kind", certify::to_string(c.kind)}, {"integer_points", matrix(c.integer_points_on_boundary)}};
}

Json infinite_rank(const certify::InfiniteRankVerdict& v) {
    return {{"infinite_rank", v.infinite_rank},
            {"boundary_hull", polyhedron(v.boundary_hull)},
            {"boundary_class", classification(v.boundary_class)},
            {"two_hyperplane_property", v.two_hyperplane_property},
            {"consistent", v.consistent}};
}

Json probe(const ranklab::ProbeReport& r) {
    Json rounds = Json::array();
    for (const auto& pr : r.rounds) {
        Json samples = Json::array();
        for (const auto& [x, h] : pr.heights.samples) samples.push_back({{"point", vec(x)}, {"height", height(h)}});
        rounds.push_back({{"round", pr.round},
                          {"splits_in_round", pr.splits_in_round},
                          {"samples", samples},
                          {"max_height", height(pr.heights.global_max)}});
    }
    Json out = {{"verdict", ranklab::to_string(r.verdict)},
                {"label", r.label},
                {"witnesses_positive", r.witnesses_positive},
                {"rounds", rounds},
                {"applied", sequence(r.applied)},
                {"final_polyhedron", polyhedron(r.final_poly)}};
    out["q"] = r.q ? Json(*r.q) : Json(nullptr);
    return out;
}

Json rotation(const ranklab::Rotation& r) {
    return {{"result", polyhedron(r.result)},
            {"removed", row(r.removed.a, r.removed.b)},
            {"added", row(r.added.a, r.added.b)},
            {"slice", polyhedron(r.slice)},
            {"level", r.level.get_str()},
            {"beta", number(r.beta)}};
}

Json sweep(const splits::SweepResult& r) {
    return {{"sequence", sequence(r.sequence)}, {"swept", polyhedron(r.swept)}, {"contained", r.contained}};
}

Json lattice_free_error(const LatticeFreeError& e) {
    return {{"error", "not_lattice_free"}, {"message", e.what()}, {"witness", vec(e.witness())}};
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace splitlab::io
