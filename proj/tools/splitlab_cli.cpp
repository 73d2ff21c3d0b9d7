// splitlab: intersection cuts, 2-hyperplane checks and split-rank probes from the command line.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "splitlab/certify.hpp"
#include "splitlab/cutgen.hpp"
#include "splitlab/errors.hpp"
#include "splitlab/io.hpp"
#include "splitlab/ranklab.hpp"
#include "splitlab/splits.hpp"

using namespace splitlab;
using io::Json;

namespace {

constexpr int kValidationExit = 2;

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    long floor = ranklab::kDefaultFloor;
    long bound = 2;
    std::size_t rounds = 3;
    std::vector<std::string> witnesses;
    std::string out;
    std::string format = "json";

    // probe
    std::string strategy = "enumerate";
    std::string lift = "cone";
    std::string sequence_file;
    std::string program_file;
    std::string box;
    // rotate-facet
    std::size_t facet = 0;
    // sweep2d
    std::string pi;
    std::string pi0;
    std::string point;
};

Vec parse_point(const std::string& text) {
    Vec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rat(item));
    if (v.empty()) throw InputError("empty point \"" + text + "\"");
    return v;
}

std::string show(const Rat& r) { return to_string(r) + " (" + to_decimal(r) + ")"; }

std::string show(const ranklab::Height& h) { return h ? show(*h) : "-inf"; }

std::string show_row(const geom::Inequality& q) { return to_string(q.a) + " . x <= " + to_string(q.b); }

cutgen::CornerModel read_model(const std::string& path) { return io::parse_corner_model(io::read_file(path)); }
geom::Polyhedron read_poly(const std::string& path) { return io::parse_polyhedron(io::read_file(path)); }

struct Output {
    Json json;
    std::string text;
    std::optional<std::string> csv;
};

Output run_cut(const RunConfig& c) {
    auto cut = cutgen::intersection_cut(read_model(c.inputs.at(0)), read_poly(c.inputs.at(1)));
    return {io::cut(cut), io::cut_text(cut) + "\n", std::nullopt};
}

Output run_check2hp(const RunConfig& c) {
    auto r = certify::has_2hyperplane_property(read_poly(c.inputs.at(0)));
    std::string text = std::string("2-hyperplane property: ") + (r.overall ? "true" : "false") + "\n";
    if (r.offending) text += "offending face: " + io::describe_face(r.faces[*r.offending]) + "\n";
    for (std::size_t i = 0; i < r.faces.size(); ++i)
        text += "face " + std::to_string(i) + ": " + io::describe_face(r.faces[i]) + "\n";
    return {io::two_hp(r), text, std::nullopt};
}

Output run_probe(const RunConfig& c) {
    auto model = read_model(c.inputs.at(0));
    auto l = read_poly(c.inputs.at(1));
    if (c.lift != "cone" && c.lift != "boundary") throw InputError("--lift must be cone or boundary");
    auto kind = c.lift == "cone" ? ranklab::LiftKind::cone_over_l : ranklab::LiftKind::cone_over_boundary_points;
    auto cone = ranklab::lift(model, l, kind, c.floor);

    Matrix witnesses;
    for (const auto& w : c.witnesses) {
        witnesses.push_back(parse_point(w));
        if (witnesses.back().size() != model.dim()) throw InputError("witness \"" + w + "\" has the wrong dimension");
    }
    if (witnesses.empty()) witnesses.push_back(model.f);

    ranklab::ProbeReport report;
    if (c.strategy == "enumerate") {
        ranklab::EnumerateStrategy e{c.bound, {}, {}};
        for (std::size_t i = 0; i < model.dim(); ++i) {
            auto [lo, hi] = l.range(unit(model.dim(), i));
            e.lo.push_back(Rat(floor_rat(*lo) - 1));
            e.hi.push_back(Rat(ceil_rat(*hi) + 1));
        }
        if (!c.box.empty()) {
            Vec b = parse_point(c.box);
            if (b.size() != 2 || b[0] >= b[1]) throw InputError("--box must be \"lo,hi\" with lo < hi");
            e.lo.assign(model.dim(), b[0]);
            e.hi.assign(model.dim(), b[1]);
        }
        report = ranklab::probe_rounds(cone, e, c.rounds, witnesses);
    } else if (c.strategy == "sequence") {
        if (c.sequence_file.empty()) throw InputError("--strategy sequence needs --sequence FILE");
        report = ranklab::probe_rounds(cone, ranklab::SequenceStrategy{io::parse_sequence(io::read_file(c.sequence_file))},
                                       c.rounds, witnesses);
    } else if (c.strategy == "program") {
        if (c.program_file.empty()) throw InputError("--strategy program needs --program FILE");
        report = ranklab::execute_finite_rank(cone, io::parse_program(io::read_file(c.program_file)), c.rounds);
    } else {
        throw InputError("--strategy must be enumerate, sequence or program");
    }

    std::string text;
    for (const auto& r : report.rounds) {
        text += "round " + std::to_string(r.round) + ": max height " + show(r.heights.global_max);
        for (const auto& [x, h] : r.heights.samples) text += "; at " + to_string(x) + " " + show(h);
        text += "\n";
    }
    text += "verdict: " + ranklab::to_string(report.verdict) + " (" + report.label + ")\n";
    if (report.q) text += "q: " + std::to_string(*report.q) + "\n";
    return {io::probe(report), text, ranklab::probe_csv(report)};
}

Output run_classify2d(const RunConfig& c) {
    auto model = read_model(c.inputs.at(0));
    auto l = read_poly(c.inputs.at(1));
    auto cls = certify::classify_2d(l);
    auto v = certify::infinite_rank_2d(model, l);
    Json j = {{"classification", io::classification(cls)}, {"verdict", io::infinite_rank(v)}};
    std::string text = "kind: " + certify::to_string(cls.kind) + "\n" +
                       "boundary hull kind: " + certify::to_string(v.boundary_class.kind) + "\n" +
                       "infinite rank: " + (v.infinite_rank ? "true" : "false") + "\n" +
                       "2-hyperplane property: " + (v.two_hyperplane_property ? "true" : "false") + "\n";
    return {j, text, std::nullopt};
}

Output run_rotate(const RunConfig& c) {
    auto l = read_poly(c.inputs.at(0));
    if (c.facet >= l.inequalities().size())
        throw InputError("--facet " + std::to_string(c.facet) + " out of range; L has " +
                         std::to_string(l.inequalities().size()) + " facets");
    auto r = ranklab::rotate_facet(l, c.facet);
    std::string text = "removed: " + show_row(r.removed) + "\nadded: " + show_row(r.added) + "\n";
    return {io::rotation(r), text, std::nullopt};
}

Output run_sweep(const RunConfig& c) {
    auto q = read_poly(c.inputs.at(0));
    Vec pi = parse_point(c.pi);
    auto chv = splits::Split::make(pi, parse_rat(c.pi0));
    auto r = splits::sweep_sequence_2d(q, chv, parse_point(c.point));
    std::string text;
    for (const auto& e : r.sequence)
        text += e.provenance + ": " + to_string(e.split.pi_rat()) + " . x in {" + e.split.pi0.get_str() + ", " +
                Int(e.split.pi0 + 1).get_str() + "}\n";
    text += std::string("contained: ") + (r.contained ? "true" : "false") + "\n";
    return {io::sweep(r), text, std::nullopt};
}

void emit(const RunConfig& c, const Output& o) {
    std::string body;
    if (c.format == "json") body = io::dump(o.json);
    else if (c.format == "text") body = o.text;
    else if (o.csv) body = *o.csv;
    else throw InputError("--format csv is only available for probe");
    if (c.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw InputError("cannot write " + c.out);
    f << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact split-rank laboratory for intersection cuts"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", cfg.out, "Write to this file instead of stdout");
    };
    auto files = [&](CLI::App* sub, std::size_t n, const std::string& what) {
        sub->add_option("inputs", cfg.inputs, what)->required()->expected(static_cast<int>(n))->check(CLI::ExistingFile);
    };

    auto* cut = app.add_subcommand("cut", "Intersection cut of a corner model from a lattice-free set");
    files(cut, 2, "MODEL.json L.json");
    common(cut);

    auto* check = app.add_subcommand("check2hp", "Decide the 2-hyperplane property");
    files(check, 1, "L.json");
    common(check);

    auto* probe = app.add_subcommand("probe", "Apply splits to the lifted cone and track heights");
    files(probe, 2, "MODEL.json L.json");
    common(probe);
    probe->add_option("--floor", cfg.floor, "Truncation depth Z of the lifted cone")->check(CLI::Range(1L, 1000000L));
    probe->add_option("--bound", cfg.bound, "Enumeration bound B on ||pi||_inf")->check(CLI::Range(1L, 1000000L));
    probe->add_option("--rounds", cfg.rounds, "Round budget R (block cap for programs)")->check(CLI::Range(1L, 1000000L));
    probe->add_option("--witness", cfg.witnesses, "Witness point \"x1,x2[,x3]\"; repeatable, default f");
    probe->add_option("--strategy", cfg.strategy, "enumerate, sequence or program")
        ->check(CLI::IsMember({"enumerate", "sequence", "program"}));
    probe->add_option("--lift", cfg.lift, "cone (over L) or boundary (over the ray boundary points)")
        ->check(CLI::IsMember({"cone", "boundary"}));
    probe->add_option("--sequence", cfg.sequence_file, "Split sequence JSON")->check(CLI::ExistingFile);
    probe->add_option("--program", cfg.program_file, "Finite-rank program JSON")->check(CLI::ExistingFile);
    probe->add_option("--box", cfg.box, "Enumeration box \"lo,hi\" in every coordinate");

    auto* classify = app.add_subcommand("classify2d", "Classify a planar lattice-free set and predict infinite rank");
    files(classify, 2, "MODEL.json L.json");
    common(classify);

    auto* rotate = app.add_subcommand("rotate-facet", "Rotate a facet onto a hyperplane with integer points");
    files(rotate, 1, "L.json");
    common(rotate);
    rotate->add_option("--facet", cfg.facet, "Index into the facet list of L")->required();

    auto* sweep = app.add_subcommand("sweep2d", "Sweep a planar polyhedron beyond a Chvatal split");
    files(sweep, 1, "Q.json");
    common(sweep);
    sweep->add_option("--pi", cfg.pi, "Split normal \"a,b\"")->required();
    sweep->add_option("--pi0", cfg.pi0, "Split offset")->required();
    sweep->add_option("--point", cfg.point, "Apex point \"x1,x2\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidationExit;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        Output o;
        if (cfg.command == "cut") o = run_cut(cfg);
        else if (cfg.command == "check2hp") o = run_check2hp(cfg);
        else if (cfg.command == "probe") o = run_probe(cfg);
        else if (cfg.command == "classify2d") o = run_classify2d(cfg);
        else if (cfg.command == "rotate-facet") o = run_rotate(cfg);
        else o = run_sweep(cfg);
        emit(cfg, o);
    } catch (const LatticeFreeError& e) {
        std::cerr << io::dump(io::lattice_free_error(e));
        return kValidationExit;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationExit;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationExit;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
