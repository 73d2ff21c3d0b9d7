#pragma once

#include <string>

#include "json.hpp"
#include "splitlab/bounds.hpp"
#include "splitlab/certify.hpp"
#include "splitlab/cutgen.hpp"
#include "splitlab/errors.hpp"
#include "splitlab/polyhedron.hpp"
#include "splitlab/ranklab.hpp"
#include "splitlab/splits.hpp"

namespace splitlab::io {

// Keys come out sorted, so equal values dump to equal bytes.
using Json = nlohmann::json;

/// Accepts "p/q", "p" or a JSON integer; anything else is an InputError.
Rat parse_rat(const Json& j);
Vec parse_vec(const Json& j);
Matrix parse_matrix(const Json& j);
IntVec parse_int_vec(const Json& j);

Json rat(const Rat& r);
Json vec(const Vec& v);
Json matrix(const Matrix& m);
/// {"exact": "p/q", "decimal": "..."} with 12 fractional digits.
Json number(const Rat& r);
Json decimals(const Vec& v);
/// {"square": "p/q", "lower": "...", "upper": "..."}
Json sqrt_value(const SqrtValue& s);
Json height(const ranklab::Height& h);

/// {"dim", "vertices", "rays", "inequalities": [{"a", "b"}], "equalities": [{"a", "b"}]}.
/// Either representation may be omitted; when both are given they must agree.
Json polyhedron(const geom::Polyhedron& p);
geom::Polyhedron parse_polyhedron(const Json& j);

Json corner_model(const cutgen::CornerModel& m);
cutgen::CornerModel parse_corner_model(const Json& j);

Json split(const splits::Split& s);
splits::Split parse_split(const Json& j);
/// Array of {"pi", "pi0", "provenance"}; provenance defaults to "user".
Json sequence(const splits::SplitSequence& s);
splits::SplitSequence parse_sequence(const Json& j);
/// {"intersecting": [split, ...], "englobing": split}
Json program(const ranklab::Program& p);
ranklab::Program parse_program(const Json& j);

Json cut(const cutgen::CutCoefficients& c);
/// "1/2 s1 + s2 + 2 s3 >= 1"
std::string cut_text(const cutgen::CutCoefficients& c);

Json partition(const certify::PartitionCertificate& c);
std::string describe_face(const certify::FaceReport& f);
Json two_hp(const certify::TwoHPReport& r);
Json classification(const certify::Classification2D& c);
Json infinite_rank(const certify::InfiniteRankVerdict& v);
Json probe(const ranklab::ProbeReport& r);
Json rotation(const ranklab::Rotation& r);
Json sweep(const splits::SweepResult& r);
Json lattice_free_error(const LatticeFreeError& e);

Json read_file(const std::string& path);
/// Two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace splitlab::io
