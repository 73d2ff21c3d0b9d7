#include "doctest.h"

#include "properties.hpp"

namespace {

void expect(const props::Outcome& o, std::size_t cases) {
    INFO(o.name << ": " << o.failures << " failure(s); first: " << o.first);
    CHECK(o.cases >= cases);
    CHECK(o.ok());
}

}  // namespace

TEST_CASE("property: hull round-trip") { expect(props::hull_round_trip(100), 100); }
TEST_CASE("property: lattice points") { expect(props::lattice_points_vs_scan(100), 100); }
TEST_CASE("property: integer_solve") { expect(props::integer_solve_vs_brute(200), 200); }
TEST_CASE("property: unimodular count") { expect(props::unimodular_preserves_lattice_points(100), 100); }
TEST_CASE("property: gauge") { expect(props::gauge_homogeneity_sublinearity(100), 100); }
TEST_CASE("property: cut equivalence") { expect(props::cut_equivalence(30), 30); }
TEST_CASE("property: height concavity") { expect(props::height_concavity(100), 100); }
TEST_CASE("property: split monotonicity") { expect(props::split_monotonicity(100), 100); }
TEST_CASE("property: englobing idempotence") { expect(props::englobing_idempotence(100), 100); }
TEST_CASE("property: floor insensitivity") { expect(props::floor_insensitivity(100), 100); }
TEST_CASE("property: reduction bound") { expect(props::reduction_bound(100), 100); }
TEST_CASE("property: 2HP unimodular invariance") { expect(props::twohp_unimodular_invariance(60), 60); }
