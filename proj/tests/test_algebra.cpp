#include <doctest.h>

#include <map>

#include "hnet/algebra.hpp"
#include "hnet/error.hpp"
#include "hnet/testkit.hpp"
#include "support.hpp"

using namespace hnet;
using hnet::test::data;
using hnet::test::hn;
using hnet::test::hs_of;

namespace {

std::set<std::string> ids(const Hypernetwork& h) {
    std::set<std::string> out;
    for (const auto& e : h.elements()) out.insert(id_of(e).str());
    return out;
}

std::set<std::string> hypersimplex_ids(const Hypernetwork& h) {
    std::set<std::string> out;
    for (const auto& e : h.elements())
        if (is_hypersimplex(e)) out.insert(id_of(e).str());
    return out;
}

PruneSelector selector(std::initializer_list<const char*> items) {
    PruneSelector s;
    for (const char* i : items) s.insert(SelectorItem::parse(i));
    return s;
}

} // namespace

TEST_CASE("insert") {
    const char* team = "relation R_Team(lead, medic_a, medic_b)\n"
                       "alpha TeamBlue = <Commander, Medic1, Medic2 ; R_Team>\n";

    SUBCASE("identical hypersimplex is ignored") {
        Hypernetwork h = hn(team);
        const std::string before = canonical(h);
        const InsertStep step = insert_into(h, hs_of(h, "TeamBlue"));
        CHECK(step.outcome == InsertOutcome::Ignored);
        CHECK(canonical(h) == before);
        CHECK(canonical(insert(h, hs_of(h, "TeamBlue"))) == before);
    }
    SUBCASE("participants are inserted before the hypersimplex") {
        Hypernetwork h;
        insert_into(h, hs_of(hn(team), "TeamBlue"));
        CHECK(h.insertion_order() == std::vector<ElementId>{ElementId("Commander"), ElementId("Medic1"),
                                                           ElementId("Medic2"), ElementId("TeamBlue")});
    }
    SUBCASE("arity violation becomes a SameName conflict") {
        Hypernetwork h = hn(team);
        Hypersimplex extra = hs_of(h, "TeamBlue");
        extra.participants.emplace_back("Extra");
        const Hypersimplex original = hs_of(h, "TeamBlue");
        const InsertStep step = insert_into(h, extra);
        CHECK(step.outcome == InsertOutcome::Conflict);
        CHECK(step.rule == Rule::A4);
        const Hypersimplex& marker = hs_of(h, "TeamBlue");
        REQUIRE(marker.is_conflict());
        CHECK(*marker.conflict->left == Element(original));
        CHECK(*marker.conflict->right == Element(extra));
        CHECK(validate(h).ok());
        CHECK(h.find(ElementId("Extra")) == nullptr);
    }
    SUBCASE("hypersimplex replaces a bare vertex") {
        Hypernetwork h = hn("vertex Patient\n");
        const Hypersimplex visit = hs_of(hn("alpha Patient = <Patient2, Clinician, Time ; R_visit>\n"), "Patient");
        const InsertStep step = insert_into(h, visit);
        CHECK(step.outcome == InsertOutcome::Promoted);
        CHECK(hs_of(h, "Patient") == visit);
        CHECK(h.insertion_order().front() == ElementId("Patient"));
        CHECK(validate(h).ok());
    }
    SUBCASE("bare vertex does not demote a hypersimplex") {
        Hypernetwork h = hn(team);
        CHECK(insert_into(h, Vertex{ElementId("TeamBlue")}).outcome == InsertOutcome::Ignored);
        CHECK(is_hypersimplex(*h.find(ElementId("TeamBlue"))));
    }
    SUBCASE("compatible beta hypersimplices unify") {
        Hypernetwork h = hn("boundary b\nbeta Kind = {Car, Van ; R_isA} @ b\n");
        const Hypersimplex more = hs_of(hn("boundary c\nbeta Kind = {Van, Truck ; R_isA} @ c\n"), "Kind");
        h.boundaries().add({ElementId("c"), false});
        CHECK(insert_into(h, more).outcome == InsertOutcome::Unified);
        const Hypersimplex& kind = hs_of(h, "Kind");
        CHECK(kind.participants == std::vector<ElementId>{ElementId("Car"), ElementId("Van"), ElementId("Truck")});
        CHECK(kind.relation.arity() == 3);
        CHECK(kind.tags == IdSet{ElementId("b"), ElementId("c")});
        CHECK(validate(h).ok());
    }
    SUBCASE("aggregation mismatch is an A3 conflict") {
        Hypernetwork h = hn("alpha K = <A, B ; R>\n");
        const InsertStep step = insert_into(h, hs_of(hn("beta K = {A, B ; R}\n"), "K"));
        CHECK(step.outcome == InsertOutcome::Conflict);
        CHECK(step.rule == Rule::A3);
    }
    SUBCASE("relation mismatch is an A4 conflict") {
        Hypernetwork h = hn("beta K = {A, B ; R}\n");
        const InsertStep step = insert_into(h, hs_of(hn("beta K = {A, B ; S}\n"), "K"));
        CHECK(step.outcome == InsertOutcome::Conflict);
        CHECK(step.rule == Rule::A4);
    }
    SUBCASE("alpha participant difference is a conflict") {
        Hypernetwork h = hn("alpha K = <A, B ; R>\n");
        CHECK(insert_into(h, hs_of(hn("alpha K = <B, A ; R>\n"), "K")).outcome == InsertOutcome::Conflict);
    }
    SUBCASE("unregistered tag on a new hypersimplex") {
        Hypernetwork h;
        Hypersimplex hs = hs_of(hn("alpha K = <A ; R>\n"), "K");
        hs.tags = {ElementId("b_Missing")};
        const InsertStep step = insert_into(h, hs);
        CHECK(step.outcome == InsertOutcome::Conflict);
        CHECK(step.rule == Rule::A5);
        CHECK(hs_of(h, "K").tags.empty());
        CHECK(validate(h).ok());
    }
    SUBCASE("anti-vertex participants and declarations") {
        Hypernetwork h;
        insert_into(h, hs_of(hn("alpha W = <W1, ~Spare ; R>\n"), "W"));
        REQUIRE(h.find(ElementId("~Spare")));
        CHECK(is_anti(*h.find(ElementId("~Spare"))));
        CHECK(insert_into(h, AntiVertex{ElementId("Spare")}).outcome == InsertOutcome::Ignored);
        CHECK(insert_into(h, AntiVertex{ElementId("Other")}).outcome == InsertOutcome::Inserted);
    }
    SUBCASE("malformed identifiers are rejected") {
        Hypernetwork h;
        Hypersimplex hs = hs_of(hn("alpha K = <A ; R>\n"), "K");
        hs.id = ElementId("~K");
        CHECK(insert_into(h, hs).outcome == InsertOutcome::Rejected);
        CHECK(insert_into(h, Vertex{ElementId("~V")}).outcome == InsertOutcome::Rejected);
        CHECK(insert_into(h, Vertex{ElementId("a b")}).outcome == InsertOutcome::Rejected);
        CHECK(h.empty());
    }
}

TEST_CASE("merge") {
    const Hypernetwork ops = data("ops.hn");
    const Hypernetwork clinical = data("clinical.hn");

    const Hypernetwork merged = merge(ops, clinical);
    CHECK(hypersimplex_ids(merged) == std::set<std::string>{"IncidentA", "TeamBlue", "TriageTent", "PatientClass"});
    CHECK(canonical(merged) == test::slurp("merged.golden.hn"));

    CHECK(canonical(merge(ops, Hypernetwork{})) == canonical(ops));
    CHECK(canonical(merge(Hypernetwork{}, ops)) == canonical(ops));
    CHECK(canonical(merge(ops, ops)) == canonical(ops));

    SUBCASE("boundary registry is a left-biased union") {
        const Hypernetwork a = hn("boundary b percolating\n");
        const Hypernetwork b = hn("boundary b\nboundary c\n");
        const Hypernetwork m = merge(a, b);
        CHECK(m.boundaries().find(ElementId("b"))->percolating);
        CHECK(m.boundaries().contains(ElementId("c")));
    }
    SUBCASE("execution order matters") {
        const Hypernetwork a = hn("alpha T = <A, B ; R>\n");
        const Hypernetwork b = hn("alpha T = <B, A ; R>\n");
        CHECK(canonical(merge(a, b)) != canonical(merge(b, a)));
    }
}

TEST_CASE("meet") {
    const Hypernetwork common = meet(data("car_van.hn"), data("car_truck.hn"));
    CHECK(canonical(common) == canonical(data("car.hn")));
    CHECK(canonical(common) == "vertex Car\nbeta Vehicle = {Car ; R_isA}\n");

    const Hypernetwork ops = data("ops.hn");
    CHECK(meet(ops, Hypernetwork{}).empty());
    CHECK(meet(Hypernetwork{}, ops).empty());
    CHECK(canonical(meet(ops, ops)) == canonical(ops));

    SUBCASE("shared structure of the two subsystem views") {
        const Hypernetwork shared = meet(ops, data("clinical.hn"));
        for (const char* id : {"Commander", "Medic1", "HospitalX", "IncidentA"}) CHECK(shared.contains(ElementId(id)));
        CHECK_FALSE(shared.contains(ElementId("TeamBlue")));
        CHECK_FALSE(shared.contains(ElementId("Medic2")));
    }
    SUBCASE("empty participant intersection gives nothing") {
        CHECK(meet(hn("beta K = {A ; R}\n"), hn("beta K = {B ; R}\n")).empty());
    }
    SUBCASE("overlap carries both tag sets") {
        const Hypernetwork a = hn("boundary x\nbeta K = {A, B ; R} @ x\n");
        const Hypernetwork b = hn("boundary y\nbeta K = {B, C ; R} @ y\n");
        const Hypernetwork m = meet(a, b);
        CHECK(hs_of(m, "K").tags == IdSet{ElementId("x"), ElementId("y")});
        CHECK(validate(m).ok());
    }
    SUBCASE("alpha requires equal participant sequences") {
        CHECK_FALSE(meet(hn("alpha K = <A, B ; R>\n"), hn("alpha K = <B, A ; R>\n")).contains(ElementId("K")));
    }
    SUBCASE("anti-vertices are retained by id") {
        CHECK(ids(meet(hn("anti X\nvertex Y\n"), hn("anti X\n"))) == std::set<std::string>{"~X"});
    }
}

TEST_CASE("difference") {
    const Hypernetwork rest = difference(data("car_van.hn"), data("car.hn"));
    CHECK(canonical(rest) == "vertex Van\nbeta Vehicle = {Van ; R_isA}\n");

    const Hypernetwork ops = data("ops.hn");
    CHECK(canonical(difference(ops, Hypernetwork{})) == canonical(ops));
    CHECK(difference(ops, ops).empty());
    CHECK(difference(difference(ops, ops), ops).empty());

    SUBCASE("operations-only structure") {
        const Hypernetwork only = difference(ops, data("clinical.hn"));
        CHECK(only.contains(ElementId("TeamBlue")));
        CHECK(only.contains(ElementId("Medic2")));
        CHECK_FALSE(only.contains(ElementId("IncidentA")));
        // Commander is shared, but TeamBlue still needs it.
        CHECK(only.contains(ElementId("Commander")));
        CHECK(validate(only).ok());
    }
    SUBCASE("partial alpha overlap is incomparable and retained") {
        const Hypernetwork a = hn("alpha K = <A, B ; R>\n");
        CHECK(hs_of(difference(a, hn("alpha K = <B, A ; R>\n")), "K") == hs_of(a, "K"));
    }
}

namespace {

// Independent set-subtraction model of difference on beta-only operands:
// id -> participant set, vertices mapped to an empty set.
using Flat = std::map<std::string, std::set<std::string>>;

Flat flatten(const Hypernetwork& h) {
    Flat out;
    for (const auto& e : h.elements()) {
        auto& ps = out[id_of(e).str()];
        if (const auto* hs = as_hypersimplex(e))
            for (const auto& p : hs->participants) ps.insert(p.str());
    }
    return out;
}

Flat oracle_difference(const Hypernetwork& h, const Hypernetwork& h1) {
    const Flat a = flatten(h), b = flatten(h1);
    Flat kept;
    for (const auto& e : h.elements()) {
        const std::string id = id_of(e).str();
        const Element* other = h1.find(id_of(e));
        const bool same_kind = other && other->index() == e.index();
        if (!is_hypersimplex(e)) {
            if (!same_kind) kept[id] = {};
            continue;
        }
        const auto& hs = std::get<Hypersimplex>(e);
        const auto* ohs = same_kind ? as_hypersimplex(*other) : nullptr;
        if (!ohs || ohs->relation.symbol != hs.relation.symbol) {
            kept[id] = a.at(id);
            continue;
        }
        std::set<std::string> left;
        for (const auto& p : a.at(id))
            if (!b.at(id).count(p)) left.insert(p);
        if (!left.empty()) kept[id] = left;
    }
    // Pull referenced participants back from h.
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [id, ps] : Flat(kept))
            for (const auto& p : ps)
                if (!kept.count(p)) {
                    kept[p] = a.at(p);
                    grew = true;
                }
    }
    return kept;
}

} // namespace

TEST_CASE("difference matches set subtraction on beta-only models") {
    testkit::GenConfig cfg;
    cfg.alpha_beta_ratio = 0.0;
    cfg.max_vertices = 3;
    cfg.max_hypersimplices = 2;
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        cfg.seed = seed;
        const Hypernetwork h = testkit::gen_valid(cfg);
        cfg.seed = seed + 5000;
        const Hypernetwork h1 = testkit::gen_valid(cfg);
        if (h.size() > 5 || h1.size() > 5) continue;
        ++compared;
        const Hypernetwork d = difference(h, h1);
        CHECK(flatten(d) == oracle_difference(h, h1));
        CHECK(canonical(difference(d, h1)) == canonical(d));
        CHECK(difference(difference(h, h), h).empty());
    }
    CHECK(compared > 100);
}

TEST_CASE("prune") {
    const Hypernetwork merged = data("merged.hn");

    SUBCASE("standing down UnitRed") {
        const Hypernetwork p = prune(merged, selector({"v:UnitRed"}));
        const Hypersimplex& inc = hs_of(p, "IncidentA");
        CHECK(inc.participants[2] == ElementId("~UnitRed"));
        CHECK(inc.tags == hs_of(merged, "IncidentA").tags);
        CHECK_FALSE(p.contains(ElementId("UnitRed")));
        for (const char* id : {"TeamBlue", "TriageTent", "PatientClass", "Commander"})
            CHECK(*p.find(ElementId(id)) == *merged.find(ElementId(id)));
        CHECK(validate(p).ok());
    }
    SUBCASE("identity and idempotence") {
        CHECK(canonical(prune(merged, {})) == canonical(merged));
        const auto s = selector({"v:UnitRed", "hs:TeamBlue"});
        const Hypernetwork once = prune(merged, s);
        CHECK(canonical(prune(once, s, MissingItems::Ignore)) == canonical(once));
    }
    SUBCASE("all instances of a relation") {
        const Hypernetwork h = data("emergency.hn");
        auto count = [](const Hypernetwork& x) {
            return std::count_if(x.elements().begin(), x.elements().end(), [](const Element& e) {
                const auto* hs = as_hypersimplex(e);
                return hs && hs->relation.symbol == "R_Team";
            });
        };
        CHECK(count(h) == 1);
        const Hypernetwork p = prune(h, selector({"rel:R_Team"}));
        CHECK(count(p) == 0);
        CHECK_FALSE(p.contains(ElementId("Medic2")));  // lost its only container
        CHECK(p.contains(ElementId("Medic1")));        // still inside TriageTent
    }
    SUBCASE("all elements carrying a boundary") {
        const Hypernetwork p = prune(data("emergency.hn"), selector({"b:b_Logistics"}));
        CHECK(hypersimplex_ids(p) == std::set<std::string>{"IncidentA", "TeamBlue", "Rank"});
        CHECK_FALSE(p.contains(ElementId("TentFrame")));
        CHECK(p.contains(ElementId("Medic1")));
        CHECK(p.boundaries().contains(ElementId("b_Logistics")));
    }
    SUBCASE("top-level hypersimplices survive") {
        const Hypernetwork p = prune(data("emergency.hn"), selector({"hs:TeamBlue"}));
        CHECK(p.contains(ElementId("Rank")));
        CHECK(p.contains(ElementId("IncidentA")));
        CHECK_FALSE(p.contains(ElementId("TeamBlue")));
    }
    SUBCASE("cascading deletion of fully excluded structure") {
        const Hypernetwork h = hn("alpha Inner = <A ; R>\nalpha Outer = <Inner, B ; S>\n");
        const Hypernetwork p = prune(h, selector({"v:A"}));
        // Inner becomes <~A> and goes; Outer is left with a dangling role and
        // goes too; B and ~A then lose their only containers.
        CHECK(p.empty());
        CHECK(ids(prune(h, selector({"v:B"}))) == std::set<std::string>{"A", "Inner", "Outer", "~B"});
    }
    SUBCASE("unknown selector") {
        CHECK_THROWS_AS(prune(merged, selector({"v:Nobody"})), UnknownSelector);
        CHECK_THROWS_AS(prune(merged, selector({"rel:R_None"})), UnknownSelector);
        CHECK_THROWS_AS(prune(merged, selector({"b:b_None"})), UnknownSelector);
        CHECK_THROWS_AS(prune(merged, selector({"hs:Commander"})), UnknownSelector);
        CHECK_NOTHROW(prune(merged, selector({"v:Nobody"}), MissingItems::Ignore));
    }
    SUBCASE("selector syntax") {
        CHECK(SelectorItem::parse("v:~X").name == "~X");
        CHECK(SelectorItem::parse("rel:R").str() == "rel:R");
        CHECK_THROWS_AS(SelectorItem::parse("X"), std::invalid_argument);
        CHECK_THROWS_AS(SelectorItem::parse("q:X"), std::invalid_argument);
        CHECK_THROWS_AS(SelectorItem::parse("hs:~X"), std::invalid_argument);
    }
}

TEST_CASE("prune monotonicity") {
    SUBCASE("holds for deletion-only selectors") {
        const Hypernetwork h = data("emergency.hn");
        const Hypernetwork small = prune(h, selector({"rel:R_Team"}));
        const Hypernetwork big = prune(h, selector({"rel:R_Team", "b:b_Logistics"}));
        CHECK(is_sub_hypernetwork(big, small));
    }
    SUBCASE("anti-vertex substitution is not a sub-hypernetwork") {
        // Replacing X by ~X rewrites P, so H - {v:X} is not below H - {}.
        const Hypernetwork h = hn("alpha P = <X, Y ; R>\n");
        const Hypernetwork p = prune(h, selector({"v:X"}));
        CHECK(p.contains(ElementId("~X")));
        CHECK_FALSE(is_sub_hypernetwork(p, prune(h, {})));
    }
}

TEST_CASE("split") {
    const Hypernetwork h = data("emergency.hn");

    SUBCASE("medical projection") {
        const Hypernetwork p = split(h, SplitCriterion::boundary(ElementId("b_Medical")));
        CHECK(hypersimplex_ids(p) == std::set<std::string>{"IncidentA", "TeamBlue", "TriageTent"});
        for (const char* id : {"Medic1", "Medic2", "Casualties", "HospitalX"}) CHECK(p.contains(ElementId(id)));
        CHECK_FALSE(p.contains(ElementId("Rank")));
        CHECK_FALSE(p.contains(ElementId("Deputy")));
        CHECK(is_sub_hypernetwork(p, h));
        CHECK(canonical(p) == test::slurp("medical_projection.hn"));
        CHECK(validate(p).ok());
    }
    SUBCASE("universal projection and idempotence") {
        CHECK(canonical(split(h, SplitCriterion::all())) == canonical(h));
        const auto c = SplitCriterion::boundary(ElementId("b_Ops"));
        const Hypernetwork once = split(h, c);
        CHECK(canonical(split(once, c)) == canonical(once));
    }
    SUBCASE("split never adds tags") {
        const Hypernetwork p = split(h, SplitCriterion::boundary(ElementId("b_Logistics")));
        CHECK(hs_of(p, "TriageTent").tags == hs_of(h, "TriageTent").tags);
        CHECK(p.find(ElementId("Medic1")) != nullptr);
    }
    SUBCASE("seed closure") {
        // Medic1 reaches TeamBlue and TriageTent; Commander then reaches
        // IncidentA and Rank, which covers the whole model.
        const Hypernetwork p = split(h, SplitCriterion::seeds({ElementId("Medic1")}));
        CHECK(p.contains(ElementId("TeamBlue")));
        CHECK(p.contains(ElementId("TriageTent")));
        CHECK(ids(p) == ids(h));

        const Hypernetwork lone = split(hn("vertex A\nalpha P = <B ; R>\n"), SplitCriterion::seeds({ElementId("A")}));
        CHECK(ids(lone) == std::set<std::string>{"A"});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(split(h, SplitCriterion::boundary(ElementId("b_None"))), UnknownBoundary);
        CHECK_THROWS_AS(split(h, SplitCriterion::seeds({ElementId("Nobody")})), UnknownSeed);
        CHECK_THROWS_AS(split(h, SplitCriterion::seeds({ElementId("TeamBlue")})), UnknownSeed);
    }
}
