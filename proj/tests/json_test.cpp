#include <gtest/gtest.h>

#include "duval/json.hpp"

using namespace duval;

TEST(Fraction, ParseAndPrint) {
    EXPECT_EQ(parse_fraction("5/6"), Rational(5, 6));
    EXPECT_EQ(parse_fraction("10/12"), Rational(5, 6));
    EXPECT_EQ(parse_fraction("-3"), Rational(-3));
    for (const char* bad : {"", "1/0", "a/b", "1/2/3", "0.5"}) EXPECT_THROW(parse_fraction(bad), SchemaError) << bad;
    for (const auto& c : target_classes()) EXPECT_EQ(parse_fraction(to_fraction_string(c.tlct_value)), c.tlct_value);
}

TEST(Json, MatrixAndCycleShapes) {
    const auto t = parse_dynkin("A2");
    EXPECT_EQ(matrix_to_json(t, intersection_matrix(t)), json::parse(R"({"type":"A2","matrix":[[-2,1],[1,-2]]})"));
    EXPECT_EQ(json(fundamental_cycle(parse_dynkin("E8"))),
              json::parse(R"({"type":"E8","coeffs":[2,3,4,5,6,4,2,3]})"));
    EXPECT_EQ(json(attachment_vector(parse_dynkin("A3"))), json::parse(R"({"type":"A3","d":[1,0,1]})"));
}

TEST(Json, CycleRoundTrip) {
    for (const auto& t : all_dynkin_types()) {
        const auto c = fundamental_cycle(t);
        const auto back = cycle_from_json(json::parse(json(c).dump()));
        EXPECT_EQ(back.dynkin, c.dynkin);
        EXPECT_EQ(back.coeffs, c.coeffs);
    }
}

TEST(Json, ConfigurationRoundTrip) {
    for (const auto& c : all_configurations()) {
        const json j = c;
        const auto back = configuration_from_json(json::parse(j.dump()));
        EXPECT_EQ(json(back), j);
        EXPECT_EQ(lct_config(back), lct_config(c));
        EXPECT_EQ(kodaira_type(back), kodaira_type(c));
    }
}

TEST(Json, ConfigurationSchemaErrors) {
    EXPECT_THROW(configuration_from_json(json::parse(R"({"components":[],"incidence":[]})")), SchemaError);
    EXPECT_THROW(configuration_from_json(json::parse(R"({"type":"A1","variant":"sideways","components":[],"incidence":[]})")),
                 SchemaError);
    EXPECT_THROW(configuration_from_json(json::parse(
                     R"({"type":null,"smooth":"nodal","components":[{"id":0,"multiplicity":1,"kind":"weird"}],"incidence":[]})")),
                 SchemaError);
}

TEST(Json, SurfaceRoundTrip) {
    for (const auto& s : all_valid_specs()) EXPECT_EQ(surface_from_json(json::parse(json(s).dump())), s);
    const auto s = surface_from_json(json::parse(R"({"singularities":["E7","A1"]})"));
    EXPECT_EQ(s.cusp, CuspData::None);
    EXPECT_THROW(surface_from_json(json::parse(R"({"singularities":"E7"})")), SchemaError);
    EXPECT_THROW(surface_from_json(json::parse(R"({"cusp":"none"})")), SchemaError);
    EXPECT_THROW(surface_from_json(json::parse(R"({"singularities":["B2"]})")), MalformedLabel);
}

TEST(Json, TlctAndValidation) {
    const SurfaceSpec s(parse_singularity_list("E7,A1"), CuspData::None);
    EXPECT_EQ(json(tlct(s)), json::parse(R"({"tlct":"1/4","kodaira":"III*"})"));
    const auto bad = json(validate(SurfaceSpec(parse_singularity_list("E6,A1,A1"), CuspData::None)));
    EXPECT_EQ(bad.at("valid"), false);
    ASSERT_EQ(bad.at("violations").size(), 1U);
    EXPECT_EQ(bad.at("violations")[0].at("clause"), "d");
}

TEST(Json, FibrationParsing) {
    const auto f = fibration_from_json_text(R"({"singularities":["A2"],"cusp":"A2","assumptions":{"surjectivity":false}})");
    EXPECT_EQ(f.fiber.cusp, CuspData::AtA2);
    EXPECT_TRUE(f.assumptions.special_fiber_plt);
    EXPECT_FALSE(f.assumptions.surjectivity);
    EXPECT_EQ(fibration_from_json(json::parse(json(f).dump())), f);
    EXPECT_THROW(fibration_from_json_text("{not json"), SchemaError);
    EXPECT_THROW(fibration_from_json_text(R"({"singularities":[],"assumptions":{"luck":true}})"), SchemaError);
    EXPECT_THROW(fibration_from_json_text(R"({"singularities":[],"assumptions":{"surjectivity":"yes"}})"), SchemaError);
}

TEST(Json, VerdictRoundTrip) {
    const FibrationSpec x{SurfaceSpec(parse_singularity_list("A2"), CuspData::AtA2), {}};
    const FibrationSpec y{SurfaceSpec(parse_singularity_list("E6"), CuspData::None), {}};
    const auto v = rigidity_gate(x, y);
    const json j = v;
    EXPECT_EQ(j.at("outcome"), "inconclusive");
    EXPECT_EQ(j.at("tlct_sum"), "1");
    ASSERT_EQ(j.at("targets").size(), 3U);
    EXPECT_EQ(j.at("targets")[2].at("class"), "E6");
    const auto back = verdict_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.outcome, v.outcome);
    EXPECT_EQ(back.tlct_sum, v.tlct_sum);
    EXPECT_EQ(back.deficit, v.deficit);
    EXPECT_EQ(back.targets, v.targets);

    EXPECT_THROW(verdict_from_json(json::parse(R"({"outcome":"maybe","tlct_sum":"1"})")), SchemaError);
    EXPECT_THROW(target_from_json(json::parse(R"({"class":"E6","tlct":"1/2"})")), SchemaError);
}
