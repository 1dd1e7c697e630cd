#include "gpc/constructions.hpp"
#include "gpc/error.hpp"
#include "gpc/io.hpp"
#include "gpc/label.hpp"
#include "gpc/powers.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>

using namespace gpc;

TEST(Label, RenderForms) {
    const auto u = VertexLabel::atom("u");
    const auto v = VertexLabel::atom("v");
    EXPECT_EQ(VertexLabel::sub(u, v, 2).render(), "(u,v)_2");
    EXPECT_EQ(VertexLabel::sets({{3, 1}, {}, {2, 2}}).render(), "{1,3}|{}|{2}");
    EXPECT_EQ(VertexLabel::pair(u, VertexLabel::sub(u, v, 1)).render(), "<u,(u,v)_1>");
}

TEST(Label, ReservedCharactersAreEscaped) {
    const auto a = VertexLabel::atom("a,b(c)");
    EXPECT_EQ(a.render(), "a\\,b\\(c\\)");
    const auto back = VertexLabel::parse(a.render());
    ASSERT_TRUE(back.is_atom());
    EXPECT_EQ(std::get<VertexLabel::Atom>(back.value()).text, "a,b(c)");
}

TEST(Label, ParseRoundTrips) {
    const auto x = VertexLabel::atom("x|y");
    const auto nested = VertexLabel::sub(VertexLabel::sub(x, VertexLabel::atom(7), 1), VertexLabel::sets({{1}, {2, 3}}), 4);
    for (const auto& label : {x, nested, VertexLabel::pair(VertexLabel::atom("~1"), nested), VertexLabel::sets({{}})}) {
        const auto back = VertexLabel::parse(label.render());
        EXPECT_EQ(back.render(), label.render());
        EXPECT_EQ(back.value().index(), label.value().index());
    }
}

TEST(Label, UnstructuredTextIsAnAtom) {
    EXPECT_TRUE(VertexLabel::parse("hello").is_atom());
    EXPECT_TRUE(VertexLabel::parse("12").is_atom());
}

TEST(Json, DocumentShape) {
    const auto doc = nlohmann::json::parse(to_json(cycle(3)));
    EXPECT_EQ(doc["format"], "gpc-graph-v1");
    EXPECT_EQ(doc["vertices"], nlohmann::json::parse(R"(["0","1","2"])"));
    EXPECT_EQ(doc["edges"], nlohmann::json::parse(R"([["0","1"],["0","2"],["1","2"]])"));
}

TEST(Json, RoundTripKeepsStructuredLabels) {
    for (const auto& g : {subdivide(cycle(5), 3), helical(4, 1, 2), power(cycle(3), 2)}) {
        const auto back = from_json(to_json(g, 2));
        EXPECT_EQ(back, g);
        for (VertexId v = 0; v < g.order(); ++v)
            EXPECT_EQ(back.label(v).value().index(), g.label(v).value().index());
    }
}

TEST(Json, MalformedInputIsRejected) {
    EXPECT_THROW(from_json("not json"), FormatError);
    EXPECT_THROW(from_json(R"({"format":"other","vertices":[],"edges":[]})"), FormatError);
    EXPECT_THROW(from_json(R"({"format":"gpc-graph-v1","vertices":["a"],"edges":[["a","b"]]})"), FormatError);
    EXPECT_THROW(from_json(R"({"format":"gpc-graph-v1","vertices":["a","a"],"edges":[]})"), FormatError);
    EXPECT_THROW(from_json(R"({"format":"gpc-graph-v1","vertices":["a"],"edges":[["a"]]})"), FormatError);
}

TEST(Json, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "gpc_io_test.json";
    write_graph(petersen(), path);
    EXPECT_EQ(read_graph(path), petersen());
    std::filesystem::remove(path);
    EXPECT_THROW(read_graph(path), Error);
}

TEST(Dot, StableAndLoopAware) {
    const auto dot = to_dot(power(complete(3), 2), "K");
    EXPECT_EQ(dot.rfind("graph \"K\" {", 0), 0u);
    EXPECT_NE(dot.find("\"0\" -- \"0\";"), std::string::npos);
    EXPECT_EQ(dot, to_dot(power(complete(3), 2), "K"));
}
