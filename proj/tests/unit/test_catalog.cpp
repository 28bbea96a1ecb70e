#include <cohann/catalog.hpp>
#include <cohann/errors.hpp>
#include <cohann/serialize.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace cohann;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("cohann_test_" + name);
}

std::string read_all(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(AnCatalog, EntryCounts) {
    Catalog c2 = a_n_catalog(2);
    ASSERT_EQ(c2.entries.size(), 2u);
    EXPECT_EQ(c2.entries[0].label(), "A_2:1");
    EXPECT_EQ(c2.entries[1].label(), "A_2:2");
    EXPECT_EQ(c2.trivial_entries.size(), 2u);
    EXPECT_TRUE(c2.complete);
    EXPECT_EQ(a_n_catalog(1).entries.size(), 1u);
    EXPECT_THROW(a_n_catalog(0), std::invalid_argument);
}

TEST(AnCatalog, DistinctAndSelfPartnered) {
    for (unsigned n = 1; n <= 6; ++n) {
        Catalog c = a_n_catalog(n);
        for (std::size_t i = 0; i < c.entries.size(); ++i) {
            EXPECT_EQ(c.entries[i].a(), c.entries[i].b());
            EXPECT_EQ(c.entries[i].f(), c.f);
            for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(c.entries[i].a() == c.entries[j].a());
        }
    }
}

TEST(DeterminantalCatalog, Range) {
    EXPECT_EQ(determinantal_catalog(2).entries.size(), 1u);
    EXPECT_FALSE(determinantal_catalog(3).complete);
    EXPECT_EQ(determinantal_catalog(3).entries.front().size(), 3u);
    EXPECT_THROW(determinantal_catalog(4), std::invalid_argument);
}

TEST(CatalogFile, RoundTrip) {
    auto path = temp_file("a4.json");
    Catalog c = a_n_catalog(4);
    save_catalog(c, path);
    Catalog back = load_catalog(path);
    EXPECT_EQ(back, c);
    auto again = temp_file("a4_again.json");
    save_catalog(back, again);
    EXPECT_EQ(read_all(path), read_all(again));
    std::filesystem::remove(path);
    std::filesystem::remove(again);
}

TEST(CatalogFile, EmptyEntriesRejected) {
    Json j = catalog_to_json(a_n_catalog(2));
    j["entries"] = Json::array();
    EXPECT_THROW(catalog_from_json(j), ValidationError);
}

TEST(CatalogFile, CorruptProductNamesLabel) {
    Json j = catalog_to_json(a_n_catalog(3));
    j["entries"][1]["A"][0][0] = "x+y";
    try {
        catalog_from_json(j);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("A_3:2"), std::string::npos) << e.what();
    }
}

TEST(CatalogFile, MalformedJson) {
    auto path = temp_file("broken.json");
    {
        std::ofstream out(path);
        out << "{\"f\": \"x^2+y^3\", ";
    }
    EXPECT_THROW(load_catalog(path), ParseError);
    std::filesystem::remove(path);
    EXPECT_THROW(load_catalog(temp_file("missing.json")), ParseError);
}

TEST(CatalogFile, EntryOverDifferentPolynomial) {
    Json j = catalog_to_json(a_n_catalog(2));
    j["entries"].push_back(mf_to_json(a_n_factorization(3, 1)));
    EXPECT_THROW(catalog_from_json(j), ValidationError);
}

TEST(MfJson, RoundTripAndAdjugate) {
    auto m = a_n_factorization(4, 3);
    EXPECT_EQ(mf_from_json(mf_to_json(m)), m);
    Json det = Json::object();
    det["vars"] = {"a", "b", "c", "d"};
    det["f"] = "a*d-b*c";
    det["A"] = Json::array({Json::array({"a", "b"}), Json::array({"c", "d"})});
    det["B"] = "adjugate";
    det["label"] = "det";
    auto d = mf_from_json(det);
    EXPECT_EQ(d.b()(0, 0).to_string(), "d");
    EXPECT_EQ(d.b()(0, 1).to_string(), "-b");
    det["f"] = "a*d+b*c";
    EXPECT_THROW(mf_from_json(det), ValidationError);
    det["f"] = "a*d+";
    EXPECT_THROW(mf_from_json(det), ParseError);
}

TEST(MfJson, MissingFields) {
    Json j = mf_to_json(a_n_factorization(2, 1));
    j.erase("A");
    EXPECT_THROW(mf_from_json(j), ParseError);
}

TEST(IdealJson, Shape) {
    Catalog c = a_n_catalog(2);
    auto alg = hypersurface_algebra(c.f, 10);
    Json j = ideal_to_json(make_ideal(alg, {parse_polynomial("x", c.vars()), parse_polynomial("y", c.vars())}));
    EXPECT_EQ(j["generators"], Json({"x", "y"}));
    EXPECT_EQ(j["dim_quotient"], 1);
    EXPECT_EQ(j["truncation"], 10);
    EXPECT_EQ(dump(j), dump(j));
    EXPECT_EQ(dump(j).back(), '\n');
}
