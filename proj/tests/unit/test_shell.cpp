#include <functional>

#include "doctest.h"
#include "quiverhom/error.hpp"
#include "quiverhom/homgor.hpp"
#include "quiverhom/shell.hpp"

using namespace qh;

namespace {

std::string error_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("every corpus algebra parses and survives a print/parse round trip") {
    for (const CorpusFile& f : corpus()) {
        if (f.name.size() < 4 || f.name.substr(f.name.size() - 4) != ".alg") continue;
        CAPTURE(f.name);
        AlgebraFile a = parse_algebra(f.text, f.name);
        AlgebraFile b = parse_algebra(print_algebra(a), "printed");
        CHECK(same_algebra(*a.algebra, *b.algebra));
        CHECK(a.algebra->dimension() == b.algebra->dimension());
        CHECK(a.name == b.name);
        CHECK(a.catalog.size() == b.catalog.size());
    }
}

TEST_CASE("parse errors carry the line number") {
    std::string bad_key = "vertices: 1 2\narrow: a 1 2\ncolour: red\ntruncated: 2\n";
    CHECK(error_message([&] { parse_algebra(bad_key, "f.alg"); }).find("f.alg:3") != std::string::npos);
    std::string bad_vertex = "vertices: 1 2\narrow: a 1 7\ntruncated: 2\n";
    CHECK(error_message([&] { parse_algebra(bad_vertex, "f.alg"); }).find("f.alg:2") != std::string::npos);
    std::string bad_path = "vertices: 1 2\narrow: a 1 2\narrow: b 2 1\nmonomial: a.a\n";
    CHECK(error_message([&] { parse_algebra(bad_path, "f.alg"); }).find("f.alg:4") != std::string::npos);
    std::string two_ideals = "vertices: 1\narrow: x 1 1\ntruncated: 2\nmonomial: x.x\n";
    CHECK_THROWS_AS(parse_algebra(two_ideals), Error);
    std::string duplicate = "vertices: 1\nvertices: 1\narrow: x 1 1\ntruncated: 2\n";
    CHECK(error_message([&] { parse_algebra(duplicate, "f.alg"); }).find("f.alg:2") != std::string::npos);
}

TEST_CASE("an infinite-dimensional monomial file is rejected") {
    std::string text = "vertices: 1\narrow: x 1 1\narrow: y 1 1\nmonomial: x.x\n";
    try {
        parse_algebra(text);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InfiniteDimensional);
    }
}

TEST_CASE("corpus facts") {
    AlgebraFile s3 = load_algebra("corpus:two_vertex");
    CHECK(s3.algebra->field().is_prime() == false);
    CHECK(s3.algebra->dimension() == 8);
    CHECK(load_algebra("corpus:two_vertex_literal").algebra->dimension() == 12);
    CHECK(load_algebra("corpus:loop_monomial").algebra->dimension() == 9);

    AlgebraFile inf = load_algebra("corpus:infinito");
    CHECK(inf.algebra->quiver().num_vertices() == 4);
    CHECK(inf.algebra->quiver().num_arrows() == 16);
    Representation P1 = projective_module(inf.algebra, 0);
    CHECK(P1.dims() == std::vector<std::size_t>{1, 4, 10, 0});
    CHECK_THROWS_AS(corpus_file("nope"), Error);
}

TEST_CASE("module expressions in the linear context") {
    AlgebraFile inf = load_algebra("corpus:infinito");
    Representation m = eval_representation(inf.algebra, "M_alpha(1,2)");
    CHECK(m.dims() == std::vector<std::size_t>{2, 7, 0, 0});
    CHECK(check_relations(m));
    CHECK(check_relations(eval_representation(inf.algebra, "M_beta(3,4)")));
    Representation sum = eval_representation(inf.algebra, "2*(simple(1)) + M_alpha(2,1)");
    CHECK(sum.dims() == std::vector<std::size_t>{2, 1, 4, 0});

    AlgebraFile s4 = load_algebra("corpus:loop_monomial");
    Representation gamma = eval_representation(s4.algebra, "path(gamma)");
    CHECK(gamma.dims() == std::vector<std::size_t>{1, 1});
    Representation r = eval_representation(s4.algebra, "rep{1:1, 2:1; alpha = [[1]]}");
    CHECK(r.dims() == std::vector<std::size_t>{1, 1});
    CHECK_THROWS_AS(eval_representation(s4.algebra, "rep{2:1; gamma = [[1]]}"), Error);
    CHECK_THROWS_AS(eval_representation(s4.algebra, "simple(9)"), Error);
    CHECK_THROWS_AS(eval_representation(s4.algebra, "simple(1) +"), Error);
}

TEST_CASE("module expressions in the path-module context") {
    AlgebraFile s4 = load_algebra("corpus:loop_monomial");
    ClassTable T(s4.algebra);
    const Quiver& q = s4.algebra->quiver();
    ModuleMultiset m = eval_multiset(T, "path(gamma) + 2*(simple(1))");
    ModuleMultiset expect = singleton(T.class_of(parse_path(q, "gamma")));
    add_to(expect, singleton(T.simple(0)), 2);
    CHECK(m == expect);
    CHECK_THROWS_AS(eval_multiset(T, "inj(1)"), Error);
}

TEST_CASE("ranges expand to every instance") {
    auto v = expand_ranges("M_alpha(1..2,3..4)");
    CHECK(v == std::vector<std::string>{"M_alpha(1,3)", "M_alpha(1,4)", "M_alpha(2,3)", "M_alpha(2,4)"});
    AlgebraFile inf = load_algebra("corpus:infinito");
    CHECK(build_catalog(inf).size() == 48);
}

TEST_CASE("splits parse by vertex name") {
    AlgebraFile fin = load_algebra("corpus:finito");
    auto [g, gb] = parse_split(fin.algebra->quiver(), corpus_file("finito_valid.split").text);
    CHECK(g == std::vector<VertexId>{2});
    CHECK(gb == std::vector<VertexId>{0, 1});
    CHECK_THROWS_AS(parse_split(fin.algebra->quiver(), "gamma: 1\ngamma_bar: 9\n"), Error);
}

TEST_CASE("field override keeps the ideal") {
    AlgebraFile fin = load_algebra("corpus:finito");
    AlgebraPtr p = with_field(*fin.algebra, Field::prime(32003));
    CHECK(p->dimension() == fin.algebra->dimension());
    CHECK_FALSE(same_algebra(*p, *fin.algebra));
}
