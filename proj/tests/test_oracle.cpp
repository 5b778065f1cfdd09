#include <algorithm>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "markovhull/errors.hpp"
#include "markovhull/oracle.hpp"

using namespace markovhull;
using fixtures::el;
using fixtures::w;

namespace {

bool word_is_prefix(const Word& p, const Word& word) {
    return p.size() <= word.size() && std::equal(p.begin(), p.end(), word.begin());
}

} // namespace

TEST_CASE("of_word lists exactly the legal continuations") {
    auto T = fixtures::t1();
    const auto m = TruncatedMap::of_word(T, w(T, "cb"), 3);
    CHECK(m.complete_to() == 3);
    CHECK(m.delta() == 2);
    for (const auto& [u, v] : m.pairs()) {
        CHECK(v == w(T, "cb") + u);
        CHECK(is_legal(*T, v));
        CHECK(static_cast<int>(u.size()) <= 3);
    }
    // every legal input of length <= 3 appears
    long expected = 0;
    for (const auto& word : enumerate_language(*T, 3))
        if (is_legal(*T, w(T, "cb") + word)) ++expected;
    CHECK(static_cast<long>(m.size()) == expected);

    CHECK_THROWS_AS(TruncatedMap::of_word(T, {}, 3), input_error);
    CHECK_THROWS_AS(TruncatedMap::of_word(T, w(T, "bb"), 3), input_error);
}

TEST_CASE("dump renders pairs with letter names in shortlex order") {
    auto T = fixtures::t1();
    const auto lines = TruncatedMap::of_word(T, w(T, "c"), 1).dump();
    // c is followed by b alone
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == "b -> cb");
}

TEST_CASE("realize agrees with of_word on every generator") {
    auto T = fixtures::t1();
    for (const auto& word : enumerate_language(*T, 3)) {
        const auto direct = TruncatedMap::of_word(T, word, 4);
        const auto viaElement =
            TruncatedMap::realize(CanonicalElement::generator(T, word), 4);
        CHECK(direct.pairs() == viaElement.pairs());
        CHECK(agree_on_window(direct, viaElement));
    }
}

TEST_CASE("realize of an idempotent fixes its domain") {
    auto T = fixtures::t1();
    const auto m = TruncatedMap::realize(el(T, "-|a,c|-"), 3);
    CHECK(!m.empty());
    CHECK(m.delta() == 0);
    for (const auto& [u, v] : m.pairs()) {
        CHECK(u == v);
        CHECK((u[0] == 0 || u[0] == 2)); // starts inside {a, c}
    }
    CHECK(TruncatedMap::realize(CanonicalElement::zero(T), 5).empty());
    CHECK(TruncatedMap::realize(CanonicalElement::zero(T), 5).complete_to() == 5);
}

TEST_CASE("composition chases pairs and contracts the bound") {
    auto T = fixtures::t1();
    const auto f = TruncatedMap::of_word(T, w(T, "a"), 6);
    const auto g = TruncatedMap::of_word(T, w(T, "cb"), 6);
    const auto fg = compose(f, g);
    // inputs flow through g first; outputs gain both words
    for (const auto& [u, v] : fg.pairs()) CHECK(v == w(T, "acb") + u);
    CHECK(fg.delta() == 3);
    CHECK(fg.complete_to() == 4); // min(6, 6 - 2)
    CHECK(agree_on_window(fg, TruncatedMap::of_word(T, w(T, "acb"), 6)));

    // swapping the order prepends the words the other way round
    const auto gf = compose(g, f);
    CHECK(agree_on_window(gf, TruncatedMap::of_word(T, w(T, "cba"), 6)));

    CHECK_THROWS_AS(compose(f, TruncatedMap::of_word(fixtures::t2(), w(fixtures::t2(), "x"), 3)),
                    usage_error);
}

TEST_CASE("inversion swaps pairs and shifts the bound") {
    auto T = fixtures::t1();
    const auto m = TruncatedMap::of_word(T, w(T, "cb"), 4);
    const auto inv = invert(m);
    CHECK(inv.delta() == -2);
    CHECK(inv.complete_to() == 6);
    for (const auto& [u, v] : inv.pairs()) CHECK(word_is_prefix(w(T, "cb"), u));
    // round trip composes to the source idempotent's map
    const auto back = compose(inv, m);
    for (const auto& [u, v] : back.pairs()) CHECK(u == v);

    const auto empty = invert(TruncatedMap::realize(CanonicalElement::zero(T), 4));
    CHECK(empty.complete_to() == 0);
    CHECK(empty.empty());
}

TEST_CASE("agreement windows guard against vacuous comparisons") {
    auto T = fixtures::t1();
    const auto shallow = TruncatedMap::of_word(T, w(T, "a"), 0);
    CHECK(shallow.empty());
    CHECK_THROWS_AS(agree_on_window(shallow, shallow), depth_error);

    // maps that genuinely differ are caught inside the window
    const auto ma = TruncatedMap::of_word(T, w(T, "a"), 3);
    const auto mb = TruncatedMap::of_word(T, w(T, "b"), 3);
    CHECK(!agree_on_window(ma, mb));
    CHECK(agree_on_window(ma, ma));
}

TEST_CASE("equal_as_elements separates triples and respects depth") {
    auto T = fixtures::t1();
    const auto e = el(T, "c|b|c");
    const auto f = el(T, "-|b|-");
    // e only accepts inputs continuing c, f accepts anything starting with b
    CHECK_THROWS_AS(equal_as_elements(e, f, 1), depth_error);
    CHECK(!equal_as_elements(e, f, 2));
    CHECK(equal_as_elements(e, e, 2));
    CHECK(equal_as_elements(CanonicalElement::zero(T), CanonicalElement::zero(T), 0));
    CHECK(!equal_as_elements(e, CanonicalElement::zero(T), 2));

    // distinct canonical triples always denote distinct maps
    const auto pool = all_elements(T, 2);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            REQUIRE(!equal_as_elements(pool[i], pool[j], 3));
}

TEST_CASE("symbolic products match pair chasing everywhere up to length 3") {
    auto T = fixtures::t1();
    const int depth = 10;
    const auto words = enumerate_language(*T, 3);
    for (const auto& u : words) {
        const auto mu = TruncatedMap::of_word(T, u, depth);
        for (const auto& v : words) {
            const auto mv = TruncatedMap::of_word(T, v, depth);
            const auto gu = CanonicalElement::generator(T, u);
            const auto gv = CanonicalElement::generator(T, v);

            const auto prod = multiply(gu, gv);
            REQUIRE(agree_on_window(compose(mu, mv), TruncatedMap::realize(prod, depth)));
            // closed form: concatenation when legal, zero otherwise
            if (is_legal(*T, u + v))
                REQUIRE(prod == CanonicalElement::generator(T, u + v));
            else
                REQUIRE(prod.is_zero());

            const auto iprod = multiply(gu.inverse(), gv);
            REQUIRE(agree_on_window(compose(invert(mu), mv),
                                    TruncatedMap::realize(iprod, depth)));
            // closed form, branch by the prefix relation between u and v
            if (u == v)
                REQUIRE(iprod == gu.source());
            else if (word_is_prefix(u, v))
                REQUIRE(iprod == CanonicalElement::generator(T, v.substr(u.size())));
            else if (word_is_prefix(v, u))
                REQUIRE(iprod == CanonicalElement::generator(T, u.substr(v.size())).inverse());
            else
                REQUIRE(iprod.is_zero());
        }
    }
}

TEST_CASE("random products cross-validate on a second matrix") {
    auto T = fixtures::t2();
    const int depth = 10;
    const auto pool = all_elements(T, 3);
    std::size_t step = pool.size() / 60 + 1;
    for (std::size_t i = 0; i < pool.size(); i += step)
        for (std::size_t j = 0; j < pool.size(); j += step) {
            const auto& g = pool[i];
            const auto& h = pool[j];
            const auto composed =
                compose(TruncatedMap::realize(g, depth), TruncatedMap::realize(h, depth));
            REQUIRE(agree_on_window(composed,
                                    TruncatedMap::realize(multiply(g, h), depth)));
        }
}
