#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "rgg/codec.hpp"
#include "rgg/enumeration.hpp"
#include "rgg/errors.hpp"
#include "rgg/structure.hpp"

using namespace rgg;

namespace {

const OrderedGraph kRefGraph{10, {1, 2, 3, 3, 2, 2, 0, 1, 2}};

StructureCode code_from_strings(const std::string& a, const std::string& b) {
  StructureCode c;
  c.n = static_cast<int>(a.size());
  for (char ch : a) c.a.push_back(ch == '1');
  for (char ch : b) c.b.push_back(ch == '1');
  return c;
}

} // namespace

TEST_CASE("encode worked example") {
  CHECK(to_text(encode(kRefGraph)) == "1101100100\n0001111001\n");
  CHECK(to_text(encode(OrderedGraph{3, {1, 2}})) == "100\n001\n");
  CHECK(to_text(encode(OrderedGraph{3, {0, 0}})) == "111\n111\n");
}

TEST_CASE("decode worked example") {
  auto og = decode(code_from_strings("1101100100", "0001111001"));
  CHECK(og == kRefGraph);
  CHECK(maximal_cliques(og) ==
        CliqueCover{10, {{1, 4}, {2, 5}, {4, 6}, {5, 7}, {8, 10}}});

  CHECK(decode(code_from_strings("100", "001")) == OrderedGraph{3, {1, 2}});
}

TEST_CASE("decode rejects malformed codes") {
  CHECK_THROWS_AS(decode(code_from_strings("110", "001")), MalformedCodeError); // popcounts
  CHECK_THROWS_AS(decode(code_from_strings("010", "001")), MalformedCodeError); // a_1 unset
  CHECK_THROWS_AS(decode(code_from_strings("100", "010")), MalformedCodeError); // b_n unset
  CHECK_THROWS_AS(decode(code_from_strings("101000", "100001")),
                  MalformedCodeError); // induced cover {[1:1],[3:6]} has a gap
}

TEST_CASE("round trip over the full family") {
  for (int n = 1; n <= 12; ++n)
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      auto code = encode(og);
      CHECK(decode(code) == og);
      CHECK(parse(serialize(code)) == code);
      CHECK(from_text(to_text(code)) == code);
    });
}

TEST_CASE("binary layout") {
  auto bytes = serialize(encode(OrderedGraph{3, {1, 2}}));
  std::vector<std::uint8_t> want{'R', 'G', '1', 'S', 1, 3, 0, 0, 0, 0x01, 0x04};
  CHECK(bytes == want);

  auto ten = serialize(encode(kRefGraph));
  CHECK(ten.size() == 9 + 2 + 2); // header + ceil(10/8) per string
  CHECK(ten[9] == 0x9b);
  CHECK(ten[10] == 0x00);
  CHECK(ten[11] == 0x78);
  CHECK(ten[12] == 0x02);
}

TEST_CASE("parse rejects corrupted bytes") {
  auto good = serialize(encode(kRefGraph));

  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(parse(bad_magic), ParseError);

  auto bad_version = good;
  bad_version[4] = 9;
  CHECK_THROWS_AS(parse(bad_version), ParseError);

  auto truncated = good;
  truncated.pop_back();
  CHECK_THROWS_AS(parse(truncated), ParseError);

  auto trailing = good;
  trailing[10] |= 0x80; // bit 16 of a, beyond n = 10
  CHECK_THROWS_AS(parse(trailing), ParseError);

  CHECK_THROWS_AS(parse(std::vector<std::uint8_t>{}), ParseError);
}

TEST_CASE("from_text rejects malformed text") {
  CHECK_THROWS_AS(from_text("101\n01\n"), ParseError);   // length mismatch
  CHECK_THROWS_AS(from_text("10x\n001\n"), ParseError);  // non-binary digit
  CHECK_THROWS_AS(from_text("100\n"), ParseError);       // missing second string
}
