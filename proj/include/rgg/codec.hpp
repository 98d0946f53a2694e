#ifndef RGG_CODEC_HPP
#define RGG_CODEC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rgg/core.hpp"

namespace rgg {

// Two n-bit strings marking maximal-clique endpoints: the position of the
// t-th one in `a` (`b`) is the left (right) end-node of the t-th clique.
struct StructureCode {
  int n = 0;
  std::vector<bool> a; // a[j-1] set iff some clique starts at vertex j
  std::vector<bool> b; // b[j-1] set iff some clique ends at vertex j

  bool operator==(const StructureCode&) const = default;
};

StructureCode encode(const OrderedGraph& og);

// Throws MalformedCodeError identifying the first violated condition.
OrderedGraph decode(const StructureCode& code);

// Binary layout: magic "RG1S", version byte 1, n as 32-bit little-endian,
// ceil(n/8) bytes for a then for b. Bit j (1-based) lives in byte
// (j-1)/8, bit (j-1)%8 (LSB first); trailing bits must be zero.
std::vector<std::uint8_t> serialize(const StructureCode& code);
StructureCode parse(const std::vector<std::uint8_t>& bytes);

// Text form: ASCII '0'/'1', a then b, newline separated.
std::string to_text(const StructureCode& code);
StructureCode from_text(const std::string& text);

} // namespace rgg

#endif
