#include "rgg/codec.hpp"

#include <sstream>

#include "rgg/errors.hpp"
#include "rgg/structure.hpp"

namespace rgg {

StructureCode encode(const OrderedGraph& og) {
  CliqueCover cover = maximal_cliques(og);
  StructureCode code;
  code.n = og.n;
  code.a.assign(static_cast<std::size_t>(og.n), false);
  code.b.assign(static_cast<std::size_t>(og.n), false);
  for (const auto& [a, b] : cover.intervals) {
    code.a[static_cast<std::size_t>(a - 1)] = true;
    code.b[static_cast<std::size_t>(b - 1)] = true;
  }
  return code;
}

OrderedGraph decode(const StructureCode& code) {
  if (code.n < 1) throw MalformedCodeError("code has n < 1");
  if (code.a.size() != static_cast<std::size_t>(code.n) ||
      code.b.size() != static_cast<std::size_t>(code.n))
    throw MalformedCodeError("bit string length differs from n");

  std::vector<int> starts, ends;
  for (int j = 1; j <= code.n; ++j) {
    if (code.a[static_cast<std::size_t>(j - 1)]) starts.push_back(j);
    if (code.b[static_cast<std::size_t>(j - 1)]) ends.push_back(j);
  }
  if (starts.size() != ends.size())
    throw MalformedCodeError("popcount mismatch between a and b");
  if (starts.empty() || starts.front() != 1)
    throw MalformedCodeError("first bit of a is not set");
  if (ends.back() != code.n) throw MalformedCodeError("last bit of b is not set");

  CliqueCover cover;
  cover.n = code.n;
  for (std::size_t t = 0; t < starts.size(); ++t)
    cover.intervals.emplace_back(starts[t], ends[t]);
  try {
    return og_from_cliques(cover);
  } catch (const InvalidCoverError& e) {
    throw MalformedCodeError(e.what());
  }
}

namespace {

void pack_bits(const std::vector<bool>& bits, std::vector<std::uint8_t>& out) {
  std::size_t bytes = (bits.size() + 7) / 8;
  std::size_t base = out.size();
  out.resize(base + bytes, 0);
  for (std::size_t j = 0; j < bits.size(); ++j)
    if (bits[j]) out[base + j / 8] |= static_cast<std::uint8_t>(1u << (j % 8));
}

std::vector<bool> unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t offset,
                              int n) {
  std::vector<bool> bits(static_cast<std::size_t>(n), false);
  std::size_t nbytes = (static_cast<std::size_t>(n) + 7) / 8;
  for (std::size_t j = 0; j < bits.size(); ++j)
    bits[j] = (bytes[offset + j / 8] >> (j % 8)) & 1u;
  // Trailing bits beyond n must be zero.
  for (std::size_t j = static_cast<std::size_t>(n); j < nbytes * 8; ++j)
    if ((bytes[offset + j / 8] >> (j % 8)) & 1u)
      throw ParseError("nonzero trailing bits");
  return bits;
}

constexpr std::uint8_t kMagic[4] = {'R', 'G', '1', 'S'};
constexpr std::uint8_t kVersion = 1;

} // namespace

std::vector<std::uint8_t> serialize(const StructureCode& code) {
  std::vector<std::uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  std::uint32_t n = static_cast<std::uint32_t>(code.n);
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>(n >> s));
  pack_bits(code.a, out);
  pack_bits(code.b, out);
  return out;
}

StructureCode parse(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 9) throw ParseError("truncated header");
  for (int i = 0; i < 4; ++i)
    if (bytes[static_cast<std::size_t>(i)] != kMagic[i]) throw ParseError("bad magic");
  if (bytes[4] != kVersion) throw ParseError("unsupported version");
  std::uint32_t n = 0;
  for (int i = 0; i < 4; ++i)
    n |= static_cast<std::uint32_t>(bytes[5 + static_cast<std::size_t>(i)]) << (8 * i);
  if (n == 0 || n > (1u << 24)) throw ParseError("implausible n");
  std::size_t nbytes = (n + 7) / 8;
  if (bytes.size() != 9 + 2 * nbytes) throw ParseError("payload size mismatch");

  StructureCode code;
  code.n = static_cast<int>(n);
  code.a = unpack_bits(bytes, 9, code.n);
  code.b = unpack_bits(bytes, 9 + nbytes, code.n);
  decode(code); // reject invariant violations at parse time
  return code;
}

std::string to_text(const StructureCode& code) {
  std::string s;
  s.reserve(2 * static_cast<std::size_t>(code.n) + 2);
  for (bool bit : code.a) s.push_back(bit ? '1' : '0');
  s.push_back('\n');
  for (bool bit : code.b) s.push_back(bit ? '1' : '0');
  s.push_back('\n');
  return s;
}

StructureCode from_text(const std::string& text) {
  std::istringstream is(text);
  std::string la, lb;
  if (!(is >> la >> lb)) throw ParseError("expected two bit-string lines");
  if (la.size() != lb.size()) throw ParseError("bit strings differ in length");
  StructureCode code;
  code.n = static_cast<int>(la.size());
  code.a.reserve(la.size());
  code.b.reserve(lb.size());
  for (char c : la) {
    if (c != '0' && c != '1') throw ParseError("invalid character in bit string");
    code.a.push_back(c == '1');
  }
  for (char c : lb) {
    if (c != '0' && c != '1') throw ParseError("invalid character in bit string");
    code.b.push_back(c == '1');
  }
  return code;
}

} // namespace rgg
