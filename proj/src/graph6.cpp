#include "snark/graph6.hpp"

#include <algorithm>
#include <vector>

namespace snark {

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";
constexpr char kSparse6Header[] = ">>sparse6<<";

struct ByteReader {
  const std::string& s;
  std::size_t pos = 0;

  int take() {
    if (pos >= s.size()) throw Graph6ParseError("unexpected end of input", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw Graph6ParseError("byte out of graph6 range 63..126", pos);
    ++pos;
    return c - 63;
  }
  bool done() const { return pos >= s.size(); }
};

long long read_order(ByteReader& r) {
  long long n = r.take();
  if (n < 63) return n;
  // 126 -> 3-byte or 6-byte form
  std::size_t at = r.pos;
  long long x = r.take();
  int extra = 2;
  if (x == 63) {  // second 126: 6-byte form
    x = r.take();
    extra = 5;
    at = r.pos - 1;
  }
  long long value = x;
  for (int i = 0; i < extra; ++i) value = (value << 6) | r.take();
  if (value < 0) throw Graph6ParseError("order overflow", at);
  return value;
}

struct BitReader {
  ByteReader& bytes;
  int current = 0;
  int bits_left = 0;

  bool more_bytes() const { return !bytes.done(); }
  int take_bit() {
    if (bits_left == 0) {
      current = bytes.take();
      bits_left = 6;
    }
    --bits_left;
    return (current >> bits_left) & 1;
  }
  int take(int k) {
    int x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | take_bit();
    return x;
  }
  bool has(int k) const {
    std::size_t avail = static_cast<std::size_t>(bits_left) + 6 * (bytes.s.size() - bytes.pos);
    return avail >= static_cast<std::size_t>(k);
  }
};

int bits_for(long long n) {
  int k = 1;
  while ((1LL << k) < n) ++k;  // smallest k with 2^k >= n, at least 1
  return k;
}

CubicMultigraph parse_dense(const std::string& line, std::size_t start) {
  ByteReader bytes{line, start};
  long long n = read_order(bytes);
  if (n > kMaxVertices)
    throw Graph6ParseError("graph order " + std::to_string(n) + " exceeds supported 64", start);
  BitReader bits{bytes};
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (bits.take_bit()) edges.push_back({u, v, 1, {}});
  // remaining bits are padding and must be zero
  while (bits.bits_left > 0)
    if (bits.take_bit()) throw Graph6ParseError("nonzero padding", bytes.pos - 1);
  if (!bytes.done()) throw Graph6ParseError("trailing bytes after graph6 data", bytes.pos);
  return CubicMultigraph(static_cast<int>(n), std::move(edges));
}

CubicMultigraph parse_sparse(const std::string& line, std::size_t start) {
  ByteReader bytes{line, start};
  long long n = read_order(bytes);
  if (n > kMaxVertices)
    throw Graph6ParseError("graph order " + std::to_string(n) + " exceeds supported 64", start);
  int k = bits_for(n);
  BitReader bits{bytes};
  std::vector<Edge> edges;
  long long v = 0;
  while (bits.has(1 + k)) {
    int b = bits.take_bit();
    long long x = bits.take(k);
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else if (x == v) {
      // all-ones padding of a 2^k-order graph decodes to this pattern
      if (!bits.has(1 + k)) break;
      throw Graph6ParseError("loop in sparse6 input", bytes.pos);
    } else {
      edges.push_back({static_cast<int>(x), static_cast<int>(v), 1, {}});
    }
  }
  return CubicMultigraph(static_cast<int>(n), std::move(edges));
}

void write_order(std::string* out, int n) {
  if (n <= 62) {
    out->push_back(static_cast<char>(n + 63));
  } else {
    out->push_back(126);
    out->push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out->push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out->push_back(static_cast<char>((n & 63) + 63));
  }
}

struct BitWriter {
  std::string* out;
  int current = 0;
  int used = 0;

  void put_bit(int b) {
    current = (current << 1) | b;
    if (++used == 6) flush();
  }
  void put(int x, int k) {
    for (int i = k - 1; i >= 0; --i) put_bit((x >> i) & 1);
  }
  void pad(int bit) {
    while (used != 0) put_bit(bit);
  }
  void flush() {
    if (used == 0) return;
    current <<= (6 - used);
    out->push_back(static_cast<char>(current + 63));
    current = 0;
    used = 0;
  }
};

}  // namespace

CubicMultigraph parse_graph6(const std::string& line) {
  std::size_t start = 0;
  if (line.rfind(kGraph6Header, 0) == 0) start = sizeof(kGraph6Header) - 1;
  if (line.rfind(kSparse6Header, 0) == 0) start = sizeof(kSparse6Header) - 1;
  std::size_t end = line.size();
  while (end > start && (line[end - 1] == '\n' || line[end - 1] == '\r')) --end;
  std::string body = line.substr(start, end - start);
  if (body.empty()) throw Graph6ParseError("empty input", start);
  if (body[0] == ':') return parse_sparse(body, 1);
  return parse_dense(body, 0);
}

std::string write_graph6(const CubicMultigraph& g) {
  if (!g.is_simple()) throw ContractViolation("graph6 encodes simple graphs only");
  std::string out;
  write_order(&out, g.n());
  BitWriter bits{&out};
  for (int v = 1; v < g.n(); ++v)
    for (int u = 0; u < v; ++u) bits.put_bit(g.edge_between(u, v) ? 1 : 0);
  bits.pad(0);
  return out;
}

std::string write_sparse6(const CubicMultigraph& g) {
  std::string out = ":";
  write_order(&out, g.n());
  int n = g.n();
  int k = bits_for(n);
  BitWriter bits{&out};
  // edge instances sorted by (max endpoint, min endpoint)
  std::vector<std::pair<int, int>> inst;  // (v, u) with u <= v
  for (const Edge& e : g.edges())
    for (int i = 0; i < e.mult; ++i) inst.emplace_back(e.v, e.u);
  std::sort(inst.begin(), inst.end());
  int v = 0;
  for (auto [hi, lo] : inst) {
    if (hi == v) {
      bits.put_bit(0);
      bits.put(lo, k);
    } else if (hi == v + 1) {
      ++v;
      bits.put_bit(1);
      bits.put(lo, k);
    } else {
      v = hi;
      bits.put_bit(1);
      bits.put(v, k);
      bits.put_bit(0);
      bits.put(lo, k);
    }
  }
  // 1-padding; dodge the power-of-two ambiguity where all-ones padding
  // could decode as an edge {n-1, n-1}
  if (bits.used != 0 && n == (1 << k) && v == n - 2 && 6 - bits.used >= 1 + k) {
    bits.put_bit(0);
    bits.put((1 << k) - 1, k);
  }
  bits.pad(1);
  return out;
}

}  // namespace snark
