#include "rss/codec.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace rss::codec {

namespace {

void require_chunkable_modulus(PrimeModulus p) {
  if (p.value() <= kChunkLimit) {
    throw ParameterError("modulus " + std::to_string(p.value()) +
                         " unsupported for 7-byte chunking: need p > 2^56");
  }
}

std::uint64_t read_group(std::span<const std::uint8_t> bytes, std::size_t offset) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < kChunkBytes; ++i) {
    value <<= 8;
    if (offset + i < bytes.size()) value |= bytes[offset + i];
  }
  return value;
}

void write_group(std::uint64_t value, std::vector<std::uint8_t>& out) {
  for (std::size_t i = 0; i < kChunkBytes; ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * (kChunkBytes - 1 - i))));
  }
}

}  // namespace

ChunkedMessage encode_message(std::span<const std::uint8_t> bytes, PrimeModulus p) {
  require_chunkable_modulus(p);
  ChunkedMessage out;
  out.original_length = bytes.size();
  out.elements.reserve((bytes.size() + kChunkBytes - 1) / kChunkBytes);
  for (std::size_t offset = 0; offset < bytes.size(); offset += kChunkBytes) {
    out.elements.emplace_back(read_group(bytes, offset), p);
  }
  return out;
}

std::vector<std::uint8_t> decode_message(const ChunkedMessage& chunked) {
  const std::uint64_t expected_chunks =
      (chunked.original_length + kChunkBytes - 1) / kChunkBytes;
  if (chunked.elements.size() != expected_chunks) {
    throw CorruptionError("message length " + std::to_string(chunked.original_length) +
                          " inconsistent with " + std::to_string(chunked.elements.size()) +
                          " chunks");
  }
  std::vector<std::uint8_t> out;
  out.reserve(chunked.elements.size() * kChunkBytes);
  for (const FieldElement& e : chunked.elements) {
    if (e.value() >= kChunkLimit) {
      throw CorruptionError("chunk value " + std::to_string(e.value()) +
                            " does not decode to 7 bytes");
    }
    write_group(e.value(), out);
  }
  out.resize(chunked.original_length);
  return out;
}

std::vector<recursive::HiddenPayload> pack_hidden_channel(std::span<const std::uint8_t> aux,
                                                          std::size_t chunk_count,
                                                          std::uint32_t k, PrimeModulus p) {
  require_chunkable_modulus(p);
  if (k < 2) {
    throw ParameterError("threshold must be at least 2");
  }
  const std::uint64_t slots = std::uint64_t{chunk_count} * (k - 2);
  const std::uint64_t available = slots * kChunkBytes;
  const std::uint64_t required = aux.size() + kChunkBytes;  // one element holds the length
  if (required > available) {
    throw CapacityError(required, available);
  }

  std::vector<FieldElement> stream;
  stream.reserve(slots);
  stream.emplace_back(aux.size(), p);
  for (std::size_t offset = 0; offset < aux.size(); offset += kChunkBytes) {
    stream.emplace_back(read_group(aux, offset), p);
  }
  stream.resize(slots, FieldElement(0, p));

  std::vector<recursive::HiddenPayload> payloads(chunk_count);
  for (std::size_t c = 0; c < chunk_count; ++c) {
    payloads[c].reserve(k - 2);
    for (std::uint32_t slot = 0; slot + 2 < k; ++slot) {
      payloads[c].push_back(stream[std::size_t{slot} * chunk_count + c]);
    }
  }
  return payloads;
}

std::vector<std::uint8_t> unpack_hidden_channel(
    const std::vector<recursive::HiddenPayload>& payloads) {
  if (payloads.empty() || payloads.front().empty()) {
    throw ParameterError("no hidden channel to unpack");
  }
  const std::size_t chunk_count = payloads.size();
  const std::size_t per_chunk = payloads.front().size();
  for (const recursive::HiddenPayload& payload : payloads) {
    if (payload.size() != per_chunk) {
      throw ParameterError("hidden payloads differ in size across chunks");
    }
  }

  const std::size_t total = chunk_count * per_chunk;
  auto element_at = [&](std::size_t index) -> const FieldElement& {
    return payloads[index % chunk_count][index / chunk_count];
  };

  const std::uint64_t length = element_at(0).value();
  if (length >= kChunkLimit) {
    throw CorruptionError("corrupted hidden-channel length header");
  }
  const std::uint64_t data_elements = (length + kChunkBytes - 1) / kChunkBytes;
  if (data_elements > total - 1) {
    throw CorruptionError("hidden-channel length " + std::to_string(length) +
                          " exceeds channel capacity");
  }

  std::vector<std::uint8_t> out;
  out.reserve(data_elements * kChunkBytes);
  for (std::size_t i = 1; i <= data_elements; ++i) {
    const FieldElement& e = element_at(i);
    if (e.value() >= kChunkLimit) {
      throw CorruptionError("hidden-channel element does not decode to 7 bytes");
    }
    write_group(e.value(), out);
  }
  out.resize(length);
  return out;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next_line() {
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of file after line " + std::to_string(line_));
    }
    const std::size_t nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_ + 1) + " is not LF-terminated");
    }
    std::string_view line = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    ++line_;
    return line;
  }

  bool at_end() const { return pos_ >= text_.size(); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::uint64_t parse_decimal(std::string_view text, std::string_view what) {
  if (text.empty()) {
    throw ParseError("empty decimal in " + std::string(what));
  }
  if (text.size() > 1 && text.front() == '0') {
    throw ParseError("leading zero in " + std::string(what));
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("decimal out of range in " + std::string(what));
  }
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("non-canonical decimal in " + std::string(what));
  }
  return value;
}

std::string_view expect_kv(LineReader& reader, std::string_view key) {
  const std::string_view line = reader.next_line();
  if (line.size() < key.size() + 1 || line.substr(0, key.size()) != key ||
      line[key.size()] != '=') {
    throw ParseError("expected `" + std::string(key) + "=` line, got `" + std::string(line) +
                     "`");
  }
  return line.substr(key.size() + 1);
}

void expect_separator(LineReader& reader) {
  const std::string_view line = reader.next_line();
  if (line != "---") {
    throw ParseError("expected `---` separator, got `" + std::string(line) + "`");
  }
}

std::string_view digest_name(DigestAlgorithm algorithm) {
  return algorithm == DigestAlgorithm::sha256 ? "sha256" : "none";
}

RecursiveShareFile parse_recursive_body(LineReader& reader) {
  RecursiveShareFile file;
  file.p = parse_decimal(expect_kv(reader, "p"), "p");
  const std::uint64_t k = parse_decimal(expect_kv(reader, "k"), "k");
  const std::uint64_t n = parse_decimal(expect_kv(reader, "n"), "n");
  if (k > std::numeric_limits<std::uint32_t>::max() ||
      n > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError("k or n out of range");
  }
  file.k = static_cast<std::uint32_t>(k);
  file.n = static_cast<std::uint32_t>(n);
  file.x = parse_decimal(expect_kv(reader, "x"), "x");
  const std::uint64_t chunks = parse_decimal(expect_kv(reader, "chunks"), "chunks");
  file.msglen = parse_decimal(expect_kv(reader, "msglen"), "msglen");
  file.auxlen = parse_decimal(expect_kv(reader, "auxlen"), "auxlen");
  const std::string_view digest = expect_kv(reader, "digest");
  if (digest == "none") {
    file.digest = DigestAlgorithm::none;
  } else if (digest == "sha256") {
    file.digest = DigestAlgorithm::sha256;
  } else {
    throw ParseError("unknown digest algorithm `" + std::string(digest) + "`");
  }
  expect_separator(reader);

  file.y.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(chunks, 1 << 20)));
  for (std::uint64_t i = 0; i < chunks; ++i) {
    file.y.push_back(parse_decimal(reader.next_line(), "y value"));
  }
  return file;
}

Xor2ShareFile parse_xor2_body(LineReader& reader) {
  Xor2ShareFile file;
  const std::uint64_t levels = parse_decimal(expect_kv(reader, "levels"), "levels");
  if (levels < 1 || levels > xor2::kMaxLevels) {
    throw ParseError("levels out of range");
  }
  file.levels = static_cast<std::uint32_t>(levels);
  const std::uint64_t index = parse_decimal(expect_kv(reader, "index"), "index");
  if (index != 1 && index != 2) {
    throw ParseError("share index must be 1 or 2");
  }
  file.index = static_cast<std::uint32_t>(index);
  expect_separator(reader);

  const std::size_t bit_count = std::size_t{1} << (file.levels - 1);
  try {
    file.bits = xor2::parse_hex_bits(reader.next_line(), bit_count);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("bad bit-string line: ") + e.what());
  }
  return file;
}

}  // namespace

std::string serialize_share(const ShareFile& file) {
  std::string out = "RSS1\n";
  if (const auto* rec = std::get_if<RecursiveShareFile>(&file)) {
    out += "scheme=recursive\n";
    out += "p=" + std::to_string(rec->p) + "\n";
    out += "k=" + std::to_string(rec->k) + "\n";
    out += "n=" + std::to_string(rec->n) + "\n";
    out += "x=" + std::to_string(rec->x) + "\n";
    out += "chunks=" + std::to_string(rec->y.size()) + "\n";
    out += "msglen=" + std::to_string(rec->msglen) + "\n";
    out += "auxlen=" + std::to_string(rec->auxlen) + "\n";
    out += "digest=" + std::string(digest_name(rec->digest)) + "\n";
    out += "---\n";
    for (std::uint64_t y : rec->y) {
      out += std::to_string(y) + "\n";
    }
  } else {
    const auto& x2 = std::get<Xor2ShareFile>(file);
    if (x2.levels < 1 || x2.levels > xor2::kMaxLevels) {
      throw ParameterError("levels out of range");
    }
    if (x2.index != 1 && x2.index != 2) {
      throw ParameterError("share index must be 1 or 2");
    }
    if (x2.bits.size() != (std::size_t{1} << (x2.levels - 1))) {
      throw ParameterError("bit count does not match level count");
    }
    out += "scheme=xor2\n";
    out += "levels=" + std::to_string(x2.levels) + "\n";
    out += "index=" + std::to_string(x2.index) + "\n";
    out += "---\n";
    out += xor2::format_hex_bits(x2.bits) + "\n";
  }
  return out;
}

ShareFile parse_share(std::string_view text) {
  LineReader reader(text);
  if (reader.next_line() != "RSS1") {
    throw ParseError("bad magic: not an RSS1 share file");
  }
  const std::string_view scheme = expect_kv(reader, "scheme");
  ShareFile file;
  if (scheme == "recursive") {
    file = parse_recursive_body(reader);
  } else if (scheme == "xor2") {
    file = parse_xor2_body(reader);
  } else {
    throw ParseError("unknown scheme `" + std::string(scheme) + "`");
  }
  if (!reader.at_end()) {
    throw ParseError("trailing data after share body");
  }
  return file;
}

}  // namespace rss::codec
