#include "lftopo/io.hpp"

#include <cstdint>
#include <sstream>

namespace lftopo {

namespace {

// Token stream that treats '#'-to-end-of-line as whitespace.
class Tokens {
 public:
  explicit Tokens(const std::string& text) : text_(text) {}

  bool next(std::string& out) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= text_.size()) return false;
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '#')
      ++pos_;
    out = text_.substr(start, pos_ - start);
    return true;
  }

  std::string expect(const char* what) {
    std::string t;
    if (!next(t)) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return t;
  }

  long expect_int(const char* what) {
    std::string t = expect(what);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      throw ParseError(std::string("expected ") + what + ", got '" + t + "'");
    }
    if (used != t.size()) throw ParseError(std::string("expected ") + what + ", got '" + t + "'");
    return v;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

LFSpace parse_lfs(const std::string& text) {
  Tokens toks(text);
  if (toks.expect("LFS header") != "LFS") throw ParseError("missing LFS magic");
  long n = toks.expect_int("element count");
  if (n < 1) throw ParseError("element count must be positive");
  std::vector<std::vector<ElementId>> sn(static_cast<std::size_t>(n));
  std::vector<char> defined(static_cast<std::size_t>(n), 0);
  std::string tok;
  while (toks.next(tok)) {
    if (tok.empty() || tok.back() != ':')
      throw ParseError("expected '<id>:' line start, got '" + tok + "'");
    long id = 0;
    std::size_t used = 0;
    try {
      id = std::stol(tok.substr(0, tok.size() - 1), &used);
    } catch (const std::exception&) {
      throw ParseError("bad element id '" + tok + "'");
    }
    if (used + 1 != tok.size() || id < 0 || id >= n)
      throw ParseError("element id out of range in '" + tok + "'");
    if (defined[static_cast<std::size_t>(id)]) throw ParseError("duplicate SN line for element");
    defined[static_cast<std::size_t>(id)] = 1;
    // members run to the next '<id>:' token or end of input
    while (true) {
      Tokens probe = toks;
      std::string peek;
      if (!probe.next(peek)) break;
      if (!peek.empty() && peek.back() == ':') break;
      toks.next(peek);
      long m = 0;
      try {
        m = std::stol(peek, &used);
      } catch (const std::exception&) {
        throw ParseError("bad SN member '" + peek + "'");
      }
      if (used != peek.size() || m < 0 || m >= n)
        throw ParseError("SN member out of range: '" + peek + "'");
      sn[static_cast<std::size_t>(id)].push_back(static_cast<ElementId>(m));
    }
  }
  for (long e = 0; e < n; ++e)
    if (!defined[static_cast<std::size_t>(e)])
      throw ParseError("missing SN line for element " + std::to_string(e));
  return LFSpace(std::move(sn));
}

std::string serialize_lfs(const LFSpace& space) {
  std::ostringstream out;
  out << "LFS " << space.element_count() << "\n";
  for (ElementId e = 0; e < space.element_count(); ++e) {
    out << e << ":";
    for (ElementId m : space.sn(e)) out << " " << m;
    out << "\n";
  }
  return out.str();
}

DigitalImage parse_vol(const std::string& text) {
  Tokens toks(text);
  if (toks.expect("VOL header") != "VOL") throw ParseError("missing VOL magic");
  long dx = toks.expect_int("dx"), dy = toks.expect_int("dy"), dz = toks.expect_int("dz");
  if (dx < 1 || dy < 1 || dz < 1) throw ParseError("extents must be positive");
  DigitalImage img({static_cast<int>(dx), static_cast<int>(dy), static_cast<int>(dz)});
  for (long z = 0; z < dz; ++z)
    for (long y = 0; y < dy; ++y)
      for (long x = 0; x < dx; ++x) {
        long v = toks.expect_int("voxel value");
        if (v != 0 && v != 1) throw ParseError("voxel values must be 0 or 1");
        if (v)
          img.set({static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)}, true);
      }
  std::string extra;
  if (toks.next(extra)) throw ParseError("trailing data after voxel block");
  return img;
}

std::string serialize_vol(const DigitalImage& img) {
  if (img.order() != 3) throw std::invalid_argument("VOL serializes 3D images");
  const auto& d = img.dims();
  std::ostringstream out;
  out << "VOL " << d[0] << " " << d[1] << " " << d[2] << "\n";
  for (int z = 0; z < d[2]; ++z) {
    for (int y = 0; y < d[1]; ++y) {
      for (int x = 0; x < d[0]; ++x) {
        if (x) out << " ";
        out << (img.foreground({x, y, z}) ? 1 : 0);
      }
      out << "\n";
    }
    if (z + 1 < d[2]) out << "\n";
  }
  return out.str();
}

GrayImage2D parse_pgm(const std::string& text) {
  Tokens toks(text);
  std::string magic = toks.expect("PGM magic");
  if (magic != "P2") throw ParseError("unsupported magic '" + magic + "', expected P2");
  long w = toks.expect_int("width"), h = toks.expect_int("height");
  long maxval = toks.expect_int("maxval");
  if (w < 1 || h < 1) throw ParseError("image extents must be positive");
  if (maxval < 1 || maxval > 65535) throw ParseError("maxval out of range");
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(w) * h);
  for (long i = 0; i < w * h; ++i) {
    long v = toks.expect_int("pixel value");
    if (v < 0 || v > maxval) throw ParseError("pixel value exceeds maxval");
    labels.push_back(static_cast<int>(v));
  }
  std::string extra;
  if (toks.next(extra)) throw ParseError("trailing data after raster");
  return GrayImage2D(static_cast<int>(w), static_cast<int>(h), std::move(labels));
}

std::string serialize_pgm(const GrayImage2D& img, int maxval) {
  std::ostringstream out;
  out << "P2\n" << img.width() << " " << img.height() << "\n" << maxval << "\n";
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (x) out << " ";
      out << img.label(x, y);
    }
    out << "\n";
  }
  return out.str();
}

void parse_hex_sidecar(const std::string& text, HexGrid& grid) {
  Tokens toks(text);
  if (toks.expect("HEXBITS header") != "HEXBITS") throw ParseError("missing HEXBITS magic");
  long w = toks.expect_int("width"), h = toks.expect_int("height");
  if (w != grid.width() || h != grid.height()) throw ParseError("sidecar extent mismatch");
  for (long y = 0; y < h; ++y)
    for (long x = 0; x < w; ++x) {
      long v = toks.expect_int("cell word");
      if (v < 0 || v > 31) throw ParseError("cell word out of range (five bits)");
      grid.set_cell_bits(static_cast<int>(x), static_cast<int>(y), static_cast<std::uint8_t>(v));
    }
  std::string extra;
  if (toks.next(extra)) throw ParseError("trailing data after cell words");
}

std::string serialize_hex_sidecar(const HexGrid& grid) {
  std::ostringstream out;
  out << "HEXBITS " << grid.width() << " " << grid.height() << "\n";
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (x) out << " ";
      out << static_cast<int>(grid.cell_bits(x, y));
    }
    out << "\n";
  }
  return out.str();
}

DigitalImage threshold_image(const GrayImage2D& img, int threshold) {
  DigitalImage out({img.width(), img.height()});
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (img.label(x, y) > threshold) out.set({x, y}, true);
  return out;
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace lftopo
