#pragma once

#include <stdexcept>
#include <string>

#include "lftopo/adjacency.hpp"
#include "lftopo/grids.hpp"
#include "lftopo/labeling.hpp"
#include "lftopo/lf_space.hpp"

namespace lftopo {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// LFS text: header `LFS <element_count>`, then one line `<id>: <id> ...`
/// per element listing SN(id). `#` starts a comment.
LFSpace parse_lfs(const std::string& text);
std::string serialize_lfs(const LFSpace& space);

/// VOL text: header `VOL <dx> <dy> <dz>`, then dz slices of dy rows of dx
/// space-separated 0/1 values.
DigitalImage parse_vol(const std::string& text);
std::string serialize_vol(const DigitalImage& img);

/// ASCII PGM (P2), maxval up to 65535, `#` comments allowed.
GrayImage2D parse_pgm(const std::string& text);
std::string serialize_pgm(const GrayImage2D& img, int maxval = 255);

/// Sidecar of per-pixel virtual-cell words: header `HEXBITS <w> <h>`, then
/// h rows of w words (five bits used per word).
void parse_hex_sidecar(const std::string& text, HexGrid& grid);
std::string serialize_hex_sidecar(const HexGrid& grid);

/// Foreground mask of pixels with label strictly above the threshold.
DigitalImage threshold_image(const GrayImage2D& img, int threshold);

/// FNV-1a digest of a byte string, as fixed-width hex.
std::string content_digest(const std::string& bytes);

}  // namespace lftopo
