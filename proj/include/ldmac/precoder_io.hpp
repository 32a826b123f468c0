#pragma once

// Plain-text precoder files:
//
//   ldmac-precoders 1
//   q 5 k1 3 k2 1 k3 5 n1 5 n2 4 ni 3
//   V1
//   <q lines of k1 characters '0'/'1'>
//   V2
//   ...
//   V3
//   ...
//
// Row 1 (the first line of each block) is the top signal level.

#include <string>

#include "ldmac/channel.hpp"
#include "ldmac/coding.hpp"

namespace ldmac {

struct PrecoderFile {
  SystemParams params;
  PrecoderTriple precoders;
};

std::string format_precoders(const SystemParams& p, const PrecoderTriple& v);

/// Throws std::invalid_argument with the offending line number on malformed input.
PrecoderFile parse_precoders(const std::string& text);

}  // namespace ldmac
