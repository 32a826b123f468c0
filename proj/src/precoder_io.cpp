#include "ldmac/precoder_io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ldmac {

namespace {

constexpr const char* kMagic = "ldmac-precoders 1";

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("precoder file line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string format_precoders(const SystemParams& p, const PrecoderTriple& v) {
  std::ostringstream out;
  out << kMagic << '\n'
      << "q " << v.v1.rows() << " k1 " << v.v1.cols() << " k2 " << v.v2.cols() << " k3 " << v.v3.cols() << " n1 "
      << p.n1 << " n2 " << p.n2 << " ni " << p.ni << '\n';
  const gf2::BitMatrix* blocks[] = {&v.v1, &v.v2, &v.v3};
  for (int i = 0; i < 3; ++i) {
    out << 'V' << i + 1 << '\n';
    for (const std::string& row : blocks[i]->to_strings()) out << row << '\n';
  }
  return out.str();
}

PrecoderFile parse_precoders(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      if (!l.empty() && l.back() == '\r') l.pop_back();
      lines.push_back(l);
    }
  }
  std::size_t at = 0;
  const auto next = [&]() -> const std::string& {
    if (at >= lines.size()) fail(static_cast<int>(at) + 1, "unexpected end of file");
    return lines[at++];
  };
  if (next() != kMagic) fail(1, std::string("expected '") + kMagic + "'");

  std::istringstream header(next());
  int q = -1, k[3] = {-1, -1, -1};
  PrecoderFile out;
  const char* keys[] = {"q", "k1", "k2", "k3", "n1", "n2", "ni"};
  int* targets[] = {&q, &k[0], &k[1], &k[2], &out.params.n1, &out.params.n2, &out.params.ni};
  for (int i = 0; i < 7; ++i) {
    std::string key;
    int value = -1;
    if (!(header >> key >> value) || key != keys[i] || value < 0)
      fail(2, std::string("expected '") + keys[i] + " <nonnegative integer>'");
    *targets[i] = value;
  }
  // A q above the default number of levels is kept explicitly.
  if (q != out.params.levels()) out.params.q = q;
  try {
    out.params.validate();
  } catch (const std::invalid_argument& e) {
    fail(2, e.what());
  }

  gf2::BitMatrix* blocks[] = {&out.precoders.v1, &out.precoders.v2, &out.precoders.v3};
  for (int i = 0; i < 3; ++i) {
    const std::string tag = "V" + std::to_string(i + 1);
    if (next() != tag) fail(static_cast<int>(at), "expected '" + tag + "'");
    std::vector<std::string> rows;
    for (int r = 0; r < q; ++r) {
      const std::string& row = next();
      if (row.size() != static_cast<std::size_t>(k[i]) || row.find_first_not_of("01") != std::string::npos)
        fail(static_cast<int>(at), "expected " + std::to_string(k[i]) + " characters of 0/1");
      rows.push_back(row);
    }
    *blocks[i] = gf2::BitMatrix::from_strings(rows, static_cast<std::size_t>(k[i]));
  }
  while (at < lines.size())
    if (!lines[at++].empty()) fail(static_cast<int>(at), "trailing content");
  return out;
}

}  // namespace ldmac
