// Copyright 2026 The pvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pvlab/diagram.hpp"

#include <algorithm>
#include <cctype>

#include "pvlab/errors.hpp"

namespace pvlab {

WeightedDiagram::WeightedDiagram(SimpleType type, std::vector<int> circled)
    : type_(make_type(type.family, type.rank)), circled_(std::move(circled)) {
  if (circled_.empty()) throw EmptyCircledSet("at least one node must be circled");
  std::sort(circled_.begin(), circled_.end());
  for (std::size_t i = 0; i < circled_.size(); ++i) {
    if (circled_[i] < 1 || circled_[i] > type_.rank)
      throw IndexOutOfRange("node " + std::to_string(circled_[i]) + " outside 1.." + std::to_string(type_.rank));
    if (i > 0 && circled_[i] == circled_[i - 1])
      throw DuplicateIndex("node " + std::to_string(circled_[i]) + " listed twice");
  }
  for (int v = 1; v <= type_.rank; ++v)
    if (!is_circled(v)) theta_.push_back(v);
}

bool WeightedDiagram::is_circled(int node) const {
  return std::binary_search(circled_.begin(), circled_.end(), node);
}

namespace {

class DiagramParser {
 public:
  explicit DiagramParser(std::string_view text) : text_(text) {}

  WeightedDiagram parse() {
    skip_space();
    if (pos_ >= text_.size() || std::string_view("ABCDEFG").find(text_[pos_]) == std::string_view::npos)
      fail("family letter A-G");
    const auto family = static_cast<Family>(text_[pos_++]);
    skip_space();
    const int rank = number("rank");
    const SimpleType type = make_type(family, rank);
    skip_space();
    expect('[', "'['");
    std::vector<int> circled;
    while (true) {
      skip_space();
      circled.push_back(number("index"));
      skip_space();
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']', "',' or ']'");
      break;
    }
    skip_space();
    if (pos_ != text_.size()) fail("end of input");
    return WeightedDiagram(type, circled);
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(std::string(text_), pos_ + 1, expected);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c, const std::string& what) {
    if (!peek(c)) fail(what);
    ++pos_;
  }
  int number(const std::string& what) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail(what);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000) fail(what + " of reasonable size");
    }
    return static_cast<int>(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++w;
  return w;
}

std::string node_token(const WeightedDiagram& d, int v) { return d.is_circled(v) ? "(o)" : "o"; }

// Bond drawn between consecutive chain nodes a, b.
std::string bond(const CartanMatrix& c, const std::vector<int>& len, int a, int b) {
  const int mult = c[a - 1][b - 1] * c[b - 1][a - 1];
  if (mult == 1) return "--";
  const bool to_right = len[b - 1] < len[a - 1];
  if (mult == 2) return to_right ? "=>" : "<=";
  return to_right ? "≡>" : "<≡";
}

}  // namespace

WeightedDiagram parse_diagram(std::string_view text) { return DiagramParser(text).parse(); }

std::string render_compact(const WeightedDiagram& d) {
  std::string out = d.type().name() + "[";
  for (std::size_t i = 0; i < d.circled().size(); ++i) out += (i ? "," : "") + std::to_string(d.circled()[i]);
  return out + "]";
}

std::string render_ascii(const WeightedDiagram& d) {
  const CartanMatrix c = cartan_matrix(d.type());
  const std::vector<int> len = node_lengths(c);
  const int n = d.rank();
  std::vector<int> chain;
  int hub = 0;
  int hanging = 0;
  if (d.type().family == Family::D) {
    for (int v = 1; v < n; ++v) chain.push_back(v);
    hub = n - 2;
    hanging = n;
  } else if (d.type().family == Family::E) {
    chain.push_back(1);
    for (int v = 3; v <= n; ++v) chain.push_back(v);
    hub = 4;
    hanging = 2;
  } else {
    for (int v = 1; v <= n; ++v) chain.push_back(v);
  }
  std::string row;
  std::size_t hub_col = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) row += bond(c, len, chain[i - 1], chain[i]);
    const std::string tok = node_token(d, chain[i]);
    // Column of the 'o' glyph; the bond glyphs are single columns each.
    if (chain[i] == hub) hub_col = display_width(row) + (tok.size() == 3 ? 1 : 0);
    row += tok;
  }
  if (hanging == 0) return row + "\n";
  std::string out = row + "\n" + std::string(hub_col, ' ') + "|\n";
  if (d.is_circled(hanging)) out += std::string(hub_col - 1, ' ') + "(o)\n";
  else out += std::string(hub_col, ' ') + "o\n";
  return out;
}

WeightedDiagram permute(const WeightedDiagram& d, const std::vector<int>& perm) {
  std::vector<int> img;
  for (int v : d.circled()) img.push_back(perm[v - 1]);
  return WeightedDiagram(d.type(), img);
}

std::vector<int> psi_of(const WeightedDiagram& d, int alpha) {
  const CartanMatrix c = cartan_matrix(d.type());
  std::vector<int> comp{alpha};
  std::vector<bool> seen(d.rank() + 1, false);
  seen[alpha] = true;
  for (std::size_t head = 0; head < comp.size(); ++head)
    for (int m : d.theta())
      if (!seen[m] && c[comp[head] - 1][m - 1] != 0) {
        seen[m] = true;
        comp.push_back(m);
      }
  std::sort(comp.begin(), comp.end());
  return comp;
}

Subdiagram subdiagram(const WeightedDiagram& d, std::vector<int> gamma) {
  if (gamma.empty()) throw EmptySubset("gamma must be nonempty");
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  for (int g : gamma)
    if (!d.is_circled(g)) throw NotCircled("node " + std::to_string(g) + " is not circled in " + render_compact(d));
  Subdiagram out;
  out.gamma = gamma;
  for (int g : gamma)
    for (int v : psi_of(d, g)) out.psi_gamma.push_back(v);
  std::sort(out.psi_gamma.begin(), out.psi_gamma.end());
  out.psi_gamma.erase(std::unique(out.psi_gamma.begin(), out.psi_gamma.end()), out.psi_gamma.end());
  for (int v : out.psi_gamma)
    if (!d.is_circled(v)) out.theta_gamma.push_back(v);
  RootSystem rs(d.type());
  for (auto& comp : rs.connected_components(out.psi_gamma)) {
    std::vector<int> local;
    for (std::size_t k = 0; k < comp.order.size(); ++k)
      if (d.is_circled(comp.order[k])) local.push_back(static_cast<int>(k) + 1);
    WeightedDiagram piece(comp.type, local);
    out.pieces.push_back({std::move(comp), std::move(piece)});
  }
  return out;
}

std::vector<std::pair<int, int>> circled_adjacent_pairs(const WeightedDiagram& d) {
  const CartanMatrix c = cartan_matrix(d.type());
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < d.circled().size(); ++i)
    for (std::size_t j = i + 1; j < d.circled().size(); ++j)
      if (c[d.circled()[i] - 1][d.circled()[j] - 1] != 0) out.emplace_back(d.circled()[i], d.circled()[j]);
  return out;
}

std::vector<WeightedDiagram> all_diagrams(SimpleType type, int min_circled) {
  const int n = type.rank;
  std::vector<std::vector<int>> sets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 1; v <= n; ++v)
      if (mask & (1u << (v - 1))) s.push_back(v);
    if (static_cast<int>(s.size()) >= min_circled) sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<WeightedDiagram> out;
  for (auto& s : sets) out.emplace_back(type, s);
  return out;
}

}  // namespace pvlab
