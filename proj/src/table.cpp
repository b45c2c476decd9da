#include "layerlat/table.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "layerlat/errors.hpp"

namespace layerlat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::size_t> parse_row(std::string_view line, std::size_t lineno) {
  std::vector<std::size_t> out;
  const std::string where = "line " + std::to_string(lineno);
  for (;;) {
    const auto comma = line.find(',');
    const auto cell = trim(line.substr(0, comma));
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size())
      throw ParseError(where, "expected a non-negative index, got '" + std::string(cell) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos)
      return out;
    line.remove_prefix(comma + 1);
  }
}

} // namespace

void check_shape(const CayleyTable &t) {
  if (t.n == 0)
    throw ParseError("header", "empty carrier");
  if (t.unit >= t.n || t.falsum >= t.n)
    throw ParseError("header", "unit or falsum index out of range");
  if (t.product.size() != t.n)
    throw ParseError("rows", "expected " + std::to_string(t.n) + " rows, got " +
                                 std::to_string(t.product.size()));
  for (std::size_t i = 0; i < t.n; ++i) {
    if (t.product[i].size() != t.n)
      throw ParseError("row " + std::to_string(i), "expected " + std::to_string(t.n) + " cells");
    for (std::size_t j = 0; j < t.n; ++j)
      if (t.product[i][j] >= t.n)
        throw ParseError("row " + std::to_string(i), "index " + std::to_string(t.product[i][j]) +
                                                         " out of range");
  }
}

std::string format_table_csv(const CayleyTable &t) {
  std::ostringstream os;
  os << t.n << ',' << t.unit << ',' << t.falsum << '\n';
  for (const auto &row : t.product) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? "," : "") << row[j];
    os << '\n';
  }
  return os.str();
}

CayleyTable parse_table_csv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    if (!line.empty())
      lines.emplace_back(lineno, line);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
  }
  if (lines.empty())
    throw ParseError("line 1", "empty table");
  const auto header = parse_row(lines[0].second, lines[0].first);
  if (header.size() != 3)
    throw ParseError("line " + std::to_string(lines[0].first), "header must be n,unit,falsum");
  CayleyTable t;
  t.n = header[0];
  t.unit = header[1];
  t.falsum = header[2];
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto row = parse_row(lines[k].second, lines[k].first);
    if (row.size() != t.n)
      throw ParseError("line " + std::to_string(lines[k].first),
                       "expected " + std::to_string(t.n) + " cells, got " +
                           std::to_string(row.size()));
    t.product.push_back(std::move(row));
  }
  check_shape(t);
  return t;
}

std::size_t brute_residuum(const CayleyTable &t, std::size_t x, std::size_t z) {
  for (std::size_t v = t.n; v-- > 0;)
    if (t.mul(x, v) <= z)
      return v;
  throw NotResiduated("no v with " + std::to_string(x) + "*v <= " + std::to_string(z));
}

Tabulation tabulate(const Chain &c, std::optional<std::size_t> window) {
  Tabulation out;
  if (c.size()) {
    out.elements = c.sorted_elements();
  } else {
    if (!window)
      throw InfiniteChain("the chain is infinite; give a window size");
    out.elements = c.first_elements(*window);
    std::sort(out.elements.begin(), out.elements.end(),
              [&](const auto &a, const auto &b) { return c.less(a, b); });
  }
  const auto &els = out.elements;
  auto index_of = [&](const ChainElement &p) {
    // Greatest listed element <= p.
    auto it = std::upper_bound(els.begin(), els.end(), p,
                               [&](const auto &a, const auto &b) { return c.less(a, b); });
    if (it == els.begin()) {
      out.clipped = true;
      return std::size_t{0};
    }
    const auto i = static_cast<std::size_t>(it - els.begin()) - 1;
    if (!(els[i] == p))
      out.clipped = true;
    return i;
  };
  CayleyTable &t = out.table;
  t.n = els.size();
  t.product.assign(t.n, std::vector<std::size_t>(t.n));
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = i; j < t.n; ++j)
      t.product[i][j] = t.product[j][i] = index_of(c.mul(els[i], els[j]));
  t.unit = index_of(c.unit());
  t.falsum = index_of(c.falsum());
  return out;
}

Json tabulation_to_json(const Chain &c, const Tabulation &t) {
  Json j;
  Json els = Json::array();
  for (const auto &x : t.elements)
    els.push_back(c.format(x));
  j["elements"] = std::move(els);
  j["unit"] = t.table.unit;
  j["falsum"] = t.table.falsum;
  j["clipped"] = t.clipped;
  j["product"] = t.table.product;
  return j;
}

std::string tabulation_to_dot(const Chain &c, const Tabulation &t) {
  std::ostringstream os;
  os << "digraph chain {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    os << "  n" << i << " [label=\"" << c.format(t.elements[i]);
    if (i == t.table.unit)
      os << " (t)";
    if (i == t.table.falsum)
      os << " (f)";
    os << "\"];\n";
  }
  for (std::size_t i = 0; i + 1 < t.elements.size(); ++i)
    os << "  n" << i << " -> n" << i + 1 << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace layerlat
