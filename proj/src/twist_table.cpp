#include "twistlab/twist_table.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "twistlab/surface.hpp"

namespace twistlab {

namespace {

const char* kNames[kNumTwists] = {"C1", "C2", "C3", "C4", "C5",
                                  "B0", "B1", "B2", "Cs", "Bd"};

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::optional<TwistId> twist_id_from_name(std::string_view name) {
  for (int i = 0; i < kNumTwists; ++i)
    if (name == kNames[i]) return static_cast<TwistId>(i);
  return std::nullopt;
}

std::string_view twist_name(TwistId id) { return kNames[static_cast<int>(id)]; }

TwistTable TwistTable::from_text(std::string_view text) {
  TwistTable table;
  table.entries_.resize(kNumTwists);
  std::vector<bool> seen(kNumTwists, false);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split(line, '|');
    if (fields.size() != 10)
      throw std::runtime_error("twist table line needs 10 fields: " + line);
    std::string name = fields[0];
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    auto id = twist_id_from_name(name);
    if (!id) throw std::runtime_error("unknown twist name: " + name);
    TwistGenerator g;
    g.id = *id;
    g.name = name;
    g.curve = Word::parse(fields[1]);
    for (int i = 0; i < 4; ++i) g.action.images[i] = Word::parse(fields[2 + i]);
    for (int i = 0; i < 4; ++i) g.inverse.images[i] = Word::parse(fields[6 + i]);
    // structural validation; the relation battery lives in the tests
    if (!g.action.compose(g.inverse).is_identity() ||
        !g.inverse.compose(g.action).is_identity())
      throw std::runtime_error("twist " + name + ": stored inverse is wrong");
    if (g.id != TwistId::Bd && g.action.apply(surface::delta()) != surface::delta())
      throw std::runtime_error("twist " + name + ": boundary word not fixed");
    table.entries_[static_cast<int>(*id)] = std::move(g);
    seen[static_cast<int>(*id)] = true;
  }
  for (int i = 0; i < kNumTwists; ++i)
    if (!seen[i])
      throw std::runtime_error(std::string("twist table is missing ") + kNames[i]);
  return table;
}

TwistTable TwistTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open twist table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

const TwistTable& TwistTable::instance() {
  static const TwistTable table = [] {
    if (const char* path = std::getenv("TWISTLAB_TABLE"))
      return from_file(path);
    return from_text(default_text());
  }();
  return table;
}

const TwistGenerator& TwistTable::get(TwistId id) const {
  return entries_[static_cast<int>(id)];
}

const TwistGenerator* TwistTable::find(std::string_view name) const {
  auto id = twist_id_from_name(name);
  return id ? &get(*id) : nullptr;
}

// Produced by tools/table_search.cpp and certified by the relation battery
// in tests/test_mcg.cpp (braid/commutation, the lantern, the global
// monodromy relator passing through the identity, and the boundary lift).
std::string_view TwistTable::default_text() {
  return R"TBL(
# name | curve | images a1 b1 a2 b2 | inverse images a1 b1 a2 b2
C1 | a1 | a1 | b1 a1 | a2 | b2 | a1 | b1 a1' | a2 | b2
C2 | b1 | a1 b1' | b1 | a2 | b2 | a1 b1 | b1 | a2 | b2
C3 | a2' a1 | a1 | b1 a2' a1 | a2 | a2' a1 b2 | a1 | b1 a1' a2 | a2 | a1' a2 b2
C4 | b2 | a1 | b1 | a2 b2' | b2 | a1 | b1 | a2 b2 | b2
C5 | a2 | a1 | b1 | a2 | b2 a2 | a1 | b1 | a2 | b2 a2'
B0 | placeholder | a1 | b1 | a2 | b2 | a1 | b1 | a2 | b2
B1 | placeholder | a1 | b1 | a2 | b2 | a1 | b1 | a2 | b2
B2 | placeholder | a1 | b1 | a2 | b2 | a1 | b1 | a2 | b2
Cs | [a1,b1] | a1 | b1 | a2 | b2 | a1 | b1 | a2 | b2
Bd | [a1,b1][a2,b2] | [a1,b1][a2,b2] a1 ([a1,b1][a2,b2])' | [a1,b1][a2,b2] b1 ([a1,b1][a2,b2])' | [a1,b1][a2,b2] a2 ([a1,b1][a2,b2])' | [a1,b1][a2,b2] b2 ([a1,b1][a2,b2])' | ([a1,b1][a2,b2])' a1 [a1,b1][a2,b2] | ([a1,b1][a2,b2])' b1 [a1,b1][a2,b2] | ([a1,b1][a2,b2])' a2 [a1,b1][a2,b2] | ([a1,b1][a2,b2])' b2 [a1,b1][a2,b2]
)TBL";
}

}  // namespace twistlab
