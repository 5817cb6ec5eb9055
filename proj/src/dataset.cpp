#include "occm/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace occm {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

Labels make_labels(const std::vector<std::int64_t>& raw_labels) {
  std::map<std::int64_t, std::size_t> index;
  for (auto l : raw_labels) index.emplace(l, 0);
  Labels out;
  for (auto& [raw, id] : index) {
    id = out.raw.size();
    out.raw.push_back(raw);
  }
  out.ids.reserve(raw_labels.size());
  for (auto l : raw_labels) out.ids.push_back(index.at(l));
  return out;
}

namespace {

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

template <typename Int>
Int parse_int(const std::string& token, const std::string& source, std::size_t line) {
  Int value{};
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(source, line, "expected an integer, got '" + token + "'");
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

TransactionDB read_transactions(std::istream& in, const std::string& source) {
  std::vector<std::vector<ItemId>> rows;
  std::string line;
  std::size_t lineno = 0;
  std::size_t max_id = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) throw ParseError(source, lineno, "blank line (empty transaction)");
    std::istringstream tokens(line);
    std::string token;
    std::vector<ItemId> row;
    while (tokens >> token) {
      if (token.front() == '-') throw ParseError(source, lineno, "negative item id '" + token + "'");
      const auto id = parse_int<std::uint64_t>(token, source, lineno);
      max_id = std::max<std::size_t>(max_id, id);
      row.push_back(id);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(source, lineno, "no transactions");
  return TransactionDB::from_lists(rows, max_id + 1);
}

TransactionDB load_transactions(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_transactions(in, path.string());
}

void write_transactions(const TransactionDB& db, std::ostream& out) {
  for (const auto& tx : db.transactions()) {
    bool first = true;
    tx.for_each([&](std::size_t id) {
      if (!first) out << ' ';
      first = false;
      out << id;
    });
    out << '\n';
  }
}

std::vector<std::string> load_item_names(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    names.push_back(line);
  }
  return names;
}

Labels read_labels(std::istream& in, std::size_t transactions, const std::string& source) {
  std::vector<std::int64_t> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) throw ParseError(source, lineno, "blank label line");
    raw.push_back(parse_int<std::int64_t>(token, source, lineno));
    if (tokens >> token) throw ParseError(source, lineno, "more than one label on a line");
  }
  if (raw.size() != transactions)
    throw std::invalid_argument(source + ": " + std::to_string(raw.size()) + " labels for " +
                                std::to_string(transactions) + " transactions");
  return make_labels(raw);
}

Labels load_labels(const std::filesystem::path& path, std::size_t transactions) {
  auto in = open_input(path);
  return read_labels(in, transactions, path.string());
}

TransactionDB random_db(std::uint64_t seed, std::size_t transactions, std::size_t items,
                        double density) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<std::size_t> pick(0, items - 1);
  std::vector<Bitset> rows;
  rows.reserve(transactions);
  for (std::size_t t = 0; t < transactions; ++t) {
    Bitset row(items);
    for (std::size_t i = 0; i < items; ++i)
      if (coin(rng)) row.set(i);
    if (row.none()) row.set(pick(rng));
    rows.push_back(std::move(row));
  }
  return TransactionDB(ItemUniverse(items), std::move(rows));
}

LabeledDataset planted_dataset(std::uint64_t seed, std::size_t transactions, std::size_t items,
                               std::size_t classes, std::size_t core_size, double noise) {
  if (classes * core_size > items)
    throw std::invalid_argument("not enough items for the requested cores");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(noise);
  std::vector<Bitset> rows;
  std::vector<std::int64_t> labels;
  for (std::size_t t = 0; t < transactions; ++t) {
    const std::size_t c = t % classes;
    Bitset row(items);
    for (std::size_t i = 0; i < core_size; ++i) row.set(c * core_size + i);
    for (std::size_t i = classes * core_size; i < items; ++i)
      if (coin(rng)) row.set(i);
    rows.push_back(std::move(row));
    labels.push_back(static_cast<std::int64_t>(c));
  }
  return LabeledDataset{"planted-" + std::to_string(seed),
                        TransactionDB(ItemUniverse(items), std::move(rows)), make_labels(labels)};
}

}  // namespace occm
