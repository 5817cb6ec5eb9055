#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "occm/core.hpp"

namespace occm {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Per-transaction class ids remapped to 0..classes-1 in ascending order of
/// the raw labels; `raw[c]` is the original label of class c.
struct Labels {
  std::vector<std::size_t> ids;
  std::vector<std::int64_t> raw;

  std::size_t classes() const { return raw.size(); }
};

Labels make_labels(const std::vector<std::int64_t>& raw_labels);

struct LabeledDataset {
  std::string name;
  TransactionDB db;
  std::optional<Labels> labels;
};

/// FIMI format: one transaction per line, whitespace-separated non-negative
/// item ids. The universe is 0..max id. Blank lines are rejected.
TransactionDB read_transactions(std::istream& in, const std::string& source = "<stream>");
TransactionDB load_transactions(const std::filesystem::path& path);
void write_transactions(const TransactionDB& db, std::ostream& out);

/// One name per line; line i names item i.
std::vector<std::string> load_item_names(const std::filesystem::path& path);

/// One integer label per line; the count must equal `transactions`.
Labels read_labels(std::istream& in, std::size_t transactions, const std::string& source = "<stream>");
Labels load_labels(const std::filesystem::path& path, std::size_t transactions);

/// Uniform random database; every transaction gets at least one item.
TransactionDB random_db(std::uint64_t seed, std::size_t transactions, std::size_t items,
                        double density);

/// Synthetic labelled data with `classes` groups. Each group shares a core
/// itemset of `core_size` items; the remaining items appear as noise with
/// probability `noise`.
LabeledDataset planted_dataset(std::uint64_t seed, std::size_t transactions, std::size_t items,
                               std::size_t classes, std::size_t core_size, double noise);

}  // namespace occm
