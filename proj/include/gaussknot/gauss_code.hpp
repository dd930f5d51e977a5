// Gauss codes: the cyclic sequence of signed crossing labels obtained by
// tracing a knot projection once. Positive entries are overcrossing passes,
// negative entries undercrossing passes. The sequence is a closed loop, so
// the last entry is adjacent to the first.
//
// A GaussCode is an immutable value. Every constructor validates its input,
// so holding a GaussCode means holding a sequence in which each absolute
// label appears exactly once positively and once negatively.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaussknot {

using Entry = std::int32_t;
using Position = std::size_t;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string token, std::size_t token_index);

  const std::string& token() const noexcept { return token_; }
  std::size_t token_index() const noexcept { return token_index_; }

 private:
  std::string token_;
  std::size_t token_index_;
};

enum class ValidityErrorKind { UnpairedCrossing, DuplicatePass, OddLength };

class ValidityError : public std::runtime_error {
 public:
  ValidityError(ValidityErrorKind kind, Entry label);

  ValidityErrorKind kind() const noexcept { return kind_; }
  // Absolute label at fault; 0 for OddLength.
  Entry label() const noexcept { return label_; }

 private:
  ValidityErrorKind kind_;
  Entry label_;
};

const char* to_string(ValidityErrorKind kind) noexcept;

class GaussCode {
 public:
  // The empty code: the zero-crossing projection of the unknot.
  GaussCode() = default;
  // Throws ValidityError.
  explicit GaussCode(std::vector<Entry> entries);
  GaussCode(std::initializer_list<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t length() const noexcept { return entries_.size(); }
  std::size_t crossings() const noexcept { return entries_.size() / 2; }
  bool empty() const noexcept { return entries_.empty(); }

  Entry operator[](Position p) const noexcept { return entries_[p]; }
  // Cyclic access; any integer offset is reduced modulo length().
  Entry at_cyclic(std::ptrdiff_t p) const noexcept;
  Position next(Position p) const noexcept { return p + 1 == entries_.size() ? 0 : p + 1; }
  Position prev(Position p) const noexcept { return p == 0 ? entries_.size() - 1 : p - 1; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
  friend auto operator<=>(const GaussCode&, const GaussCode&) = default;

 private:
  std::vector<Entry> entries_;
};

// Throws ValidityError describing the first defect found. Checks run in the
// order: odd length, duplicate signed value, unpaired label.
void validate(const std::vector<Entry>& entries);
bool is_valid(const std::vector<Entry>& entries) noexcept;

// Comma-separated signed integers; whitespace around tokens is ignored and a
// blank string is the empty code. Throws ParseError or ValidityError.
GaussCode parse(std::string_view text);
std::string serialize(const GaussCode& code);

GaussCode rotate(const GaussCode& code, std::ptrdiff_t k);
GaussCode reverse(const GaussCode& code);

// Renames absolute labels to 1..n in order of first appearance.
GaussCode relabel_sequential(const GaussCode& code);

// Least reading over every rotation and both directions, each reading
// relabeled before comparison. Entries compare by absolute label, then
// positive before negative. Mirror images are not identified.
GaussCode canonical_form(const GaussCode& code);

// partner[p] is the position holding the negation of code[p].
std::vector<Position> partner_positions(const GaussCode& code);

struct GaussCodeHash {
  std::size_t operator()(const GaussCode& code) const noexcept;
};

}  // namespace gaussknot
