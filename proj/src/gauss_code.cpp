#include "gaussknot/gauss_code.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <unordered_map>

namespace gaussknot {

namespace {

std::string describe(ValidityErrorKind kind, Entry label) {
  switch (kind) {
    case ValidityErrorKind::OddLength:
      return "odd number of entries";
    case ValidityErrorKind::DuplicatePass:
      return "signed value appears twice for crossing " + std::to_string(label);
    case ValidityErrorKind::UnpairedCrossing:
      return "crossing " + std::to_string(label) + " lacks its negation";
  }
  return "invalid Gauss code";
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Maps absolute labels to dense slots. Sequential codes use the label
// directly; arbitrary parsed labels go through a hash map.
class LabelSlots {
 public:
  explicit LabelSlots(const std::vector<Entry>& entries) {
    Entry max_label = 0;
    for (Entry e : entries) max_label = std::max(max_label, std::abs(e));
    dense_ = static_cast<std::size_t>(max_label) <= entries.size() + 1;
    if (!dense_) {
      for (Entry e : entries) sparse_.try_emplace(std::abs(e), sparse_.size());
      count_ = sparse_.size();
    } else {
      count_ = static_cast<std::size_t>(max_label) + 1;
    }
  }

  std::size_t count() const noexcept { return count_; }
  std::size_t slot(Entry e) const {
    return dense_ ? static_cast<std::size_t>(std::abs(e)) : sparse_.at(std::abs(e));
  }

 private:
  bool dense_ = true;
  std::size_t count_ = 0;
  std::unordered_map<Entry, std::size_t> sparse_;
};

}  // namespace

ParseError::ParseError(std::string token, std::size_t token_index)
    : std::runtime_error("syntax error at token " + std::to_string(token_index) + ": '" + token +
                         "' is not a nonzero integer"),
      token_(std::move(token)),
      token_index_(token_index) {}

ValidityError::ValidityError(ValidityErrorKind kind, Entry label)
    : std::runtime_error(describe(kind, label)), kind_(kind), label_(label) {}

const char* to_string(ValidityErrorKind kind) noexcept {
  switch (kind) {
    case ValidityErrorKind::UnpairedCrossing:
      return "UnpairedCrossing";
    case ValidityErrorKind::DuplicatePass:
      return "DuplicatePass";
    case ValidityErrorKind::OddLength:
      return "OddLength";
  }
  return "Unknown";
}

void validate(const std::vector<Entry>& entries) {
  if (entries.size() % 2 != 0) throw ValidityError(ValidityErrorKind::OddLength, 0);
  for (Entry e : entries) {
    if (e == 0) throw ValidityError(ValidityErrorKind::UnpairedCrossing, 0);
  }
  LabelSlots slots(entries);
  // bit 0: positive pass seen, bit 1: negative pass seen
  std::vector<unsigned char> seen(slots.count(), 0);
  for (Entry e : entries) {
    const unsigned char bit = e > 0 ? 1 : 2;
    auto& s = seen[slots.slot(e)];
    if (s & bit) throw ValidityError(ValidityErrorKind::DuplicatePass, std::abs(e));
    s |= bit;
  }
  for (Entry e : entries) {
    if (seen[slots.slot(e)] != 3) throw ValidityError(ValidityErrorKind::UnpairedCrossing, std::abs(e));
  }
}

bool is_valid(const std::vector<Entry>& entries) noexcept {
  try {
    validate(entries);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

GaussCode::GaussCode(std::vector<Entry> entries) : entries_(std::move(entries)) { validate(entries_); }

GaussCode::GaussCode(std::initializer_list<Entry> entries) : GaussCode(std::vector<Entry>(entries)) {}

Entry GaussCode::at_cyclic(std::ptrdiff_t p) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(entries_.size());
  auto r = p % n;
  if (r < 0) r += n;
  return entries_[static_cast<std::size_t>(r)];
}

GaussCode parse(std::string_view text) {
  std::vector<Entry> entries;
  if (trim(text).empty()) return GaussCode{};
  std::size_t index = 0;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    Entry value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last || value == 0) {
      throw ParseError(std::string(token), index);
    }
    entries.push_back(value);
    ++index;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return GaussCode(std::move(entries));
}

std::string serialize(const GaussCode& code) {
  std::string out;
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(code[i]);
  }
  return out;
}

GaussCode rotate(const GaussCode& code, std::ptrdiff_t k) {
  if (code.empty()) return code;
  const auto n = static_cast<std::ptrdiff_t>(code.length());
  auto shift = k % n;
  if (shift < 0) shift += n;
  std::vector<Entry> out(code.begin(), code.end());
  std::rotate(out.begin(), out.begin() + shift, out.end());
  return GaussCode(std::move(out));
}

GaussCode reverse(const GaussCode& code) {
  return GaussCode(std::vector<Entry>(code.entries().rbegin(), code.entries().rend()));
}

GaussCode relabel_sequential(const GaussCode& code) {
  LabelSlots slots(code.entries());
  std::vector<Entry> fresh(slots.count(), 0);
  Entry next_label = 1;
  std::vector<Entry> out;
  out.reserve(code.length());
  for (Entry e : code) {
    auto& f = fresh[slots.slot(e)];
    if (f == 0) f = next_label++;
    out.push_back(e > 0 ? f : -f);
  }
  return GaussCode(std::move(out));
}

GaussCode canonical_form(const GaussCode& input) {
  if (input.empty()) return input;
  const GaussCode code = relabel_sequential(input);
  const std::size_t len = code.length();
  const std::size_t n = code.crossings();

  // Readings are compared on the fly against the best so far, using the
  // order key 2*label + (negative ? 1 : 0). Relabel tables are reset lazily
  // through a per-reading stamp.
  std::vector<Entry> best_keys;
  std::vector<Entry> fresh(n + 1, 0);
  std::vector<std::uint32_t> stamp(n + 1, 0);
  std::uint32_t reading = 0;
  std::vector<Entry> current;
  current.reserve(len);

  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < len; ++start) {
      // Every reading relabels its first entry to 1, so a negative first
      // entry can never beat a positive one.
      if (code[start] < 0) continue;
      ++reading;
      Entry next_label = 1;
      bool better = best_keys.empty();
      current.clear();
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t p = dir == 0 ? (start + i) % len : (start + len - i) % len;
        const Entry e = code[p];
        const auto label = static_cast<std::size_t>(std::abs(e));
        if (stamp[label] != reading) {
          stamp[label] = reading;
          fresh[label] = next_label++;
        }
        const Entry key = 2 * fresh[label] + (e < 0 ? 1 : 0);
        if (!better) {
          if (key > best_keys[i]) break;
          if (key < best_keys[i]) better = true;
        }
        current.push_back(key);
      }
      if (better && current.size() == len) best_keys = current;
    }
  }

  std::vector<Entry> out;
  out.reserve(len);
  for (Entry key : best_keys) out.push_back(key % 2 ? -(key / 2) : key / 2);
  return GaussCode(std::move(out));
}

std::vector<Position> partner_positions(const GaussCode& code) {
  LabelSlots slots(code.entries());
  constexpr Position unset = static_cast<Position>(-1);
  std::vector<Position> first(slots.count(), unset);
  std::vector<Position> partner(code.length());
  for (Position p = 0; p < code.length(); ++p) {
    auto& f = first[slots.slot(code[p])];
    if (f == unset) {
      f = p;
    } else {
      partner[p] = f;
      partner[f] = p;
    }
  }
  return partner;
}

std::size_t GaussCodeHash::operator()(const GaussCode& code) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Entry e : code) {
    h ^= static_cast<std::uint32_t>(e);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace gaussknot
