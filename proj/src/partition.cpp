#include "gwh/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gwh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    size_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Integer Partition::product_of_parts() const {
  Integer r = 1;
  for (int p : parts_) r *= p;
  return r;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= part(0); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

Partition Partition::operator+(const Partition& o) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return Partition(std::move(all));
}

Partition Partition::without(int k, int count) const {
  std::vector<int> rest = parts_;
  for (int i = 0; i < count; ++i) {
    auto it = std::find(rest.begin(), rest.end(), k);
    if (it == rest.end()) throw std::invalid_argument("partition has too few parts of the requested size");
    rest.erase(it);
  }
  return Partition(std::move(rest));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n')) ++i;
}

void expect(std::string_view s, std::size_t& i, char c) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != c) throw std::invalid_argument("malformed partition: " + std::string(s));
  ++i;
}

Partition parse_at(std::string_view s, std::size_t& i) {
  expect(s, i, '[');
  std::vector<int> parts;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
    return Partition();
  }
  while (true) {
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (start == i || i - start > 6) throw std::invalid_argument("malformed partition: " + std::string(s));
    parts.push_back(std::stoi(std::string(s.substr(start, i - start))));
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    expect(s, i, ']');
    break;
  }
  return Partition(std::move(parts));
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::size_t i = 0;
  Partition p = parse_at(text, i);
  skip_ws(text, i);
  if (i != text.size()) throw std::invalid_argument("trailing characters in partition: " + std::string(text));
  return p;
}

std::vector<Partition> parse_partition_list(std::string_view text) {
  std::size_t i = 0;
  std::vector<Partition> out;
  expect(text, i, '[');
  skip_ws(text, i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      out.push_back(parse_at(text, i));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(text, i, ']');
      break;
    }
  }
  skip_ws(text, i);
  if (i != text.size()) throw std::invalid_argument("trailing characters in partition list");
  return out;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(d, d, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int d) {
  std::vector<Partition> out;
  for (int k = 0; k <= d; ++k) {
    auto level = enumerate_partitions(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Integer z_factor(const Partition& mu) {
  Integer z = mu.product_of_parts();
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  for (const auto& [part, m] : mult) z *= factorial(m);
  return z;
}

Integer class_size(const Partition& mu) { return factorial(mu.size()) / z_factor(mu); }

std::optional<PaddedProfile> pad_to_degree(const Partition& eta, int d) {
  if (eta.size() > d) return std::nullopt;
  std::vector<int> parts = eta.parts();
  parts.insert(parts.end(), static_cast<std::size_t>(d - eta.size()), 1);
  Partition padded(std::move(parts));
  return PaddedProfile{padded, binomial(padded.multiplicity(1), eta.multiplicity(1))};
}

}  // namespace gwh
