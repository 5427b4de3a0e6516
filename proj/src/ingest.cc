// Copyright 2026 The seqsub Authors.
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

#include "seqsub/ingest.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <unordered_set>

#include "seqsub/errors.h"

namespace seqsub {

VertexId ItemTable::Intern(std::string_view name) {
  auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<VertexId>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<VertexId> ItemTable::Find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// CSV reading

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      return fields;
    }
    fields.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

template <typename T>
bool ParseNumber(std::string_view text, T& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Parses exactly `width` digits.
bool Digits(std::string_view& s, int width, int& out) {
  if (s.size() < static_cast<std::size_t>(width)) return false;
  out = 0;
  for (int i = 0; i < width; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    out = out * 10 + (s[i] - '0');
  }
  s.remove_prefix(width);
  return true;
}

bool Expect(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

}  // namespace

std::optional<std::int64_t> ParseTimestamp(std::string_view text) {
  text = Trim(text);
  if (text.empty()) return std::nullopt;
  std::int64_t epoch = 0;
  if (ParseNumber(text, epoch)) return epoch;

  using namespace std::chrono;
  std::string_view s = text;
  int year = 0, month = 0, day = 0;
  if (!Digits(s, 4, year) || !Expect(s, '-') || !Digits(s, 2, month) ||
      !Expect(s, '-') || !Digits(s, 2, day)) {
    return std::nullopt;
  }
  const year_month_day date{std::chrono::year(year),
                            std::chrono::month(static_cast<unsigned>(month)),
                            std::chrono::day(static_cast<unsigned>(day))};
  if (!date.ok()) return std::nullopt;
  std::int64_t seconds = sys_days(date).time_since_epoch().count() * 86400LL;
  if (s.empty()) return seconds;

  if (s.front() != 'T' && s.front() != ' ') return std::nullopt;
  s.remove_prefix(1);
  int hh = 0, mm = 0, ss = 0;
  if (!Digits(s, 2, hh) || !Expect(s, ':') || !Digits(s, 2, mm)) {
    return std::nullopt;
  }
  if (!s.empty() && s.front() == ':') {
    s.remove_prefix(1);
    if (!Digits(s, 2, ss)) return std::nullopt;
    if (!s.empty() && s.front() == '.') {
      s.remove_prefix(1);
      while (!s.empty() && s.front() >= '0' && s.front() <= '9') {
        s.remove_prefix(1);
      }
    }
  }
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  seconds += hh * 3600LL + mm * 60LL + ss;
  if (s.empty() || s == "Z") return seconds;
  const char sign = s.front();
  if (sign != '+' && sign != '-') return std::nullopt;
  s.remove_prefix(1);
  int oh = 0, om = 0;
  if (!Digits(s, 2, oh)) return std::nullopt;
  if (!s.empty()) {
    Expect(s, ':');
    if (!Digits(s, 2, om) || !s.empty()) return std::nullopt;
  }
  const std::int64_t offset = oh * 3600LL + om * 60LL;
  return sign == '+' ? seconds - offset : seconds + offset;
}

InteractionLog ReadInteractionLog(std::istream& in) {
  InteractionLog log;
  std::string line;
  std::size_t line_no = 0;
  int user_col = -1, item_col = -1, time_col = -1, completion_col = -1;
  std::size_t num_cols = 0;
  bool have_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const std::vector<std::string_view> fields = SplitFields(trimmed);
    if (!have_header) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string_view name = fields[i];
        const int col = static_cast<int>(i);
        if (name == "user") user_col = col;
        else if (name == "item") item_col = col;
        else if (name == "timestamp") time_col = col;
        else if (name == "completion") completion_col = col;
      }
      if (user_col < 0 || item_col < 0 || time_col < 0) {
        throw ParseError(line_no,
                         "header must name user, item and timestamp columns");
      }
      num_cols = fields.size();
      have_header = true;
      continue;
    }
    if (fields.size() != num_cols) {
      throw ParseError(line_no, "expected " + std::to_string(num_cols) +
                                    " fields, found " +
                                    std::to_string(fields.size()));
    }
    InteractionRecord record;
    record.line = line_no;
    record.user = std::string(fields[user_col]);
    record.item = std::string(fields[item_col]);
    if (record.user.empty() || record.item.empty()) {
      throw ParseError(line_no, "empty user or item");
    }
    const auto ts = ParseTimestamp(fields[time_col]);
    if (!ts) {
      throw ParseError(line_no, "unparsable timestamp '" +
                                    std::string(fields[time_col]) + "'");
    }
    record.timestamp = *ts;
    if (completion_col >= 0) {
      double c = 0.0;
      if (!ParseNumber(fields[completion_col], c) || !(c >= 0.0 && c <= 1.0)) {
        throw ParseError(line_no, "completion must be a number in [0, 1]");
      }
      record.completion = c;
    }
    log.items.Intern(record.item);
    log.records.push_back(std::move(record));
  }
  if (!have_header) throw InputError("interaction log: empty input");
  return log;
}

InteractionLog ReadInteractionLogFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return ReadInteractionLog(in);
}

// ---------------------------------------------------------------------------
// User sequences

void TrainConfig::Validate() const {
  if (max_edge_size < 1 || max_edge_size > kMaxEdgeSizeLimit) {
    throw ConfigError("max_edge_size must be in [1, " +
                      std::to_string(kMaxEdgeSizeLimit) + "]");
  }
  if (!(smoothing >= 0.0) || !std::isfinite(smoothing)) {
    throw ConfigError("smoothing d must be a finite non-negative number");
  }
  if (min_user_events < 0 || max_user_events < 0 || min_item_events < 0) {
    throw ConfigError("event filters must be non-negative");
  }
  if (max_user_events > 0 && max_user_events < min_user_events) {
    throw ConfigError("max_user_events is below min_user_events");
  }
  if (folds < 2) throw ConfigError("folds must be at least 2");
  if (test_fraction != 0.0 &&
      std::abs(test_fraction - 1.0 / folds) > 1e-9) {
    throw ConfigError("test_fraction " + std::to_string(test_fraction) +
                      " is inconsistent with " + std::to_string(folds) +
                      " folds");
  }
}

std::vector<UserSequence> ExtractUserSequences(const InteractionLog& log,
                                               const TrainConfig& config) {
  std::unordered_map<std::string, std::size_t> user_index;
  std::vector<std::string> users;
  std::vector<std::vector<const InteractionRecord*>> events;
  for (const InteractionRecord& r : log.records) {
    auto [it, inserted] = user_index.emplace(r.user, users.size());
    if (inserted) {
      users.push_back(r.user);
      events.emplace_back();
    }
    events[it->second].push_back(&r);
  }

  std::vector<UserSequence> out;
  for (std::size_t u = 0; u < users.size(); ++u) {
    std::vector<const InteractionRecord*>& ev = events[u];
    std::stable_sort(ev.begin(), ev.end(),
                     [](const InteractionRecord* a, const InteractionRecord* b) {
                       return a->timestamp < b->timestamp;
                     });
    std::unordered_set<VertexId> seen;
    std::vector<VertexId> items;
    std::vector<double> completion;
    for (const InteractionRecord* r : ev) {
      const VertexId v = *log.items.Find(r->item);
      if (!seen.insert(v).second) continue;
      items.push_back(v);
      completion.push_back(r->completion);
    }
    const auto len = static_cast<std::int64_t>(items.size());
    if (len < config.min_user_events) continue;
    if (config.max_user_events > 0 && len > config.max_user_events) continue;
    out.push_back({users[u], Sequence(std::move(items)), std::move(completion)});
  }

  if (config.min_item_events > 0) {
    std::vector<std::int64_t> item_users(log.items.size(), 0);
    for (const UserSequence& us : out) {
      for (VertexId v : us.items) ++item_users[v];
    }
    std::vector<UserSequence> kept;
    for (UserSequence& us : out) {
      std::vector<VertexId> items;
      std::vector<double> completion;
      for (std::size_t i = 0; i < us.items.size(); ++i) {
        if (item_users[us.items[i]] >= config.min_item_events) {
          items.push_back(us.items[i]);
          completion.push_back(us.completion[i]);
        }
      }
      if (items.empty()) continue;
      kept.push_back({std::move(us.user), Sequence(std::move(items)),
                      std::move(completion)});
    }
    out = std::move(kept);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting

ItemTuple::ItemTuple(std::span<const VertexId> items) {
  if (items.size() > data_.size()) {
    throw ConfigError("item tuple longer than " +
                      std::to_string(kMaxEdgeSizeLimit));
  }
  std::copy(items.begin(), items.end(), data_.begin());
  size_ = items.size();
}

std::size_t ItemTuple::Hash::operator()(const ItemTuple& t) const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ t.size();
  for (VertexId v : t.items()) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::int64_t SubsequenceCounts::count(std::span<const VertexId> s) const {
  if (s.empty()) return num_users_;
  if (s.size() > kMaxEdgeSizeLimit) return 0;
  auto it = counts_.find(ItemTuple(s));
  return it == counts_.end() ? 0 : it->second;
}

namespace {

// Every order-preserving subsequence of `seq` of length 1..max_size. Items
// within a user are distinct, so each index combination is a distinct
// tuple and no per-user de-duplication is needed.
template <typename Visit>
void ForEachSubsequence(std::span<const VertexId> seq, int max_size,
                        ItemTuple& tuple, std::size_t start, Visit& visit) {
  for (std::size_t i = start; i < seq.size(); ++i) {
    tuple.push_back(seq[i]);
    visit(tuple);
    if (static_cast<int>(tuple.size()) < max_size) {
      ForEachSubsequence(seq, max_size, tuple, i + 1, visit);
    }
    tuple.pop_back();
  }
}

}  // namespace

void SubsequenceCounts::AddUser(std::span<const VertexId> sequence) {
  ++num_users_;
  ItemTuple tuple;
  auto visit = [&](const ItemTuple& t) { ++counts_[t]; };
  ForEachSubsequence(sequence, max_size_, tuple, 0, visit);
}

void SubsequenceCounts::Merge(const SubsequenceCounts& other) {
  max_size_ = std::max(max_size_, other.max_size_);
  num_users_ += other.num_users_;
  for (const auto& [t, c] : other.counts_) counts_[t] += c;
}

std::vector<std::pair<ItemTuple, std::int64_t>>
SubsequenceCounts::SortedEntries() const {
  std::vector<std::pair<ItemTuple, std::int64_t>> entries(counts_.begin(),
                                                          counts_.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return entries;
}

SubsequenceCounts CountSubsequences(std::span<const Sequence> users,
                                    int max_edge_size) {
  if (max_edge_size < 1 || max_edge_size > kMaxEdgeSizeLimit) {
    throw ConfigError("max_edge_size must be in [1, " +
                      std::to_string(kMaxEdgeSizeLimit) + "]");
  }
  SubsequenceCounts counts(max_edge_size);
  for (const Sequence& s : users) counts.AddUser(s.vertices());
  return counts;
}

// ---------------------------------------------------------------------------
// Model

TrainedModel BuildModel(const SubsequenceCounts& counts,
                        std::int64_t num_items, const TrainConfig& config,
                        const std::optional<Sequence>& history) {
  if (config.max_edge_size < 1) {
    throw ConfigError("max_edge_size must be at least 1");
  }
  const std::int64_t floor = std::max<std::int64_t>(config.min_count, 1);
  const double d = config.smoothing;

  // Lexicographic order visits every prefix before its extensions.
  std::unordered_map<ItemTuple, double, ItemTuple::Hash> probability;
  std::vector<Hyperedge> edges;
  std::vector<std::int64_t> edge_counts;
  for (const auto& [s, n_s] : counts.SortedEntries()) {
    if (static_cast<int>(s.size()) > config.max_edge_size || n_s < floor) {
      continue;
    }
    for (VertexId v : s.items()) {
      if (v < 0 || v >= num_items) {
        throw InputError("model: count tuple references item " +
                         std::to_string(v) + " outside the item table");
      }
    }
    const ItemTuple prefix = s.prefix();
    const double denom =
        static_cast<double>(counts.count(prefix.items())) + d;
    if (!(denom > 0.0)) {
      std::string name;
      for (VertexId v : s.items()) name += (name.empty() ? "" : ",") +
                                           std::to_string(v);
      throw InputError("model: N_s' + d is zero for s = (" + name + ")");
    }
    const double ratio = static_cast<double>(n_s) / denom;
    double p = ratio;
    const bool contained =
        prefix.size() == 0 ||
        (history && IsSubsequence(prefix.items(), history->vertices()));
    if (!contained) {
      auto it = probability.find(prefix);
      if (it == probability.end()) {
        throw InputError("model: counts lack the prefix of a retained tuple");
      }
      p = it->second * ratio;
    }
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvariantError("model: p_s = " + std::to_string(p) +
                           " outside [0, 1]; counts are inconsistent");
    }
    probability.emplace(s, p);
    edges.push_back(
        {std::vector<VertexId>(s.items().begin(), s.items().end()), p});
    edge_counts.push_back(n_s);
  }

  TrainedModel model;
  model.graph = DirectedHypergraph(num_items, std::move(edges));
  model.edge_counts = std::move(edge_counts);
  model.num_users = counts.num_users();
  model.smoothing = d;
  model.history_aware = history.has_value();
  return model;
}

DirectedHypergraph ConditionOnHistory(const DirectedHypergraph& graph,
                                      const Sequence& history) {
  history.ValidateFor(graph.num_vertices());
  std::vector<char> in_history(static_cast<std::size_t>(graph.num_vertices()),
                               0);
  for (VertexId v : history) in_history[v] = 1;

  std::vector<Hyperedge> edges;
  for (const Hyperedge& e : graph.edges()) {
    std::size_t split = 0;
    while (split < e.size() && in_history[e.vertices[split]]) ++split;
    if (split == e.size()) continue;
    const std::span<const VertexId> consumed(e.vertices.data(), split);
    const bool rest_clean =
        std::none_of(e.vertices.begin() + split, e.vertices.end(),
                     [&](VertexId v) { return in_history[v] != 0; });
    if (!rest_clean || !IsSubsequence(consumed, history.vertices())) continue;
    edges.push_back(
        {std::vector<VertexId>(e.vertices.begin() + split, e.vertices.end()),
         e.value});
  }
  return DirectedHypergraph(graph.num_vertices(), std::move(edges));
}

ConditionalModel::ConditionalModel(const SubsequenceCounts& counts,
                                   std::int64_t num_items,
                                   const TrainConfig& config)
    : num_items_(num_items) {
  const TrainedModel model = BuildModel(counts, num_items, config);
  std::unordered_map<ItemTuple, std::int64_t, ItemTuple::Hash> index;
  entries_.reserve(model.graph.num_edges());
  for (const Hyperedge& e : model.graph.edges()) {
    Entry entry;
    entry.tuple = ItemTuple(e.vertices);
    const ItemTuple prefix = entry.tuple.prefix();
    entry.ratio = static_cast<double>(counts.count(entry.tuple.items())) /
                  (static_cast<double>(counts.count(prefix.items())) +
                   config.smoothing);
    if (prefix.size() > 0) entry.parent = index.at(prefix);
    index.emplace(entry.tuple, static_cast<std::int64_t>(entries_.size()));
    entries_.push_back(entry);
  }
  base_ = model.graph;
}

DirectedHypergraph ConditionalModel::Conditioned(
    const Sequence& history) const {
  history.ValidateFor(num_items_);
  std::vector<std::int64_t> position(static_cast<std::size_t>(num_items_), -1);
  for (std::size_t i = 0; i < history.size(); ++i) {
    position[history[i]] = static_cast<std::int64_t>(i);
  }
  // p for every emitted tuple, NaN for tuples that are not emitted.
  std::vector<double> p(entries_.size(), std::nan(""));
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& entry = entries_[i];
    const auto items = entry.tuple.items();
    std::size_t split = 0;
    std::int64_t last_pos = -1;
    bool ordered = true;
    while (split < items.size() && position[items[split]] >= 0) {
      ordered = ordered && position[items[split]] > last_pos;
      last_pos = position[items[split]];
      ++split;
    }
    if (split == items.size() || !ordered) continue;
    if (std::any_of(items.begin() + split, items.end(),
                    [&](VertexId v) { return position[v] >= 0; })) {
      continue;
    }
    // s' is the consumed history part exactly when one vertex remains;
    // otherwise s' is itself an emitted tuple.
    p[i] = split + 1 == items.size()
               ? entry.ratio
               : p[static_cast<std::size_t>(entry.parent)] * entry.ratio;
    edges.push_back(
        {std::vector<VertexId>(items.begin() + split, items.end()), p[i]});
  }
  return DirectedHypergraph(num_items_, std::move(edges));
}

// ---------------------------------------------------------------------------
// Folds

std::vector<Fold> SplitFolds(std::size_t num_users, const TrainConfig& config,
                             std::uint64_t seed) {
  config.Validate();
  const auto folds = static_cast<std::size_t>(config.folds);
  if (num_users < folds) {
    throw ConfigError("cannot split " + std::to_string(num_users) +
                      " users into " + std::to_string(folds) + " folds");
  }
  std::vector<std::size_t> order(num_users);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Fold> out(folds);
  for (std::size_t f = 0; f < folds; ++f) {
    const std::size_t begin = f * num_users / folds;
    const std::size_t end = (f + 1) * num_users / folds;
    std::vector<char> is_test(num_users, 0);
    for (std::size_t i = begin; i < end; ++i) is_test[order[i]] = 1;
    for (std::size_t u = 0; u < num_users; ++u) {
      (is_test[u] ? out[f].test : out[f].train).push_back(u);
    }
  }
  return out;
}

}  // namespace seqsub
