#include "ssot/oscillating.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ssot {

namespace {

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

// Boxes of outer/inner for a horizontal strip, one per column, increasing
// column order.
std::vector<Box> strip_boxes(const Partition& inner, const Partition& outer) {
  std::vector<Box> boxes;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.part(idx(r)) + 1; c <= outer.part(idx(r)); ++c)
      boxes.push_back({r, c});
  std::sort(boxes.begin(), boxes.end(),
            [](Box a, Box b) { return std::tie(a.col, a.row) < std::tie(b.col, b.row); });
  return boxes;
}

// Number of single-box moves needed at least to go from a to b.
int shape_distance(const Partition& a, const Partition& b) {
  const auto len = static_cast<std::size_t>(std::max(a.length(), b.length()));
  int d = 0;
  for (std::size_t i = 0; i < len; ++i) d += std::abs(a.part(i) - b.part(i));
  return d;
}

Box moved_box(const Partition& from, const Partition& to) {
  const auto len = static_cast<std::size_t>(std::max(from.length(), to.length()));
  for (std::size_t i = 0; i < len; ++i) {
    if (from.part(i) < to.part(i)) return {static_cast<int>(i) + 1, to.part(i)};
    if (from.part(i) > to.part(i)) return {static_cast<int>(i) + 1, from.part(i)};
  }
  throw std::invalid_argument("shapes do not differ");
}

}  // namespace

// --------------------------------------------------------------- EventTrace

std::vector<Partition> EventTrace::replay() const {
  if (boxes.size() != profile.size() || kinds.size() != profile.size())
    throw std::invalid_argument("event trace fields have different lengths");
  std::vector<Partition> shapes{Partition{}};
  shapes.reserve(profile.size() + 1);
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const Partition& cur = shapes.back();
    shapes.push_back(kinds[j] == EventKind::addition ? cur.with_box(boxes[j])
                                                      : cur.without_box(boxes[j]));
  }
  return shapes;
}

bool event_trace_less(const EventTrace& a, const EventTrace& b) {
  return std::tie(a.profile, a.boxes, a.kinds) < std::tie(b.profile, b.boxes, b.kinds);
}

// ------------------------------------------------------- OscillatingTableau

OscillatingTableau::OscillatingTableau(std::vector<Partition> chain)
    : chain_(std::move(chain)) {
  if (chain_.empty() || !chain_.front().empty())
    throw std::invalid_argument("oscillating tableau must start at the empty shape");
  for (std::size_t j = 1; j < chain_.size(); ++j) {
    const Partition& a = chain_[j - 1];
    const Partition& b = chain_[j];
    const bool up = b.size() == a.size() + 1 && b.contains(a);
    const bool down = a.size() == b.size() + 1 && a.contains(b);
    if (!up && !down)
      throw std::invalid_argument("consecutive shapes must differ by one box");
  }
}

EventTrace OscillatingTableau::events() const {
  EventTrace t;
  for (std::size_t j = 1; j < chain_.size(); ++j) {
    t.profile.push_back(static_cast<int>(j));
    t.boxes.push_back(moved_box(chain_[j - 1], chain_[j]));
    t.kinds.push_back(chain_[j].size() > chain_[j - 1].size() ? EventKind::addition
                                                              : EventKind::deletion);
  }
  return t;
}

// --------------------------------------------------------------------- Ssot

Ssot::Ssot(std::vector<SsotStep> steps) : steps_(std::move(steps)) {
  Partition prev;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const SsotStep& st = steps_[i];
    if (i == 0 && !st.deleted.empty())
      throw std::invalid_argument("first SSOT step cannot delete boxes");
    if (!is_horizontal_strip(st.deleted, prev))
      throw std::invalid_argument("step " + std::to_string(i + 1) +
                                  ": deleted boxes do not form a horizontal strip");
    if (!is_horizontal_strip(st.deleted, st.reached))
      throw std::invalid_argument("step " + std::to_string(i + 1) +
                                  ": added boxes do not form a horizontal strip");
    length_ += (prev.size() - st.deleted.size()) + (st.reached.size() - st.deleted.size());
    prev = st.reached;
  }
  // Trailing steps that change nothing are dropped.
  while (!steps_.empty()) {
    const SsotStep& last = steps_.back();
    const Partition before = steps_.size() >= 2 ? steps_[steps_.size() - 2].reached : Partition{};
    if (last.deleted == before && last.reached == before) {
      steps_.pop_back();
    } else {
      break;
    }
  }
}

Ssot Ssot::from_events(const EventTrace& trace) {
  const std::vector<Partition> shapes = trace.replay();
  std::vector<SsotStep> steps;
  Partition prev;
  std::size_t j = 0;
  const std::size_t n = trace.size();
  for (int letter = 1; j < n; ++letter) {
    if (trace.profile[j] < letter)
      throw std::invalid_argument("profile must be weakly increasing");
    SsotStep st{prev, prev};
    while (j < n && trace.profile[j] == letter && trace.kinds[j] == EventKind::deletion) ++j;
    st.deleted = shapes[j];
    while (j < n && trace.profile[j] == letter && trace.kinds[j] == EventKind::addition) ++j;
    st.reached = shapes[j];
    if (j < n && trace.profile[j] == letter)
      throw std::invalid_argument("deletion after addition within one step");
    prev = st.reached;
    steps.push_back(std::move(st));
  }
  Ssot s(std::move(steps));
  if (!(substep_events(s) == trace))
    throw std::invalid_argument("events are not in canonical order for an SSOT");
  return s;
}

Ssot Ssot::from_letter_rows(const LetterRows& rows) {
  struct Ev {
    int letter;
    EventKind kind;
    Box box;
  };
  std::vector<Ev> evs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      std::vector<int> letters = rows[r][c];
      std::sort(letters.begin(), letters.end());
      for (std::size_t t = 0; t < letters.size(); ++t)
        evs.push_back({letters[t], t % 2 == 0 ? EventKind::addition : EventKind::deletion,
                       Box{static_cast<int>(r) + 1, static_cast<int>(c) + 1}});
    }
  }
  std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
    if (a.letter != b.letter) return a.letter < b.letter;
    if (a.kind != b.kind) return a.kind == EventKind::deletion;
    return a.kind == EventKind::deletion ? a.box.col > b.box.col : a.box.col < b.box.col;
  });
  EventTrace t;
  for (const Ev& e : evs) {
    t.profile.push_back(e.letter);
    t.boxes.push_back(e.box);
    t.kinds.push_back(e.kind);
  }
  return from_events(t);
}

Ssot Ssot::from_oscillating(const OscillatingTableau& o) { return from_events(o.events()); }

LetterRows Ssot::letter_rows() const {
  const EventTrace t = substep_events(*this);
  LetterRows rows;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const Box b = t.boxes[j];
    if (rows.size() < idx(b.row) + 1) rows.resize(idx(b.row) + 1);
    auto& row = rows[idx(b.row)];
    if (row.size() < idx(b.col) + 1) row.resize(idx(b.col) + 1);
    row[idx(b.col)].push_back(t.profile[j]);
  }
  return rows;
}

// ---------------------------------------------------------------------- Run

std::string Run::to_string() const {
  const bool wide = std::any_of(letters.begin(), letters.end(), [](int x) { return x > 9; });
  std::ostringstream os;
  std::size_t bar = 0;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if (j > 0) {
      if (bar < bars.size() && bars[bar] == static_cast<int>(j)) {
        os << '|';
        ++bar;
      } else if (wide) {
        os << ' ';
      }
    }
    os << letters[j];
  }
  return os.str();
}

// --------------------------------------------------------------- operations

EventTrace substep_events(const Ssot& s) {
  EventTrace t;
  Partition prev;
  int letter = 0;
  for (const SsotStep& st : s.steps()) {
    ++letter;
    std::vector<Box> dels = strip_boxes(st.deleted, prev);
    std::reverse(dels.begin(), dels.end());
    for (Box b : dels) {
      t.profile.push_back(letter);
      t.boxes.push_back(b);
      t.kinds.push_back(EventKind::deletion);
    }
    for (Box b : strip_boxes(st.deleted, st.reached)) {
      t.profile.push_back(letter);
      t.boxes.push_back(b);
      t.kinds.push_back(EventKind::addition);
    }
    prev = st.reached;
  }
  return t;
}

std::vector<int> descent_positions(const EventTrace& t) {
  std::vector<int> des;
  for (std::size_t j = 0; j + 1 < t.size(); ++j) {
    const bool add0 = t.kinds[j] == EventKind::addition;
    const bool add1 = t.kinds[j + 1] == EventKind::addition;
    bool descent = false;
    if (add0 && add1) {
      descent = !north_east_less(t.boxes[j], t.boxes[j + 1]);
    } else if (add0) {
      descent = true;
    } else if (!add1) {
      descent = !north_east_less(t.boxes[j + 1], t.boxes[j]);
    }
    if (descent) des.push_back(static_cast<int>(j) + 1);
  }
  return des;
}

DescentData descent_data(const OscillatingTableau& o) {
  DescentData d;
  const int n = o.length();
  if (n == 0) return d;
  d.descent_set = descent_positions(o.events());
  std::vector<int> parts;
  int last = 0;
  for (int p : d.descent_set) {
    parts.push_back(p - last);
    last = p;
  }
  parts.push_back(n - last);
  d.step = static_cast<int>(parts.size());
  d.des = Composition(std::move(parts));
  return d;
}

DescentData descent_data(const Ssot& s) { return descent_data(standardize(s)); }

OscillatingTableau standardize(const Ssot& s) {
  return OscillatingTableau(substep_events(s).replay());
}

Ssot destandardize(const Ssot& s) {
  const OscillatingTableau o = standardize(s);
  EventTrace t = o.events();
  const std::vector<int> des = descent_positions(t);
  int block = 1;
  std::size_t next = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    t.profile[j] = block;
    if (next < des.size() && des[next] == static_cast<int>(j) + 1) {
      ++block;
      ++next;
    }
  }
  return Ssot::from_events(t);
}

Composition com(const Ssot& s) {
  std::vector<int> wt(static_cast<std::size_t>(s.step_count()), 0);
  for (int u : substep_events(s).profile) ++wt[idx(u)];
  return Composition(std::move(wt));
}

bool is_quasi_yamanouchi(const Ssot& s) { return com(s) == descent_data(s).des; }

Run run_of(const Ssot& s) {
  return Run{substep_events(s).profile, descent_data(s).descent_set};
}

Run run_of(const OscillatingTableau& o) {
  return Run{o.events().profile, descent_data(o).descent_set};
}

std::vector<OscillatingTableau> enumerate_ot(const Partition& lambda, int n) {
  std::vector<OscillatingTableau> out;
  if (!admissible_length(lambda, n)) return out;
  std::vector<Partition> chain{Partition{}};
  std::function<void()> rec = [&]() {
    const Partition& cur = chain.back();
    const int remaining = n - (static_cast<int>(chain.size()) - 1);
    if (remaining == 0) {
      if (cur == lambda) out.emplace_back(chain);
      return;
    }
    std::vector<Partition> nexts;
    for (Box b : cur.addable_boxes()) nexts.push_back(cur.with_box(b));
    for (Box b : cur.removable_boxes()) nexts.push_back(cur.without_box(b));
    for (Partition& p : nexts) {
      if (shape_distance(p, lambda) > remaining - 1) continue;
      chain.push_back(std::move(p));
      rec();
      chain.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return event_trace_less(a.events(), b.events());
  });
  return out;
}

std::vector<Ssot> enumerate_ssot(const Partition& lambda, int n, int max_letter) {
  std::vector<Ssot> out;
  if (!admissible_length(lambda, n) || max_letter < 0) return out;
  std::vector<SsotStep> steps;
  std::function<void(const Partition&, int)> rec = [&](const Partition& cur, int used) {
    if (static_cast<int>(steps.size()) == max_letter) {
      if (used == n && cur == lambda) out.emplace_back(steps);
      return;
    }
    const std::vector<Partition> deletions =
        steps.empty() ? std::vector<Partition>{Partition{}} : remove_horizontal_strips(cur);
    for (const Partition& d : deletions) {
      const int after_del = used + (cur.size() - d.size());
      if (after_del + shape_distance(d, lambda) > n) continue;
      for (int added = 0; after_del + added <= n; ++added) {
        for (const Partition& r : add_horizontal_strips(d, added)) {
          const int after = after_del + added;
          if (after + shape_distance(r, lambda) > n) continue;
          steps.push_back({d, r});
          rec(r, after);
          steps.pop_back();
        }
      }
    }
  };
  rec(Partition{}, 0);
  std::sort(out.begin(), out.end(), [](const Ssot& a, const Ssot& b) {
    return event_trace_less(substep_events(a), substep_events(b));
  });
  return out;
}

std::vector<Ssot> enumerate_qyot(const Partition& lambda, int n, int max_step) {
  std::vector<Ssot> out;
  for (const OscillatingTableau& o : enumerate_ot(lambda, n)) {
    if (descent_data(o).step > max_step) continue;
    out.push_back(destandardize(Ssot::from_oscillating(o)));
  }
  std::sort(out.begin(), out.end(), [](const Ssot& a, const Ssot& b) {
    return event_trace_less(substep_events(a), substep_events(b));
  });
  return out;
}

}  // namespace ssot
