#include "ssot/correspondences.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssot {

TwoRowArray::TwoRowArray(std::vector<BiLetter> pairs) : pairs_(std::move(pairs)) {
  for (const BiLetter& p : pairs_)
    if (p.top < 1 || p.bottom < 1) throw std::invalid_argument("two-row array entries must be positive");
}

bool TwoRowArray::is_lexicographic() const noexcept {
  return std::is_sorted(pairs_.begin(), pairs_.end());
}

bool TwoRowArray::is_burge() const noexcept {
  return is_lexicographic() &&
         std::all_of(pairs_.begin(), pairs_.end(), [](BiLetter p) { return p.top > p.bottom; });
}

void TwoRowArray::insert(BiLetter p) {
  pairs_.insert(std::upper_bound(pairs_.begin(), pairs_.end(), p), p);
}

TwoRowArray symmetrize(const TwoRowArray& l) {
  if (!l.is_lexicographic()) throw std::invalid_argument("symmetrize: array is not lexicographic");
  std::vector<BiLetter> out;
  out.reserve(2 * l.size());
  for (const BiLetter& p : l.pairs()) {
    out.push_back(p);
    out.push_back({p.bottom, p.top});
  }
  std::sort(out.begin(), out.end());
  return TwoRowArray(std::move(out));
}

Tableau burge_map(const TwoRowArray& l) {
  if (!l.is_burge()) throw std::invalid_argument("burge_map: array is not Burge");
  const TwoRowArray sym = symmetrize(l);
  std::vector<int> word;
  for (const BiLetter& p : sym.pairs()) word.push_back(p.bottom);
  return insertion_tableau(word);
}

namespace {

Tableau place(const Tableau& t, Box b, int letter) {
  Tableau::Rows rows = t.rows();
  const auto r = static_cast<std::size_t>(b.row - 1);
  if (r == rows.size()) rows.emplace_back();
  if (r >= rows.size() || static_cast<int>(rows[r].size()) + 1 != b.col)
    throw std::logic_error("sundaram: addition box is not addable");
  rows[r].push_back(letter);
  if (!is_semistandard(rows)) throw std::logic_error("sundaram: addition breaks semistandardness");
  return Tableau(std::move(rows));
}

}  // namespace

std::vector<SundaramStep> sundaram_trace(const Ssot& s) {
  const EventTrace trace = substep_events(s);
  std::vector<SundaramStep> out;
  out.reserve(trace.size());
  Tableau t;
  TwoRowArray l;
  for (std::size_t m = 0; m < trace.size(); ++m) {
    SundaramStep st;
    st.letter = trace.profile[m];
    st.kind = trace.kinds[m];
    st.box = trace.boxes[m];
    if (st.kind == EventKind::addition) {
      t = place(t, st.box, st.letter);
    } else {
      Unbumping u = column_unbump(t, st.box);
      t = std::move(u.tableau);
      st.ejected = u.value;
      l.insert({st.letter, u.value});
    }
    st.tableau = t;
    st.burge = l;
    out.push_back(std::move(st));
  }
  return out;
}

SundaramPair sundaram(const Ssot& s) {
  std::vector<SundaramStep> tr = sundaram_trace(s);
  if (tr.empty()) return {};
  return {std::move(tr.back().burge), std::move(tr.back().tableau)};
}

Ssot sundaram_inverse(const SundaramPair& p) {
  if (!p.burge.is_burge()) throw std::invalid_argument("sundaram_inverse: array is not Burge");
  Tableau::Rows rows = p.tableau.rows();
  std::vector<BiLetter> pairs = p.burge.pairs();
  EventTrace rev;
  while (!rows.empty() || !pairs.empty()) {
    int tmax = 0;
    std::size_t trow = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      // The maximum sits at a row end; the rightmost copy is in the topmost row.
      if (rows[r].back() > tmax) {
        tmax = rows[r].back();
        trow = r;
      }
    }
    const int lmax = pairs.empty() ? 0 : pairs.back().top;
    if (tmax >= lmax) {
      rev.profile.push_back(tmax);
      rev.boxes.push_back({static_cast<int>(trow) + 1, static_cast<int>(rows[trow].size())});
      rev.kinds.push_back(EventKind::addition);
      rows[trow].pop_back();
      if (rows[trow].empty()) {
        if (trow + 1 != rows.size()) throw std::invalid_argument("sundaram_inverse: malformed tableau");
        rows.pop_back();
      }
    } else {
      const BiLetter last = pairs.back();
      pairs.pop_back();
      Insertion ins = column_insert(Tableau(rows), last.bottom);
      rows = ins.tableau.rows();
      rev.profile.push_back(last.top);
      rev.boxes.push_back(ins.box);
      rev.kinds.push_back(EventKind::deletion);
    }
  }
  std::reverse(rev.profile.begin(), rev.profile.end());
  std::reverse(rev.boxes.begin(), rev.boxes.end());
  std::reverse(rev.kinds.begin(), rev.kinds.end());
  Ssot s = Ssot::from_events(rev);
  if (!(sundaram(s) == p)) throw std::invalid_argument("sundaram_inverse: pair has no preimage");
  return s;
}

std::vector<TwoRowArray> enumerate_burge_arrays(int max_letter, int pairs) {
  if (pairs < 0) throw std::invalid_argument("negative pair count");
  std::vector<BiLetter> alphabet;
  for (int j = 2; j <= max_letter; ++j)
    for (int i = 1; i < j; ++i) alphabet.push_back({j, i});
  std::vector<TwoRowArray> out;
  if (pairs > 0 && alphabet.empty()) return out;
  // Multisets of size `pairs` as weakly increasing index sequences.
  std::vector<std::size_t> idx(static_cast<std::size_t>(pairs), 0);
  while (true) {
    std::vector<BiLetter> arr;
    arr.reserve(idx.size());
    for (std::size_t i : idx) arr.push_back(alphabet[i]);
    out.emplace_back(std::move(arr));
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] + 1 == alphabet.size()) --pos;
    if (pos == 0) break;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < idx.size(); ++i) idx[i] = v;
  }
  return out;
}

}  // namespace ssot
