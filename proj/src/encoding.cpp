#include "countcheck/encoding.hpp"

#include <sstream>
#include <stdexcept>

namespace countcheck {

namespace {

// Serialization tags. Every key begins with one tag byte; every integer is
// written as a one-byte length followed by that many big-endian bytes.
constexpr char kTagBasisEmpty = 0x01;
constexpr char kTagBasisLetter = 0x02;
constexpr char kTagBasisBracket = 0x03;
constexpr char kTagPower = 0x10;
constexpr char kTagShort = 0x11;
constexpr char kTagLong = 0x12;
constexpr char kTagRect = 0x20;

constexpr char kTagBoundaryPoint = 0x6B;
constexpr char kTagBoundaryInterval = 0x69;
constexpr char kTagAtomRun = 0x72;
constexpr char kTagAtomLetter = 0x6C;
constexpr char kNoSpan = 0x00;

void put_uint(std::string& out, std::uint64_t v) {
  char bytes[8];
  int n = 0;
  while (v > 0) {
    bytes[n++] = static_cast<char>(v & 0xFF);
    v >>= 8;
  }
  out.push_back(static_cast<char>(n));
  for (int i = n - 1; i >= 0; --i) out.push_back(bytes[i]);
}

void put_boundary(std::string& out, const Boundary& b) {
  out.push_back(b.kind == Boundary::Kind::point ? kTagBoundaryPoint : kTagBoundaryInterval);
  put_uint(out, b.value);
}

void put_core(std::string& out, const CoreList& core) {
  put_uint(out, core.size());
  for (const CoreAtom& a : core) {
    out.push_back(a.kind == CoreAtom::Kind::run ? kTagAtomRun : kTagAtomLetter);
    put_uint(out, a.value);
  }
}

class KeyReader {
 public:
  explicit KeyReader(std::string_view bytes) : bytes_(bytes) {}

  char tag() { return next(); }

  std::uint64_t read_uint() {
    const int n = static_cast<int>(static_cast<unsigned char>(next()));
    if (n > 8) throw std::invalid_argument("parse_reduced_key: bad integer width");
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v = (v << 8) | static_cast<unsigned char>(next());
    }
    return v;
  }

  CoreList read_core() {
    const std::uint64_t n = read_uint();
    CoreList core;
    core.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const char t = next();
      if (t != kTagAtomRun && t != kTagAtomLetter) {
        throw std::invalid_argument("parse_reduced_key: bad core atom");
      }
      core.push_back({t == kTagAtomRun ? CoreAtom::Kind::run : CoreAtom::Kind::letter,
                      read_uint()});
    }
    return core;
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  char next() {
    if (pos_ >= bytes_.size()) throw std::invalid_argument("parse_reduced_key: truncated key");
    return bytes_[pos_++];
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

PowerBasisKey PowerBasisKey::a1_power(std::uint64_t k) {
  if (k == 0) return empty_word();
  if (k == 1) return letter(kA1);
  return bracket(kA1, k - 2, kA1);
}

RunForm run_form(const Word& w) {
  if (w.empty() || w.front() == kA1 || w.back() == kA1) {
    throw std::invalid_argument("run_form: word must have boundary letters != a1");
  }
  RunForm rf;
  std::size_t i = 0;
  while (i < w.size()) {
    rf.letters.push_back(w[i]);
    ++i;
    std::uint64_t run = 0;
    while (i < w.size() && w[i] == kA1) {
      ++run;
      ++i;
    }
    if (i < w.size()) rf.runs.push_back(run);  // trailing run impossible: last letter != a1
  }
  return rf;
}

TermKey key_from_slots(const MonoidSpec& spec, const std::vector<Letter>& letters,
                       const std::vector<Boundary>& slots) {
  if (letters.size() != slots.size() + 1) {
    throw std::invalid_argument("key_from_slots: need one letter more than slots");
  }
  const std::size_t m = slots.size();
  if (m == 0) {
    ShortKey k;
    k.left = k.right = letters[0];
    return k;
  }
  if (m == 1) {
    ShortKey k;
    k.left = letters[0];
    k.right = letters[1];
    k.span = slots[0];
    return k;
  }
  LongKey k;
  k.first = letters.front();
  k.last = letters.back();
  k.left = slots.front();
  k.right = slots.back();
  for (std::size_t j = 1; j + 1 <= m; ++j) {
    if (spec.rank >= 3) k.core.push_back(CoreAtom::letter(letters[j]));
    if (j + 1 <= m - 1) {
      if (slots[j].kind != Boundary::Kind::point) {
        throw std::invalid_argument("key_from_slots: interior slots must be points");
      }
      k.core.push_back(CoreAtom::run(slots[j].value));
    }
  }
  return k;
}

TermKey encode_word(const MonoidSpec& spec, const Word& w) {
  if (is_power_of_a1(w)) {
    return PowerKey{w.size()};
  }
  if (w.front() == kA1 || w.back() == kA1) {
    throw std::invalid_argument("encode_word: word has a1 affixes; split them first");
  }
  const RunForm rf = run_form(w);
  std::vector<Boundary> slots;
  slots.reserve(rf.runs.size());
  for (std::uint64_t run : rf.runs) slots.push_back(Boundary::point(run));
  return key_from_slots(spec, rf.letters, slots);
}

std::int64_t encoded_length(const TermKey& key) {
  struct Visitor {
    std::int64_t operator()(const PowerKey&) const { return -1; }
    std::int64_t operator()(const ShortKey& k) const { return k.span ? 1 : 0; }
    std::int64_t operator()(const LongKey& k) const {
      std::int64_t inner = 0;
      for (const CoreAtom& a : k.core) {
        if (a.kind == CoreAtom::Kind::run) ++inner;
      }
      return inner + 2;
    }
  };
  return std::visit(Visitor{}, key);
}

std::int64_t encoded_length(const EncodedTerm& t) { return encoded_length(t.key); }

const CoreList& core_of(const LongKey& key) { return key.core; }

std::string serialize_key(const TermKey& key) {
  std::string out;
  if (const auto* p = std::get_if<PowerKey>(&key)) {
    out.push_back(kTagPower);
    put_uint(out, p->exponent);
  } else if (const auto* s = std::get_if<ShortKey>(&key)) {
    out.push_back(kTagShort);
    out.push_back(static_cast<char>((s->left_any ? 1 : 0) | (s->right_any ? 2 : 0)));
    if (!s->left_any) put_uint(out, static_cast<std::uint64_t>(s->left));
    if (s->span) {
      put_boundary(out, *s->span);
    } else {
      out.push_back(kNoSpan);
    }
    if (!s->right_any) put_uint(out, static_cast<std::uint64_t>(s->right));
  } else {
    const auto& l = std::get<LongKey>(key);
    out.push_back(kTagLong);
    put_uint(out, static_cast<std::uint64_t>(l.first));
    put_boundary(out, l.left);
    put_core(out, l.core);
    put_boundary(out, l.right);
    put_uint(out, static_cast<std::uint64_t>(l.last));
  }
  return out;
}

std::string serialize_key(const PowerBasisKey& key) {
  std::string out;
  switch (key.kind) {
    case PowerBasisKey::Kind::empty_word:
      out.push_back(kTagBasisEmpty);
      break;
    case PowerBasisKey::Kind::letter:
      out.push_back(kTagBasisLetter);
      put_uint(out, static_cast<std::uint64_t>(key.a));
      break;
    case PowerBasisKey::Kind::bracket:
      out.push_back(kTagBasisBracket);
      put_uint(out, static_cast<std::uint64_t>(key.a));
      put_uint(out, key.run);
      put_uint(out, static_cast<std::uint64_t>(key.b));
      break;
  }
  return out;
}

std::string serialize_key(const RectKey& key) {
  std::string out;
  out.push_back(kTagRect);
  put_uint(out, static_cast<std::uint64_t>(key.first));
  put_uint(out, static_cast<std::uint64_t>(key.last));
  put_core(out, key.core);
  put_uint(out, key.width);
  put_uint(out, key.height);
  return out;
}

std::variant<PowerBasisKey, RectKey> parse_reduced_key(std::string_view bytes) {
  KeyReader r(bytes);
  const char tag = r.tag();
  std::variant<PowerBasisKey, RectKey> out;
  switch (tag) {
    case kTagBasisEmpty:
      out = PowerBasisKey::empty_word();
      break;
    case kTagBasisLetter:
      out = PowerBasisKey::letter(static_cast<Letter>(r.read_uint()));
      break;
    case kTagBasisBracket: {
      const Letter a = static_cast<Letter>(r.read_uint());
      const std::uint64_t run = r.read_uint();
      const Letter b = static_cast<Letter>(r.read_uint());
      out = PowerBasisKey::bracket(a, run, b);
      break;
    }
    case kTagRect: {
      RectKey k;
      k.first = static_cast<Letter>(r.read_uint());
      k.last = static_cast<Letter>(r.read_uint());
      k.core = r.read_core();
      k.width = r.read_uint();
      k.height = r.read_uint();
      out = std::move(k);
      break;
    }
    default:
      throw std::invalid_argument("parse_reduced_key: not a reduced-stream key");
  }
  if (!r.done()) throw std::invalid_argument("parse_reduced_key: trailing bytes");
  return out;
}

Word core_word(const CoreList& core, std::int32_t rank) {
  Word w;
  if (rank == 2) {
    // Pure run list: a2 a1^{c1} a2 ... a1^{cp} a2.
    w.push_back(2);
    for (const CoreAtom& a : core) {
      w.insert(w.end(), a.value, kA1);
      w.push_back(2);
    }
    return w;
  }
  for (const CoreAtom& a : core) {
    if (a.kind == CoreAtom::Kind::letter) {
      w.push_back(static_cast<Letter>(a.value));
    } else {
      w.insert(w.end(), a.value, kA1);
    }
  }
  return w;
}

namespace {

void render_word_runs(std::ostream& os, const Word& w) {
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    if (!first) os << ' ';
    first = false;
    if (w[i] == kA1) {
      std::size_t run = 0;
      while (i < w.size() && w[i] == kA1) {
        ++run;
        ++i;
      }
      os << "a1";
      if (run > 1) os << '^' << run;
    } else {
      os << 'a' << w[i];
      ++i;
    }
  }
}

}  // namespace

std::string render_word(const Word& w) {
  if (w.empty()) return "eps";
  std::ostringstream os;
  render_word_runs(os, w);
  return os.str();
}

std::string render_key(const PowerBasisKey& key) {
  std::ostringstream os;
  os << "rho(";
  switch (key.kind) {
    case PowerBasisKey::Kind::empty_word:
      os << "eps";
      break;
    case PowerBasisKey::Kind::letter:
      os << 'a' << key.a;
      break;
    case PowerBasisKey::Kind::bracket: {
      Word w;
      w.push_back(key.a);
      w.insert(w.end(), key.run, kA1);
      w.push_back(key.b);
      render_word_runs(os, w);
      break;
    }
  }
  os << ')';
  return os.str();
}

std::string render_key(const RectKey& key) {
  // Rank-2 cores are pure run lists; higher-rank cores start with a letter.
  const bool rank2_core =
      key.core.empty() || key.core.front().kind == CoreAtom::Kind::run;
  std::ostringstream os;
  os << "sum_{i<" << key.width << ", j<" << key.height << "} rho(a" << key.first << " a1^i ";
  render_word_runs(os, core_word(key.core, rank2_core ? 2 : 3));
  os << " a1^j a" << key.last << ')';
  return os.str();
}

}  // namespace countcheck
