#include "countcheck/fastcheck.hpp"

#include <stdexcept>
#include <utility>

namespace countcheck {

Affixes split_power_affixes(const Word& w) {
  if (w.empty() || is_power_of_a1(w)) {
    throw std::invalid_argument("split_power_affixes: word is empty or a pure a1-power");
  }
  std::size_t lead = 0;
  while (w[lead] == kA1) ++lead;
  std::size_t trail = 0;
  while (w[w.size() - 1 - trail] == kA1) ++trail;
  Affixes out;
  out.lead = lead;
  out.trail = trail;
  out.middle.assign(w.begin() + lead, w.end() - trail);
  return out;
}

std::vector<EncodedTerm> decompose_term(const MonoidSpec& spec, const BigInt& coef,
                                        const Word& w) {
  std::vector<EncodedTerm> out;
  if (coef == 0) return out;

  const Affixes ax = split_power_affixes(w);
  const RunForm rf = run_form(ax.middle);
  const bool single_letter_middle = rf.runs.empty();

  std::vector<Boundary> point_slots;
  point_slots.reserve(rf.runs.size());
  for (std::uint64_t run : rf.runs) point_slots.push_back(Boundary::point(run));

  // Bare middle word.
  out.push_back(EncodedTerm{key_from_slots(spec, rf.letters, point_slots), coef});

  // Left boundary sums: sum over i < lead of rho_{s a1^i middle}. A
  // single-letter middle keeps the letter sum aggregated in one ShortKey;
  // otherwise one LongKey per boundary letter.
  if (ax.lead > 0) {
    if (single_letter_middle) {
      ShortKey k;
      k.left_any = true;
      k.right = rf.letters[0];
      k.span = Boundary::interval(ax.lead);
      out.push_back(EncodedTerm{std::move(k), -coef});
    } else {
      for (Letter s = 2; s <= spec.rank; ++s) {
        std::vector<Letter> letters;
        letters.reserve(rf.letters.size() + 1);
        letters.push_back(s);
        letters.insert(letters.end(), rf.letters.begin(), rf.letters.end());
        std::vector<Boundary> slots;
        slots.reserve(point_slots.size() + 1);
        slots.push_back(Boundary::interval(ax.lead));
        slots.insert(slots.end(), point_slots.begin(), point_slots.end());
        out.push_back(EncodedTerm{key_from_slots(spec, letters, slots), -coef});
      }
    }
  }

  if (ax.trail > 0) {
    if (single_letter_middle) {
      ShortKey k;
      k.right_any = true;
      k.left = rf.letters[0];
      k.span = Boundary::interval(ax.trail);
      out.push_back(EncodedTerm{std::move(k), -coef});
    } else {
      for (Letter s = 2; s <= spec.rank; ++s) {
        std::vector<Letter> letters = rf.letters;
        letters.push_back(s);
        std::vector<Boundary> slots = point_slots;
        slots.push_back(Boundary::interval(ax.trail));
        out.push_back(EncodedTerm{key_from_slots(spec, letters, slots), -coef});
      }
    }
  }

  // Two-sided sums always stay per letter pair: they carry the rectangle
  // coordinates and are basis elements of their group as they stand.
  if (ax.lead > 0 && ax.trail > 0) {
    for (Letter s1 = 2; s1 <= spec.rank; ++s1) {
      for (Letter s2 = 2; s2 <= spec.rank; ++s2) {
        std::vector<Letter> letters;
        letters.reserve(rf.letters.size() + 2);
        letters.push_back(s1);
        letters.insert(letters.end(), rf.letters.begin(), rf.letters.end());
        letters.push_back(s2);
        std::vector<Boundary> slots;
        slots.reserve(point_slots.size() + 2);
        slots.push_back(Boundary::interval(ax.lead));
        slots.insert(slots.end(), point_slots.begin(), point_slots.end());
        slots.push_back(Boundary::interval(ax.trail));
        out.push_back(EncodedTerm{key_from_slots(spec, letters, slots), coef});
      }
    }
  }
  return out;
}

BasisRoute classify(const EncodedTerm& t) {
  return encoded_length(t) <= 1 ? BasisRoute::power : BasisRoute::rect;
}

namespace {

class PowerBasisEmitter {
 public:
  PowerBasisEmitter(const MonoidSpec& spec, std::vector<PowerBasisTerm>& out)
      : rank_(spec.rank), out_(out) {}

  void key(PowerBasisKey k, const BigInt& coef) { out_.push_back({k, coef}); }

  // rho_s for a boundary letter s != a1. rho_{a2} = rho_eps - sum_{s != a2} rho_s.
  void single(Letter s, const BigInt& coef) {
    if (s != 2) {
      key(PowerBasisKey::letter(s), coef);
      return;
    }
    key(PowerBasisKey::empty_word(), coef);
    for (Letter t = 1; t <= rank_; ++t) {
      if (t != 2) key(PowerBasisKey::letter(t), -coef);
    }
  }

  // rho_{a1^run s} for s != a1, run >= 0.
  void left_power_bracket(std::uint64_t run, Letter s, const BigInt& coef) {
    if (s != 2) {
      key(run == 0 ? PowerBasisKey::letter(s) : PowerBasisKey::bracket(kA1, run - 1, s), coef);
      return;
    }
    // rho_{a1^run a2} = rho_{a1^run} - sum_{t != a2} rho_{a1^run t}
    key(PowerBasisKey::a1_power(run), coef);
    for (Letter t = 1; t <= rank_; ++t) {
      if (t != 2) left_power_bracket(run, t, -coef);
    }
  }

  // rho_{s a1^run} for s != a1, run >= 0.
  void right_power_bracket(Letter s, std::uint64_t run, const BigInt& coef) {
    if (s != 2) {
      key(run == 0 ? PowerBasisKey::letter(s) : PowerBasisKey::bracket(s, run - 1, kA1), coef);
      return;
    }
    key(PowerBasisKey::a1_power(run), coef);
    for (Letter t = 1; t <= rank_; ++t) {
      if (t != 2) right_power_bracket(t, run, -coef);
    }
  }

  // rho_{l a1^run r} for boundary letters != a1.
  void bracket(Letter l, std::uint64_t run, Letter r, const BigInt& coef) {
    const bool l2 = (l == 2), r2 = (r == 2);
    if (!l2 && !r2) {
      key(PowerBasisKey::bracket(l, run, r), coef);
    } else if (l2 && !r2) {
      // rho_{a2 a1^run r} = rho_{a1^run r} - sum_{s != a2} rho_{s a1^run r}
      left_power_bracket(run, r, coef);
      for (Letter s = 1; s <= rank_; ++s) {
        if (s != 2) key(PowerBasisKey::bracket(s, run, r), -coef);
      }
    } else if (!l2 && r2) {
      right_power_bracket(l, run, coef);
      for (Letter s = 1; s <= rank_; ++s) {
        if (s != 2) key(PowerBasisKey::bracket(l, run, s), -coef);
      }
    } else {
      // rho_{a2 a1^run a2} = rho_{a1^run} - sum rho_{a1^run s} - sum rho_{s a1^run}
      //                      + sum rho_{s a1^run s'}     (sums over s, s' != a2)
      key(PowerBasisKey::a1_power(run), coef);
      for (Letter s = 1; s <= rank_; ++s) {
        if (s == 2) continue;
        left_power_bracket(run, s, -coef);
        right_power_bracket(s, run, -coef);
        for (Letter s2 = 1; s2 <= rank_; ++s2) {
          if (s2 != 2) key(PowerBasisKey::bracket(s, run, s2), coef);
        }
      }
    }
  }

 private:
  std::int32_t rank_;
  std::vector<PowerBasisTerm>& out_;
};

}  // namespace

std::vector<PowerBasisTerm> rewrite_short(const MonoidSpec& spec, const EncodedTerm& t) {
  std::vector<PowerBasisTerm> out;
  PowerBasisEmitter emit(spec, out);

  if (const auto* p = std::get_if<PowerKey>(&t.key)) {
    emit.key(PowerBasisKey::a1_power(p->exponent), t.coef);
    return out;
  }
  const auto* s = std::get_if<ShortKey>(&t.key);
  if (s == nullptr) {
    throw std::invalid_argument("rewrite_short: term is not on the power route");
  }
  if (!s->span) {
    emit.single(s->left, t.coef);
    return out;
  }
  if (s->span->kind == Boundary::Kind::point) {
    if (s->left_any || s->right_any) {
      throw std::invalid_argument("rewrite_short: point span cannot carry a letter sum");
    }
    emit.bracket(s->left, s->span->value, s->right, t.coef);
    return out;
  }
  // Interval span: an aggregated boundary sum. With count = span count,
  //   left_any:  sum_{s != a1} sum_{i < count} rho_{s a1^i beta} = rho_beta - rho_{a1^count beta}
  //   right_any: sum_{s != a1} sum_{j < count} rho_{beta a1^j s} = rho_beta - rho_{beta a1^count}
  // (telescoping the extension relation along the a1-run).
  const std::uint64_t count = s->span->value;
  if (count == 0) return out;  // empty sum; callers normally drop these earlier
  if (s->left_any == s->right_any) {
    throw std::invalid_argument("rewrite_short: interval span needs exactly one summed side");
  }
  if (s->left_any) {
    emit.single(s->right, t.coef);
    emit.left_power_bracket(count, s->right, -t.coef);
  } else {
    emit.single(s->left, t.coef);
    emit.right_power_bracket(s->left, count, -t.coef);
  }
  return out;
}

std::vector<RectTerm> to_rectangles(const EncodedTerm& t) {
  const auto* l = std::get_if<LongKey>(&t.key);
  if (l == nullptr) {
    throw std::invalid_argument("to_rectangles: term is not on the rectangle route");
  }

  // A point slot k stands for multiplicity difference (k+1) - (k); an interval
  // slot is already a multiplicity.
  struct Piece {
    std::uint64_t mult;
    int sign;
  };
  auto pieces = [](const Boundary& b) -> std::vector<Piece> {
    if (b.kind == Boundary::Kind::interval) return {{b.value, +1}};
    return {{b.value + 1, +1}, {b.value, -1}};
  };

  std::vector<RectTerm> out;
  for (const Piece& pl : pieces(l->left)) {
    for (const Piece& pr : pieces(l->right)) {
      if (pl.mult == 0 || pr.mult == 0) continue;
      RectKey k;
      k.first = l->first;
      k.last = l->last;
      k.core = l->core;
      k.width = pl.mult;
      k.height = pr.mult;
      out.push_back(RectTerm{std::move(k), pl.sign * pr.sign > 0 ? t.coef : -t.coef});
    }
  }
  return out;
}

namespace {

// Runs one function through decompose/classify/rewrite and emits serialized
// keyed terms into the two reduce streams.
void feed_terms(const MonoidSpec& spec, const CountingFunction& fn, bool negate,
                std::vector<KeyedTerm>& power_stream, std::vector<KeyedTerm>& rect_stream,
                CheckStats& stats) {
  auto emit_power = [&](const PowerBasisKey& key, const BigInt& coef) {
    std::string bytes = serialize_key(key);
    stats.key_bytes += bytes.size();
    ++stats.power_terms;
    power_stream.push_back(KeyedTerm{std::move(bytes), coef});
  };
  auto emit_rect = [&](const RectTerm& rt) {
    std::string bytes = serialize_key(rt.key);
    stats.key_bytes += bytes.size();
    ++stats.rect_terms;
    rect_stream.push_back(KeyedTerm{std::move(bytes), rt.coef});
  };

  for (const Term& t : fn.terms) {
    if (t.coef == 0) continue;
    const BigInt coef = negate ? BigInt(-t.coef) : t.coef;
    if (is_power_of_a1(t.word)) {
      emit_power(PowerBasisKey::a1_power(t.word.size()), coef);
      continue;
    }
    for (const EncodedTerm& enc : decompose_term(spec, coef, t.word)) {
      if (classify(enc) == BasisRoute::power) {
        for (const PowerBasisTerm& pt : rewrite_short(spec, enc)) {
          emit_power(pt.key, pt.coef);
        }
      } else {
        for (const RectTerm& rt : to_rectangles(enc)) {
          emit_rect(rt);
        }
      }
    }
  }
}

}  // namespace

Verdict check_equivalent(const CountingFunction& f, const CountingFunction& g,
                         const CheckOptions& opts) {
  if (f.spec.rank != g.spec.rank) {
    throw std::invalid_argument("check_equivalent: rank mismatch");
  }
  const MonoidSpec spec = f.spec;

  std::vector<KeyedTerm> power_stream;
  std::vector<KeyedTerm> rect_stream;
  CheckStats local_stats;
  CheckStats& stats = opts.stats ? *opts.stats : local_stats;
  stats = CheckStats{};

  feed_terms(spec, f, false, power_stream, rect_stream, stats);
  feed_terms(spec, g, true, power_stream, rect_stream, stats);

  const TrivialityResult power_result = is_trivial(std::move(power_stream), opts.backend);
  const TrivialityResult rect_result = is_trivial(std::move(rect_stream), opts.backend);

  if (power_result.trivial && rect_result.trivial) {
    return Verdict{true, std::nullopt};
  }

  const KeyedTerm& kt =
      power_result.trivial ? *rect_result.witness : *power_result.witness;
  Witness w;
  w.key = kt.key;
  w.coefficient = kt.coefficient;
  const auto parsed = parse_reduced_key(kt.key);
  if (const auto* pk = std::get_if<PowerBasisKey>(&parsed)) {
    w.text = render_key(*pk);
  } else {
    w.text = render_key(std::get<RectKey>(parsed));
  }
  return Verdict{false, std::move(w)};
}

BasisDecomposition basis_decomposition(const CountingFunction& f, ReduceBackend backend) {
  std::vector<KeyedTerm> power_stream;
  std::vector<KeyedTerm> rect_stream;
  CheckStats stats;
  feed_terms(f.spec, f, false, power_stream, rect_stream, stats);

  BasisDecomposition out;
  for (KeyedTerm& kt : reduce(std::move(power_stream), backend)) {
    out.power.push_back(PowerBasisTerm{std::get<PowerBasisKey>(parse_reduced_key(kt.key)),
                                       std::move(kt.coefficient)});
  }
  for (KeyedTerm& kt : reduce(std::move(rect_stream), backend)) {
    out.rect.push_back(
        RectTerm{std::get<RectKey>(parse_reduced_key(kt.key)), std::move(kt.coefficient)});
  }
  return out;
}

}  // namespace countcheck
