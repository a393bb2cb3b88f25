#include "gasket/membership.hpp"

#include <array>
#include <functional>

#include "gasket/error.hpp"
#include "gasket/expansions.hpp"

namespace gasket {

namespace {

using Below = std::function<bool(const EPSeq&)>;

Below below_sequence(const EPSeq& delta) {
  return [delta](const EPSeq& s) { return lex_compare(s, delta) == Ordering::Less; };
}

Below below_base(const AlgebraicReal& beta, std::size_t horizon) {
  QuasiGreedyExpansion e = delta_expansion(beta, horizon);
  if (e.digits) return below_sequence(*e.digits);
  return [prefix = std::move(e.prefix)](const EPSeq& s) {
    const auto o = compare_with_prefix(s, prefix);
    if (!o) {
      throw Error(ErrorCode::UndecidedAtHorizon,
                  "delta(beta) has no detected period and its prefix does not decide " + s.str());
    }
    return *o == Ordering::Less;
  };
}

std::array<BinaryWord, 3> projections(const OmegaWord& w) {
  Projections p = project(w);
  return {std::move(p.first), std::move(p.second), std::move(p.complement_sum)};
}

void require_primitive(const OmegaWord& d, std::size_t k) {
  if (k == 0 || d.size() != k || smallest_period(d) != k) {
    throw Error(ErrorCode::NotPrimitive, "word " + d.str() + " does not have smallest period " + std::to_string(k));
  }
}

MembershipVerdict periodic_verdict(const OmegaWord& d, std::size_t k, const Below& below) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "periodic membership needs k >= 2");
  const HatSequence h = hat_sequence_with_witness(d, k);
  if (below(h.value)) return {true, std::nullopt};
  return {false, h.argmax};
}

MembershipVerdict general_verdict(const OmegaEPSeq& d, const Below& below) {
  const auto pre = projections(d.preperiod());
  const auto per = projections(d.period());
  const std::size_t p = d.preperiod().size();
  const std::size_t total = p + d.period().size();
  // The complement-sum projection is the reflection of d^+, so its guard
  // d_n^+ = 1 reads as a 0 digit like the other two.
  for (std::size_t n = 1; n <= total; ++n) {
    for (int j = 0; j < 3; ++j) {
      const std::uint8_t digit = n - 1 < p ? pre[j][n - 1] : per[j][(n - 1 - p) % per[j].size()];
      if (digit != 0) continue;
      const EPSeq tail = EPSeq(pre[j], per[j]).shifted(n);
      if (!below(tail)) return {false, ShiftWitness{static_cast<Projection>(j), n}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace

const char* to_string(Projection p) noexcept {
  switch (p) {
    case Projection::First: return "d1";
    case Projection::Second: return "d2";
    case Projection::ComplementSum: return "reflected-d+";
  }
  return "?";
}

HatSequence hat_sequence_with_witness(const OmegaWord& d, std::size_t k) {
  require_primitive(d, k);
  const auto proj = projections(d);
  // Every candidate is k-periodic, so comparing one period decides the order.
  BinaryWord best;
  ShiftWitness arg{Projection::First, 0};
  for (int j = 0; j < 3; ++j) {
    for (std::size_t n = 0; n < k; ++n) {
      BinaryWord r = proj[j].rotated(n);
      if (best.empty() || compare_words(r, best) == Ordering::Greater) {
        best = std::move(r);
        arg = {static_cast<Projection>(j), n};
      }
    }
  }
  return {EPSeq::periodic(std::move(best)), arg};
}

EPSeq hat_sequence(const OmegaWord& d, std::size_t k) {
  return hat_sequence_with_witness(d, k).value;
}

MembershipVerdict in_U_beta_periodic(const OmegaWord& d, std::size_t k, const AlgebraicReal& beta,
                                     std::size_t horizon) {
  require_primitive(d, k);
  return periodic_verdict(d, k, below_base(beta, horizon));
}

MembershipVerdict in_U_beta_periodic(const OmegaWord& d, std::size_t k, const EPSeq& delta) {
  return periodic_verdict(d, k, below_sequence(delta));
}

MembershipVerdict in_U_beta_general(const OmegaEPSeq& d, const AlgebraicReal& beta, std::size_t horizon) {
  return general_verdict(d, below_base(beta, horizon));
}

MembershipVerdict in_U_beta_general(const OmegaEPSeq& d, const EPSeq& delta) {
  return general_verdict(d, below_sequence(delta));
}

}  // namespace gasket
