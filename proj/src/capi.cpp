#include "gasket/gasket.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gasket/admissible.hpp"
#include "gasket/config.hpp"
#include "gasket/critical.hpp"
#include "gasket/error.hpp"
#include "gasket/expansions.hpp"
#include "gasket/figures.hpp"
#include "gasket/membership.hpp"

struct gasket_config {
  gasket::Config cfg;
};

struct gasket_real {
  gasket::AlgebraicReal value;
};

struct gasket_record {
  gasket::CriticalBaseRecord rec;
};

struct gasket_report {
  gasket::Report report;
};

namespace {

thread_local std::string last_error;

struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

gasket_status status_of(gasket::ErrorCode c) {
  // The C enum lists the codes in the same order, offset by one.
  return static_cast<gasket_status>(static_cast<int>(c) + 1);
}

template <class F>
gasket_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return GASKET_OK;
  } catch (const NullArgument& e) {
    last_error = e.what();
    return GASKET_E_NULL_ARGUMENT;
  } catch (const gasket::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return GASKET_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return GASKET_E_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) throw NullArgument(name);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// "p/q", an integer, or a plain decimal such as 1.6363.
mpq_class parse_rational(const char* text) {
  const std::string s(text);
  const auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      mpq_class q(s);
      q.canonicalize();
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      return q;
    }
    const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos || frac.empty()) {
      throw std::invalid_argument("bad fraction");
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    mpq_class q(mpz_class((whole.empty() || whole == "-" ? whole + "0" : whole) + frac), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw gasket::Error(gasket::ErrorCode::Parse, "not a rational number: '" + s + "'");
  }
}

gasket::AdmissibilityOptions admissibility(const gasket_config* c) {
  gasket::AdmissibilityOptions o;
  if (c) {
    o.jobs = c->cfg.jobs;
    o.positionwise_chain = c->cfg.positionwise_chain;
    o.max_zeros = c->cfg.max_representation_zeros;
  }
  return o;
}

gasket::Config config_of(const gasket_config* c) { return c ? c->cfg : gasket::Config::from_environment(); }

template <class F>
gasket_status make_report(gasket_report** out, F&& f) {
  return guarded([&] {
    need(out, "out");
    *out = new gasket_report{f()};
  });
}

template <class F>
gasket_status make_real(gasket_real** out, F&& f) {
  return guarded([&] {
    need(out, "out");
    *out = new gasket_real{f()};
  });
}

char* verdict_detail(const gasket::MembershipVerdict& v) {
  if (v.member) return nullptr;
  return dup(std::string(gasket::to_string(v.violating_shift->projection)) + " shift " +
             std::to_string(v.violating_shift->shift));
}

}  // namespace

extern "C" {

const char* gasket_status_string(gasket_status s) {
  switch (s) {
    case GASKET_OK: return "ok";
    case GASKET_E_NULL_ARGUMENT: return "null argument";
    case GASKET_E_INTERNAL: return "internal error";
    default: break;
  }
  if (s > GASKET_OK && s < GASKET_E_NULL_ARGUMENT) {
    return gasket::to_string(static_cast<gasket::ErrorCode>(static_cast<int>(s) - 1));
  }
  return "unknown status";
}

const char* gasket_last_error(void) { return last_error.c_str(); }

void gasket_string_free(char* s) { std::free(s); }

gasket_status gasket_config_new(gasket_config** out) {
  return guarded([&] {
    need(out, "out");
    *out = new gasket_config{gasket::Config::from_environment()};
  });
}

void gasket_config_free(gasket_config* c) { delete c; }

gasket_status gasket_config_set_jobs(gasket_config* c, unsigned jobs) {
  return guarded([&] {
    need(c, "config");
    if (jobs == 0 || jobs > 256) throw gasket::Error(gasket::ErrorCode::InvalidArgument, "jobs must lie in 1..256");
    c->cfg.jobs = jobs;
  });
}

gasket_status gasket_config_set_quotient_symmetry(gasket_config* c, int on) {
  return guarded([&] {
    need(c, "config");
    c->cfg.quotient_symmetry = on != 0;
  });
}

gasket_status gasket_config_set_max_oracle_k(gasket_config* c, int k) {
  return guarded([&] {
    need(c, "config");
    if (k < 2 || k > 64) throw gasket::Error(gasket::ErrorCode::InvalidArgument, "oracle cap must lie in 2..64");
    c->cfg.max_oracle_k = k;
  });
}

gasket_status gasket_config_set_positionwise_chain(gasket_config* c, int on) {
  return guarded([&] {
    need(c, "config");
    c->cfg.positionwise_chain = on != 0;
  });
}

gasket_status gasket_config_max_oracle_k(const gasket_config* c, int* out) {
  return guarded([&] {
    need(c, "config");
    need(out, "out");
    *out = c->cfg.max_oracle_k;
  });
}

gasket_status gasket_real_from_sequence(const char* delta, gasket_real** out) {
  return make_real(out, [&] {
    need(delta, "delta");
    return gasket::delta_inverse(gasket::EPSeq::parse(delta));
  });
}

gasket_status gasket_real_from_poly(const char* poly, gasket_real** out) {
  return make_real(out, [&] {
    need(poly, "poly");
    return gasket::isolate_root_in_unit_two(gasket::IntPolynomial::parse(poly));
  });
}

gasket_status gasket_real_from_rational(const char* q, gasket_real** out) {
  return make_real(out, [&] {
    need(q, "q");
    return gasket::AlgebraicReal::rational(parse_rational(q));
  });
}

gasket_status gasket_real_named(const char* name, int n, gasket_real** out) {
  return make_real(out, [&] {
    need(name, "name");
    const std::string s(name);
    if (s == "beta_a") return gasket::beta_a();
    if (s == "beta_star") return gasket::beta_star();
    if (s == "rho") {
      if (n < 1 || n > 20) throw gasket::Error(gasket::ErrorCode::InvalidArgument, "rho index must lie in 1..20");
      return gasket::rho(n);
    }
    if (s == "hat_beta") {
      if (n < 0 || n > 12) throw gasket::Error(gasket::ErrorCode::InvalidArgument, "hat_beta index must lie in 0..12");
      return gasket::hat_beta(n);
    }
    throw gasket::Error(gasket::ErrorCode::InvalidArgument, "unknown constant '" + s + "'");
  });
}

void gasket_real_free(gasket_real* x) { delete x; }

gasket_status gasket_real_decimal(const gasket_real* x, int digits, char** out) {
  return guarded([&] {
    need(x, "x");
    need(out, "out");
    *out = dup(gasket::to_decimal(x->value, digits));
  });
}

gasket_status gasket_real_poly(const gasket_real* x, char** out) {
  return guarded([&] {
    need(x, "x");
    need(out, "out");
    *out = dup(x->value.poly().str());
  });
}

gasket_status gasket_real_compare(const gasket_real* a, const gasket_real* b, int* out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = static_cast<int>(gasket::compare(a->value, b->value));
  });
}

gasket_status gasket_delta_expansion(const gasket_real* beta, size_t horizon, char** prefix, char** sequence) {
  return guarded([&] {
    need(beta, "beta");
    need(prefix, "prefix");
    need(sequence, "sequence");
    const gasket::QuasiGreedyExpansion e = gasket::delta_expansion(beta->value, horizon);
    *prefix = dup(e.prefix.str());
    *sequence = e.digits ? dup(e.digits->str()) : nullptr;
  });
}

gasket_status gasket_quasi_greedy(const gasket_real* beta, size_t n, char** out) {
  return guarded([&] {
    need(beta, "beta");
    need(out, "out");
    *out = dup(gasket::quasi_greedy(beta->value, n).str());
  });
}

gasket_status gasket_is_parry_valid(const char* sequence, int* out) {
  return guarded([&] {
    need(sequence, "sequence");
    need(out, "out");
    *out = gasket::is_parry_valid(gasket::EPSeq::parse(sequence)) ? 1 : 0;
  });
}

gasket_status gasket_beta_c_bracket(const char* width, int digits, char** lo, char** hi, int* level) {
  return guarded([&] {
    need(width, "width");
    need(lo, "lo");
    need(hi, "hi");
    const gasket::RationalInterval b = gasket::approx_beta_c(parse_rational(width), gasket::Config{}.max_beta_c_level);
    *lo = dup(gasket::to_decimal(b.lo, digits, -1));
    *hi = dup(gasket::to_decimal(b.hi, digits, 1));
    if (level) *level = b.level;
  });
}

gasket_status gasket_beta_closed_form(uint64_t k, gasket_record** out) {
  return guarded([&] {
    need(out, "out");
    *out = new gasket_record{gasket::beta_k_closed_form(k)};
  });
}

gasket_status gasket_beta_oracle(const gasket_config* c, int k, uint64_t budget, gasket_record** out) {
  return guarded([&] {
    need(out, "out");
    gasket::OracleOptions o = gasket::OracleOptions::from_config(config_of(c));
    o.budget = budget;
    *out = new gasket_record{gasket::beta_k_oracle(k, o)};
  });
}

void gasket_record_free(gasket_record* r) { delete r; }

gasket_status gasket_record_k(const gasket_record* r, uint64_t* out) {
  return guarded([&] {
    need(r, "record");
    need(out, "out");
    *out = r->rec.k;
  });
}

gasket_status gasket_record_delta(const gasket_record* r, char** out) {
  return guarded([&] {
    need(r, "record");
    need(out, "out");
    *out = dup(r->rec.delta.str());
  });
}

gasket_status gasket_record_poly(const gasket_record* r, char** out) {
  return guarded([&] {
    need(r, "record");
    need(out, "out");
    *out = dup(r->rec.poly.str());
  });
}

gasket_status gasket_record_decimal(const gasket_record* r, int digits, char** out) {
  return guarded([&] {
    need(r, "record");
    need(out, "out");
    *out = dup(gasket::to_decimal(r->rec.value, digits));
  });
}

gasket_status gasket_record_provenance(const gasket_record* r, gasket_provenance* out) {
  return guarded([&] {
    need(r, "record");
    need(out, "out");
    *out = r->rec.provenance == gasket::Provenance::Oracle ? GASKET_ORACLE : GASKET_CLOSED_FORM;
  });
}

gasket_status gasket_record_is_sentinel(const gasket_record* r, int* out) {
  return guarded([&] {
    need(r, "record");
    need(out, "out");
    *out = r->rec.sentinel ? 1 : 0;
  });
}

gasket_status gasket_record_witness(const gasket_record* r, char** out) {
  return guarded([&] {
    need(r, "record");
    need(out, "out");
    *out = r->rec.witness ? dup(r->rec.witness->str()) : nullptr;
  });
}

gasket_status gasket_record_value(const gasket_record* r, gasket_real** out) {
  return make_real(out, [&] {
    need(r, "record");
    return r->rec.value;
  });
}

gasket_status gasket_record_perron(const gasket_record* r, int numeric, int* theorem_backed, char** margin) {
  return guarded([&] {
    need(r, "record");
    need(theorem_backed, "theorem_backed");
    need(margin, "margin");
    if (r->rec.sentinel) throw gasket::Error(gasket::ErrorCode::InvalidArgument, "beta_1 = 1 is not a Perron number");
    const gasket::PerronCertificate c = numeric ? gasket::perron_certify_numeric(r->rec.poly, r->rec.value)
                                                : gasket::perron_certify(r->rec.poly, r->rec.value, true);
    *theorem_backed = c.theorem_backed ? 1 : 0;
    *margin = c.margin ? dup(gasket::to_decimal(*c.margin, 12, -1)) : nullptr;
  });
}

gasket_status gasket_member_periodic(const char* word, const gasket_real* beta, int* member, char** detail) {
  return guarded([&] {
    need(word, "word");
    need(beta, "beta");
    need(member, "member");
    need(detail, "detail");
    const gasket::OmegaWord d = gasket::OmegaWord::parse(word);
    const gasket::MembershipVerdict v = gasket::in_U_beta_periodic(d, d.size(), beta->value);
    *member = v.member ? 1 : 0;
    *detail = verdict_detail(v);
  });
}

gasket_status gasket_member_general(const char* sequence, const gasket_real* beta, int* member, char** detail) {
  return guarded([&] {
    need(sequence, "sequence");
    need(beta, "beta");
    need(member, "member");
    need(detail, "detail");
    const gasket::MembershipVerdict v = gasket::in_U_beta_general(gasket::OmegaEPSeq::parse(sequence), beta->value);
    *member = v.member ? 1 : 0;
    *detail = verdict_detail(v);
  });
}

gasket_status gasket_hat_sequence(const char* word, char** out) {
  return guarded([&] {
    need(word, "word");
    need(out, "out");
    const gasket::OmegaWord d = gasket::OmegaWord::parse(word);
    *out = dup(gasket::hat_sequence(d, d.size()).str());
  });
}

gasket_status gasket_verify_sharkovskii(int max_index, gasket_report** out) {
  return make_report(out, [&] { return gasket::verify_sharkovskii_theorem(max_index); });
}

gasket_status gasket_verify_identity_6m4(int max_m, gasket_report** out) {
  return make_report(out, [&] { return gasket::verify_identity_6m4(max_m); });
}

gasket_status gasket_verify_oracle(const gasket_config* c, int k_max, gasket_report** out) {
  return make_report(out, [&] {
    return gasket::verify_oracle_against_closed_form(k_max, gasket::OracleOptions::from_config(config_of(c)));
  });
}

gasket_status gasket_verify_key_proposition(const gasket_config* c, int k_max, gasket_report** out) {
  return make_report(out, [&] { return gasket::verify_key_proposition(k_max, admissibility(c)); });
}

gasket_status gasket_verify_dichotomy(const gasket_config* c, int l, int m, gasket_report** out) {
  return make_report(out, [&] { return gasket::verify_dichotomy(l, m, admissibility(c)); });
}

gasket_status gasket_verify_asymptotics(int l_max, int n_max, int m_max, gasket_report** out) {
  return make_report(out, [&] { return gasket::asymptotics_report(l_max, n_max, m_max); });
}

void gasket_report_free(gasket_report* r) { delete r; }

gasket_status gasket_report_ok(const gasket_report* r, int* out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = r->report.ok() ? 1 : 0;
  });
}

gasket_status gasket_report_text(const gasket_report* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = dup(r->report.text());
  });
}

gasket_status gasket_representations(const gasket_config* c, const char* block, size_t* count, char** out) {
  return guarded([&] {
    need(block, "block");
    need(count, "count");
    need(out, "out");
    const auto reps = gasket::representations(gasket::BinaryWord::parse(block), admissibility(c));
    std::string s;
    for (const auto& w : reps) s += w.block.str() + "\n";
    *count = reps.size();
    *out = dup(s);
  });
}

gasket_status gasket_graph_edges(int which, int n, char** out) {
  return guarded([&] {
    need(out, "out");
    if (which == 0) {
      *out = dup(gasket::sft_x().edge_list());
    } else if (which == 1) {
      *out = dup(gasket::block_graph(n).edge_list());
    } else {
      throw gasket::Error(gasket::ErrorCode::InvalidArgument, "graph selector must be 0 or 1");
    }
  });
}

gasket_status gasket_figure_csv(int figure, int digits, int range, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(gasket::figure_table(figure, digits, range).csv());
  });
}

gasket_status gasket_overlap_csv(const char* beta_lo, const char* beta_hi, int digits, char** out) {
  return guarded([&] {
    need(beta_lo, "beta_lo");
    need(beta_hi, "beta_hi");
    need(out, "out");
    const gasket::OverlapRegion r = gasket::overlap_region(parse_rational(beta_lo), parse_rational(beta_hi));
    std::ostringstream os;
    os << "triangle,vertex,x_lo,x_hi,y_lo,y_hi\n";
    const gasket::OverlapTriangle* tri[] = {&r.o0, &r.o1, &r.o2};
    for (int t = 0; t < 3; ++t) {
      for (int v = 0; v < 3; ++v) {
        const auto& p = tri[t]->vertices[v];
        os << 'O' << t << ',' << v << ',' << gasket::to_decimal(p.x.lo, digits, -1) << ','
           << gasket::to_decimal(p.x.hi, digits, 1) << ',' << gasket::to_decimal(p.y.lo, digits, -1) << ','
           << gasket::to_decimal(p.y.hi, digits, 1) << '\n';
      }
    }
    *out = dup(os.str());
  });
}

}  // extern "C"
