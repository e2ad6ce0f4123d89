#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace kei::cli {

namespace {

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError(std::string(what) + " must be a non-negative integer, got '" +
                          std::string(text) + "'");
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(sep, pos);
    out.emplace_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

FiniteQuandle swap3() { return FiniteQuandle(3, {0, 2, 1, 0, 1, 2, 0, 1, 2}); }

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::optional<Alphabet> alphabet_from(const std::optional<std::vector<std::string>>& names) {
  if (!names) return std::nullopt;
  return Alphabet(*names);
}

}  // namespace

Limits limits_from_environment() {
  Limits limits;
  auto apply = [](const char* var, std::size_t& field) {
    if (const char* v = std::getenv(var); v && *v) {
      field = parse_size(v, var);
      if (field == 0) throw ValidationError(std::string(var) + " must be positive");
    }
  };
  apply("KEI_MAX_ORDER", limits.max_order);
  apply("KEI_MAX_WORD_LENGTH", limits.max_word_length);
  apply("KEI_MAX_BALL_SIZE", limits.max_ball_size);
  return limits;
}

FiniteGroup resolve_group(const std::string& spec, const Limits& limits) {
  if (std::filesystem::is_regular_file(spec))
    return parse_group(read_file(spec), limits.max_order);
  auto g = named_group(spec);
  if (g.order() > limits.max_order)
    throw LimitError("group '" + spec + "' exceeds the order cap");
  return g;
}

FiniteQuandle resolve_quandle(const std::string& spec, const Limits& limits) {
  if (spec == "swap3") return swap3();
  const auto colon = spec.find(':');
  if (colon == std::string::npos || std::filesystem::exists(spec))
    return parse_quandle(read_file(spec), limits.max_order);
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "dihedral" || kind == "trivial") {
    std::size_t n = parse_size(arg, kind);
    if (n > limits.max_order) throw LimitError(spec + " exceeds the order cap");
    return kind == "dihedral" ? dihedral_quandle(n) : trivial_quandle(n);
  }
  if (kind == "conj") return conj_quandle(resolve_group(arg, limits));
  if (kind == "core") return core_quandle(resolve_group(arg, limits));
  if (kind == "inv") return inv_quandle(resolve_group(arg, limits)).quandle;
  throw ValidationError("unknown builtin quandle '" + spec + "'");
}

CheckOutcome cmd_check(const FiniteQuandle& q, bool quandle, bool involutory) {
  CheckOutcome out;
  out.n = q.size();
  auto rack = check_rack(q);
  AxiomResult r{"rack", rack.is_rack, {}, ""};
  if (rack.witness) {
    if (auto* row = std::get_if<NonBijectiveRow>(&*rack.witness)) {
      r.witness = {row->row};
      r.detail = "row " + std::to_string(row->row) + " is not a bijection";
    } else {
      auto [x, y, z] = std::get<DistributivityFailure>(*rack.witness);
      r.witness = {x, y, z};
      std::ostringstream d;
      d << x << " ▷ (" << y << " ▷ " << z << ") = " << q.op(x, q.op(y, z)) << " but ("
        << x << " ▷ " << y << ") ▷ (" << x << " ▷ " << z
        << ") = " << q.op(q.op(x, y), q.op(x, z));
      r.detail = d.str();
    }
  }
  out.axioms.push_back(r);
  out.ok = rack.is_rack;
  if (!rack.is_rack) return out;

  if (quandle || involutory) {
    auto qr = check_quandle(q);
    AxiomResult a{"quandle", qr.is_quandle, {}, ""};
    if (qr.witness) {
      a.witness = {*qr.witness};
      a.detail = std::to_string(*qr.witness) + " ▷ " + std::to_string(*qr.witness) + " = " +
                 std::to_string(q.op(*qr.witness, *qr.witness));
    }
    out.axioms.push_back(a);
    out.ok = out.ok && qr.is_quandle;
  }
  if (involutory) {
    auto ir = check_involutory(q);
    AxiomResult a{"involutory", ir.is_involutory, {}, ""};
    if (ir.witness) {
      auto [x, y] = *ir.witness;
      a.witness = {x, y};
      a.detail = std::to_string(x) + " ▷ (" + std::to_string(x) + " ▷ " + std::to_string(y) +
                 ") = " + std::to_string(q.op(x, q.op(x, y)));
    }
    out.axioms.push_back(a);
    out.ok = out.ok && ir.is_involutory;
  }
  return out;
}

LaurentOutcome cmd_laurent(std::size_t n, const std::string& group_spec,
                           const std::optional<std::string>& signs, const Limits& limits) {
  auto g = resolve_group(group_spec, limits);
  auto action = signs ? action_from_signs(g, *signs) : default_action(g);
  if (n * g.order() > limits.max_order)
    throw LimitError("Z/" + std::to_string(n) + " ⋊ " + group_spec +
                     " exceeds the order cap");
  auto report = verify_laurent(n, action);
  auto sd = build_semidirect(n, action);
  auto inv = semidirect_involutions(sd);

  LaurentOutcome out;
  out.n = n;
  out.group = group_spec;
  out.character = action.character();
  out.involutions = report.involution_count;
  out.iso_verified = report.iso_verified;
  out.pairs_checked = report.pairs_checked;
  const auto g_inv = inv_quandle(g).to_group;
  for (std::size_t i = 0; i < inv.labels.size(); ++i) {
    auto [a, s] = inv.labels[i];
    Element image = report.iso.map[i];
    Element s_index = static_cast<Element>(image / n);
    std::size_t b = image % n;
    out.iso.push_back({pair_label(std::to_string(a), g.label(s)),
                       pair_label(g.label(g_inv[s_index]), std::to_string(b))});
  }
  return out;
}

namespace {

template <typename Value>
ProbeOutcome probe_outcome(const FreeKei& free, const ProbeResult<Value>& r,
                           std::string model, std::string value) {
  ProbeOutcome out;
  out.model = std::move(model);
  out.depth = r.depth;
  out.elements_checked = r.elements_checked;
  out.relation_found = r.relation.has_value();
  if (r.relation) {
    out.relation_depth = r.relation->depth();
    out.lhs = free.format_operation(r.relation->lhs);
    out.rhs = free.format_operation(r.relation->rhs);
    out.value = std::move(value);
  }
  return out;
}

}  // namespace

ProbeOutcome cmd_freeprobe_ev(std::size_t depth, const Limits& limits) {
  auto r = ev_freeness_probe(depth, limits);
  FreeKei free(ev_generator_alphabet());
  return probe_outcome(free, r, "ev", r.value ? format_ev(*r.value) : "");
}

ProbeOutcome cmd_freeprobe_file(const FiniteQuandle& q, const std::string& model,
                                const std::vector<Element>& generators,
                                std::size_t depth, const Limits& limits) {
  if (generators.empty()) throw ValidationError("--gens needs at least one element");
  for (Element g : generators)
    if (g >= q.size())
      throw ValidationError("generator " + std::to_string(g) + " is not an element");
  auto r = freeness_probe(q, generators, depth, limits);
  FreeKei free(Alphabet::standard(generators.size()));
  return probe_outcome(free, r, model, r.value ? std::to_string(*r.value) : "");
}

OrbitsOutcome cmd_orbits(const FiniteQuandle& q) {
  auto part = orbits(q);
  return {q.size(), part.count(), part.classes};
}

HomCountOutcome cmd_homcount(const FiniteQuandle& src, const FiniteQuandle& tgt,
                             std::optional<std::size_t> list) {
  HomCountOutcome out{src.size(), tgt.size(), hom_count(src, tgt), {}};
  if (list && *list > 0)
    for (auto& f : enumerate_homs(src, tgt, *list).morphisms) out.morphisms.push_back(f.map);
  return out;
}

EnumerateOutcome cmd_enumerate(const std::string& kind, std::size_t rank,
                               std::size_t radius, const Limits& limits) {
  if (rank == 0) throw ValidationError("--rank must be positive");
  auto alphabet = Alphabet::standard(rank);
  EnumerateOutcome out{kind, rank, radius, {}};
  if (kind == "coxeter" || kind == "free") {
    auto mode = kind == "free" ? WordMode::free : WordMode::coxeter;
    for (const auto& w : ball_enumerate(rank, mode, radius, limits))
      out.elements.push_back(format_word(w, alphabet));
  } else if (kind == "fiq") {
    FreeKei free(alphabet);
    for (const auto& x : free.ball(radius, limits)) out.elements.push_back(free.format(x));
  } else {
    throw ValidationError("unknown ball kind '" + kind + "' (coxeter, free or fiq)");
  }
  return out;
}

EnvelopeOutcome cmd_envelope(const FiniteQuandle& q,
                             const std::optional<std::vector<std::string>>& names,
                             std::size_t a, std::size_t b, const SearchOptions& options) {
  auto p = enveloping_presentation(q, alphabet_from(names));
  if (a >= q.size() || b >= q.size())
    throw ValidationError("--a and --b must be elements of the quandle");
  auto search = derive_equal(p, static_cast<Generator>(a), static_cast<Generator>(b), options);
  EnvelopeOutcome out;
  out.generators = p.generators.names();
  out.a = a;
  out.b = b;
  out.depth = options.depth;
  out.found = search.certificate.has_value();
  out.states_explored = search.states_explored;
  out.state_cap_hit = search.state_cap_hit;
  if (search.certificate) out.certificate = certificate_to_json(*search.certificate, p.generators);
  return out;
}

VerifyOutcome cmd_verify(const FiniteQuandle& q,
                         const std::optional<std::vector<std::string>>& names,
                         const nlohmann::json& certificate) {
  auto p = enveloping_presentation(q, alphabet_from(names));
  // Accept either a bare certificate or a whole envelope report.
  const auto& body = certificate.contains("certificate") ? certificate.at("certificate")
                                                         : certificate;
  if (body.is_null()) throw ValidationError("the report holds no certificate");
  auto cert = certificate_from_json(body, p.generators);
  return {verify_certificate(p, cert), cert.steps.size()};
}

IsoOutcome cmd_iso(const FiniteQuandle& a, const FiniteQuandle& b) {
  auto iso = are_isomorphic(a, b);
  return {iso.has_value(), iso ? iso->map : std::vector<Element>{}};
}

// ---------------------------------------------------------------------------
// Text rendering.

namespace {

void print(std::ostream& out, const CheckOutcome& r) {
  out << "n = " << r.n << '\n';
  for (const auto& a : r.axioms) {
    out << a.axiom << ": " << (a.holds ? "holds" : "fails");
    if (!a.holds) out << " (" << a.detail << ")";
    out << '\n';
  }
}

void print(std::ostream& out, const LaurentOutcome& r) {
  out << "Z/" << r.n << " ⋊ " << r.group << ": " << r.involutions << " involution"
      << (r.involutions == 1 ? "" : "s") << " in the base, " << r.iso.size()
      << " in the product\n";
  out << "pairs checked: " << r.pairs_checked << '\n';
  out << "isomorphism onto Inv(" << r.group << ") × R_" << r.n << ": "
      << (r.iso_verified ? "verified" : "FAILED") << '\n';
  for (const auto& m : r.iso) out << "  " << m[0] << " ↦ " << m[1] << '\n';
}

void print(std::ostream& out, const ProbeOutcome& r) {
  if (r.relation_found)
    out << "relation " << r.lhs << " = " << r.rhs << " at depth " << r.relation_depth
        << " (value " << r.value << ", " << r.elements_checked << " elements checked)\n";
  else
    out << "no relation within depth " << r.depth << " (" << r.elements_checked
        << " elements checked)\n";
}

void print(std::ostream& out, const OrbitsOutcome& r) {
  out << r.count << " orbit" << (r.count == 1 ? "" : "s") << '\n';
  for (const auto& c : r.classes) {
    out << " ";
    for (Element x : c) out << ' ' << x;
    out << '\n';
  }
}

void print(std::ostream& out, const HomCountOutcome& r) {
  out << r.count << " morphism" << (r.count == 1 ? "" : "s") << '\n';
  for (const auto& f : r.morphisms) {
    out << " ";
    for (Element x : f) out << ' ' << x;
    out << '\n';
  }
}

void print(std::ostream& out, const EnumerateOutcome& r) {
  for (const auto& e : r.elements) out << e << '\n';
}

void print(std::ostream& out, const EnvelopeOutcome& r) {
  const auto& a = r.generators[r.a];
  const auto& b = r.generators[r.b];
  if (r.found) {
    out << a << " = " << b << " in the enveloping group ("
        << r.certificate["steps"].size() << " steps)\n"
        << r.certificate.dump(2) << '\n';
  } else {
    out << "no derivation of " << a << " = " << b << " within depth " << r.depth << " ("
        << r.states_explored << " states"
        << (r.state_cap_hit ? ", state cap reached" : "") << ")\n";
  }
}

void print(std::ostream& out, const VerifyOutcome& r) {
  out << "certificate " << (r.valid ? "valid" : "INVALID") << " (" << r.steps
      << " steps)\n";
}

void print(std::ostream& out, const IsoOutcome& r) {
  if (!r.isomorphic) {
    out << "not isomorphic\n";
    return;
  }
  out << "isomorphic:";
  for (Element x : r.map) out << ' ' << x;
  out << '\n';
}

template <typename Outcome>
void emit(std::ostream& out, const Outcome& r, bool json) {
  if (json)
    out << nlohmann::json(r).dump(2) << '\n';
  else
    print(out, r);
}

std::vector<Element> parse_generators(const std::string& text) {
  std::vector<Element> gens;
  for (const auto& part : split(text, ','))
    gens.push_back(static_cast<Element>(parse_size(part, "generator")));
  return gens;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Racks, quandles and involutory quandles: checks, models and probes"};
  app.name("kei");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string input, input2;
  bool want_quandle = false, want_involutory = false;
  auto* check = app.add_subcommand("check", "Check the rack, quandle and involutory axioms");
  check->add_option("input", input, "Table file or builtin name")->required();
  check->add_flag("--quandle", want_quandle, "Also require x ▷ x = x");
  check->add_flag("--involutory", want_involutory,
                  "Also require x ▷ x = x and x ▷ (x ▷ y) = y");
  check->add_flag("--json", json);

  std::size_t n = 0, depth = 0;
  std::string group = "z2";
  std::optional<std::string> signs;
  auto* laurent = app.add_subcommand("laurent", "Verify Inv(Z/n ⋊ G) ≅ Inv(G) × R_n");
  laurent->add_option("--n", n, "Odd kernel modulus")->required();
  laurent->add_option("--group", group, "Group name or table file")->capture_default_str();
  laurent->add_option("--character", signs, "One '+' or '-' per group element");
  laurent->add_flag("--json", json);

  std::string model, gens_text;
  std::size_t probe_depth = 4;
  auto* probe = app.add_subcommand("freeprobe", "Search for relations among free kei words");
  auto* model_opt = probe->add_option("--model", model, "Builtin model (ev)");
  auto* file_opt = probe->add_option("--file", input, "Table file or builtin name");
  model_opt->excludes(file_opt);
  probe->add_option("--gens", gens_text, "Comma-separated generator elements")
      ->needs(file_opt);
  probe->add_option("--depth", probe_depth, "Conjugation depth")->capture_default_str();
  probe->add_flag("--json", json);

  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit decomposition");
  orbits_cmd->add_option("input", input, "Table file or builtin name")->required();
  orbits_cmd->add_flag("--json", json);

  std::optional<std::size_t> list;
  auto* homcount = app.add_subcommand("homcount", "Count quandle morphisms");
  homcount->add_option("source", input)->required();
  homcount->add_option("target", input2)->required();
  homcount->add_option("--list", list, "Also list the first N morphisms");
  homcount->add_flag("--json", json);

  std::string kind;
  std::size_t rank = 2, radius = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List a ball of words or free kei elements");
  enumerate->add_option("kind", kind, "coxeter, free or fiq")
      ->required()
      ->check(CLI::IsMember({"coxeter", "free", "fiq"}));
  enumerate->add_option("--rank", rank)->capture_default_str();
  enumerate->add_option("--radius", radius)->required();
  enumerate->add_flag("--json", json);

  std::size_t a = 0, b = 0;
  std::string names_text;
  SearchOptions search;
  auto* envelope = app.add_subcommand("envelope", "Derive g_a = g_b in the enveloping group");
  envelope->add_option("input", input)->required();
  envelope->add_option("--a", a)->required();
  envelope->add_option("--b", b)->required();
  envelope->add_option("--depth", search.depth)->capture_default_str();
  envelope->add_option("--max-length", search.max_length)->capture_default_str();
  envelope->add_option("--max-states", search.max_states)->capture_default_str();
  envelope->add_option("--names", names_text, "Comma-separated generator names");
  envelope->add_flag("--json", json);

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Replay a derivation certificate");
  verify->add_option("input", input)->required();
  verify->add_option("certificate", cert_path, "Certificate or envelope JSON file")->required();
  verify->add_option("--names", names_text);
  verify->add_flag("--json", json);

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("first", input)->required();
  iso->add_option("second", input2)->required();
  iso->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const Limits limits = limits_from_environment();
    auto names = names_text.empty() ? std::nullopt
                                    : std::optional<std::vector<std::string>>(split(names_text, ','));
    if (check->parsed()) {
      auto r = cmd_check(resolve_quandle(input, limits), want_quandle, want_involutory);
      emit(out, r, json);
      return r.ok ? kOk : kPropertyFails;
    }
    if (laurent->parsed()) {
      auto r = cmd_laurent(n, group, signs, limits);
      emit(out, r, json);
      return r.iso_verified ? kOk : kPropertyFails;
    }
    if (probe->parsed()) {
      ProbeOutcome r;
      if (model_opt->count()) {
        if (model != "ev") throw ValidationError("unknown model '" + model + "' (try ev)");
        r = cmd_freeprobe_ev(probe_depth, limits);
      } else if (file_opt->count()) {
        if (gens_text.empty()) throw ValidationError("--file needs --gens");
        r = cmd_freeprobe_file(resolve_quandle(input, limits), input,
                               parse_generators(gens_text), probe_depth, limits);
      } else {
        throw ValidationError("freeprobe needs --model or --file");
      }
      emit(out, r, json);
      return r.relation_found ? kPropertyFails : kOk;
    }
    if (orbits_cmd->parsed()) {
      emit(out, cmd_orbits(resolve_quandle(input, limits)), json);
      return kOk;
    }
    if (homcount->parsed()) {
      emit(out, cmd_homcount(resolve_quandle(input, limits), resolve_quandle(input2, limits), list),
           json);
      return kOk;
    }
    if (enumerate->parsed()) {
      emit(out, cmd_enumerate(kind, rank, radius, limits), json);
      return kOk;
    }
    if (envelope->parsed()) {
      auto r = cmd_envelope(resolve_quandle(input, limits), names, a, b, search);
      emit(out, r, json);
      return r.found ? kOk : kPropertyFails;
    }
    if (verify->parsed()) {
      nlohmann::json cert;
      try {
        cert = nlohmann::json::parse(read_file(cert_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(cert_path + ": invalid JSON");
      }
      auto r = cmd_verify(resolve_quandle(input, limits), names, cert);
      emit(out, r, json);
      return r.valid ? kOk : kPropertyFails;
    }
    if (iso->parsed()) {
      auto r = cmd_iso(resolve_quandle(input, limits), resolve_quandle(input2, limits));
      emit(out, r, json);
      return r.isomorphic ? kOk : kPropertyFails;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace kei::cli
