#include "goedel/transcript.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace goedel {

namespace {

using nlohmann::json;

constexpr std::uint64_t kJsonSafe = (std::uint64_t(1) << 53) - 1;

json nat_to_json(const Nat& n) {
  if (n.fits_u64() && n.as_u64() <= kJsonSafe) return json(n.as_u64());
  return json(n.to_text());
}

Nat nat_from_json(const json& j, const char* field) {
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_string()) return Nat::from_text(j.get<std::string>());
  throw std::invalid_argument(std::string("transcript: bad numeral in ") +
                              field);
}

json step_to_json(const StepRecord& r) {
  json ev = json::array();
  for (const EvidenceTriple& e : r.evidence)
    ev.push_back(json::array(
        {json(e.position), nat_to_json(e.lhs), nat_to_json(e.rhs)}));
  return json{{"step", r.step},
              {"input_index", nat_to_json(r.input_index.value)},
              {"psi_value", nat_to_json(r.psi_value)},
              {"extended_index", nat_to_json(r.extended_index.value)},
              {"evidence", std::move(ev)}};
}

StepRecord step_from_json(const json& j) {
  StepRecord r;
  r.step = j.at("step").get<std::uint64_t>();
  r.input_index = CodeIndex(nat_from_json(j.at("input_index"), "input_index"));
  r.psi_value = nat_from_json(j.at("psi_value"), "psi_value");
  r.extended_index =
      CodeIndex(nat_from_json(j.at("extended_index"), "extended_index"));
  for (const json& e : j.at("evidence")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("transcript: bad evidence triple");
    r.evidence.push_back({e[0].get<std::uint64_t>(),
                          nat_from_json(e[1], "evidence"),
                          nat_from_json(e[2], "evidence")});
  }
  return r;
}

}  // namespace

void save_transcript(const Transcript& t, std::ostream& out) {
  json header{{"format", "goedel-forge/1"},
              {"seed", nat_to_json(t.seed.value)},
              {"psi_kind", to_string(t.psi_kind)},
              {"fuel", nat_to_json(t.fuel)},
              {"sample_width", t.sample_width},
              {"created", t.created},
              {"updated", t.updated},
              {"complete", t.complete}};
  out << header.dump() << '\n';
  for (const StepRecord& r : t.steps) out << step_to_json(r).dump() << '\n';
}

Transcript load_transcript(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("transcript: empty input");
  json header = json::parse(line);
  if (header.at("format").get<std::string>() != "goedel-forge/1")
    throw std::invalid_argument("transcript: unknown format version");
  Transcript t;
  t.seed = CodeIndex(nat_from_json(header.at("seed"), "seed"));
  t.psi_kind = psi_kind_from_string(header.at("psi_kind").get<std::string>());
  t.fuel = nat_from_json(header.at("fuel"), "fuel");
  t.sample_width = header.at("sample_width").get<std::uint64_t>();
  t.created = header.value("created", "");
  t.updated = header.value("updated", "");
  t.complete = header.value("complete", true);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    t.steps.push_back(step_from_json(json::parse(line)));
  }
  return t;
}

std::string transcript_to_string(const Transcript& t) {
  std::ostringstream os;
  save_transcript(t, os);
  return os.str();
}

Transcript transcript_from_string(const std::string& text) {
  std::istringstream is(text);
  return load_transcript(is);
}

namespace {
std::string short_nat(const Nat& n) {
  if (n.fits_u64()) return std::to_string(n.as_u64());
  auto [lo, hi] = n.log2_bounds();
  std::string t = n.to_text();
  if (t.size() <= 40) return t;
  return "<value of ~" + std::to_string((long long)((lo + hi) / 2)) +
         " bits>";
}
}  // namespace

std::string render_transcript_table(const Transcript& t) {
  std::ostringstream os;
  os << "seed=" << short_nat(t.seed.value) << " psi=" << to_string(t.psi_kind)
     << " fuel=" << short_nat(t.fuel) << " width=" << t.sample_width
     << (t.complete ? "" : " [incomplete]") << '\n';
  os << "step | input i | psi(i) | extended j | evidence\n";
  for (const StepRecord& r : t.steps) {
    os << r.step << " | " << short_nat(r.input_index.value) << " | "
       << short_nat(r.psi_value) << " | " << short_nat(r.extended_index.value)
       << " |";
    for (const EvidenceTriple& e : r.evidence)
      os << " [" << e.position << ": " << short_nat(e.lhs) << " vs "
         << short_nat(e.rhs) << "]";
    os << '\n';
  }
  return os.str();
}

}  // namespace goedel
