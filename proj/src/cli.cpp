#include "pi1lat/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include "pi1lat/io.hpp"

namespace pi1lat::cli {

namespace {

std::string json_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string group_json(const InvariantFactors& inv) {
  std::string out = "{\"rank\": \"" + std::to_string(inv.rank) + "\", \"torsion\": [";
  for (std::size_t i = 0; i < inv.factors.size(); ++i) {
    if (i > 0) out += ", ";
    out += "\"" + to_decimal(inv.factors[i]) + "\"";
  }
  out += "]}";
  return out;
}

std::string group_json(const FgAbGroup& g) { return group_json(g.invariants()); }

std::string matrix_json(const IntMatrix& m) {
  std::string out = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ", ";
    out += "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += "\"" + to_decimal(m(i, j)) + "\"";
    }
    out += "]";
  }
  out += "]";
  return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

ComputeSelection parse_compute_list(const std::string& list) {
  ComputeSelection sel;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token.empty()) continue;
    if (token == "pi1") sel.pi1 = true;
    else if (token == "sequence") sel.sequence = true;
    else if (token == "pi2") sel.pi2 = true;
    else if (token == "pi0") sel.pi0 = true;
    else if (token == "p_prime") sel.p_prime = true;
    else if (token == "oracle") sel.oracle = true;
    else throw std::invalid_argument("unknown compute target \"" + token + "\"");
  }
  return sel;
}

std::string render_text(const Pi1Report& report, const HomSpaceInput& input,
                        const RunRequest& request) {
  std::ostringstream out;
  out << "input: " << request.input_path << "\n";
  const HypothesisFlags& f = input.flags();
  out << "flags: pic_g_zero=" << bool_str(f.pic_g_zero)
      << " h_kerchar_connected=" << bool_str(f.h_kerchar_connected)
      << " h_connected=" << bool_str(f.h_connected)
      << " h_smooth=" << bool_str(f.h_smooth) << "\n";
  if (input.char_p()) out << "char_p: " << to_decimal(*input.char_p()) << "\n";

  if (report.pi1) out << "pi1(-1): " << report.pi1->invariants().to_string() << "\n";
  if (report.sequence) {
    const Pi1Sequence& s = *report.sequence;
    out << "sequence: Hom(Hhat,Z)=" << s.hom_h.invariants().to_string()
        << " -> Hom(Ghat,Z)=" << s.hom_g.invariants().to_string()
        << " -> pi1(-1)=" << s.pi1.invariants().to_string()
        << " -> pi0(H)(-1)=" << s.pi0.invariants().to_string() << " -> 0\n";
    out << "sequence checks: " << (s.checks_ok ? "ok" : "FAILED") << "\n";
    if (request.verbosity > 0) {
      out << "  Hom(i*,Z) matrix:";
      for (Index i = 0; i < s.dual.matrix().rows(); ++i) {
        out << " [";
        for (Index j = 0; j < s.dual.matrix().cols(); ++j) {
          if (j > 0) out << " ";
          out << s.dual.matrix()(i, j);
        }
        out << "]";
      }
      out << "\n";
    }
  }
  if (report.pi0) out << "pi0(H)(-1): " << report.pi0->invariants().to_string() << "\n";
  if (report.pi2) out << "pi2(-1): " << report.pi2->invariants().to_string() << "\n";
  if (report.pi1_p_prime)
    out << "pi1_et^(p')(-1) [p=" << to_decimal(report.pi1_p_prime->p)
        << "]: " << report.pi1_p_prime->to_string() << "\n";
  if (report.oracle_agreement) {
    out << "oracle: " << (*report.oracle_agreement ? "agreement" : "DISAGREEMENT")
        << " (pipeline pi1 = " << report.oracle_run->pi1_via_w.invariants().to_string()
        << ")\n";
    if (request.verbosity > 0)
      out << "  pipeline: q_rank=" << report.oracle_run->q_rank
          << " kernel_rank=" << report.oracle_run->g_w.rank() << "\n";
  }
  if (report.cochar_consistent)
    out << "cochar consistency with pi1_connected: "
        << (*report.cochar_consistent ? "ok" : "MISMATCH") << "\n";
  return out.str();
}

std::string render_json(const Pi1Report& report, const HomSpaceInput& input,
                        const RunRequest& request) {
  std::string out = "{\n";
  out += "  \"input\": \"" + json_escape(request.input_path) + "\",\n";
  const HypothesisFlags& f = input.flags();
  out += "  \"flags\": {\"pic_g_zero\": " + std::string(bool_str(f.pic_g_zero)) +
         ", \"h_kerchar_connected\": " + bool_str(f.h_kerchar_connected) +
         ", \"h_connected\": " + bool_str(f.h_connected) +
         ", \"h_smooth\": " + bool_str(f.h_smooth) + "},\n";
  if (input.char_p()) out += "  \"char_p\": \"" + to_decimal(*input.char_p()) + "\",\n";
  out += "  \"results\": {";
  bool first = true;
  auto add = [&](const std::string& key, const std::string& value) {
    out += first ? "\n" : ",\n";
    out += "    \"" + key + "\": " + value;
    first = false;
  };
  if (report.pi1) add("pi1", group_json(*report.pi1));
  if (report.sequence) {
    const Pi1Sequence& s = *report.sequence;
    std::string seq = "{\"hom_h\": " + group_json(s.hom_h) +
                      ", \"hom_g\": " + group_json(s.hom_g) +
                      ", \"dual_matrix\": " + matrix_json(s.dual.matrix()) +
                      ", \"pi1\": " + group_json(s.pi1) +
                      ", \"pi0\": " + group_json(s.pi0) +
                      ", \"checks_ok\": " + bool_str(s.checks_ok) + "}";
    add("sequence", seq);
  }
  if (report.pi0) add("pi0", group_json(*report.pi0));
  if (report.pi2) add("pi2", group_json(*report.pi2));
  if (report.pi1_p_prime) {
    const PrimeToPAbGroup& p = *report.pi1_p_prime;
    std::string body = "{\"p\": \"" + to_decimal(p.p) + "\", \"rank\": \"" +
                       std::to_string(p.rank) + "\", \"torsion\": [";
    for (std::size_t i = 0; i < p.torsion.size(); ++i) {
      if (i > 0) body += ", ";
      body += "\"" + to_decimal(p.torsion[i]) + "\"";
    }
    body += "]}";
    add("p_prime", body);
  }
  if (report.oracle_agreement) {
    std::string body = std::string("{\"agreement\": ") + bool_str(*report.oracle_agreement) +
                       ", \"q_rank\": \"" + std::to_string(report.oracle_run->q_rank) +
                       "\", \"pi1_via_pipeline\": " +
                       group_json(report.oracle_run->pi1_via_w) + "}";
    add("oracle", body);
  }
  out += "\n  }";
  if (report.cochar_consistent)
    out += ",\n  \"cochar_consistent\": " + std::string(bool_str(*report.cochar_consistent));
  out += "\n}\n";
  return out;
}

int run(const RunRequest& request, std::ostream& out, std::ostream& err) {
  ComputeSelection sel = request.compute;
  if (request.force_oracle) sel.oracle = true;
  if (!sel.any()) {
    err << "error: nothing to compute\n";
    return 1;
  }

  std::optional<HomSpaceInput> input;
  try {
    input.emplace(io::read_input_file(request.input_path));
    if (request.p_override) input.emplace(input->with_char_p(*request.p_override));
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 1;
  }

  if (sel.pi2 && !input->cochar()) {
    err << "error: pi2 requested but the input file has no cochar block\n";
    return 2;
  }
  if (sel.p_prime && !input->char_p()) {
    err << "error: p_prime requested but no characteristic is set; pass --p or add char_p\n";
    return 2;
  }

  try {
    const Pi1Report report = compute_report(*input, sel);
    out << (request.format == Format::json ? render_json(report, *input, request)
                                           : render_text(report, *input, request));
    return 0;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "; add \"" << e.flag()
        << "\": true to the flags block once the hypothesis is known to hold\n";
    return 2;
  } catch (const MissingDataError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace pi1lat::cli
