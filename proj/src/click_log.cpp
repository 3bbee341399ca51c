// Copyright 2026 The qca Authors
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

#include "qca/click_log.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qca/errors.hpp"

namespace qca {
namespace {

const char* outcome_token(EveOutcomeCode code) {
  switch (code) {
    case EveOutcomeCode::Correct:
      return "correct";
    case EveOutcomeCode::Error:
      return "error";
    case EveOutcomeCode::Inconclusive:
      return "inconclusive";
    default:
      return "none";
  }
}

const char* action_token(PulseActionCode code) {
  switch (code) {
    case PulseActionCode::Resend:
      return "resend";
    case PulseActionCode::Block:
      return "block";
    default:
      return "honest";
  }
}

EveOutcomeCode parse_outcome(const std::string& token, int64_t line) {
  if (token == "correct") return EveOutcomeCode::Correct;
  if (token == "error") return EveOutcomeCode::Error;
  if (token == "inconclusive") return EveOutcomeCode::Inconclusive;
  if (token == "none") return EveOutcomeCode::None;
  std::ostringstream os;
  os << "click log line " << line << ": unknown eve_outcome '" << token << "'";
  throw IoError(os.str());
}

PulseActionCode parse_action(const std::string& token, int64_t line) {
  if (token == "resend") return PulseActionCode::Resend;
  if (token == "block") return PulseActionCode::Block;
  if (token == "honest") return PulseActionCode::Honest;
  std::ostringstream os;
  os << "click log line " << line << ": unknown action '" << token << "'";
  throw IoError(os.str());
}

int64_t parse_int(const std::string& token, int64_t line, const char* field) {
  int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    std::ostringstream os;
    os << "click log line " << line << ": bad " << field << " '" << token << "'";
    throw IoError(os.str());
  }
  return value;
}

bool parse_flag(const std::string& token, int64_t line, const char* field) {
  if (token == "0") return false;
  if (token == "1") return true;
  std::ostringstream os;
  os << "click log line " << line << ": bad " << field << " '" << token << "'";
  throw IoError(os.str());
}

}  // namespace

void write_click_log(std::ostream& out, const std::vector<ClickRecord>& log) {
  out << kClickLogHeader << '\n';
  for (const ClickRecord& rec : log) {
    out << rec.pulse_index << ',' << static_cast<int>(rec.alice_bit) << ','
        << outcome_token(rec.eve_outcome) << ',' << action_token(rec.action) << ','
        << (rec.bob_click ? 1 : 0) << ',';
    if (rec.bob_bit < 0) {
      out << '-';
    } else {
      out << static_cast<int>(rec.bob_bit);
    }
    out << ',' << (rec.detector_a_click ? 1 : 0) << ','
        << (rec.detector_b_click ? 1 : 0) << '\n';
  }
}

void write_click_log_file(const std::string& path,
                          const std::vector<ClickRecord>& log) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open click log for writing: " + path);
  }
  write_click_log(out, log);
  if (!out.good()) {
    throw IoError("failed while writing click log: " + path);
  }
}

std::vector<ClickRecord> read_click_log(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw IoError("click log: empty input");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kClickLogHeader) {
    throw IoError("click log: unexpected header '" + line + "'");
  }

  std::vector<ClickRecord> log;
  int64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      std::ostringstream os;
      os << "click log line " << line_no << ": empty row";
      throw IoError(os.str());
    }
    std::vector<std::string> fields;
    size_t start = 0;
    for (;;) {
      const size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() != 8) {
      std::ostringstream os;
      os << "click log line " << line_no << ": expected 8 fields, got "
         << fields.size();
      throw IoError(os.str());
    }

    ClickRecord rec;
    rec.pulse_index = parse_int(fields[0], line_no, "pulse_index");
    rec.alice_bit = parse_flag(fields[1], line_no, "alice_bit") ? 1 : 0;
    rec.eve_outcome = parse_outcome(fields[2], line_no);
    rec.action = parse_action(fields[3], line_no);
    rec.bob_click = parse_flag(fields[4], line_no, "bob_click");
    if (fields[5] == "-") {
      rec.bob_bit = -1;
    } else {
      rec.bob_bit = parse_flag(fields[5], line_no, "bob_bit") ? 1 : 0;
    }
    rec.detector_a_click = parse_flag(fields[6], line_no, "detector_a_click");
    rec.detector_b_click = parse_flag(fields[7], line_no, "detector_b_click");
    if (rec.bob_click == (rec.bob_bit < 0)) {
      std::ostringstream os;
      os << "click log line " << line_no << ": bob_click and bob_bit disagree";
      throw IoError(os.str());
    }
    log.push_back(rec);
  }
  return log;
}

std::vector<ClickRecord> read_click_log_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open click log: " + path);
  }
  return read_click_log(in);
}

}  // namespace qca
