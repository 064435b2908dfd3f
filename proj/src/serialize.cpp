#include "isoacm/serialize.hpp"

#include <sstream>

namespace isoacm {

nlohmann::json to_json(const HalfInt& h) {
  if (h.is_integer()) return {{"num", h.integer_value()}, {"den", 1}};
  return {{"num", h.doubled()}, {"den", 2}};
}

nlohmann::json to_json(const WeightFW& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) arr.push_back(w[i]);
  return arr;
}

namespace {

nlohmann::json matrix_json(const HalfIntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json to_json(const StepMatrix& sm) {
  nlohmann::json out{
      {"type", std::string(1, letter(sm.space.type()))},
      {"n", sm.space.rank()},
      {"k", sm.space.k()},
      {"lambda", to_json(sm.lambda)},
      {"M", to_json(sm.M)},
  };
  if (sm.triangular()) {
    out["layout"] = "triangular";
    out["T"] = matrix_json(sm.T);
  } else {
    out["layout"] = "blocks";
    out["P"] = matrix_json(sm.P);
    out["Q"] = matrix_json(sm.Q);
    out["R"] = matrix_json(sm.R);
  }
  return out;
}

std::string render_json(const StepMatrix& sm) { return to_json(sm).dump() + "\n"; }

nlohmann::json to_json(const FlagSpace& space, const WeightFW& input_lambda, const AcmVerdict& v) {
  nlohmann::json out{
      {"type", std::string(1, letter(space.type()))},
      {"n", space.rank()},
      {"k", space.k()},
      {"lambda", to_json(input_lambda)},
      {"twist", v.twist_applied},
      {"acm", v.is_acm},
      {"M", to_json(v.M)},
  };
  if (!v.is_acm) {
    out["missing"] = *v.missing();
    out["gaps"] = v.gaps;
  } else {
    nlohmann::json witnesses = nlohmann::json::object();
    for (const auto& [l, ref] : v.witnesses) {
      witnesses[std::to_string(l)] = {{"block", std::string(1, static_cast<char>(ref.block))},
                                      {"i", ref.i},
                                      {"j", ref.j}};
    }
    out["witnesses"] = std::move(witnesses);
  }
  return out;
}

nlohmann::json to_json(const FlagSpace& space, const WeightFW& lambda, Int t,
                       const CohomologyResult& c) {
  nlohmann::json out{
      {"type", std::string(1, letter(space.type()))},
      {"n", space.rank()},
      {"k", space.k()},
      {"lambda", to_json(lambda)},
      {"t", t},
      {"zero", c.zero},
  };
  if (!c.zero) {
    out["degree"] = c.degree;
    out["weight"] = to_json(c.rep_weight);
    out["dim"] = c.dimension;
  }
  return out;
}

void write_jsonl(const EquivalenceReport& report, std::ostream& out) {
  for (const auto& rec : report.records) {
    const bool half = !rec.M.is_integer();
    out << "{\"lambda\":[" << to_string(rec.lambda) << "],\"acm_theorem\":"
        << (rec.acm_theorem ? "true" : "false")
        << ",\"acm_oracle\":" << (rec.acm_oracle ? "true" : "false") << ",\"M\":{\"num\":"
        << (half ? rec.M.doubled() : rec.M.integer_value()) << ",\"den\":" << (half ? 2 : 1)
        << "},\"dim\":" << rec.dim << "}\n";
  }
}

}  // namespace isoacm
