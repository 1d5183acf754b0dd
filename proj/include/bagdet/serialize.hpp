#ifndef BAGDET_SERIALIZE_HPP
#define BAGDET_SERIALIZE_HPP

#include "bagdet/detbool.hpp"
#include "bagdet/h10.hpp"
#include "bagdet/pathdet.hpp"
#include "bagdet/witness.hpp"

#include <json.hpp>

#include <string>

namespace bagdet {

// insertion-ordered so emitted files are byte-stable
using Json = nlohmann::ordered_json;

Json int_json(const Int& x);
Json rat_json(const Rat& x);
Json int_vec_json(const IntVec& v);
Json rat_vec_json(const RatVec& v);
Json rat_mat_json(const RatMat& m);
IntVec int_vec_from_json(const Json& j);

Json facts_json(const Structure& s);
Json report_to_json(const VerificationReport& report);
Json verdict_to_json(const Verdict& verdict);
Json witness_trace_json(const WitnessPair& wp);
Json path_witness_json(const PathQuery& q, const std::vector<PathQuery>& views,
                       const path::PathWitness& witness);
Json h10_witness_json(const h10::H10Instance& instance, const IntVec& solution,
                      const h10::H10Witness& witness);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace bagdet

#endif
