#pragma once

#include <optional>
#include <string>
#include <vector>

#include <hypertorsion/io.hpp>

namespace hypertorsion::cli {

using io::json;

struct CommandResult {
    bool ok = true;
    std::string code;      // error code when !ok
    std::string message;
    std::string provenance;
    json payload = json::object();

    json to_json(const std::string& command) const;
};

struct Common {
    std::string field = "Q";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string json_out;
};

struct SingleArgs {
    unsigned g = 0;
    std::string a = "0";
    std::string v;
};

struct VerifyArgs {
    std::string curve;
    std::optional<unsigned> g;
    std::string point;
};

struct PairArgs {
    unsigned g = 0;
    std::string a1 = "0";
    std::string a2 = "-1";
    std::string u1, u2;
    std::string cert;
    bool normalize = false;
    bool decorations = false;
};

struct FamiliesArgs {
    unsigned g = 0;
    bool all_admissible = false;
};

struct FamilyArgs {
    unsigned g = 0;
    std::string family;   // JSON text or file
    std::string I;        // "0,1"
    std::string upsilon;  // "2,2,1,1"
    std::string mu;
    std::size_t limit = 100000;
};

struct RationalArgs {
    unsigned g = 52;
    std::string s1;
    std::size_t mu_limit = 200;
};

struct HyperArgs {
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> max;
};

struct CensusArgs {
    std::string curve;
    std::optional<unsigned> g;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> p;
    unsigned m = 1;
};

struct SelftestArgs {
    std::vector<int> criteria;
};

CommandResult construct_single(const Common& c, const SingleArgs& a);
CommandResult verify(const Common& c, const VerifyArgs& a);
CommandResult construct_pair(const Common& c, const PairArgs& a);
CommandResult enumerate_families(const Common& c, const FamiliesArgs& a);
CommandResult find_mu(const Common& c, const FamilyArgs& a);
CommandResult rational(const Common& c, const RationalArgs& a);
CommandResult hyperelliptic(const Common& c, const HyperArgs& a);
CommandResult census(const Common& c, const CensusArgs& a);
CommandResult weil(const Common& c, const FamilyArgs& a);
CommandResult selftest(const Common& c, const SelftestArgs& a);

/// Maps a library exception to an error result with its message verbatim.
CommandResult from_exception(std::exception_ptr e);

} // namespace hypertorsion::cli
