// Canonical JSON encodings shared by the CLI, the cache, and the bindings.
// Monomials serialize as sorted [[i,j,exp],...], t-Laurent coefficients as
// sorted [[texp,coeff],...]; identical inputs produce byte-identical text.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "krqt/cluster.hpp"
#include "krqt/exchange.hpp"
#include "krqt/tableaux.hpp"
#include "krqt/ylattice.hpp"

namespace krqt {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "krqt-1";

Json to_json(const YMonomial& m);
Json to_json(const TLaurent& p);
Json to_json(const QtCharacter& chi, const KrLabel* label = nullptr);
Json to_json(const GeneralTableau& t, const KrLabel& label);
Json to_json(const MatrixWindow& w);
Json to_json(const A1Tables& t);
Json to_json(const CompatReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const CounterexampleReport& r);
Json to_json(const SigmaPartition& p);

YMonomial monomial_from_json(const Json& j);
TLaurent tlaurent_from_json(const Json& j);
std::optional<QtCharacter> character_from_json(const Json& j);

// FNV-1a over the canonical dump, hex encoded; cache keys and the
// determinism tests both use it.
std::string content_hash(const Json& j);

// On-disk character cache keyed by (r,i,j,k); entries carry the schema
// version and are ignored on mismatch.
class CharacterCache {
  public:
    explicit CharacterCache(std::string root) : root_(std::move(root)) {}

    // KRQT_CACHE_DIR overrides the default location.
    static CharacterCache from_environment();

    std::string path_for(const KrLabel& label) const;
    std::optional<QtCharacter> load(const KrLabel& label) const;
    void store(const KrLabel& label, const QtCharacter& chi) const;

  private:
    std::string root_;
};

}  // namespace krqt
