#include "pats/rules.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pats {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

void require_known_fields(const json& obj, const std::string& where,
                          const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key()))
            throw UnknownFieldError("unknown field \"" + it.key() + "\" in " + where);
    }
}

int get_int(const json& obj, const std::string& key, int fallback, int lo, int hi,
            const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw InvalidValueError(where + "." + key + " must be an integer");
    int n = v.get<int>();
    if (n < lo || n > hi) {
        std::ostringstream os;
        os << where << "." << key << " out of range: " << n;
        throw InvalidValueError(os.str());
    }
    return n;
}

bool get_bool(const json& obj, const std::string& key, bool fallback,
              const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean())
        throw InvalidValueError(where + "." + key + " must be a boolean");
    return v.get<bool>();
}

template <typename E>
E get_enum(const json& obj, const std::string& key, E fallback,
           const std::map<std::string, E>& domain, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string())
        throw InvalidValueError(where + "." + key + " must be a string");
    auto it = domain.find(v.get<std::string>());
    if (it == domain.end())
        throw InvalidValueError(where + "." + key + ": bad value \"" +
                                v.get<std::string>() + "\"");
    return it->second;
}

const std::map<std::string, BuildPolicy> kBuildPolicies = {
    {"any-suit", BuildPolicy::AnySuit},
    {"red-black", BuildPolicy::RedBlack},
    {"same-suit", BuildPolicy::SameSuit},
    {"no-build", BuildPolicy::NoBuild},
};
const std::map<std::string, SpacesPolicy> kSpacesPolicies = {
    {"any", SpacesPolicy::Any},
    {"kings", SpacesPolicy::Kings},
    {"none", SpacesPolicy::None},
    {"auto-from-reserve", SpacesPolicy::AutoFromReserve},
    {"auto-from-waste", SpacesPolicy::AutoFromWaste},
};
const std::map<std::string, MoveBuiltGroup> kMoveGroups = {
    {"no", MoveBuiltGroup::No},
    {"yes", MoveBuiltGroup::Yes},
    {"whole-pile", MoveBuiltGroup::WholePile},
    {"partial-if-card-above-buildable", MoveBuiltGroup::PartialIfAboveBuildable},
};
const std::map<std::string, BuiltGroupPolicy> kGroupPolicies = {
    {"same-as-build", BuiltGroupPolicy::SameAsBuild},
    {"same-suit", BuiltGroupPolicy::SameSuit},
};
const std::map<std::string, FaceUpCards> kFaceUp = {
    {"all", FaceUpCards::All},
    {"top", FaceUpCards::Top},
};
const std::map<std::string, FoundationsInitial> kInitialCards = {
    {"none", FoundationsInitial::None},
    {"one", FoundationsInitial::One},
    {"all", FoundationsInitial::All},
};
const std::map<std::string, BaseCard> kBaseCards = {
    {"A", BaseCard::Ace},
    {"random", BaseCard::Random},
};
const std::map<std::string, DealType> kDealTypes = {
    {"waste", DealType::Waste},
    {"tableau piles", DealType::TableauPiles},
};

template <typename E>
std::string enum_name(E value, const std::map<std::string, E>& domain) {
    for (const auto& [name, v] : domain)
        if (v == value) return name;
    return "?";
}

}  // namespace

int foundation_seed_count(const RuleSet& r) {
    if (r.hole) return 1;
    if (!r.foundations_present) return 0;
    switch (r.foundations_initial) {
        case FoundationsInitial::None: return 0;
        case FoundationsInitial::One: return 1;
        case FoundationsInitial::All: return r.foundation_slots();
    }
    return 0;
}

int pre_tableau_cards(const RuleSet& r) {
    return foundation_seed_count(r) + r.cells_prefilled + r.reserve_size;
}

int tableau_card_count(const RuleSet& r) {
    return r.total_cards() - pre_tableau_cards(r) - r.stock_size;
}

std::vector<int> pile_sizes(const RuleSet& r) {
    int n = r.tableau_count;
    int budget = tableau_card_count(r);
    std::vector<int> sizes(n, 0);
    if (!r.diagonal_deal) {
        // Square layout: equal piles, the first (budget % n) one card longer.
        for (int i = 0; i < n; ++i) sizes[i] = budget / n + (i < budget % n ? 1 : 0);
        return sizes;
    }
    // Diagonal layout: round k deals one card to each of piles k..n-1 until
    // the budget runs out, giving the staircase shape (possibly capped).
    int dealt = 0;
    for (int round = 0; round < n && dealt < budget; ++round)
        for (int pile = round; pile < n && dealt < budget; ++pile, ++dealt) ++sizes[pile];
    return sizes;
}

std::vector<Diagnostic> validate(const RuleSet& r) {
    std::vector<Diagnostic> out;
    auto add = [&out](const std::string& m) { out.push_back({m}); };

    if (r.max_rank < 1 || r.max_rank > 13) add("max rank must be between 1 and 13");
    if (r.tableau_count < 1) add("at least one tableau pile is required");
    if (r.cells_prefilled > r.cells) add("more pre-filled cells than cells");
    if (r.hole && r.foundations_present) add("hole and foundations are mutually exclusive");
    if (r.hole && r.foundations_initial != FoundationsInitial::None)
        add("hole games cannot seed foundations");
    if (r.base_card == BaseCard::Random &&
        (!r.foundations_present || r.foundations_initial != FoundationsInitial::One))
        add("a random base card requires foundations with one initial card");
    if (r.spaces == SpacesPolicy::AutoFromReserve && r.reserve_size == 0)
        add("auto-from-reserve spaces need a reserve");
    if (r.spaces == SpacesPolicy::AutoFromWaste && r.stock_size == 0)
        add("auto-from-waste spaces need a stock");
    if (r.complete_pile_moves && !r.foundations_present)
        add("complete-pile foundation moves need foundations");
    if (r.complete_pile_moves && r.foundations_removable)
        add("complete-pile foundations cannot be removable");
    if (r.stock_size > 0 && r.deal_count < 1) add("deal count must be positive");
    if (r.redeal && r.deal_type == DealType::TableauPiles)
        add("tableau-pile stocks cannot be redealt");
    if (r.move_group == MoveBuiltGroup::PartialIfAboveBuildable &&
        r.build == BuildPolicy::NoBuild)
        add("partial built-group moves are meaningless without building");

    int tableau = tableau_card_count(r);
    if (tableau < 0) add("stock, reserve, cells and seeds exceed the pack");
    if (r.diagonal_deal) {
        long cap = static_cast<long>(r.tableau_count) * (r.tableau_count + 1) / 2;
        if (tableau > cap) add("diagonal layout cannot hold that many cards");
    }
    if (r.complete_pile_moves && tableau >= 0 && r.total_cards() % r.max_rank != 0)
        add("complete-pile games need full suits");
    return out;
}

RuleSet parse_rules(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw MalformedJsonError(std::string("malformed rules JSON: ") + e.what());
    }
    if (!doc.is_object()) throw MalformedJsonError("rules document must be an object");

    require_known_fields(doc, "rules",
                         {"tableau piles", "foundations", "hole", "cells", "stock",
                          "reserve", "accordion", "sequences", "max rank", "two decks"});

    RuleSet r;
    r.max_rank = get_int(doc, "max rank", 13, 1, 13, "rules");
    r.two_decks = get_bool(doc, "two decks", false, "rules");
    r.hole = get_bool(doc, "hole", false, "rules");

    if (doc.contains("tableau piles")) {
        const json& t = doc.at("tableau piles");
        if (!t.is_object()) throw InvalidValueError("\"tableau piles\" must be an object");
        require_known_fields(t, "tableau piles",
                             {"count", "build policy", "spaces policy", "diagonal deal",
                              "move built group", "move built group policy",
                              "face up cards"});
        r.tableau_count = get_int(t, "count", 8, 1, 64, "tableau piles");
        r.build = get_enum(t, "build policy", BuildPolicy::AnySuit, kBuildPolicies,
                           "tableau piles");
        r.spaces = get_enum(t, "spaces policy", SpacesPolicy::Any, kSpacesPolicies,
                            "tableau piles");
        r.diagonal_deal = get_bool(t, "diagonal deal", false, "tableau piles");
        r.move_group = get_enum(t, "move built group", MoveBuiltGroup::No, kMoveGroups,
                                "tableau piles");
        r.group_policy = get_enum(t, "move built group policy",
                                  BuiltGroupPolicy::SameAsBuild, kGroupPolicies,
                                  "tableau piles");
        r.face_up = get_enum(t, "face up cards", FaceUpCards::All, kFaceUp,
                             "tableau piles");
    }

    if (doc.contains("foundations")) {
        const json& f = doc.at("foundations");
        if (!f.is_object()) throw InvalidValueError("\"foundations\" must be an object");
        require_known_fields(f, "foundations",
                             {"present", "initial cards", "base card", "removable",
                              "only complete pile moves"});
        r.foundations_present = get_bool(f, "present", true, "foundations");
        r.foundations_initial = get_enum(f, "initial cards", FoundationsInitial::None,
                                         kInitialCards, "foundations");
        r.base_card = get_enum(f, "base card", BaseCard::Ace, kBaseCards, "foundations");
        r.foundations_removable = get_bool(f, "removable", false, "foundations");
        r.complete_pile_moves =
            get_bool(f, "only complete pile moves", false, "foundations");
    }
    if (r.hole) r.foundations_present = false;

    if (doc.contains("cells")) {
        const json& c = doc.at("cells");
        if (!c.is_object()) throw InvalidValueError("\"cells\" must be an object");
        require_known_fields(c, "cells", {"count", "pre-filled"});
        r.cells = get_int(c, "count", 0, 0, 16, "cells");
        r.cells_prefilled = get_int(c, "pre-filled", 0, 0, 16, "cells");
    }

    if (doc.contains("stock")) {
        const json& s = doc.at("stock");
        if (!s.is_object()) throw InvalidValueError("\"stock\" must be an object");
        require_known_fields(s, "stock", {"size", "deal type", "deal count", "redeal"});
        r.stock_size = get_int(s, "size", 0, 0, 104, "stock");
        r.deal_type = get_enum(s, "deal type", DealType::Waste, kDealTypes, "stock");
        r.deal_count = get_int(s, "deal count", 1, 1, 16, "stock");
        r.redeal = get_bool(s, "redeal", false, "stock");
    }

    if (doc.contains("reserve")) {
        const json& v = doc.at("reserve");
        if (!v.is_object()) throw InvalidValueError("\"reserve\" must be an object");
        require_known_fields(v, "reserve", {"size", "stacked"});
        r.reserve_size = get_int(v, "size", 0, 0, 32, "reserve");
        r.reserve_stacked = get_bool(v, "stacked", false, "reserve");
    }

    if (doc.contains("accordion")) {
        const json& a = doc.at("accordion");
        if (!a.is_object()) throw InvalidValueError("\"accordion\" must be an object");
        require_known_fields(a, "accordion", {"size"});
        if (get_int(a, "size", 0, 0, 104, "accordion") > 0)
            throw UnsupportedError("accordion games are not supported");
    }
    if (doc.contains("sequences")) {
        const json& s = doc.at("sequences");
        if (!s.is_object()) throw InvalidValueError("\"sequences\" must be an object");
        require_known_fields(s, "sequences", {"count"});
        if (get_int(s, "count", 0, 0, 16, "sequences") > 0)
            throw UnsupportedError("sequence games are not supported");
    }

    auto problems = validate(r);
    if (!problems.empty()) throw InvalidValueError("invalid rules: " + problems[0].message);
    return r;
}

RuleSet load_rules_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RulesError("cannot open rules file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_rules(buf.str());
}

std::string serialize_rules(const RuleSet& r) {
    ordered_json doc;
    doc["tableau piles"] = {
        {"count", r.tableau_count},
        {"build policy", enum_name(r.build, kBuildPolicies)},
        {"spaces policy", enum_name(r.spaces, kSpacesPolicies)},
        {"diagonal deal", r.diagonal_deal},
        {"move built group", enum_name(r.move_group, kMoveGroups)},
        {"move built group policy", enum_name(r.group_policy, kGroupPolicies)},
        {"face up cards", enum_name(r.face_up, kFaceUp)},
    };
    doc["foundations"] = {
        {"present", r.foundations_present},
        {"initial cards", enum_name(r.foundations_initial, kInitialCards)},
        {"base card", enum_name(r.base_card, kBaseCards)},
        {"removable", r.foundations_removable},
        {"only complete pile moves", r.complete_pile_moves},
    };
    doc["hole"] = r.hole;
    doc["cells"] = {{"count", r.cells}, {"pre-filled", r.cells_prefilled}};
    doc["stock"] = {
        {"size", r.stock_size},
        {"deal type", enum_name(r.deal_type, kDealTypes)},
        {"deal count", r.deal_count},
        {"redeal", r.redeal},
    };
    doc["reserve"] = {{"size", r.reserve_size}, {"stacked", r.reserve_stacked}};
    doc["accordion"] = {{"size", 0}};
    doc["sequences"] = {{"count", 0}};
    doc["max rank"] = r.max_rank;
    doc["two decks"] = r.two_decks;
    return doc.dump(2) + "\n";
}

bool suit_indifferent(const RuleSet& r) {
    bool suitless_build =
        r.build == BuildPolicy::AnySuit || r.build == BuildPolicy::NoBuild;
    bool suitless_groups = r.move_group == MoveBuiltGroup::No ||
                           r.group_policy == BuiltGroupPolicy::SameAsBuild;
    bool suitless_goal = !r.foundations_present || r.hole;
    return suitless_build && suitless_groups && suitless_goal;
}

}  // namespace pats
