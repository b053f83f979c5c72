// Command-line front end: conversions, poset exports, count tables,
// verification reports, homology, cluster complexes, k-divisible posets and
// the acceptance sweep.
//
// Exit status: 0 when every requested check passes, 1 when one fails,
// 2 on argument errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "ncpark/acceptance.hpp"
#include "ncpark/enumeration.hpp"
#include "ncpark/json_io.hpp"
#include "ncpark/kdivisible.hpp"
#include "ncpark/pp_poset.hpp"
#include "ncpark/series.hpp"
#include "ncpark/shelling.hpp"
#include "ncpark/topology.hpp"

using namespace ncpark;

namespace {

// Thrown for arguments that parse but fall outside what a subcommand accepts.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 3;
    int k = 1;
    int l = -1;
    std::string format;
    std::string output;
    int jobs = 1;
    bool long_mode = false;
    // convert
    std::string from = "word";
    std::string to = "tree";
    std::string input;
    // poset
    std::string kind = "pp";
    // count
    std::string table = "chains";
    // homology
    bool character = false;
};

// Output of one subcommand: text plus whether every check passed.
struct Outcome {
    std::string text;
    bool passed = true;
};

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
    std::string f = o.format.empty() ? fallback : o.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw UsageError("format " + f + " is not available for this subcommand");
}

void require_range(const char* name, int v, int lo, int hi) {
    if (v < lo || v > hi)
        throw UsageError(std::string("--") + name + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
}

std::string str(const Integer& x) { return x.str(); }

std::string cycle_type_str(const std::vector<int>& type) {
    std::string s;
    for (int p : type) s += (s.empty() ? "" : " ") + std::to_string(p);
    return s;
}

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- subcommands

Outcome run_convert(const Options& o) {
    format_or(o, "json", {"json"});
    if (o.input.empty()) throw UsageError("convert requires --input");
    AnyRepresentation x = parse_representation(o.input, representation_from_name(o.from));
    return {dump(to_json(convert(x, representation_from_name(o.to)))), true};
}

Outcome run_poset(const Options& o) {
    std::string f = format_or(o, "json", {"json", "dot", "csv"});
    FinitePoset p;
    std::string name;
    if (o.kind == "pp") {
        require_range("n", o.n, 1, o.k == 1 ? kMaxPosetN : kMaxKDivisibleN);
        require_range("k", o.k, 1, kMaxKDivisibleK);
        p = o.k == 1 ? build_pp_poset(o.n).poset : build_pp_k(o.n, o.k).poset;
        name = "pp" + std::to_string(o.n) + (o.k == 1 ? "" : "_k" + std::to_string(o.k));
    } else if (o.kind == "nc") {
        require_range("n", o.n, 1, o.k == 1 ? kMaxNCPosetN : kMaxKDivisibleN);
        require_range("k", o.k, 1, kMaxKDivisibleK);
        p = o.k == 1 ? build_nc_poset(o.n).poset : build_nc_k(o.n, o.k).poset;
        name = "nc" + std::to_string(o.n) + (o.k == 1 ? "" : "_k" + std::to_string(o.k));
    } else {
        throw UsageError("--kind must be pp or nc");
    }
    if (f == "dot") return {poset_to_dot(p, name), true};
    if (f == "json") return {dump(poset_to_json(p, o.n)), true};
    std::ostringstream os;
    os << "id,rank,label\n";
    for (int i = 0; i < p.size(); ++i) os << i << ',' << p.rank(i) << ",\"" << p.label(i) << "\"\n";
    return {os.str(), true};
}

Outcome run_count(const Options& o) {
    format_or(o, "csv", {"csv"});
    std::ostringstream os;
    bool ok = true;
    auto ls = [&](int n) {
        std::vector<int> out;
        if (o.l >= 0) {
            require_range("l", o.l, 0, n - 1);
            out.push_back(o.l);
        } else {
            for (int l = 0; l < n; ++l) out.push_back(l);
        }
        return out;
    };
    if (o.table == "chains" || o.table == "whitney") {
        const bool chains = o.table == "chains";
        require_range("n", o.n, 1, kMaxSeriesOrder);
        if (chains) require_range("k", o.k, -3, 9);
        const int k = chains ? o.k : -1;
        std::vector<Integer> oracle;
        if (o.n <= kMaxPosetN && (!chains || (o.k >= 1 && o.k <= 3)))
            oracle = chains ? chain_count_oracle(o.n, o.k) : whitney_first_oracle(o.n);
        TruncatedSeries s = chain_series(k, o.n, o.n);
        os << "n,k,l,closed,oracle,series\n";
        for (int l : ls(o.n)) {
            Integer closed = chains ? chain_count_closed(o.n, o.k, l) : whitney_first_closed(o.n, l);
            Rational series = s.exponential(o.n, l);
            os << o.n << ',' << k << ',' << l << ',' << str(closed) << ',';
            if (!oracle.empty()) {
                os << str(oracle[static_cast<std::size_t>(l)]);
                ok = ok && oracle[static_cast<std::size_t>(l)] == closed;
            }
            os << ',' << series << '\n';
            ok = ok && series == Rational(closed);
        }
    } else if (o.table == "zeta") {
        require_range("n", o.n, 1, kMaxPosetN);
        require_range("k", o.k, 0, 9);
        Integer z = zeta_count(build_pp_poset(o.n).poset, o.k);
        Integer formula = power(Integer(o.n * o.k + 1), o.n - 1);
        os << "n,k,zeta,formula\n" << o.n << ',' << o.k << ',' << str(z) << ',' << str(formula) << '\n';
        ok = z == formula;
    } else if (o.table == "mobius") {
        require_range("n", o.n, 1, kMaxPosetN);
        os << "n,mobius,formula\n";
        for (int n = 1; n <= o.n; ++n) {
            FinitePoset hat = build_pp_poset(n).poset.with_top();
            Integer mu = mobius(hat, *hat.bottom(), *hat.top());
            Integer formula = n == 1 ? Integer(-1) : sign_of(n) * power(Integer(n - 1), n - 1);
            os << n << ',' << str(mu) << ',' << str(formula) << '\n';
            ok = ok && mu == formula;
        }
    } else {
        throw UsageError("--table must be chains, whitney, zeta or mobius");
    }
    return {os.str(), ok};
}

Outcome run_shelling(const Options& o) {
    std::string f = format_or(o, "json", {"json", "csv"});
    require_range("n", o.n, 1, o.long_mode ? 5 : 4);
    std::vector<Json> reports;
    bool ok = true;
    ShellingReport s = verify_shelling(o.n, false);
    reports.push_back(to_json(s));
    ok = ok && s.passed();
    if (o.n <= 4) {
        KeyLemmaReport k = verify_key_lemma(o.n);
        reports.push_back(to_json(k));
        ok = ok && k.passed();
        for (const auto& r : verify_support_lemmas(o.n)) {
            reports.push_back(to_json(r));
            ok = ok && r.ok();
        }
    }
    AtomOrderingCounterexample a = recursive_atom_counterexample();
    reports.push_back(Json{{"lemma", "six-point configuration"}, {"domain", 1}, {"passed", a.holds() ? 1 : 0},
                           {"counterexample", a.holds() ? Json(nullptr) : Json("configuration does not hold")}});
    ok = ok && a.holds();
    if (f == "json") return {dump(Json{{"n", o.n}, {"passed", ok}, {"reports", reports}}), ok};
    std::ostringstream os;
    os << "lemma,domain,passed,counterexample\n";
    for (const auto& r : reports)
        os << '"' << r["lemma"].get<std::string>() << "\"," << r["domain"] << ',' << r["passed"] << ",\""
           << (r["counterexample"].is_null() ? "" : r["counterexample"].get<std::string>()) << "\"\n";
    return {os.str(), ok};
}

Outcome run_homology(const Options& o) {
    format_or(o, "csv", {"csv"});
    require_range("k", o.k, 1, kMaxKDivisibleK);
    const int max_n = o.k == 1 ? (o.long_mode ? 5 : 4) : (o.long_mode ? 4 : 3);
    require_range("n", o.n, 1, max_n);
    std::vector<int> ranks;
    std::ostringstream os;
    bool ok = true;
    if (o.k == 1) {
        PPPoset pp = build_pp_poset(o.n);
        PosetHomology h = poset_homology(pp.poset);
        ranks = h.ranks;
        if (o.character) {
            os << "cycle_type,value,formula,match\n";
            for (const auto& type : integer_partitions(o.n)) {
                Permutation s = permutation_of_cycle_type(type);
                Integer v = homology_character(h, pp_action_map(pp, s));
                Integer f = homology_character_formula(1, s);
                os << cycle_type_str(type) << ',' << str(v) << ',' << str(f) << ',' << (v == f ? "yes" : "no") << '\n';
                ok = ok && v == f;
            }
            return {os.str(), ok};
        }
    } else {
        PPKPoset pk = build_pp_k(o.n, o.k);
        PosetHomology h = poset_homology(pk.poset);
        ranks = h.ranks;
        if (o.character) {
            os << "cycle_type,value,formula,match\n";
            for (const auto& type : integer_partitions(o.n)) {
                Permutation s = permutation_of_cycle_type(type);
                Integer v = homology_character(h, pp_k_action_map(pk, s));
                Integer f = homology_character_formula(o.k, s);
                os << cycle_type_str(type) << ',' << str(v) << ',' << str(f) << ',' << (v == f ? "yes" : "no") << '\n';
                ok = ok && v == f;
            }
            return {os.str(), ok};
        }
    }
    os << "degree,rank\n";
    for (std::size_t i = 0; i < ranks.size(); ++i) os << static_cast<int>(i) - 1 << ',' << ranks[i] << '\n';
    return {os.str(), ok};
}

Outcome run_character_table(const Options& o) {
    format_or(o, "csv", {"csv"});
    require_range("n", o.n, 1, o.k == 1 ? 5 : 4);
    require_range("k", o.k, 1, 3);
    std::ostringstream os;
    bool ok = true;
    os << "cycle_type,character,value,formula,match\n";
    const std::pair<CharacterKind, const char*> kinds[] = {
        {CharacterKind::park_k, "park_k"}, {CharacterKind::park_prime, "park_prime"}, {CharacterKind::park_prime_k, "park_prime_k"}};
    for (const auto& type : integer_partitions(o.n)) {
        Permutation s = permutation_of_cycle_type(type);
        for (const auto& [kind, name] : kinds) {
            Integer v = character_oracle(kind, o.k, s);
            Integer f = character_eval(kind, o.k, s);
            os << cycle_type_str(type) << ',' << name << ',' << str(v) << ',' << str(f) << ',' << (v == f ? "yes" : "no")
               << '\n';
            ok = ok && v == f;
        }
    }
    return {os.str(), ok};
}

Outcome run_cluster(const Options& o) {
    std::string f = format_or(o, "json", {"json", "csv"});
    require_range("n", o.n, 1, 4);
    ForestComplex d = forest_complex(o.n);
    ClusterComplex c = cluster_complex(o.n);
    PPPoset pp = build_pp_poset(o.n);
    auto w = cluster_whitney(c);
    std::vector<Integer> expect;
    for (int l = 0; l < o.n; ++l) expect.push_back(sign_of(l) * whitney(pp.poset, WhitneyKind::first, l));
    auto ranks = homology_ranks(chain_complex(c.complex));
    auto order_ranks = poset_homology(pp.poset).ranks;
    const Integer facets(d.complex.facets().size());
    const bool ok = w == expect && ranks == order_ranks && facets == catalan(o.n - 1) && cluster_ideals_boolean(c) &&
                    cluster_support_injective(c);
    if (f == "csv") {
        std::ostringstream os;
        os << "l,faces,expected,match\n";
        for (int l = 0; l < o.n; ++l)
            os << l << ',' << str(w[static_cast<std::size_t>(l)]) << ',' << str(expect[static_cast<std::size_t>(l)]) << ','
               << (w[static_cast<std::size_t>(l)] == expect[static_cast<std::size_t>(l)] ? "yes" : "no") << '\n';
        return {os.str(), ok};
    }
    Json wj = Json::array(), ej = Json::array();
    for (std::size_t l = 0; l < w.size(); ++l) {
        wj.push_back(str(w[l]));
        ej.push_back(str(expect[l]));
    }
    Json j{{"n", o.n},
           {"forest_facets", str(facets)},
           {"catalan", str(catalan(o.n - 1))},
           {"cluster_elements", c.elements.size()},
           {"cluster_faces_by_size", wj},
           {"signed_whitney_first", ej},
           {"cluster_homology", ranks},
           {"order_complex_homology", order_ranks},
           {"passed", ok}};
    return {dump(j), ok};
}

Outcome run_kdivisible(const Options& o) {
    format_or(o, "json", {"json"});
    require_range("n", o.n, 1, kMaxKDivisibleN);
    require_range("k", o.k, 1, kMaxKDivisibleK);
    NCKPoset nck = build_nc_k(o.n, o.k);
    PPKPoset ppk = build_pp_k(o.n, o.k);
    const Integer fuss = fuss_catalan(o.n, o.k + 1);
    const Integer parking = power(Integer(o.n * o.k + 1), o.n - 1);
    bool ok = Integer(nck.poset.size()) == fuss && Integer(ppk.poset.size()) == parking && compact_encoding_check(ppk) &&
              unique_descent_check(ppk);
    Json j{{"n", o.n},
           {"k", o.k},
           {"nc_k_size", nck.poset.size()},
           {"fuss_catalan", str(fuss)},
           {"nc_k_rank_sizes", nck.poset.rank_sizes()},
           {"pp_k_size", ppk.poset.size()},
           {"pp_k_formula", str(parking)},
           {"pp_k_rank_sizes", ppk.poset.rank_sizes()}};
    if (o.n * o.k <= 8) {
        DivisibleNC e = edelman_divisible_nc(o.n, o.k);
        j["divisible_nc_size"] = e.poset.size();
        j["divisible_nc_rank_sizes"] = e.poset.rank_sizes();
        ok = ok && e.poset.rank_sizes() == nck.poset.rank_sizes();
    }
    std::vector<int> primes = k_prime_elements(ppk, PrimeReading::smallest);
    j["prime_elements"] = primes.size();
    j["prime_formula"] = str(power(Integer(o.n * o.k - 1), o.n - 1));
    ok = ok && Integer(primes.size()) == power(Integer(o.n * o.k - 1), o.n - 1);
    j["passed"] = ok;
    return {dump(j), ok};
}

Outcome run_verify_all(const Options& o) {
    format_or(o, "csv", {"csv"});
    require_range("n", o.n, 1, kAcceptanceFullCap);
    std::ostringstream os;
    bool ok = true;
    for (int id = 1; id <= kAcceptanceCriteria; ++id) {
        CriterionResult r = run_criterion(id, o.n);
        os << format_result(r) << '\n';
        ok = ok && r.passed;
    }
    return {os.str(), ok};
}

void add_common(CLI::App* sub, Options& o, bool with_k, bool with_l) {
    sub->add_option("--n", o.n, "size of the ground set");
    if (with_k) sub->add_option("--k", o.k, "multichain length or divisibility");
    if (with_l) sub->add_option("--l", o.l, "rank (default: every rank)");
    sub->add_option("--format", o.format, "csv, json or dot")->check(CLI::IsMember({"csv", "json", "dot"}));
    sub->add_option("--output", o.output, "write to this file instead of standard output");
    sub->add_option("--jobs", o.jobs, "worker count (results do not depend on it)")->check(CLI::PositiveNumber);
    sub->add_flag("--long", o.long_mode, "unlock the larger cases");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noncrossing 2-partitions and parking functions"};
    app.require_subcommand(1);
    Options o;
    std::map<CLI::App*, Outcome (*)(const Options&)> handlers;

    auto* convert = app.add_subcommand("convert", "convert between word, tree, pair and triple");
    add_common(convert, o, false, false);
    convert->add_option("--from", o.from, "input representation")->check(CLI::IsMember({"word", "tree", "pair", "triple"}));
    convert->add_option("--to", o.to, "output representation")->check(CLI::IsMember({"word", "tree", "pair", "triple"}));
    convert->add_option("--input", o.input, "JSON, or a word such as 1325271");
    handlers[convert] = run_convert;

    auto* poset = app.add_subcommand("poset", "build a poset and export it");
    add_common(poset, o, true, false);
    poset->add_option("--kind", o.kind, "pp (2-partitions) or nc (noncrossing partitions)");
    handlers[poset] = run_poset;

    auto* count = app.add_subcommand("count", "multichain, Whitney, zeta and Moebius tables");
    add_common(count, o, true, true);
    count->add_option("--table", o.table, "chains, whitney, zeta or mobius");
    handlers[count] = run_count;

    auto* shelling = app.add_subcommand("shelling", "shelling and lemma verification reports");
    add_common(shelling, o, false, false);
    handlers[shelling] = run_shelling;

    auto* homology = app.add_subcommand("homology", "reduced Betti numbers or the character table");
    add_common(homology, o, true, false);
    homology->add_flag("--character", o.character, "print the Lefschetz character by cycle type");
    handlers[homology] = run_homology;

    auto* table = app.add_subcommand("character-table", "fixed-point counts against the closed characters");
    add_common(table, o, true, false);
    handlers[table] = run_character_table;

    auto* cluster = app.add_subcommand("cluster", "forest complex and cluster parking functions");
    add_common(cluster, o, false, false);
    handlers[cluster] = run_cluster;

    auto* kdiv = app.add_subcommand("kdivisible", "k-divisible posets");
    add_common(kdiv, o, true, false);
    handlers[kdiv] = run_kdivisible;

    auto* verify = app.add_subcommand("verify-all", "acceptance sweep with every size capped at --n");
    add_common(verify, o, false, false);
    handlers[verify] = run_verify_all;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Outcome out;
    try {
        for (auto* sub : app.get_subcommands()) out = handlers.at(sub)(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (o.output.empty()) {
        std::cout << out.text;
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << o.output << '\n';
            return 2;
        }
        f << out.text;
    }
    if (!out.passed) std::cerr << "check failed\n";
    return out.passed ? 0 : 1;
}
