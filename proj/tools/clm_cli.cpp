#include "clm/builtin.hpp"
#include "clm/class_triple.hpp"
#include "clm/dataset.hpp"
#include "clm/hecke.hpp"
#include "clm/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace clm;

namespace {

struct Options {
    std::string group_path;
    std::string subgroup;
    std::string delta;
    std::vector<long> primes;
    std::vector<long> trunc;
    std::string bound;
    std::vector<std::string> u;
    std::vector<std::string> places;
    std::string type;
    std::string s_word;
    std::string data_path;
    std::uint64_t seed = 0;
    long count = 10;
    bool strict = false;
    std::string format = "text";
    std::vector<int> only;
};

struct Loaded {
    GroupSpecDoc doc;
    CharacterTable tab;
    std::vector<AlgebraComponent> comps;
};

Loaded load(const Options& opt) {
    if (opt.group_path.empty())
        throw ParseError("this subcommand needs --group");
    Loaded l;
    l.doc = load_group_spec(opt.group_path);
    l.tab = character_table(*l.doc.group);
    l.comps = rational_components(l.tab);
    return l;
}

Subgroup named_subgroup(const Loaded& l, const std::string& name) {
    if (name == "trivial" || name == "1") return trivial_subgroup(*l.doc.group);
    if (name == "full") return full_subgroup(*l.doc.group);
    return l.doc.subgroup(name);
}

// constituent positions: the augmentation component when a subgroup is
// given, every nontrivial component otherwise
std::vector<int> positions_for(const Loaded& l, const Options& opt) {
    if (!opt.subgroup.empty())
        return augmentation_component(l.tab, l.comps,
                                      named_subgroup(l, opt.subgroup))
            .positions;
    std::vector<int> out;
    for (std::size_t i = 1; i < l.comps.size(); ++i)
        out.push_back(static_cast<int>(i));
    return out;
}

TruncationSpec trunc_spec(const Options& opt) {
    TruncationSpec tr;
    if (opt.trunc.size() != opt.primes.size())
        throw ParseError("--trunc needs one exponent per prime in --primes");
    for (std::size_t i = 0; i < opt.primes.size(); ++i) {
        Int p(opt.primes[i]);
        if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
            throw ParseError(p.get_str() + " is not prime");
        tr.prime_exponents.push_back({p, opt.trunc[i]});
    }
    if (!opt.bound.empty()) tr.order_bound = Int(opt.bound);
    return tr;
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

RankSpec rank_spec(const Loaded& l, const Options& opt) {
    if (!opt.u.empty() && !opt.places.empty())
        throw ParseError("give exactly one of --u and --places");
    if (!opt.u.empty()) {
        std::vector<Rat> u;
        if (opt.u.size() == 1 && l.comps.size() > 2) {
            // one value replicates across the nontrivial components
            u.assign(l.comps.size() - 1, parse_rat(opt.u[0]));
        } else {
            for (const std::string& s : opt.u) u.push_back(parse_rat(s));
        }
        return rank_from_u(l.tab, l.comps, u);
    }
    if (!opt.places.empty()) {
        std::vector<Subgroup> places;
        for (const std::string& name : opt.places)
            places.push_back(named_subgroup(l, name));
        return rank_u(l.tab, l.comps, places);
    }
    throw ParseError("this subcommand needs --u or --places");
}

std::string rat_str(const Rat& r) {
    return r.get_num().get_str() +
           (r.get_den() == 1 ? "" : "/" + r.get_den().get_str());
}

bool csv(const Options& opt) { return opt.format == "csv"; }

std::string coeff_term(const Rat& c, const std::string& name, bool first) {
    std::string out;
    if (c < 0)
        out += first ? "-" : " - ";
    else if (!first)
        out += " + ";
    Rat a = abs(c);
    if (a != 1) out += rat_str(a) + "*";
    out += name;
    return out;
}

std::string galg_str(const Group& g, const QVec& v) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        out += coeff_term(v[i], g.element_name(static_cast<int>(i)), first);
        first = false;
    }
    return first ? "0" : out;
}

// ---- subcommand bodies ----

int run_decompose(const Options& opt) {
    Loaded l = load(opt);
    if (csv(opt)) {
        std::cout << "component,h,center_degree,dim,split\n";
        for (const auto& c : l.comps)
            std::cout << c.index << ',' << c.h << ',' << c.center_degree << ','
                      << c.dim << ',' << (c.split_registered ? 1 : 0) << '\n';
        return 0;
    }
    std::cout << "group " << l.doc.group->name() << " order "
              << l.doc.group->size() << ", " << l.comps.size()
              << " rational components\n";
    for (const auto& c : l.comps) {
        std::cout << "component " << c.index << ": h=" << c.h
                  << " center_degree=" << c.center_degree << " dim=" << c.dim
                  << (c.split_registered ? " (split registry)" : "") << "\n";
        std::cout << "  e_" << c.index << " = "
                  << galg_str(*l.doc.group, c.idempotent) << "\n";
    }
    return 0;
}

int run_good_primes(const Options& opt) {
    Loaded l = load(opt);
    std::vector<int> pos = positions_for(l, opt);
    if (opt.primes.empty()) throw ParseError("good-primes needs --primes");
    if (csv(opt)) std::cout << "prime,verdict,denominator,gram,closed\n";
    for (long pl : opt.primes) {
        Int p(pl);
        std::vector<GoodPrimeDetail> det;
        PrimeVerdict v = good_prime_for(l.tab, l.comps, pos, p, &det);
        bool den = true, gram = true, closed = true;
        for (const auto& d : det) {
            den = den && d.denominator;
            gram = gram && d.gram;
            closed = closed && d.closed;
        }
        if (csv(opt))
            std::cout << p << ',' << verdict_name(v) << ',' << den << ','
                      << gram << ',' << closed << '\n';
        else
            std::cout << "p=" << p << ": " << verdict_name(v)
                      << "  (denominator=" << den << " gram=" << gram
                      << " closed=" << closed << ")\n";
    }
    return 0;
}

int run_rank(const Options& opt) {
    Loaded l = load(opt);
    RankSpec r = rank_spec(l, opt);
    for (std::size_t i = 1; i < l.comps.size(); ++i)
        std::cout << "u_" << l.comps[i].index << " = " << rat_str(r.u[i])
                  << " (" << decimal12(r.u[i]) << ")\n";
    if (!opt.subgroup.empty()) {
        AugmentationComponent aug = augmentation_component(
            l.tab, l.comps, named_subgroup(l, opt.subgroup));
        std::vector<Rat> v = rank_transfer(r, aug, l.comps);
        for (std::size_t i = 0; i < v.size(); ++i)
            std::cout << "v (component " << aug.positions[i] + 1
                      << ") = " << rat_str(v[i]) << "\n";
    }
    return 0;
}

int run_enumerate(const Options& opt) {
    Loaded l = load(opt);
    std::vector<int> pos = positions_for(l, opt);
    TruncationSpec tr = trunc_spec(opt);
    std::vector<ComponentRef> refs;
    for (int p : pos)
        refs.push_back({p, l.comps[static_cast<std::size_t>(p)].h});
    std::vector<ModuleType> types = enumerate_types(refs, tr);
    if (csv(opt)) std::cout << "type,order\n";
    for (const ModuleType& t : types)
        std::cout << t.str() << (csv(opt) ? "," : "  order ") << t.order()
                  << '\n';
    return 0;
}

DistributionTable make_table(const Loaded& l, const Options& opt,
                             const RankSpec& r) {
    return truncated_table(l.tab, l.comps, positions_for(l, opt), r,
                           trunc_spec(opt));
}

int run_dist(const Options& opt) {
    Loaded l = load(opt);
    RankSpec r = rank_spec(l, opt);
    DistributionTable t = make_table(l, opt, r);
    if (csv(opt)) std::cout << "type,weight_num,weight_den,probability\n";
    for (const DistRow& row : t.rows) {
        std::string ty = row.type.is_zero() ? "0" : row.type.str();
        if (csv(opt))
            std::cout << ty << ',' << row.weight.get_num() << ','
                      << row.weight.get_den() << ',' << decimal12(row.prob)
                      << '\n';
        else
            std::cout << ty << "  weight " << rat_str(row.weight) << "  prob "
                      << rat_str(row.prob) << " (" << decimal12(row.prob)
                      << ")\n";
    }
    if (!csv(opt))
        std::cout << "normalizer " << rat_str(t.z_trunc) << " ("
                  << decimal12(t.z_trunc) << ")\n";
    return 0;
}

int run_moments(const Options& opt) {
    Loaded l = load(opt);
    RankSpec r = rank_spec(l, opt);
    DistributionTable t = make_table(l, opt, r);
    if (opt.type.empty()) throw ParseError("moments needs --type");
    ModuleType h = parse_module_type(opt.type, l.comps);
    MomentResult m = moment(t, h, r, l.comps);
    Rat gap = abs(m.truncated - m.closed);
    if (csv(opt)) {
        std::cout << "H_type,truncated,closed_form,gap\n";
        std::cout << (h.is_zero() ? "0" : h.str()) << ','
                  << decimal12(m.truncated) << ',' << decimal12(m.closed)
                  << ',' << decimal12(gap) << '\n';
    } else {
        std::cout << "H = " << (h.is_zero() ? "0" : h.str()) << "\n"
                  << "truncated  " << rat_str(m.truncated) << " ("
                  << decimal12(m.truncated) << ")\n"
                  << "closed     " << rat_str(m.closed) << " ("
                  << decimal12(m.closed) << ")\n"
                  << "gap        " << rat_str(gap) << " (" << decimal12(gap)
                  << ")\n";
    }
    return 0;
}

int run_invert(const Options& opt) {
    Loaded l = load(opt);
    RankSpec r = rank_spec(l, opt);
    DistributionTable t = make_table(l, opt, r);
    std::vector<ModuleType> types;
    std::vector<Rat> moms;
    for (const DistRow& row : t.rows) {
        types.push_back(row.type);
        moms.push_back(moment(t, row.type, r, l.comps).truncated);
    }
    std::vector<Rat> sol = invert_moments(types, moms);
    bool exact = true;
    if (csv(opt)) std::cout << "type,probability,recovered,exact\n";
    for (std::size_t i = 0; i < types.size(); ++i) {
        bool eq = sol[i] == t.rows[i].prob;
        exact = exact && eq;
        std::string ty = types[i].is_zero() ? "0" : types[i].str();
        if (csv(opt))
            std::cout << ty << ',' << decimal12(t.rows[i].prob) << ','
                      << decimal12(sol[i]) << ',' << eq << '\n';
        else
            std::cout << ty << "  prob " << rat_str(t.rows[i].prob)
                      << "  recovered " << rat_str(sol[i])
                      << (eq ? "  (exact)" : "  (MISMATCH)") << '\n';
    }
    return exact ? 0 : 1;
}

int run_sample(const Options& opt) {
    Loaded l = load(opt);
    RankSpec r = rank_spec(l, opt);
    DistributionTable t = make_table(l, opt, r);
    for (const ModuleType& x : sample(t, opt.seed, opt.count))
        std::cout << (x.is_zero() ? "0" : x.str()) << '\n';
    return 0;
}

int run_class_triples(const Options& opt) {
    Loaded l = load(opt);
    const Group& g = *l.doc.group;
    if (opt.type.empty()) throw ParseError("class-triples needs --type");
    ModuleType t = parse_module_type(opt.type, l.comps);
    GammaModule m = module_from_type(t, l.tab, l.comps);
    validate_gamma(m);
    std::vector<int> s_list;
    if (!opt.s_word.empty()) {
        auto id = g.find_perm(parse_perm_word(opt.s_word, g.degree()));
        if (!id) throw ParseError("--s is not an element of the group");
        s_list.push_back(*id);
    } else {
        for (const ConjugacyClass& cl : conjugacy_classes(g))
            if (g.order_of(cl.rep) <= 2) s_list.push_back(cl.rep);
    }
    if (csv(opt)) std::cout << "s,total_order,aut_formula,aut_exhaustive\n";
    for (int s : s_list) {
        ClassTriple tri = build_class_triple(m, s);
        Int formula = triple_aut_formula(tri, m);
        Int work = triple_aut_workbound(tri) * tri.total->size();
        std::string brute =
            work <= 20000000 ? triple_aut_bruteforce(tri).get_str() : "-";
        if (csv(opt))
            std::cout << g.element_name(s) << ',' << tri.total->size() << ','
                      << formula << ',' << brute << '\n';
        else
            std::cout << "s = " << g.element_name(s) << "  |G| = "
                      << tri.total->size() << "  automorphisms " << formula
                      << (brute == "-" ? "" : " (exhaustive " + brute + ")")
                      << '\n';
    }
    return 0;
}

std::vector<Int> cli_good_primes(const Loaded& l, const Subgroup& sub,
                                 const Options& opt) {
    AugmentationComponent aug = augmentation_component(l.tab, l.comps, sub);
    std::vector<Int> s;
    std::vector<long> source = opt.primes;
    if (source.empty())
        source = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (long pl : source) {
        Int p(pl);
        if (good_prime_for(l.tab, l.comps, aug.positions, p) ==
            PrimeVerdict::Good)
            s.push_back(p);
        else if (!opt.primes.empty())
            throw BadPrime(p.get_str() + " is not good for this pair");
    }
    return s;
}

int run_hecke(const Options& opt) {
    Loaded l = load(opt);
    if (opt.subgroup.empty()) throw ParseError("hecke needs --subgroup");
    Subgroup sub = named_subgroup(l, opt.subgroup);
    std::vector<Int> s = cli_good_primes(l, sub, opt);
    HeckeOrder o = hecke_order(l.tab, l.comps, sub, s);
    std::cout << "rank " << o.rank() << "\n";
    std::cout << "constituents:";
    for (std::size_t i = 0; i < o.aug.positions.size(); ++i)
        std::cout << " (component " << o.aug.positions[i] + 1 << ", h="
                  << l.comps[static_cast<std::size_t>(o.aug.positions[i])].h
                  << ", mult=" << o.aug.mults[i] << ")";
    std::cout << "\nprimes:";
    for (const Int& p : s) std::cout << ' ' << p;
    std::cout << "\n";
    for (std::size_t j = 0; j < o.rank(); ++j)
        std::cout << "b" << j << " = " << galg_str(*l.doc.group, o.basis[j])
                  << "\n";
    std::cout << "identity =";
    for (const Rat& c : o.identity_coeffs) std::cout << ' ' << rat_str(c);
    std::cout << "\n";
    for (std::size_t a = 0; a < o.rank(); ++a)
        for (std::size_t b = 0; b < o.rank(); ++b) {
            std::cout << "b" << a << "*b" << b << " =";
            for (const Rat& c : o.structure[a][b]) std::cout << ' ' << rat_str(c);
            std::cout << "\n";
        }
    return 0;
}

int run_nongalois(const Options& opt) {
    Loaded l = load(opt);
    if (opt.subgroup.empty()) throw ParseError("nongalois needs --subgroup");
    Subgroup sub = named_subgroup(l, opt.subgroup);
    RankSpec r = rank_spec(l, opt);
    std::vector<Int> s = cli_good_primes(l, sub, opt);
    HeckeOrder o = hecke_order(l.tab, l.comps, sub, s);
    TruncationSpec tr = trunc_spec(opt);
    std::vector<NonGaloisRow> rows = nongalois_table(l.tab, l.comps, o, r, tr);
    if (csv(opt)) std::cout << "fixed_points,lifts,col_a,col_b,equal\n";
    for (const NonGaloisRow& row : rows) {
        std::string inv;
        for (const Int& d : invariant_factors(row.rep.mod.orders))
            inv += (inv.empty() ? "" : ".") + d.get_str();
        if (inv.empty()) inv = "1";
        std::string lifts;
        for (const ModuleType& t : row.lift_types)
            lifts += (lifts.empty() ? "" : " ") + (t.is_zero() ? "0" : t.str());
        bool eq = row.col_a == row.col_b;
        if (csv(opt))
            std::cout << inv << ',' << lifts << ',' << rat_str(row.col_a)
                      << ',' << rat_str(row.col_b) << ',' << eq << '\n';
        else
            std::cout << "H = " << inv << "  lifts [" << lifts << "]  A = "
                      << rat_str(row.col_a) << "  B = " << rat_str(row.col_b)
                      << (eq ? "  (equal)" : "  (MISMATCH)") << '\n';
    }
    return 0;
}

int run_independence(const Options& opt) {
    Loaded l = load(opt);
    if (opt.subgroup.empty() || opt.delta.empty())
        throw ParseError("independence needs --delta and --subgroup");
    RankSpec r = rank_spec(l, opt);
    RankIndependenceReport rep = rank_independence_check(
        *l.doc.group, named_subgroup(l, opt.delta),
        named_subgroup(l, opt.subgroup), r);
    std::cout << "v via the ambient group:  ";
    for (const Rat& v : rep.v_direct) std::cout << rat_str(v) << ' ';
    std::cout << "\nv via the quotient:       ";
    for (const Rat& v : rep.v_quotient) std::cout << rat_str(v) << ' ';
    std::cout << "\nranks equal: " << rep.equal_ranks
              << "  dimensions equal: " << rep.equal_dims << "\n";
    return rep.ok() ? 0 : 1;
}

int run_verify(const Options& opt) {
    std::vector<SuiteResult> res = run_suites(std::cout, opt.only);
    return all_passed(res) ? 0 : 1;
}

int run_compare(const Options& opt) {
    Loaded l = load(opt);
    if (opt.data_path.empty()) throw ParseError("compare needs --data");
    IngestResult ing = ingest_dataset_file(opt.data_path, opt.strict);
    for (const std::string& msg : ing.skipped)
        std::cerr << "skipped " << msg << "\n";
    RankSpec r = rank_spec(l, opt);
    CompareReport rep =
        compare_dataset(ing.rows, l.tab, l.comps, positions_for(l, opt), r,
                        trunc_spec(opt));
    if (csv(opt)) std::cout << "type,predicted,empirical,count\n";
    for (const CompareRow& row : rep.rows) {
        std::string ty = row.type.is_zero() ? "0" : row.type.str();
        if (csv(opt))
            std::cout << ty << ',' << decimal12(row.predicted) << ','
                      << decimal12(row.empirical) << ',' << row.count << '\n';
        else
            std::cout << ty << "  predicted " << decimal12(row.predicted)
                      << "  empirical " << decimal12(row.empirical) << " ("
                      << row.count << "/" << rep.total << ")\n";
    }
    if (!csv(opt)) {
        std::cout << "closed-form trivial part " << decimal12(rep.closed_trivial)
                  << "\n";
        if (rep.unmatched > 0)
            std::cout << rep.unmatched << " rows outside the truncation\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact class-group distribution workbench"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", opt.group_path, "group spec file");
        sub->add_option("--subgroup", opt.subgroup,
                        "named subgroup ('trivial' and 'full' also work)");
        sub->add_option("--primes", opt.primes, "comma-separated primes")
            ->delimiter(',');
        sub->add_option("--trunc", opt.trunc,
                        "truncation exponents, one per prime")
            ->delimiter(',');
        sub->add_option("--bound", opt.bound, "module order bound");
        sub->add_option("--u", opt.u,
                        "rank exponents (one value replicates)")
            ->delimiter(',');
        sub->add_option("--places", opt.places,
                        "decomposition subgroup names, one per infinite place")
            ->delimiter(',');
        sub->add_option("--seed", opt.seed, "sampler seed");
        sub->add_option("--count", opt.count, "sample count");
        sub->add_option("--type", opt.type, "module type, e.g. 2:3:2.1");
        sub->add_option("--s", opt.s_word, "order-2 element as a cycle word");
        sub->add_option("--delta", opt.delta, "normal subgroup name");
        sub->add_option("--data", opt.data_path, "dataset CSV path");
        sub->add_option("--format", opt.format, "text|csv")
            ->check(CLI::IsMember({"text", "csv"}));
        sub->add_flag("--strict", opt.strict, "abort on malformed rows");
        sub->add_option("--only", opt.only, "verification suites to run")
            ->delimiter(',');
    };

    struct Cmd {
        const char* name;
        const char* help;
        int (*fn)(const Options&);
    };
    const Cmd cmds[] = {
        {"decompose", "simple components and central idempotents", run_decompose},
        {"good-primes", "three-way good-prime verdicts", run_good_primes},
        {"rank", "rank exponents u (and transferred v)", run_rank},
        {"enumerate", "module types within a truncation", run_enumerate},
        {"dist", "truncated distribution table", run_dist},
        {"moments", "truncated vs closed-form moment", run_moments},
        {"invert", "moment inversion round trip", run_invert},
        {"sample", "draw types from the truncated distribution", run_sample},
        {"class-triples", "extension automorphism counts", run_class_triples},
        {"hecke", "integral fixed-point endomorphism order", run_hecke},
        {"nongalois", "weight identity table", run_nongalois},
        {"independence", "rank independence of the ambient group", run_independence},
        {"verify", "run the verification suites", run_verify},
        {"compare", "empirical vs predicted frequencies", run_compare},
    };
    std::map<std::string, int (*)(const Options&)> dispatch;
    for (const Cmd& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub);
        dispatch[c.name] = c.fn;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch[app.get_subcommands().front()->get_name()](opt);
    } catch (const ParseError& e) {
        std::cerr << "error " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error " << e.what() << "\n";
        return 1;
    }
}
