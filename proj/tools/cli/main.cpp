#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace hypertorsion::cli;

namespace {

int emit(const std::string& command, const CommandResult& r, const Common& common) {
    const std::string text = r.to_json(command).dump(2);
    std::cout << text << std::endl;
    if (!common.json_out.empty()) {
        std::ofstream out(common.json_out);
        if (!out) {
            std::cerr << "cannot write " << common.json_out << std::endl;
            return 1;
        }
        out << text << '\n';
    }
    return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperelliptic curves with torsion points of order 2g+1"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--field", common.field, "Q, GF:p or GF:p,m")->capture_default_str();
    app.add_option("--seed", common.seed, "seed for extension moduli")->capture_default_str();
    app.add_option("--threads", common.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--json-out", common.json_out, "also write the result document to this path");

    std::function<CommandResult()> action;

    SingleArgs single;
    auto* cs = app.add_subcommand("construct-single", "curve (x-a)^(2g+1) + v^2 with its order-(2g+1) point");
    cs->add_option("--g", single.g)->required();
    cs->add_option("--a", single.a)->capture_default_str();
    cs->add_option("--v", single.v, "polynomial expression or JSON coefficient array")->required();
    cs->callback([&] { action = [&] { return construct_single(common, single); }; });

    VerifyArgs ver;
    auto* cv = app.add_subcommand("verify", "single certificate for a point, if it has order 2g+1");
    cv->add_option("--curve", ver.curve, "curve JSON file or expression")->required();
    cv->add_option("--g", ver.g);
    cv->add_option("--point", ver.point, "\"(x,y)\"")->required();
    cv->callback([&] { action = [&] { return verify(common, ver); }; });

    PairArgs pair;
    auto* cp = app.add_subcommand("construct-pair", "curve and points P, Q from a pair certificate");
    cp->add_option("--g", pair.g)->required();
    cp->add_option("--a1", pair.a1)->capture_default_str();
    cp->add_option("--a2", pair.a2)->capture_default_str();
    cp->add_option("--u1", pair.u1);
    cp->add_option("--u2", pair.u2);
    cp->add_option("--cert", pair.cert, "pair certificate JSON file or text");
    cp->add_flag("--normalize", pair.normalize, "also report the normalized enhanced curve");
    cp->add_flag("--decorations", pair.decorations, "also report the four decorations of the normalized curve");
    cp->callback([&] { action = [&] { return construct_pair(common, pair); }; });

    FamiliesArgs fams;
    auto* ce = app.add_subcommand("enumerate-families", "templates of all normalized families of genus g");
    ce->add_option("--g", fams.g)->required();
    ce->add_flag("--all-admissible", fams.all_admissible, "char regime: every admissible function");
    ce->callback([&] { action = [&] { return enumerate_families(common, fams); }; });

    FamilyArgs mu;
    auto add_family_opts = [](CLI::App* sc, FamilyArgs& a) {
        sc->add_option("--g", a.g)->required();
        sc->add_option("--family", a.family, "family JSON file or text");
        sc->add_option("--I", a.I, "root indices, e.g. 0,1");
        sc->add_option("--upsilon", a.upsilon, "admissible values, e.g. 2,2,1,1");
        sc->add_option("--mu", a.mu, "fixed scalar instead of a scan");
        sc->add_option("--limit", a.limit, "number of mu candidates")->capture_default_str();
    };
    auto* cm = app.add_subcommand("find-mu", "first scalar mu giving a squarefree curve");
    add_family_opts(cm, mu);
    cm->callback([&] { action = [&] { return find_mu(common, mu); }; });

    RationalArgs rat;
    auto* cr = app.add_subcommand("rational-g52", "curve over Q with four rational points of order 2g+1");
    cr->add_option("--g", rat.g)->capture_default_str();
    cr->add_option("--s1", rat.s1, "divisor set of the totient partition, e.g. 105,5");
    cr->add_option("--mu-limit", rat.mu_limit)->capture_default_str();
    cr->callback([&] { action = [&] { return rational(common, rat); }; });

    HyperArgs hyp;
    auto* ch = app.add_subcommand("hyperelliptic", "totient partitions of the divisors of n");
    auto* on = ch->add_option("--n", hyp.n);
    auto* om = ch->add_option("--max", hyp.max);
    on->excludes(om);
    ch->callback([&] { action = [&] { return hyperelliptic(common, hyp); }; });

    CensusArgs cen;
    auto* cc = app.add_subcommand("census", "every affine point of exact order n");
    cc->add_option("--curve", cen.curve, "curve JSON file or expression")->required();
    cc->add_option("--g", cen.g);
    cc->add_option("--n", cen.n, "order (default 2g+1)");
    cc->add_option("--p", cen.p, "characteristic; overrides --field");
    cc->add_option("--m", cen.m, "extension degree with --p")->capture_default_str();
    cc->callback([&] { action = [&] { return census(common, cen); }; });

    FamilyArgs wp;
    auto* cw = app.add_subcommand("weil", "pairing of P and Q on a family curve by both routes");
    add_family_opts(cw, wp);
    cw->callback([&] { action = [&] { return weil(common, wp); }; });

    SelftestArgs st;
    auto* ct = app.add_subcommand("selftest", "run the acceptance criteria");
    ct->add_option("--criterion", st.criteria, "criterion ids (default all)");
    ct->callback([&] { action = [&] { return selftest(common, st); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        CommandResult r;
        r.ok = false;
        r.code = "usage";
        r.message = e.what();
        std::cout << r.to_json(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name()).dump(2)
                  << std::endl;
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    CommandResult r;
    try {
        r = action();
    } catch (...) {
        r = from_exception(std::current_exception());
    }
    return emit(name, r, common);
}
