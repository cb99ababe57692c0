#include "chowkit/runner.hpp"

#include "chowkit/fforacle.hpp"
#include "chowkit/invariants.hpp"

#include <chrono>
#include <sstream>

namespace chowkit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string degrees_str(const Expo& d) {
    std::ostringstream os;
    os << "O(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ",";
        os << d[i];
    }
    os << ")";
    return os.str();
}

struct RunError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Environment {
public:
    explicit Environment(const RunOptions& opt) : opt_(opt) {}

    void execute(const Statement& st, Report& report) {
        switch (st.kind) {
        case Statement::Kind::Base: {
            Space s = build_base(st.base_dims);
            bind_space(st.name, std::move(s));
            break;
        }
        case Statement::Kind::Bundle: {
            const Space& cur = current("bundle declaration");
            bundles_[st.name] = {cur.ring(), resolve_bundle(st.bundle, cur)};
            break;
        }
        case Statement::Kind::Proj: {
            const Space& cur = current("proj");
            Space s = add_proj_bundle(cur, resolve_bundle(st.bundle, cur));
            bind_space(st.name, std::move(s));
            break;
        }
        case Statement::Kind::Zero: {
            const Space& ambient = space(st.space_arg);
            Space s = cut_zero_locus(ambient, resolve_bundle(st.bundle, ambient));
            bind_space(st.name, std::move(s));
            break;
        }
        case Statement::Kind::Preset: {
            bind_space(st.name, preset(st.preset_name));
            break;
        }
        case Statement::Kind::Query:
            run_query(st, report);
            break;
        case Statement::Kind::FFCheck:
            run_ffcheck(st, report);
            break;
        }
    }

private:
    const RunOptions& opt_;
    std::map<std::string, Space> spaces_;
    struct BoundBundle {
        RingPtr ring;
        SplitBundle bundle;
    };
    std::map<std::string, BoundBundle> bundles_;
    std::optional<std::string> current_;

    void bind_space(const std::string& name, Space s) {
        std::string key = name.empty() ? std::string("_") : name;
        spaces_.insert_or_assign(key, std::move(s));
        current_ = key;
    }
    const Space& current(const char* what) {
        if (!current_) throw RunError(std::string(what) + ": no space constructed yet");
        return spaces_.at(*current_);
    }
    const Space& space(const std::string& name) {
        auto it = spaces_.find(name);
        if (it == spaces_.end()) throw RunError("undeclared space '" + name + "'");
        return it->second;
    }

    SplitBundle resolve_bundle(const BundleExpr& expr, const Space& over) {
        SplitBundle out;
        const std::size_t arity = over.ring()->generator_count();
        for (const auto& term : expr) {
            std::vector<Expo> summands;
            switch (term.kind) {
            case BundleTerm::Kind::Degrees: {
                if (term.degrees.size() != arity)
                    throw RunError("degree vector " + degrees_str(term.degrees) + " has arity " +
                                   std::to_string(term.degrees.size()) + ", expected " +
                                   std::to_string(arity));
                summands.push_back(term.degrees);
                break;
            }
            case BundleTerm::Kind::Generator: {
                int gi = over.ring()->generator_index(term.name);
                if (gi < 0) throw RunError("unknown generator '" + term.name + "'");
                Expo d(arity, 0);
                d[gi] = term.gen_degree;
                summands.push_back(std::move(d));
                break;
            }
            case BundleTerm::Kind::Dual:
            case BundleTerm::Kind::Ref: {
                auto it = bundles_.find(term.name);
                if (it == bundles_.end())
                    throw RunError("undeclared bundle '" + term.name + "'");
                if (it->second.ring != over.ring())
                    throw RunError("bundle '" + term.name +
                                   "' was declared over a different space");
                for (Expo d : it->second.bundle.summands) {
                    if (term.kind == BundleTerm::Kind::Dual)
                        for (auto& x : d) x = -x;
                    summands.push_back(std::move(d));
                }
                break;
            }
            }
            for (int r = 0; r < term.repeat; ++r)
                for (const auto& d : summands) out.summands.push_back(d);
        }
        return out;
    }

    void run_query(const Statement& st, Report& report) {
        const Space& s = space(st.space_arg);
        for (const auto& note : s.notes()) push_unique(report.assumptions, note);
        for (const auto& item : st.items) {
            auto t0 = Clock::now();
            QueryResult q;
            q.provenance = "exact";
            Expo twist;
            if (item.minus_k) twist = s.anticanonical();
            else if (item.structure) twist = Expo(s.ring()->generator_count(), 0);
            else twist = item.degrees;
            switch (item.kind) {
            case QueryItem::Kind::Euler:
                q.name = "euler(" + st.space_arg + ")";
                q.value = euler_number(s).get_str();
                break;
            case QueryItem::Kind::Dim:
                q.name = "dim(" + st.space_arg + ")";
                q.value = std::to_string(s.dim());
                break;
            case QueryItem::Kind::Canonical:
                q.name = "canonical(" + st.space_arg + ")";
                q.value = degrees_str(s.canonical());
                break;
            case QueryItem::Kind::ChiY: {
                q.name = "chiy(" + st.space_arg + ")";
                auto prof = chi_y(s);
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& v : prof.chi_p) arr.push_back(v.get_str());
                q.value = arr;
                break;
            }
            case QueryItem::Kind::Fano:
                q.name = "fano(" + st.space_arg + ")";
                q.value = s.fano_positivity();
                q.provenance = "assumed";
                q.message = "positivity of every -K component over the tower generators; "
                            "smoothness/transversality of the cuts assumed";
                push_unique(report.assumptions,
                            "zero loci are assumed smooth and transverse (spot-checked "
                            "stochastically by ffcheck, not proved)");
                break;
            case QueryItem::Kind::Chi: {
                check_twist(item, twist, s);
                q.name = "chi(" + st.space_arg + ", " + degrees_str(twist) + ")";
                q.value = chi(s, twist).get_str();
                break;
            }
            case QueryItem::Kind::Degree: {
                check_twist(item, twist, s);
                q.name = "degree(" + st.space_arg + ", " +
                         (item.minus_k ? std::string("-K") : degrees_str(twist)) + ")";
                q.value = degree(s, twist).get_str();
                break;
            }
            case QueryItem::Kind::H0: {
                check_twist(item, twist, s);
                q.name = "h0(" + st.space_arg + ", " +
                         (item.minus_k ? std::string("-K") : degrees_str(twist)) + ")";
                auto h0 = h0_via_koszul(s, twist);
                q.value = nlohmann::json{{"value", h0.value.get_str()},
                                         {"certified", h0.certified}};
                q.provenance = h0.certified ? "certified" : "uncertified";
                if (!h0.certified) {
                    q.message = h0.note;
                    if (opt_.strict) {
                        q.ok = false;
                        q.message += " (strict mode: treated as failure)";
                    }
                }
                break;
            }
            }
            q.runtime_ms = ms_since(t0);
            report.queries.push_back(std::move(q));
        }
    }

    void check_twist(const QueryItem& item, const Expo& twist, const Space& s) {
        if (!item.minus_k && !item.structure &&
            twist.size() != s.ring()->generator_count())
            throw RunError("multidegree arity " + std::to_string(twist.size()) + ", expected " +
                           std::to_string(s.ring()->generator_count()));
    }

    void run_ffcheck(const Statement& st, Report& report) {
        auto kv = st.ff.kv;
        uint32_t p = static_cast<uint32_t>(kv.count("p") ? kv.at("p") : opt_.p);
        uint64_t seed = static_cast<uint64_t>(kv.count("seed") ? kv.at("seed") : opt_.seed);
        uint64_t trials = static_cast<uint64_t>(kv.count("trials") ? kv.at("trials") : opt_.trials);
        uint64_t budget = static_cast<uint64_t>(kv.count("budget") ? kv.at("budget") : opt_.budget);
        if (!ff::is_prime(p)) throw RunError("ffcheck: p must be prime");

        ff::MorphismMatrix m = st.ff.instance_file.empty()
                                   ? ff::MorphismMatrix::random_production(p, seed)
                                   : ff::load_instance(st.ff.instance_file);
        ff::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);

        std::vector<std::string> checks = st.ff.checks;
        if (checks.empty())
            checks = {"rank_profile", "blowup_identity", "stratified_identity"};
        for (const auto& name : checks) {
            auto t0 = Clock::now();
            QueryResult q;
            q.provenance = "stochastic";
            q.seed = seed;
            q.name = "ffcheck." + name + "(p=" + std::to_string(p) + ")";
            if (name == "rank_profile") {
                auto counts = ff::rank_profile(m, budget);
                nlohmann::json arr = nlohmann::json::array();
                for (auto c : counts) arr.push_back(std::to_string(c));
                q.value = nlohmann::json{{"counts_by_rank", arr}};
            } else if (name == "count_Y") {
                auto yc = ff::count_Y(m, budget);
                q.value = nlohmann::json{{"direct", std::to_string(yc.direct)},
                                         {"via_fibers", std::to_string(yc.via_fibers)},
                                         {"agree", yc.agree}};
                q.ok = yc.agree;
            } else if (name == "blowup_identity") {
                auto b = ff::blowup_identity(m, budget);
                q.value = nlohmann::json{{"applicable", b.applicable},
                                         {"Y", std::to_string(b.y_count)},
                                         {"X", std::to_string(b.x_count)},
                                         {"D1", std::to_string(b.d1_count)},
                                         {"holds", b.holds}};
                q.ok = !b.applicable || b.holds;
                if (!b.applicable)
                    q.message = "N0 > 0 on this instance; identity not applicable";
            } else if (name == "stratified_identity") {
                auto sid = ff::stratified_count_identity(m, budget);
                q.value = nlohmann::json{{"direct", std::to_string(sid.direct)},
                                         {"stratified", std::to_string(sid.stratified)},
                                         {"holds", sid.holds}};
                q.ok = sid.holds;
            } else if (name == "jacobian_Y" || name == "jacobian_D1") {
                auto rep = ff::jacobian_sample(
                    m, name == "jacobian_Y" ? ff::SampleLocus::Y : ff::SampleLocus::D1, trials,
                    rng, budget);
                q.value = nlohmann::json{{"sampled", std::to_string(rep.sampled)},
                                         {"smooth", std::to_string(rep.smooth_hits)},
                                         {"singular", std::to_string(rep.singular_hits)},
                                         {"locus_empty", rep.locus_empty}};
                q.ok = rep.locus_empty || rep.singular_hits == 0;
                if (rep.locus_empty) q.message = "locus empty over F_p (reported, not failed)";
            } else {
                throw RunError("unknown ffcheck '" + name + "'");
            }
            q.runtime_ms = ms_since(t0);
            report.queries.push_back(std::move(q));
        }
        push_unique(report.notes, "ffcheck instances drawn with seed " + std::to_string(seed) +
                                      " at p=" + std::to_string(p));
    }

    static void push_unique(std::vector<std::string>& v, const std::string& s) {
        for (const auto& x : v)
            if (x == s) return;
        v.push_back(s);
    }
};

} // namespace

bool Report::all_ok() const {
    for (const auto& q : queries)
        if (!q.ok) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["schema"] = schema;
    j["ok"] = all_ok();
    auto arr = nlohmann::json::array();
    for (const auto& q : queries) {
        nlohmann::json e;
        e["name"] = q.name;
        e["value"] = q.value;
        e["provenance"] = q.provenance;
        if (q.seed) e["seed"] = *q.seed;
        e["runtime_ms"] = q.runtime_ms;
        e["ok"] = q.ok;
        if (!q.message.empty()) e["message"] = q.message;
        arr.push_back(std::move(e));
    }
    j["queries"] = std::move(arr);
    j["assumptions"] = assumptions;
    j["notes"] = notes;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& q : queries) {
        os << (q.ok ? "ok   " : "FAIL ") << q.name << " = " << q.value.dump()
           << "  [" << q.provenance;
        if (q.seed) os << ", seed " << *q.seed;
        os << "]";
        if (!q.message.empty()) os << "  " << q.message;
        os << "\n";
    }
    for (const auto& a : assumptions) os << "assumption: " << a << "\n";
    for (const auto& n : notes) os << "note: " << n << "\n";
    return os.str();
}

Report run(const Script& script, const RunOptions& options) {
    Report report;
    Environment env(options);
    for (std::size_t i = 0; i < script.statements.size(); ++i) {
        try {
            env.execute(script.statements[i], report);
        } catch (const std::exception& e) {
            throw std::runtime_error("statement " + std::to_string(i + 1) + " (line " +
                                     std::to_string(script.statements[i].line) + "): " + e.what());
        }
    }
    return report;
}

} // namespace chowkit
