#include "satura/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

#include "satura/error.hpp"
#include "satura/hilbert.hpp"
#include "satura/saturate.hpp"

namespace satura::experiments {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Single-consumer channel from the workers to the collecting thread.
template <class T>
class Channel {
public:
    void send(T v) {
        {
            std::lock_guard lock(m_);
            q_.push(std::move(v));
        }
        cv_.notify_one();
    }
    T receive() {
        std::unique_lock lock(m_);
        cv_.wait(lock, [&] { return !q_.empty(); });
        T v = std::move(q_.front());
        q_.pop();
        return v;
    }

private:
    std::mutex m_;
    std::condition_variable cv_;
    std::queue<T> q_;
};

// Runs job(k) for k in [0, count) on `threads` workers that claim indices one
// at a time, and hands each (k, result) to `collect` on the calling thread.
template <class R>
void run_pool(std::size_t count, unsigned threads, const std::function<R(std::size_t)>& job,
              const std::function<void(std::size_t, R&&)>& collect) {
    if (count == 0) return;
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    std::atomic<std::size_t> next{0};
    Channel<std::pair<std::size_t, R>> channel;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&] {
            for (std::size_t k; (k = next.fetch_add(1)) < count;) channel.send({k, job(k)});
        });
    }
    for (std::size_t received = 0; received < count; ++received) {
        auto [k, r] = channel.receive();
        collect(k, std::move(r));
    }
}

std::optional<std::chrono::milliseconds> effective_timeout(const std::optional<std::chrono::milliseconds>& given,
                                                           std::size_t i) {
    return given ? given : default_timeout(i);
}

void precheck(const problems::ProblemInstance& inst, std::size_t i, std::uint64_t p) {
    if (i >= inst.n()) throw InvalidArgument("i must lie in [0, n-1]");
    saturate::check_prime(inst, p);
}

// Per-trial errors are classified, never rethrown.
template <class Fn>
TrialResult classify(Fn&& fn) {
    TrialResult r;
    const auto start = Clock::now();
    try {
        fn(r);
    } catch (const Timeout&) {
        r.outcome = Outcome::Timeout;
    } catch (const NotZeroDimensional&) {
        r.outcome = Outcome::PositiveDimensional;
    } catch (const std::exception& e) {
        r.outcome = Outcome::Error;
        r.message = e.what();
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

TrialResult one_gi(const problems::ProblemInstance& inst, std::size_t i, std::uint64_t p, std::uint64_t seed,
                   const saturate::GiOptions& go) {
    return classify([&](TrialResult& r) {
        auto res = saturate::compute_gi(inst, i, arith::FieldDescriptor::prime(p), seed, go);
        r.value = res.value;
        r.outcome = res.degenerate ? Outcome::Unit : Outcome::Value;
    });
}

TimeSummary summarize(std::vector<double> t) {
    TimeSummary s;
    if (t.empty()) return s;
    std::sort(t.begin(), t.end());
    s.min_ms = t.front();
    s.max_ms = t.back();
    const std::size_t m = t.size() / 2;
    s.median_ms = t.size() % 2 ? t[m] : (t[m - 1] + t[m]) / 2;
    s.mean_ms = std::accumulate(t.begin(), t.end(), 0.0) / static_cast<double>(t.size());
    return s;
}

Outcome outcome_from_string(const std::string& s) {
    for (Outcome o : {Outcome::Value, Outcome::Unit, Outcome::PositiveDimensional, Outcome::Timeout, Outcome::Error})
        if (to_string(o) == s) return o;
    throw InvalidArgument("unknown outcome '" + s + "'");
}

bool reusable(Outcome o) { return o == Outcome::Value || o == Outcome::Unit || o == Outcome::PositiveDimensional; }

std::string display(const GiCell& c) {
    switch (c.outcome) {
    case Outcome::Value: return std::to_string(*c.value);
    case Outcome::Unit: return "0";
    case Outcome::Timeout: return "-";
    case Outcome::PositiveDimensional: return "inf";
    case Outcome::Error: return "error";
    }
    return "error";
}

json cell_json(const GiCell& c) {
    json j;
    j["i"] = c.i;
    j["prime"] = c.prime;
    j["seed"] = c.seed;
    j["outcome"] = to_string(c.outcome);
    j["value"] = c.value ? json(*c.value) : json(nullptr);
    j["display"] = display(c);
    j["elapsed_ms"] = c.elapsed_ms;
    if (!c.message.empty()) j["message"] = c.message;
    return j;
}

// Previously completed cells keyed by (i, prime, seed); a mismatched or
// unreadable file is ignored.
std::vector<GiCell> load_checkpoint(const std::string& path, const std::string& problem) {
    std::vector<GiCell> out;
    std::ifstream in(path);
    if (!in) return out;
    try {
        json j = json::parse(in);
        if (j.value("schema_version", 0) != kSchemaVersion || j.value("problem", "") != problem) return out;
        for (const auto& c : j.at("cells")) {
            GiCell cell;
            cell.i = c.at("i").get<std::size_t>();
            cell.prime = c.at("prime").get<std::uint64_t>();
            cell.seed = c.at("seed").get<std::uint64_t>();
            cell.outcome = outcome_from_string(c.at("outcome").get<std::string>());
            if (!c.at("value").is_null()) cell.value = c.at("value").get<std::size_t>();
            cell.elapsed_ms = c.at("elapsed_ms").get<double>();
            if (reusable(cell.outcome)) out.push_back(cell);
        }
    } catch (const std::exception&) {
        out.clear();
    }
    return out;
}

void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InvalidArgument("cannot write checkpoint '" + tmp + "'");
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

unsigned default_threads() {
    if (const char* env = std::getenv("SATURA_THREADS")) {
        unsigned v = 0;
        const char* end = env + std::char_traits<char>::length(env);
        auto [ptr, ec] = std::from_chars(env, end, v);
        if (ec == std::errc{} && ptr == end && v > 0) return v;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::optional<std::size_t> reference_value(const std::string& problem, std::size_t i) {
    static const std::map<std::string, std::map<std::size_t, std::size_t>> table = {
        {"alt", {{7, 7}, {6, 43}, {5, 234}, {4, 1108}, {3, 3832}, {2, 8716}, {1, 10858}, {0, 8652}}},
        {"monomial-example", {{1, 5}, {0, 6}}},
        {"conics-affine", {{0, 18}}},
    };
    auto it = table.find(problem);
    if (it == table.end()) return std::nullopt;
    auto jt = it->second.find(i);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

std::optional<std::chrono::milliseconds> default_timeout(std::size_t i) {
    if (i >= 5) return std::chrono::milliseconds(60'000);
    return std::nullopt;
}

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::Value: return "value";
    case Outcome::Unit: return "unit";
    case Outcome::PositiveDimensional: return "positive_dimensional";
    case Outcome::Timeout: return "timeout";
    case Outcome::Error: return "error";
    }
    return "error";
}

std::size_t Histogram::total() const {
    std::size_t t = unit + positive_dimensional + timeout + error;
    for (const auto& [v, c] : values) t += c;
    return t;
}

TrialReport run_trials(const problems::ProblemInstance& inst, std::size_t i, std::uint64_t p, std::size_t n_trials,
                       std::uint64_t seed, const RunOptions& opts) {
    precheck(inst, i, p);
    TrialReport rep;
    rep.problem = inst.name;
    rep.i = i;
    rep.prime = p;
    rep.trials = n_trials;
    rep.seed = seed;
    rep.reference = opts.reference ? opts.reference : reference_value(inst.name, i);

    saturate::GiOptions go;
    go.timeout = effective_timeout(opts.timeout, i);
    const auto start = Clock::now();
    std::vector<TrialResult> results(n_trials);
    run_pool<TrialResult>(
        n_trials, opts.threads ? opts.threads : default_threads(),
        [&](std::size_t t) { return one_gi(inst, i, p, saturate::trial_seed(seed, t), go); },
        [&](std::size_t t, TrialResult&& r) { results[t] = std::move(r); });
    rep.wall_ms = ms_since(start);

    std::vector<double> times;
    times.reserve(n_trials);
    for (const auto& r : results) {
        times.push_back(r.elapsed_ms);
        switch (r.outcome) {
        case Outcome::Value:
            ++rep.histogram.values[r.value];
            if (rep.reference && r.value == *rep.reference) ++rep.successes;
            break;
        case Outcome::Unit: ++rep.histogram.unit; break;
        case Outcome::PositiveDimensional: ++rep.histogram.positive_dimensional; break;
        case Outcome::Timeout: ++rep.histogram.timeout; break;
        case Outcome::Error: ++rep.histogram.error; break;
        }
    }
    rep.times = summarize(std::move(times));
    return rep;
}

std::uint64_t cell_seed(std::uint64_t master, std::size_t i, std::uint64_t p) {
    return saturate::trial_seed(master, saturate::splitmix64(p) ^ i);
}

bool GiTable::has_failures() const {
    return std::any_of(cells.begin(), cells.end(),
                       [](const GiCell& c) { return c.outcome == Outcome::Timeout || c.outcome == Outcome::Error; });
}

GiTable gi_table(const problems::ProblemInstance& inst, const std::vector<std::size_t>& i_list,
                 const std::vector<std::uint64_t>& primes, std::uint64_t seed, const TableOptions& opts) {
    for (std::uint64_t p : primes)
        for (std::size_t i : i_list) precheck(inst, i, p);

    GiTable table;
    table.problem = inst.name;
    table.seed = seed;
    for (std::uint64_t p : primes)
        for (std::size_t i : i_list) {
            GiCell c;
            c.i = i;
            c.prime = p;
            c.seed = cell_seed(seed, i, p);
            table.cells.push_back(c);
        }

    std::vector<std::size_t> pending;
    std::vector<bool> finished(table.cells.size(), true);
    const auto done = opts.checkpoint_path ? load_checkpoint(*opts.checkpoint_path, inst.name) : std::vector<GiCell>{};
    for (std::size_t k = 0; k < table.cells.size(); ++k) {
        auto& c = table.cells[k];
        auto hit = std::find_if(done.begin(), done.end(), [&](const GiCell& d) {
            return d.i == c.i && d.prime == c.prime && d.seed == c.seed;
        });
        if (hit != done.end())
            c = *hit;
        else {
            pending.push_back(k);
            finished[k] = false;
        }
    }

    auto checkpoint = [&] {
        if (!opts.checkpoint_path) return;
        GiTable partial{table.problem, table.seed, {}};
        for (std::size_t k = 0; k < table.cells.size(); ++k)
            if (finished[k]) partial.cells.push_back(table.cells[k]);
        write_atomically(*opts.checkpoint_path, to_json(partial).dump(2));
    };

    run_pool<TrialResult>(
        pending.size(), opts.threads ? opts.threads : default_threads(),
        [&](std::size_t k) {
            const auto& c = table.cells[pending[k]];
            saturate::GiOptions go;
            go.timeout = effective_timeout(opts.timeout, c.i);
            return one_gi(inst, c.i, c.prime, c.seed, go);
        },
        [&](std::size_t k, TrialResult&& r) {
            auto& c = table.cells[pending[k]];
            c.outcome = r.outcome;
            c.elapsed_ms = r.elapsed_ms;
            c.message = r.message;
            if (r.outcome == Outcome::Value) c.value = r.value;
            if (r.outcome == Outcome::Unit) c.value = 0;
            finished[pending[k]] = true;
            checkpoint();
        });
    return table;
}

bool HilbertTable::has_failures() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const HilbertRow& r) { return r.outcome == Outcome::Timeout || r.outcome == Outcome::Error; });
}

HilbertTable hilbert_table(const problems::ProblemInstance& inst, const std::vector<std::size_t>& i_list,
                           std::uint64_t p, unsigned d_max, std::uint64_t seed, const TableOptions& opts) {
    for (std::size_t i : i_list) precheck(inst, i, p);
    HilbertTable table;
    table.problem = inst.name;
    table.prime = p;
    table.seed = seed;
    table.d_max = d_max;
    table.rows.resize(i_list.size());
    const arith::PrimeField field(p);

    run_pool<HilbertRow>(
        i_list.size(), opts.threads ? opts.threads : default_threads(),
        [&](std::size_t k) {
            const std::size_t i = i_list[k];
            std::vector<std::size_t> values;
            auto r = classify([&](TrialResult& res) {
                const auto start = Clock::now();
                auto params = saturate::draw_parameters(inst.n(), inst.r(), i, field, cell_seed(seed, i, p));
                auto sys = saturate::build_saturated_system(inst, params, field);
                groebner::Options go;
                if (auto t = effective_timeout(opts.timeout, i)) go.deadline = start + *t;
                auto gb = groebner::buchberger(sys.generators, go);
                values = hilbert::affine_hilbert_function(gb, d_max).values;
                res.outcome = Outcome::Value;
            });
            HilbertRow row;
            row.i = i;
            row.outcome = r.outcome;
            row.values = std::move(values);
            row.elapsed_ms = r.elapsed_ms;
            row.message = r.message;
            return row;
        },
        [&](std::size_t k, HilbertRow&& row) { table.rows[k] = std::move(row); });
    return table;
}

json to_json(const TrialReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "trials";
    j["problem"] = r.problem;
    j["i"] = r.i;
    j["prime"] = r.prime;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["reference"] = r.reference ? json(*r.reference) : json(nullptr);
    j["successes"] = r.successes;
    json h;
    json values = json::object();
    for (const auto& [v, c] : r.histogram.values) values[std::to_string(v)] = c;
    h["values"] = values;
    h["unit"] = r.histogram.unit;
    h["positive_dimensional"] = r.histogram.positive_dimensional;
    h["timeout"] = r.histogram.timeout;
    h["error"] = r.histogram.error;
    j["histogram"] = h;
    j["wall_ms"] = r.wall_ms;
    j["times_ms"] = {{"min", r.times.min_ms},
                     {"median", r.times.median_ms},
                     {"mean", r.times.mean_ms},
                     {"max", r.times.max_ms}};
    return j;
}

json to_json(const GiTable& t) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "gi_table";
    j["problem"] = t.problem;
    j["seed"] = t.seed;
    j["cells"] = json::array();
    for (const auto& c : t.cells) j["cells"].push_back(cell_json(c));
    return j;
}

json to_json(const HilbertTable& t) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "hilbert_table";
    j["problem"] = t.problem;
    j["prime"] = t.prime;
    j["seed"] = t.seed;
    j["d_max"] = t.d_max;
    j["rows"] = json::array();
    for (const auto& r : t.rows) {
        json row;
        row["i"] = r.i;
        row["outcome"] = to_string(r.outcome);
        row["values"] = r.values;
        row["elapsed_ms"] = r.elapsed_ms;
        if (!r.message.empty()) row["message"] = r.message;
        j["rows"].push_back(row);
    }
    return j;
}

// One line per histogram bucket; the summary columns repeat on every line.
std::string to_csv(const TrialReport& r) {
    std::ostringstream os;
    os << "schema_version,problem,i,prime,trials,seed,reference,successes,bucket,count\n";
    const std::string head = std::to_string(kSchemaVersion) + "," + csv_escape(r.problem) + "," +
                             std::to_string(r.i) + "," + std::to_string(r.prime) + "," + std::to_string(r.trials) +
                             "," + std::to_string(r.seed) + "," + (r.reference ? std::to_string(*r.reference) : "") +
                             "," + std::to_string(r.successes) + ",";
    for (const auto& [v, c] : r.histogram.values) os << head << v << "," << c << "\n";
    os << head << "unit," << r.histogram.unit << "\n";
    os << head << "positive_dimensional," << r.histogram.positive_dimensional << "\n";
    os << head << "timeout," << r.histogram.timeout << "\n";
    os << head << "error," << r.histogram.error << "\n";
    return os.str();
}

std::string to_csv(const GiTable& t) {
    std::ostringstream os;
    os << "schema_version,problem,i,prime,seed,outcome,value,elapsed_ms\n";
    for (const auto& c : t.cells)
        os << kSchemaVersion << "," << csv_escape(t.problem) << "," << c.i << "," << c.prime << "," << c.seed << ","
           << to_string(c.outcome) << "," << display(c) << "," << c.elapsed_ms << "\n";
    return os.str();
}

std::string to_csv(const HilbertTable& t) {
    std::ostringstream os;
    os << "schema_version,problem,prime,seed,i,outcome";
    for (unsigned d = 0; d <= t.d_max; ++d) os << ",hf_" << d;
    os << "\n";
    for (const auto& r : t.rows) {
        os << kSchemaVersion << "," << csv_escape(t.problem) << "," << t.prime << "," << t.seed << "," << r.i << ","
           << to_string(r.outcome);
        for (unsigned d = 0; d <= t.d_max; ++d) os << "," << (d < r.values.size() ? std::to_string(r.values[d]) : "-");
        os << "\n";
    }
    return os.str();
}

} // namespace satura::experiments
