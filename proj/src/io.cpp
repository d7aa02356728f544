#include "toric/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toric {

void prime_support(Int n, std::vector<Int>& out) {
    n = abs(n);
    if (n <= 1) return;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
}

std::vector<Int> support_primes(const QVec& coords) {
    std::vector<Int> ps;
    for (const auto& c : coords) {
        prime_support(c.get_num(), ps);
        prime_support(c.get_den(), ps);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

std::vector<long> primes_below(long bound) {
    std::vector<long> ps;
    if (bound <= 2) return ps;
    std::vector<bool> sieve(bound, true);
    for (long i = 2; i < bound; ++i) {
        if (!sieve[i]) continue;
        ps.push_back(i);
        for (long j = 2 * i; j < bound; j += i) sieve[j] = false;
    }
    return ps;
}

Rat parse_rational(const std::string& s) {
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
    if (t.empty()) throw std::runtime_error("empty rational literal");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
        throw std::runtime_error("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

QVec parse_point(const std::string& s) {
    QVec out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
    if (out.empty()) throw std::runtime_error("empty point literal");
    return out;
}

namespace {

// next non-empty line with comments stripped
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

FanFile parse_fan(std::istream& in, const std::string& display_name) {
    FanFile ff;
    Fan& f = ff.fan;
    f.name = display_name;
    std::string line;
    std::vector<int> orbit_labels;
    std::string weights_text;
    while (next_line(in, line)) {
        std::stringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "dim") {
            if (!(ls >> f.dim) || f.dim < 1) throw std::runtime_error("bad dim line");
        } else if (key == "rays") {
            int n = 0;
            if (!(ls >> n) || n < 1) throw std::runtime_error("bad rays line");
            for (int i = 0; i < n; ++i) {
                if (!next_line(in, line)) throw std::runtime_error("missing ray row");
                std::stringstream rs(line);
                Vec v;
                std::string tok;
                while (rs >> tok) v.emplace_back(tok);
                if (static_cast<int>(v.size()) != f.dim)
                    throw std::runtime_error("ray row has wrong length");
                f.rays.push_back(std::move(v));
            }
        } else if (key == "cones") {
            int k = 0;
            if (!(ls >> k) || k < 1) throw std::runtime_error("bad cones line");
            for (int i = 0; i < k; ++i) {
                if (!next_line(in, line)) throw std::runtime_error("missing cone row");
                std::stringstream cs(line);
                std::vector<int> mc;
                int idx;
                while (cs >> idx) mc.push_back(idx);
                std::sort(mc.begin(), mc.end());
                f.max_cones.push_back(std::move(mc));
            }
        } else if (key == "orbits") {
            int lab;
            while (ls >> lab) orbit_labels.push_back(lab);
            if (orbit_labels.empty()) {
                if (!next_line(in, line)) throw std::runtime_error("missing orbits row");
                std::stringstream os(line);
                while (os >> lab) orbit_labels.push_back(lab);
            }
        } else if (key == "weights") {
            std::string tok;
            while (ls >> tok) weights_text += (weights_text.empty() ? "" : ",") + tok;
            if (weights_text.empty()) {
                if (!next_line(in, line)) throw std::runtime_error("missing weights row");
                std::stringstream ws(line);
                while (ws >> tok) weights_text += (weights_text.empty() ? "" : ",") + tok;
            }
        } else {
            throw std::runtime_error("unknown fan-file key '" + key + "'");
        }
    }
    if (f.rays.empty()) throw std::runtime_error("fan file has no rays");
    if (orbit_labels.empty()) {
        f.orbit_of_ray.resize(f.rays.size());
        std::iota(f.orbit_of_ray.begin(), f.orbit_of_ray.end(), 0);
        f.num_orbits = f.nrays();
    } else {
        if (orbit_labels.size() != f.rays.size())
            throw std::runtime_error("orbit row length mismatch");
        // normalize labels to 0..r-1 in order of first appearance
        std::map<int, int> remap;
        for (int lab : orbit_labels)
            if (!remap.count(lab)) {
                int next = static_cast<int>(remap.size());
                remap[lab] = next;
            }
        for (int lab : orbit_labels) f.orbit_of_ray.push_back(remap[lab]);
        f.num_orbits = static_cast<int>(remap.size());
    }
    if (!weights_text.empty())
        ff.weights = OrbifoldWeights::parse(weights_text, f.num_orbits);
    return ff;
}

FanFile load_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fan file '" + path + "'");
    std::string base = path;
    auto slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    if (base.size() > 4 && base.substr(base.size() - 4) == ".fan")
        base = base.substr(0, base.size() - 4);
    return parse_fan(in, base);
}

FanFile resolve_fan(const std::string& name_or_path) {
    if (auto lib = library_fan(name_or_path)) {
        FanFile ff;
        ff.fan = std::move(*lib);
        return ff;
    }
    return load_fan_file(name_or_path);
}

std::string format_fan(const FanFile& ff) {
    const Fan& f = ff.fan;
    std::ostringstream out;
    out << "dim " << f.dim << "\n";
    out << "rays " << f.nrays() << "\n";
    for (const auto& r : f.rays) {
        for (size_t k = 0; k < r.size(); ++k) out << (k ? " " : "") << r[k];
        out << "\n";
    }
    out << "cones " << f.max_cones.size() << "\n";
    for (const auto& mc : f.max_cones) {
        for (size_t k = 0; k < mc.size(); ++k) out << (k ? " " : "") << mc[k];
        out << "\n";
    }
    out << "orbits";
    for (int o : f.orbit_of_ray) out << " " << o;
    out << "\n";
    if (ff.weights) {
        out << "weights";
        for (const auto& w : ff.weights->w)
            out << " " << (w.infinite ? "inf" : std::to_string(w.m));
        out << "\n";
    }
    return out.str();
}

}  // namespace toric
