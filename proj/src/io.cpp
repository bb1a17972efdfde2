#include "splitlab/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace splitlab {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

std::uint64_t parse_seed(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty seed");
    int base = 10;
    std::size_t start = 0;
    if (s.size() > 2 && (s.compare(0, 2, "0x") == 0 || s.compare(0, 2, "0X") == 0)) {
        base = 16;
        start = 2;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + s.size(), value, base);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("invalid seed '" + s + "' (decimal or 0x hex u64)");
    return value;
}

void atomic_write(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignore;
            std::filesystem::remove(tmp, ignore);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(tmp, ignore);
        throw std::runtime_error("rename to " + path.string() + " failed: " + ec.message());
    }
}

std::string trajectory_csv(const ModelTrajectory& t) {
    std::ostringstream os;
    os << "j,n,m,p,x,k,r,step_cost,cum_cost\n";
    for (const TrajectoryPoint& pt : t.points) {
        os << pt.j << ',' << pt.n << ',' << format_double(pt.m) << ',' << format_double(pt.p)
           << ',' << format_double(pt.x) << ',' << format_double(pt.k) << ','
           << format_double(pt.r) << ',' << format_double(pt.step_cost) << ','
           << format_double(pt.cum_cost) << '\n';
    }
    return os.str();
}

std::string split_trace_csv(const std::vector<TracePoint>& trace) {
    std::ostringstream os;
    os << "j,var,n,m,r,s,generated,kept,k_mean,p_mean,x,step_cost\n";
    for (const TracePoint& tp : trace) {
        os << tp.step << ',' << tp.variable << ',' << tp.vars_active << ',' << tp.clause_count
           << ',' << tp.r << ',' << tp.s << ',' << tp.generated << ',' << tp.kept << ','
           << format_double(tp.k_mean) << ',' << format_double(tp.p_mean) << ','
           << format_double(tp.x) << ',' << format_double(tp.step_cost) << '\n';
    }
    return os.str();
}

std::string scan_csv(const std::vector<ScanEntry>& entries, const ModelParams& p) {
    std::ostringstream os;
    os << "n,k,alpha,lambda,m_c,status\n";
    for (const ScanEntry& e : entries) {
        // Status may quote arbitrary error text; keep the CSV parseable.
        std::string status = e.status;
        for (char& c : status)
            if (c == ',' || c == '\n') c = ';';
        os << e.n << ',' << format_double(e.k) << ',' << format_double(p.alpha) << ','
           << format_double(p.lambda) << ',' << format_double(e.m_c) << ',' << status << '\n';
    }
    return os.str();
}

}  // namespace splitlab
