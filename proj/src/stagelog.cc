#include <wred/adversaries.hh>
#include <wred/error.hh>

#include <openssl/evp.h>

#include <cstdio>
#include <sstream>

using namespace wred;

using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto csv_field(const string & s) -> string
    {
        if (s.find_first_of(",\"\n") == string::npos)
            return s;
        string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    template <typename T_>
    auto joined(const vector<T_> & xs) -> string
    {
        string out;
        for (std::size_t i = 0 ; i < xs.size() ; ++i)
            out += (i ? ";" : "") + to_string(xs[i]);
        return out;
    }
}

StageLog::StageLog(string name) :
    _name(std::move(name))
{
}

auto StageLog::append(StageRecord r) -> void
{
    if (r.after > r.before)
        throw ContractError("stage " + to_string(r.stage) + " of '" + _name + "' increases the measure");
    if (! _records.empty() && r.before > _records.back().after)
        throw ContractError("stage " + to_string(r.stage) + " of '" + _name + "' starts above the previous measure");
    _records.push_back(std::move(r));
}

auto StageLog::records() const -> const vector<StageRecord> &
{
    return _records;
}

auto StageLog::name() const -> const string &
{
    return _name;
}

auto StageLog::to_csv() const -> string
{
    std::ostringstream out;
    out << "stage,case,acted,before,after,detail,invalidated,markers\n";
    for (auto & r : _records)
        out << r.stage << ',' << csv_field(r.kase) << ',' << csv_field(r.acted) << ','
            << wred::to_string(r.before) << ',' << wred::to_string(r.after) << ','
            << csv_field(r.detail) << ',' << joined(r.invalidated) << ',' << joined(r.markers) << '\n';
    return out.str();
}

auto StageLog::digest() const -> string
{
    return sha256_hex(to_csv());
}

auto wred::sha256_hex(const string & data) -> string
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    if (1 != EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw ResourceError("sha-256 failed");
    string out;
    char buf[3];
    for (unsigned i = 0 ; i < len ; ++i) {
        std::snprintf(buf, sizeof(buf), "%02x", md[i]);
        out += buf;
    }
    return out;
}
