#include <wred/error.hh>

using namespace wred;

using std::string;

WredError::WredError(ErrorKind k, const string & msg) :
    std::runtime_error(msg),
    _kind(k)
{
}

auto WredError::kind() const -> ErrorKind
{
    return _kind;
}

InputError::InputError(const string & msg) :
    WredError(ErrorKind::Input, msg)
{
}

ContractError::ContractError(const string & msg) :
    WredError(ErrorKind::Contract, msg)
{
}

ResourceError::ResourceError(const string & msg) :
    WredError(ErrorKind::Resource, msg)
{
}

auto wred::exit_code_for(ErrorKind k) -> int
{
    switch (k) {
        case ErrorKind::Contract: return 1;
        case ErrorKind::Resource: return 2;
        case ErrorKind::Input: return 3;
    }
    return 1;
}

auto wred::kind_name(ErrorKind k) -> const char *
{
    switch (k) {
        case ErrorKind::Contract: return "contract";
        case ErrorKind::Resource: return "resource";
        case ErrorKind::Input: return "input";
    }
    return "unknown";
}
