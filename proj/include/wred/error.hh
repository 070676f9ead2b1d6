#ifndef WRED_ERROR_HH
#define WRED_ERROR_HH 1

#include <stdexcept>
#include <string>

namespace wred
{
    enum class ErrorKind
    {
        Input,
        Contract,
        Resource
    };

    class WredError : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            WredError(ErrorKind k, const std::string & msg);

            auto kind() const -> ErrorKind;
    };

    class InputError : public WredError
    {
        public:
            explicit InputError(const std::string & msg);
    };

    class ContractError : public WredError
    {
        public:
            explicit ContractError(const std::string & msg);
    };

    class ResourceError : public WredError
    {
        public:
            explicit ResourceError(const std::string & msg);
    };

    // 0 pass, 1 violation, 2 resource, 3 input
    auto exit_code_for(ErrorKind k) -> int;
    auto kind_name(ErrorKind k) -> const char *;
}

#endif
