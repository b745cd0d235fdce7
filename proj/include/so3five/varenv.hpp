#ifndef SO3FIVE_VARENV_HPP
#define SO3FIVE_VARENV_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "so3five/errors.hpp"

namespace so3five {

// Ordered, immutable list of distinct variable names. Every polynomial
// holds a shared pointer to its environment; the order fixes the meaning
// of exponent vectors for the lifetime of those polynomials.
class VarEnv {
public:
    static std::shared_ptr<const VarEnv> create(std::vector<std::string> names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty() || names[i] == "s3") {
                throw EnvError("invalid variable name '" + names[i] + "'");
            }
            for (std::size_t j = i + 1; j < names.size(); ++j) {
                if (names[i] == names[j]) {
                    throw EnvError("duplicate variable name '" + names[i] + "'");
                }
            }
        }
        return std::shared_ptr<const VarEnv>(new VarEnv(std::move(names)));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) {
                return i;
            }
        }
        return std::nullopt;
    }

    std::size_t index_of(const std::string& name) const {
        if (auto i = find(name)) {
            return *i;
        }
        throw EnvError("unknown variable '" + name + "'");
    }

    friend bool operator==(const VarEnv& x, const VarEnv& y) {
        return x.names_ == y.names_;
    }

private:
    explicit VarEnv(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using EnvPtr = std::shared_ptr<const VarEnv>;

inline bool same_env(const EnvPtr& x, const EnvPtr& y) {
    return x == y || (x && y && *x == *y);
}

// The empty environment: polynomials over it are field constants.
inline const EnvPtr& const_env() {
    static const EnvPtr env = VarEnv::create({});
    return env;
}

} // namespace so3five

#endif
