#ifndef CRJET_VARS_HPP
#define CRJET_VARS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace crjet {

// A variable is identified by a 64-bit key whose numeric order is the
// variable order used by the monomial ordering (smaller key = more
// significant). The two top bits select the kind:
//   00 plain coordinate / parameter, index in declaration order
//   01 jet variable x^(s): order in bits 32..61, base index in bits 0..31
//   10 formal derivative symbol: function in bits 50..61, total order in
//      bits 42..49, one 6-bit exponent per argument in bits 0..41
using VarKey = std::uint64_t;

enum class VarKind { Plain, Jet, Formal };

inline VarKind kind_of(VarKey k) {
    switch (k >> 62) {
        case 0: return VarKind::Plain;
        case 1: return VarKind::Jet;
        default: return VarKind::Formal;
    }
}

constexpr int kMaxFormalArgs = 7;
constexpr int kMaxFormalExp = 63;
using MultiIndex = std::array<std::uint8_t, kMaxFormalArgs>;

struct FormalFunction {
    std::string name;
    std::vector<VarKey> args;
    bool real = false;
    int conj_fn = -1;          // index of the conjugate function
    std::vector<int> conj_arg; // argument k of this maps to argument conj_arg[k] of conj_fn
};

class UnknownVariable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Process-wide variable registry. Standard coordinate names are declared
// at start-up in a fixed order so canonical forms print identically in
// every process.
class VarTable {
public:
    static VarTable& global();

    // Declares a self-conjugate plain variable; returns the existing key
    // when the name is already known.
    VarKey declare(const std::string& name);
    // Declares (or re-pairs) two plain variables as conjugates.
    void declare_conj(const std::string& a, const std::string& b);
    int declare_function(const std::string& name, const std::vector<std::string>& args, bool real);
    std::optional<int> find_function(const std::string& name) const;
    const FormalFunction& function(int idx) const;

    // Resolves a printed identifier (plain, formal, or jet in canonical
    // x^(s) form). Unknown plain names are declared when autodeclare.
    std::optional<VarKey> find(const std::string& ident) const;
    VarKey resolve(const std::string& ident, bool autodeclare);

    VarKey jet(VarKey base, int order) const;
    VarKey jet_base(VarKey k) const { return k & 0xffffffffULL; }
    int jet_order(VarKey k) const { return int((k >> 32) & 0x3fffffffULL); }

    VarKey formal(int fn, const MultiIndex& alpha) const;
    int formal_fn(VarKey k) const { return int((k >> 50) & 0xfff); }
    MultiIndex formal_alpha(VarKey k) const;
    int formal_order(VarKey k) const { return int((k >> 42) & 0xff); }
    // Symbol for d/d(arg) of a formal symbol; nullopt when arg is not one
    // of the function's arguments.
    std::optional<VarKey> formal_diff(VarKey sym, VarKey arg) const;

    VarKey conj(VarKey k) const;
    bool self_conjugate(VarKey k) const { return conj(k) == k; }
    std::string name(VarKey k) const;
    VarKey plain_key(const std::string& name) const; // throws UnknownVariable

private:
    VarTable();
    VarKey declare_locked(const std::string& name);

    struct Plain {
        std::string name;
        std::uint32_t conj;
    };
    mutable std::shared_mutex mu_;
    std::vector<Plain> plain_;
    std::unordered_map<std::string, std::uint32_t> plain_idx_;
    std::vector<FormalFunction> fns_;
    std::unordered_map<std::string, int> fn_idx_;
};

inline VarKey var(const std::string& name) { return VarTable::global().resolve(name, true); }
inline std::string var_name(VarKey k) { return VarTable::global().name(k); }

} // namespace crjet

#endif
