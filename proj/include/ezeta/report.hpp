#ifndef EZETA_REPORT_HPP
#define EZETA_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ezeta/bigfloat.hpp"

namespace ezeta {

// Decimal digit count used whenever a BigFloat is serialized.
inline std::size_t decimal_digits(long bits) {
    long d = static_cast<long>(bits * 0.301) - 2;
    return static_cast<std::size_t>(std::max<long>(d, 4));
}

struct VerificationCase {
    std::string id;
    std::string description;
    std::string lhs;
    std::string rhs;
    std::string residual; // decimal string or "exact"
    bool pass = false;
};

struct VerifyConfig {
    long bits = 256;
    std::size_t max_index = 30;
    std::vector<long> primes = {3, 5, 7};
    long depth = 5;
};

class VerificationReport {
public:
    VerificationReport(std::string suite, VerifyConfig config)
        : suite_(std::move(suite)), config_(std::move(config)) {}

    void add(VerificationCase c) { cases_.push_back(std::move(c)); }

    void add_exact(const std::string& id, const std::string& description, const std::string& lhs,
                   const std::string& rhs, bool pass) {
        add({id, description, lhs, rhs, "exact", pass});
    }

    void append(const VerificationReport& other) {
        for (const auto& c : other.cases_) cases_.push_back(c);
    }

    // Output ordering is by case id, never by completion order.
    void finalize() {
        std::stable_sort(cases_.begin(), cases_.end(),
                         [](const VerificationCase& a, const VerificationCase& b) { return a.id < b.id; });
    }

    const std::string& suite() const { return suite_; }
    const std::vector<VerificationCase>& cases() const { return cases_; }
    const VerifyConfig& config() const { return config_; }

    std::size_t total() const { return cases_.size(); }
    std::size_t passed() const {
        return static_cast<std::size_t>(
            std::count_if(cases_.begin(), cases_.end(), [](const VerificationCase& c) { return c.pass; }));
    }
    std::size_t failed() const { return total() - passed(); }
    bool all_passed() const { return failed() == 0; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["suite"] = suite_;
        j["config"] = {{"precision_bits", config_.bits},
                       {"max_index", config_.max_index},
                       {"primes", config_.primes},
                       {"depths", config_.depth}};
        j["cases"] = nlohmann::ordered_json::array();
        for (const auto& c : cases_) {
            j["cases"].push_back({{"id", c.id},
                                  {"description", c.description},
                                  {"lhs", c.lhs},
                                  {"rhs", c.rhs},
                                  {"residual", c.residual},
                                  {"pass", c.pass}});
        }
        j["summary"] = {{"total", total()}, {"passed", passed()}, {"failed", failed()}};
        return j;
    }

    std::string to_tsv() const {
        std::ostringstream out;
        out << "id\tlhs\trhs\tresidual\tpass\n";
        for (const auto& c : cases_)
            out << c.id << '\t' << c.lhs << '\t' << c.rhs << '\t' << c.residual << '\t'
                << (c.pass ? "true" : "false") << '\n';
        return out.str();
    }

    std::string to_table() const {
        std::ostringstream out;
        out << "suite: " << suite_ << "\n";
        for (const auto& c : cases_) {
            out << (c.pass ? "[pass] " : "[FAIL] ") << c.id << "  " << c.description;
            if (c.residual != "exact") out << "  residual=" << c.residual;
            out << "\n";
        }
        out << "summary: " << passed() << "/" << total() << " passed, " << failed() << " failed\n";
        return out.str();
    }

private:
    std::string suite_;
    VerifyConfig config_;
    std::vector<VerificationCase> cases_;
};

} // namespace ezeta

#endif
