#pragma once

#include <string>
#include <utility>
#include <vector>

namespace apath {

// Structured pass/fail record. Field order is preserved as inserted so that
// serialized reports are byte-stable for identical runs.
struct Report {
    bool pass = true;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::pair<std::string, std::string>> certificates;
    std::vector<std::string> witnesses;
    std::vector<std::pair<std::string, std::string>> provenance;

    void metric(const std::string& name, double value) { metrics.emplace_back(name, value); }
    void certificate(const std::string& name, const std::string& value) {
        certificates.emplace_back(name, value);
    }
    void witness(const std::string& value) { witnesses.push_back(value); }
    void note(const std::string& key, const std::string& value) {
        provenance.emplace_back(key, value);
    }
    void gate(const std::string& name, double value, double tol) {
        metric(name, value);
        if (!(value <= tol)) pass = false;
    }

    double metric_value(const std::string& name) const {
        for (const auto& [k, v] : metrics)
            if (k == name) return v;
        return 0.0;
    }
    bool has_metric(const std::string& name) const {
        for (const auto& [k, v] : metrics)
            if (k == name) return true;
        return false;
    }
};

}  // namespace apath
