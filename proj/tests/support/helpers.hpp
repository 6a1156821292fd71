#pragma once

#include "argus/common.hpp"
#include "argus/store/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace argus::testing {

inline std::string fixture(const std::string& relative) { return std::string(ARGUS_FIXTURE_DIR) + "/" + relative; }
inline std::string golden(const std::string& relative) { return std::string(ARGUS_GOLDEN_DIR) + "/" + relative; }

inline store::Iri ex(const std::string& local) { return store::Iri("urn:argus:" + local); }

/// Small-vocabulary random graphs so that joins and repeated values are common.
class GraphGenerator {
public:
    explicit GraphGenerator(unsigned seed) : rng_(seed) {}

    store::Iri resource() { return ex("r" + std::to_string(pick(6))); }
    store::Iri predicate() {
        if (pick(5) == 0) {
            return store::rdf_type();
        }
        return ex("p" + std::to_string(pick(3)));
    }
    store::Literal literal() {
        switch (pick(4)) {
            case 0: return store::Literal::integer(static_cast<long long>(pick(5)));
            case 1: {
                auto d = store::Decimal::parse("0." + std::to_string(pick(10)));
                return store::Literal::decimal(*d);
            }
            case 2: return store::Literal::string("s" + std::to_string(pick(3)));
            default: return store::Literal::boolean(pick(2) == 0);
        }
    }
    store::Term object() {
        if (pick(2) == 0) {
            return resource();
        }
        return literal();
    }
    store::Triple triple() { return store::Triple{resource(), predicate(), object()}; }

    store::Graph graph(std::size_t max_triples) {
        store::Graph g;
        std::size_t n = pick(max_triples + 1);
        for (std::size_t i = 0; i < n; ++i) {
            g.insert(triple());
        }
        return g;
    }

    std::size_t pick(std::size_t bound) {
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace argus::testing
